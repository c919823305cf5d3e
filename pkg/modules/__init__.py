# lattice13 functional areas; commands are attached by main_controller
