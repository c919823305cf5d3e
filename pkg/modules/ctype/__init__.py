# C-type module initialization
