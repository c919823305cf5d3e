# Reduction module initialization
