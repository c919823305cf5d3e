# Isometry module initialization
