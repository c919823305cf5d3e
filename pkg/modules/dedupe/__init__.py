# Dedupe module initialization
