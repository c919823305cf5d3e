# Vonorm module initialization
