# Embedding module initialization
