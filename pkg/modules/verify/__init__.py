# Verify module initialization
