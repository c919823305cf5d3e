# Shared errors, input parsing and number rendering
