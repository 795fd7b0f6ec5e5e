"""Core, union and optimal repairs of ALC justifications."""
