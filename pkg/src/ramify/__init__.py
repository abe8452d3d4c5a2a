"""ramify: exact ramification invariants of local function fields and
Euler characteristics of Galois covers of curves."""

__version__ = "0.1.0"
