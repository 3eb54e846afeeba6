"""Delta-matroids, their twisted and loop-complemented relatives, and Penrose polynomials."""

__version__ = "0.1.0"
