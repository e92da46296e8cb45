"""Exact computations for cyclotomic Nazarov-Wenzl algebras, their
diagrammatic weights, cup diagrams, a quantum symmetric pair action and box
diagrams."""

__version__ = "0.1.0"

__all__ = ["scalars", "brauer", "vw", "weights", "cupdiag", "coideal", "boxdiag", "tensorrep", "cli"]
