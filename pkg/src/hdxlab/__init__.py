"""High-order random walks on densified simplicial complexes."""

__version__ = "0.1.0"
