"""Exact computations for configuration spaces of polyhedral products.

The central object is the face-word complex T_K of a simplicial complex K:
the cobar construction of the dual exterior face ring.  Around it sit
independent checks (minimal resolutions, presentation dimension counts,
Poincare series, monoid normal forms, basis enumerations).
"""

__version__ = "0.1.0"
