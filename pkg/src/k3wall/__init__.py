"""Exact-arithmetic wall-crossing computations on Picard-rank-1 K3 surfaces.

The package verifies, with integer and rational arithmetic only, the
numerical skeleton of the Brill-Noether reconstruction for a polarised K3
surface with Pic(X) = Z.H, H^2 = 2p and p >= 13 prime: the h^0 upper
bounds, the geometry of the stability plane and its walls, the absence of
root projections in the relevant region, and the convex-polygon case
analyses for the distinguished class (m^2, mH, p).
"""

__version__ = "0.1.0"
