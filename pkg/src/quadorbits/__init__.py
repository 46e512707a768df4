"""quadorbits: exact arithmetic for finite-orbit questions of sets of
quadratic polynomials x^2 + c over Q, with a full mechanical re-verification
of the classification of rational points with finite orbit under such sets.
"""

__version__ = "0.1.0"
