"""End-to-end re-verification of the finite-orbit classification.

Public entry points:

- ``poonen_criterion(f, x)``: the exact iterate test f^4(x) = f^2(x).
- ``verify_lemma(id)``: re-derives one of the six pair-classification
  lemmas (ids "2.1".."2.6") from scratch, by elimination, certified root
  extraction and orbit dispositions.
- ``verify_theorem_case(n)`` / ``verify_theorem()``: the ten-case analysis
  of three-map sets and the final classification, including the four-map
  exclusion and the integral-coefficient corollary.
"""

from .axioms import POONEN_AXIOMS, poonen_criterion
from .lemmas import LEMMA_IDS, verify_lemma
from .reports import CaseReport, Disposition, LemmaReport, TheoremSummary
from .cases import verify_theorem_case
from .theorem import verify_theorem

__all__ = [
    "POONEN_AXIOMS",
    "poonen_criterion",
    "LEMMA_IDS",
    "verify_lemma",
    "verify_theorem_case",
    "verify_theorem",
    "LemmaReport",
    "CaseReport",
    "TheoremSummary",
    "Disposition",
]
