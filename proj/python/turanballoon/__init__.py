"""Turan numbers of good odd-balloonings of trees."""

from ._turanballoon import (
    TuranBalloonError,
    analyze,
    audit,
    balloon,
    chvatal_hanson,
    contains,
    decomposition_family,
    e_base,
    ex_exact,
    extremal_candidate,
    f2_exact,
    turan_number,
)

__all__ = [
    "TuranBalloonError",
    "analyze",
    "audit",
    "balloon",
    "chvatal_hanson",
    "contains",
    "decomposition_family",
    "e_base",
    "ex_exact",
    "extremal_candidate",
    "f2_exact",
    "turan_number",
]
