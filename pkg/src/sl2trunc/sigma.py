"""The region of k-adapted central characters for a principal sl(2).

A weight ``gamma`` (coroot evaluations ``gamma_i``) lies in the region when
``gamma - rho`` is antidominant, i.e. every ``gamma_i <= 1``, and the
truncation is invisible on its block: ``sum(n_i gamma_i) >= 1 + 2 sum(m_i)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionError, ResourceError, ValidationError
from .rootsys import (AlgebraSpec, RootSystem, Weight, build_root_system, is_integral,
                      stabilizer_root_set)
from .sl2pair import HElement, principal_characteristic, root_value, solve_h

DEFAULT_BOX_CAP = 100_000_000


class Classification(str, Enum):
    EMPTY = "Empty"
    FINITE_NONEMPTY = "FiniteNonempty"
    INFINITE = "Infinite"


@dataclass(frozen=True)
class SigmaReport:
    algebra: str
    rho_h: int
    beta_h: int
    nonempty: bool
    strict: bool
    classification: Classification
    integral_points: list[Weight] | None
    box_size: int
    factors: list["SigmaReport"] = field(default_factory=list)

    @property
    def integral_point_count(self) -> int | None:
        return None if self.integral_points is None else len(self.integral_points)


def _principal_data(rs: RootSystem, h: HElement) -> tuple[list[int], int]:
    for i in range(rs.rank):
        e = tuple(int(i == j) for j in range(rs.rank))
        if root_value(rs, h, e) != 2:
            raise DomainError("the region is only defined for a principal sl(2) (all alpha_i(h) = 2)")
    n = [int(x) for x in h.n]
    return n, 2 * sum(rs.marks)


def in_sigma(rs: RootSystem, h: HElement, gamma: Sequence) -> bool:
    n, beta = _principal_data(rs, h)
    if len(gamma) != rs.rank:
        raise ValidationError(f"weight has {len(gamma)} coordinates, rank is {rs.rank}")
    g = [Fraction(x) for x in gamma]
    if any(x > 1 for x in g):
        return False
    return sum(ni * x for ni, x in zip(n, g)) >= 1 + beta


def sigma_box(rs: RootSystem, h: HElement) -> tuple[list[int], list[int]]:
    """Per-coordinate integer bounds containing every integral point of the region.

    With all other coordinates at their maximum 1, coordinate ``i`` must still
    reach the target, which bounds it below.
    """
    n, beta = _principal_data(rs, h)
    target = 1 + beta
    total = sum(n)
    lo = [-((total - ni - target) // ni) for ni in n]
    return lo, [1] * rs.rank


def _box_size(lo: Sequence[int], hi: Sequence[int]) -> int:
    return math.prod(max(0, b - a + 1) for a, b in zip(lo, hi))


def enumerate_integral_sigma(rs: RootSystem, h: HElement, cap: int = DEFAULT_BOX_CAP,
                             backend: str | None = None) -> list[Weight]:
    n, beta = _principal_data(rs, h)
    lo, hi = sigma_box(rs, h)
    size = _box_size(lo, hi)
    if size > cap:
        raise ResourceError(f"search box of {size} points exceeds cap of {cap}", cap=cap)
    pts = _kernels.box_scan(np.array(n), np.array(lo), np.array(hi), 1 + beta, backend=backend)
    pts = _kernels.lex_sorted(pts)
    return [tuple(Fraction(v) for v in row) for row in pts.tolist()]


def _report(rs: RootSystem, h: HElement, cap: int | None, backend: str | None) -> SigmaReport:
    n, beta = _principal_data(rs, h)
    rho_h = sum(n)
    lo, hi = sigma_box(rs, h)
    size = _box_size(lo, hi)
    points = None
    if cap is None or size <= cap:
        points = enumerate_integral_sigma(rs, h, cap=size if cap is None else cap, backend=backend)
    nonempty = rho_h >= 1 + beta
    strict = rho_h > 1 + beta
    if strict:
        cls = Classification.INFINITE
    elif nonempty:
        cls = Classification.FINITE_NONEMPTY
    else:
        cls = Classification.EMPTY
    return SigmaReport(str(rs.spec), rho_h, beta, nonempty, strict, cls, points, size)


def classify_sigma(rs: RootSystem, h: HElement, cap: int | None = DEFAULT_BOX_CAP,
                   backend: str | None = None) -> SigmaReport:
    """Classify the region and list its integral points.

    For a product of simple factors the top-level report applies the same two
    inequalities to the whole algebra (``beta_h`` is twice the total of all
    marks) and ``factors`` carries the report of each simple factor.  When the
    search box exceeds ``cap`` the classification is still returned but
    ``integral_points`` is ``None``.
    """
    top = _report(rs, h, cap, backend)
    if rs.spec.is_simple:
        return top
    parts = []
    for (fam, r), (a, b) in zip(rs.spec.factors, rs.factor_slices):
        sub = build_root_system(AlgebraSpec(((fam, r),)))
        parts.append(_report(sub, solve_h(sub, principal_characteristic(sub)), cap, backend))
    return SigmaReport(top.algebra, top.rho_h, top.beta_h, top.nonempty, top.strict,
                       top.classification, top.integral_points, top.box_size, parts)


def weakly_adapted_check(rs: RootSystem, eta: Sequence, gamma: Sequence,
                         h: HElement | None = None) -> bool:
    """Necessary condition for a translation functor to relate ``eta`` to ``gamma``.

    ``gamma - eta`` must be integral and ``gamma - rho``, ``eta - rho`` must have
    the same Weyl stabilizer, compared through their sets of vanishing
    positive coroots.
    """
    if h is None:
        h = solve_h(rs, principal_characteristic(rs))
    if not in_sigma(rs, h, gamma):
        raise PreconditionError(f"gamma={_fmt(gamma)} is not in the region")
    if len(eta) != rs.rank:
        raise ValidationError(f"weight has {len(eta)} coordinates, rank is {rs.rank}")
    diff = [Fraction(g) - Fraction(e) for g, e in zip(gamma, eta)]
    if not is_integral(diff):
        return False
    return stabilizer_root_set(rs, gamma) == stabilizer_root_set(rs, eta)


def _fmt(w: Sequence) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in w) + ")"
