"""Exact root-system core for products of simple types.

Conventions: ``cartan[i][j] = alpha_j(h_i)`` (Bourbaki numbering), weights
are stored by their coroot evaluations ``gamma_i = gamma(h_i)`` as
``Fraction`` tuples, and roots by their coordinates in the simple-root basis.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import ResourceError, ValidationError

DEFAULT_ORBIT_CAP = 10_000_000
ORBIT_CAP_ENV = "SL2TRUNC_ORBIT_CAP"

Weight = tuple[Fraction, ...]
Root = tuple[int, ...]

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def default_orbit_cap() -> int:
    raw = os.environ.get(ORBIT_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORBIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{ORBIT_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValidationError(f"{ORBIT_CAP_ENV} must be >= 1")
    return cap


@dataclass(frozen=True)
class AlgebraSpec:
    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise ValidationError("algebra needs at least one simple factor")
        for fam, r in self.factors:
            if fam not in _VALID_RANKS:
                raise ValidationError(f"unknown family {fam!r}")
            if not isinstance(r, int) or not _VALID_RANKS[fam](r):
                raise ValidationError(f"invalid rank {r!r} for family {fam}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraSpec":
        """Parse ``"A3"``, ``"a1+A1"``, ``"B2 + G2"``."""
        factors = []
        for part in text.split("+"):
            part = part.strip().upper()
            if len(part) < 2 or not part[1:].isdigit():
                raise ValidationError(f"cannot parse simple factor {part!r} in {text!r}")
            factors.append((part[0], int(part[1:])))
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    def __str__(self) -> str:
        return "+".join(f"{f}{r}" for f, r in self.factors)


def simple_cartan(family: str, r: int) -> list[list[int]]:
    """Cartan matrix of one simple factor, ``a[i][j] = <alpha_j, alpha_i^vee>``."""
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2

    def link(i, j, ij=-1, ji=-1):
        a[i][j] = ij
        a[j][i] = ji

    if family in "ABCD":
        chain = r - 1 if family != "D" else r - 2
        for i in range(chain):
            link(i, i + 1)
        if family == "B":
            # alpha_r short
            a[r - 1][r - 2] = -2
        elif family == "C":
            # alpha_r long
            a[r - 2][r - 1] = -2
        elif family == "D":
            link(r - 3, r - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(2, 3)
        link(1, 2, -1, -2)
    elif family == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    return a


_EXCEPTIONAL_WEYL = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                     ("F", 4): 1152, ("G", 2): 12}


def simple_weyl_order(family: str, r: int) -> int:
    if family == "A":
        return math.factorial(r + 1)
    if family in "BC":
        return 2**r * math.factorial(r)
    if family == "D":
        return 2 ** (r - 1) * math.factorial(r)
    return _EXCEPTIONAL_WEYL[(family, r)]


def block_diag(blocks: Sequence[Sequence[Sequence[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off : off + len(row)] = list(row)
        off += len(b)
    return out


def positive_root_closure(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Positive roots of a Cartan matrix by closure over simple roots.

    Proceeds by height.  For a root ``beta`` and simple ``alpha_i`` the
    ``alpha_i``-string through ``beta`` runs from ``beta - p alpha_i`` to
    ``beta + q alpha_i`` with ``p - q = beta(h_i)``; ``beta + alpha_i`` is a root
    iff ``q > 0``.
    """
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                pairing = sum(beta[j] * cartan[i][j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = sorted(nxt)
        roots.extend(layer)
    return roots


def _root_norms(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """Relative squared lengths of simple roots (shortest in each factor = 1).

    Uses ``a[i][j] / a[j][i] = |alpha_j|^2 / |alpha_i|^2`` along Dynkin edges.
    """
    r = len(cartan)
    norms: list[Fraction | None] = [None] * r
    for start in range(r):
        if norms[start] is not None:
            continue
        comp = [start]
        norms[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j != i and cartan[i][j] != 0 and norms[j] is None:
                    norms[j] = norms[i] * Fraction(cartan[i][j], cartan[j][i])
                    comp.append(j)
                    stack.append(j)
        m = min(norms[k] for k in comp)
        for k in comp:
            norms[k] = norms[k] / m
    return norms  # type: ignore[return-value]


def as_weight(values: Iterable) -> Weight:
    return tuple(Fraction(v) for v in values)


def parse_weight(text: str) -> Weight:
    """Parse ``"-1,-1"`` or ``"1/2, 0"`` into a weight."""
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot parse weight {text!r}") from None


@dataclass(frozen=True)
class RootSystem:
    spec: AlgebraSpec
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    marks: tuple[int, ...]
    factor_slices: tuple[tuple[int, int], ...]
    factor_weyl_orders: tuple[int, ...]
    norms: tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    @property
    def zero(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.rank))

    @property
    def weyl_order(self) -> int:
        return math.prod(self.factor_weyl_orders)

    @property
    def dim(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def coroots(self) -> dict[Root, tuple[Fraction, ...]]:
        """Each positive root's coroot in the basis of simple coroots."""
        out = {}
        for a in self.positive_roots:
            sq = sum(a[i] * a[j] * self._form(i, j) for i in range(self.rank) for j in range(self.rank))
            # alpha^vee = 2 alpha / |alpha|^2 and alpha_i = |alpha_i|^2 / 2 * alpha_i^vee
            out[a] = tuple(a[i] * self.norms[i] / sq for i in range(self.rank))
        return out

    def _form(self, i: int, j: int) -> Fraction:
        # (alpha_i, alpha_j) = cartan[i][j] * |alpha_i|^2 / 2
        return self.cartan[i][j] * self.norms[i] / 2

    def height(self, root: Root) -> int:
        return sum(root)

    def highest_root(self, factor: int) -> Root:
        lo, hi = self.factor_slices[factor]
        best = max((a for a in self.positive_roots if any(a[lo:hi])), key=sum)
        return best

    def pair(self, weight: Sequence, root: Root) -> Fraction:
        """Evaluate ``weight`` on the coroot of the positive root ``root``."""
        return sum((c * w for c, w in zip(self.coroots[root], weight)), Fraction(0))


@lru_cache(maxsize=None)
def build_root_system(spec: AlgebraSpec) -> RootSystem:
    blocks = [simple_cartan(f, r) for f, r in spec.factors]
    cartan = block_diag(blocks)
    roots: list[Root] = []
    marks: list[int] = []
    slices = []
    off = 0
    n = len(cartan)
    for (fam, r), blk in zip(spec.factors, blocks):
        local = positive_root_closure(blk)
        roots.extend(tuple([0] * off + list(a) + [0] * (n - off - r)) for a in local)
        top = max(local, key=sum)
        marks.extend(top)
        slices.append((off, off + r))
        off += r
    return RootSystem(
        spec=spec,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(sorted(roots, key=lambda a: (sum(a), a))),
        marks=tuple(marks),
        factor_slices=tuple(slices),
        factor_weyl_orders=tuple(simple_weyl_order(f, r) for f, r in spec.factors),
        norms=tuple(_root_norms(cartan)),
    )


def reflect(rs: RootSystem, i: int, w: Sequence) -> Weight:
    """Simple reflection ``s_i``; ``i`` is 1-based."""
    if not 1 <= i <= rs.rank:
        raise ValidationError(f"simple-root index {i} out of range 1..{rs.rank}")
    k = i - 1
    wk = Fraction(w[k])
    return tuple(Fraction(w[j]) - wk * rs.cartan[j][k] for j in range(rs.rank))


def _check_weight(rs: RootSystem, w: Sequence) -> Weight:
    if len(w) != rs.rank:
        raise ValidationError(f"weight has {len(w)} coordinates, rank is {rs.rank}")
    return as_weight(w)


def dominant_representative(rs: RootSystem, w: Sequence) -> Weight:
    w = list(_check_weight(rs, w))
    while True:
        k = next((j for j, x in enumerate(w) if x < 0), None)
        if k is None:
            return tuple(w)
        wk = w[k]
        w = [w[j] - wk * rs.cartan[j][k] for j in range(rs.rank)]


def weyl_order_from_heights(cartan: Sequence[Sequence[int]]) -> int:
    """Order of the Weyl group of ``cartan`` as the product of ``e + 1`` over exponents.

    The exponents form the partition conjugate to the height distribution of
    positive roots.
    """
    if not cartan:
        return 1
    counts: dict[int, int] = {}
    for a in positive_root_closure(cartan):
        counts[sum(a)] = counts.get(sum(a), 0) + 1
    order = 1
    for k in sorted(counts):
        n_exp = counts[k] - counts.get(k + 1, 0)
        order *= (k + 1) ** n_exp
    return order


def orbit_size(rs: RootSystem, w: Sequence) -> int:
    """``|W| / |W_lambda|`` for the dominant representative ``lambda`` of ``w``."""
    dom = dominant_representative(rs, w)
    zeros = [i for i, x in enumerate(dom) if x == 0]
    sub = [[rs.cartan[i][j] for j in zeros] for i in zeros]
    return rs.weyl_order // weyl_order_from_heights(sub)


def orbit_array(rs: RootSystem, w: Sequence, cap: int | None = None,
                backend: str | None = None) -> tuple[np.ndarray, int]:
    """Orbit of ``w`` as a lex-sorted int64 array scaled by a common denominator.

    Returns ``(points, den)``; the true orbit is ``points / den``.
    """
    cap = default_orbit_cap() if cap is None else cap
    if cap < 1:
        raise ValidationError("orbit cap must be >= 1")
    dom = dominant_representative(rs, w)
    size = orbit_size(rs, dom)
    if size > cap:
        raise ResourceError(f"Weyl orbit of size {size} exceeds cap of {cap} elements", cap=cap)
    den = math.lcm(*(x.denominator for x in dom))
    scaled = np.array([int(x * den) for x in dom], dtype=np.int64)
    pts, count = _kernels.orbit_tree(rs.cartan_array, scaled, size, backend=backend)
    if count != size:
        raise RuntimeError(f"orbit kernel produced {count} points, expected {size}")
    return _kernels.lex_sorted(pts), den


def weyl_orbit(rs: RootSystem, w: Sequence, cap: int | None = None,
               backend: str | None = None) -> list[Weight]:
    """The W-orbit of ``w``, sorted lexicographically.

    Raises ``ResourceError`` if the orbit has more than ``cap`` elements.
    """
    pts, den = orbit_array(rs, w, cap, backend)
    return [tuple(Fraction(int(v), den) for v in row) for row in pts.tolist()]


def linkage_class(rs: RootSystem, gamma: Sequence, cap: int | None = None,
                  backend: str | None = None) -> list[Weight]:
    """``{w(gamma - rho) + rho}``, sorted lexicographically."""
    gamma = _check_weight(rs, gamma)
    shifted = tuple(g - 1 for g in gamma)
    return [tuple(x + 1 for x in o) for o in weyl_orbit(rs, shifted, cap, backend)]


def is_antidominant_shifted(rs: RootSystem, gamma: Sequence) -> bool:
    return all(Fraction(g) <= 1 for g in _check_weight(rs, gamma))


def stabilizer_root_set(rs: RootSystem, gamma: Sequence) -> frozenset[Root]:
    """Positive roots whose coroot pairs to zero with ``gamma - rho``."""
    shifted = tuple(g - 1 for g in _check_weight(rs, gamma))
    return frozenset(a for a in rs.positive_roots if rs.pair(shifted, a) == 0)


def is_integral(w: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in w)
