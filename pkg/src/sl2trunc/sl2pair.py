"""The sl(2)-subalgebra through its weighted Dynkin characteristic.

A characteristic ``a`` fixes ``h`` by ``alpha_i(h) = a_i``; everything else
(the t-grading of g, the k-module structure of g and g/k, the truncation
bound and the parabolic dimensions) is read off the root data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InfeasibleCharacteristicError, ValidationError
from .linalg import solve
from .rootsys import RootSystem


@dataclass(frozen=True)
class Characteristic:
    values: tuple[int, ...]

    def __post_init__(self):
        for v in self.values:
            if v not in (0, 1, 2):
                raise ValidationError(f"characteristic entries must be 0, 1 or 2; got {v!r}")

    @classmethod
    def parse(cls, text: str, rs: RootSystem) -> "Characteristic":
        text = text.strip()
        if text.lower() == "principal":
            return principal_characteristic(rs)
        try:
            vals = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValidationError(f"cannot parse characteristic {text!r}") from None
        if len(vals) != rs.rank:
            raise ValidationError(f"characteristic has {len(vals)} entries, rank is {rs.rank}")
        return cls(vals)

    @property
    def is_principal(self) -> bool:
        return all(v == 2 for v in self.values)

    @property
    def is_regular(self) -> bool:
        return all(v != 0 for v in self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


@dataclass(frozen=True)
class HElement:
    """``h = sum(n_i h_i)`` in simple coroots."""

    n: tuple[Fraction, ...]

    def __call__(self, weight: Sequence) -> Fraction:
        """``weight(h)`` for a weight given by coroot evaluations."""
        return sum((ni * Fraction(w) for ni, w in zip(self.n, weight)), Fraction(0))

    @property
    def rho_h(self) -> Fraction:
        return sum(self.n, Fraction(0))


@dataclass(frozen=True)
class GradedDims:
    """``p -> dim g(p)`` for the eigenvalues ``p`` of ``ad h``."""

    dims: dict[int, int]
    positive_weights: tuple[int, ...]

    def __getitem__(self, p: int) -> int:
        return self.dims.get(p, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_n(self) -> int:
        return sum(d for p, d in self.dims.items() if p > 0)

    @property
    def max_weight(self) -> int:
        return max(self.dims)

    def as_sorted(self) -> list[tuple[int, int]]:
        return sorted(self.dims.items())


@dataclass(frozen=True)
class PairInvariants:
    lambda1: int
    lambda2: int
    Lambda: Fraction
    dim_n: int
    dim_Ct: int
    dim_s: int
    dim_c: int
    gdim_bound: int
    beta_h: int
    rho_h: Fraction
    dim_g: int

    @property
    def Lambda_integral(self) -> bool:
        return self.Lambda.denominator == 1

    @property
    def dim_nkperp(self) -> int:
        return self.dim_n - 1


def principal_characteristic(rs: RootSystem) -> Characteristic:
    return Characteristic(tuple(2 for _ in range(rs.rank)))


def solve_h(rs: RootSystem, c: Characteristic) -> HElement:
    """Solve ``sum_j n_j alpha_i(h_j) = a_i``; note ``alpha_i(h_j) = cartan[j][i]``."""
    if len(c.values) != rs.rank:
        raise ValidationError(f"characteristic has {len(c.values)} entries, rank is {rs.rank}")
    transposed = [[rs.cartan[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    return HElement(tuple(solve(transposed, list(c.values))))


def root_value(rs: RootSystem, h: HElement, root: Sequence[int]) -> Fraction:
    """``alpha(h)`` for a root in simple-root coordinates."""
    simple_vals = [sum((h.n[j] * rs.cartan[j][i] for j in range(rs.rank)), Fraction(0))
                   for i in range(rs.rank)]
    return sum((c * v for c, v in zip(root, simple_vals)), Fraction(0))


def grading(rs: RootSystem, h: HElement) -> GradedDims:
    pos = []
    for a in rs.positive_roots:
        v = root_value(rs, h, a)
        if v.denominator != 1:
            raise InfeasibleCharacteristicError(f"root {a} has non-integral value {v} on h")
        pos.append(int(v))
    dims: Counter[int] = Counter()
    for p in pos:
        dims[p] += 1
        dims[-p] += 1
    dims[0] += rs.rank
    return GradedDims(dict(sorted(dims.items())), tuple(sorted(p for p in pos if p > 0)))


def characteristic_feasibility(gd: GradedDims) -> bool:
    """Raising by 2 must be surjective in nonnegative degrees: ``dim g(p) >= dim g(p+2)``."""
    top = max(gd.dims)
    return all(gd[p] >= gd[p + 2] for p in range(0, top + 1))


def k_decomposition(gd: GradedDims) -> dict[int, int]:
    """Multiplicity of each ``V_k(mu)`` in g."""
    out = {}
    for mu in range(0, max(gd.dims) + 1):
        m = gd[mu] - gd[mu + 2]
        if m < 0:
            raise InfeasibleCharacteristicError(
                f"negative multiplicity {m} for V({mu}): dim g({mu}) < dim g({mu + 2})")
        if m:
            out[mu] = m
    return out


def quotient_decomposition(gd: GradedDims) -> dict[int, int]:
    """``k_decomposition`` of g/k, i.e. with one copy of ``V_k(2)`` removed."""
    dec = k_decomposition(gd)
    if dec.get(2, 0) < 1:
        raise DomainError("g contains no copy of V(2); not an sl(2) characteristic")
    dec[2] -= 1
    return {mu: m for mu, m in dec.items() if m}


def quotient_weights(gd: GradedDims) -> list[int]:
    """t-weights of g/k with multiplicity, largest first."""
    counts = Counter(gd.dims)
    for p in (-2, 0, 2):
        if counts[p] < 1:
            raise DomainError("g has no weight-2 space for h; not an sl(2) characteristic")
        counts[p] -= 1
    return sorted(counts.elements(), reverse=True)


def pair_invariants(rs: RootSystem, c: Characteristic) -> PairInvariants:
    h = solve_h(rs, c)
    gd = grading(rs, h)
    if not characteristic_feasibility(gd):
        raise InfeasibleCharacteristicError(f"characteristic {c} fails dim g(p) >= dim g(p+2)")
    weights = quotient_weights(gd)
    if not weights:
        raise DomainError("g = k: the quotient g/k is zero, no truncation bound")
    lam1 = weights[0]
    # multiset reading: a repeated top weight gives lambda2 = lambda1
    lam2 = weights[1] if len(weights) > 1 else weights[0]
    dim_ct = gd[0]
    dim_c = rs.rank - sum(1 for v in c.values if v == 0)
    dim_n = gd.dim_n
    return PairInvariants(
        lambda1=lam1,
        lambda2=lam2,
        Lambda=Fraction(lam1 + lam2, 2),
        dim_n=dim_n,
        dim_Ct=dim_ct,
        dim_s=dim_ct - dim_c,
        dim_c=dim_c,
        gdim_bound=2 * dim_n + dim_c - 1,
        beta_h=gd.max_weight,
        rho_h=h.rho_h,
        dim_g=gd.total,
    )


def nkperp_weights(gd: GradedDims) -> list[int]:
    """t-weights of ``n`` with one weight-2 vector (the one spanning ``n_k``) removed."""
    ws = list(gd.positive_weights)
    try:
        ws.remove(2)
    except ValueError:
        raise DomainError("n has no weight-2 vector; not an sl(2) characteristic") from None
    return ws
