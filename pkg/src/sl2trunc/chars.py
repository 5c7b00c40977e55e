"""Truncated formal t-characters and their sl(2) bookkeeping.

A character is a finite window ``[floor, cap]`` of a formal series in ``q``
whose exponent is the t-weight ``mu(h)``.  Coefficients outside the window are
unknown, so equality only ever means equality on the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .sl2pair import GradedDims, PairInvariants


@dataclass(frozen=True)
class FormalTCharacter:
    """Coefficients on ``[floor, cap]``; ``cap=None`` marks a fully known finite character."""

    coeffs: dict[int, int]
    floor: int
    cap: int | None

    def __post_init__(self):
        clean = {p: c for p, c in sorted(self.coeffs.items()) if c}
        bad = [p for p in clean if p < self.floor or (self.cap is not None and p > self.cap)]
        if bad:
            raise ValueError(f"weights {bad} outside window [{self.floor}, {self.cap}]")
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, p: int) -> int:
        return self.coeffs.get(p, 0)

    def __add__(self, other: "FormalTCharacter") -> "FormalTCharacter":
        floor = min(self.floor, other.floor)
        caps = [c for c in (self.cap, other.cap) if c is not None]
        cap = min(caps) if caps else None
        out: dict[int, int] = {}
        for src in (self, other):
            for p, c in src.coeffs.items():
                if cap is None or p <= cap:
                    out[p] = out.get(p, 0) + c
        return FormalTCharacter(out, floor, cap)

    def scaled(self, k: int) -> "FormalTCharacter":
        return FormalTCharacter({p: k * c for p, c in self.coeffs.items()}, self.floor, self.cap)

    @property
    def top(self) -> int:
        """Largest weight of the window (the support maximum when fully known)."""
        if self.cap is not None:
            return self.cap
        return max(self.coeffs, default=self.floor)

    def window(self) -> list[int]:
        """Dense coefficient list for weights ``floor..top``."""
        return [self[p] for p in range(self.floor, self.top + 1)]

    @property
    def dimension(self) -> int:
        return sum(self.coeffs.values())

    @classmethod
    def zero(cls, floor: int = 0, cap: int | None = None) -> "FormalTCharacter":
        return cls({}, floor, cap)


@dataclass(frozen=True)
class GammaMults:
    """``mu -> gamma(mu)``: the number of k-Vermas ``M_k(mu)`` in the restriction."""

    mults: dict[int, int]
    floor: int
    cap: int
    negative: tuple[int, ...] = field(default=())

    @property
    def is_genuine(self) -> bool:
        return not self.negative


def verma_t_character(E_weight: int, E_dim: int, gd: GradedDims | Sequence[int],
                      cap: int) -> FormalTCharacter:
    """``E_dim * q^|E| * prod over positive weights p of n of 1/(1 - q^p)`` up to ``cap``.

    ``gd`` may also be the list of positive t-weights of ``n`` directly.
    """
    if cap < E_weight:
        raise DomainError(f"cap {cap} is below |E| = {E_weight}")
    if E_dim < 1:
        raise DomainError("E_dim must be >= 1")
    weights = gd.positive_weights if isinstance(gd, GradedDims) else tuple(gd)
    if any(p <= 0 for p in weights):
        raise DomainError("weights of n must be positive")
    span = cap - E_weight
    c = [0] * (span + 1)
    c[0] = E_dim
    for p in weights:
        # multiply by 1/(1 - q^p)
        for k in range(p, span + 1):
            c[k] += c[k - p]
    return FormalTCharacter({E_weight + k: v for k, v in enumerate(c)}, E_weight, cap)


def gamma_multiplicities(ch: FormalTCharacter) -> GammaMults:
    """Invert ``ch = sum gamma(mu) q^mu / (1 - q^2)`` on the window.

    Negative values are kept and listed in ``negative`` rather than raised.
    """
    if ch.floor < 2:
        raise DomainError(f"character floor {ch.floor} < 2 is outside every truncated category")
    mults = {mu: ch[mu] - ch[mu - 2] for mu in range(ch.floor, ch.cap + 1)}
    negative = tuple(mu for mu, g in mults.items() if g < 0)
    return GammaMults({mu: g for mu, g in mults.items() if g}, ch.floor, ch.cap, negative)


def reconstruct(gm: GammaMults) -> FormalTCharacter:
    """``sum gamma(mu) (q^mu + q^(mu+2) + ...)`` on the window of ``gm``."""
    out: dict[int, int] = {}
    for mu, g in gm.mults.items():
        for p in range(mu, gm.cap + 1, 2):
            out[p] = out.get(p, 0) + g
    return FormalTCharacter(out, gm.floor, gm.cap)


def sl2_string(mu: int) -> dict[int, int]:
    """Character of the simple sl(2)-module ``V(mu)``."""
    return {w: 1 for w in range(-mu, mu + 1, 2)}


def gamma1_character(gm: GammaMults) -> FormalTCharacter:
    """``sum gamma(mu) ch V(mu - 2)``: the k-character of the image under the equivalence.

    Only the ``gamma(mu)`` with ``mu <= gm.cap`` are known, so the result is
    exact as a sum over them; its window is ``[-(cap - 2), cap - 2]``.
    """
    if gm.negative:
        raise DomainError(f"negative gamma(mu) at mu = {list(gm.negative)}")
    top = gm.cap - 2
    out: dict[int, int] = {}
    for mu, g in gm.mults.items():
        for w, c in sl2_string(mu - 2).items():
            out[w] = out.get(w, 0) + g * c
    return FormalTCharacter(out, -top, top)


def kostant_weights(mu: int) -> tuple[int, int]:
    """t-weights of ``H_0(n_k, V(mu))`` and ``H_1(n_k, V(mu))``.

    ``n_k`` raises weight by 2; the coinvariants keep the lowest weight vector
    and the 1-cycles are ``n_k`` tensored with the highest weight vector.
    """
    if mu < 0:
        raise DomainError(f"highest weight {mu} < 0")
    return -mu, mu + 2


def exterior_power(weights: Iterable[int], i: int) -> dict[int, int]:
    """Character of the ``i``-th exterior power of a graded space given by its weights."""
    if i < 0:
        return {}
    # layers[k] = character of Lambda^k of the weights seen so far
    layers: list[dict[int, int]] = [{0: 1}]
    for w in weights:
        layers.append({})
        for k in range(len(layers) - 1, 0, -1):
            for p, c in layers[k - 1].items():
                layers[k][p + w] = layers[k].get(p + w, 0) + c
    return dict(layers[i]) if i < len(layers) else {}


def tensor(ch: FormalTCharacter, poly: Mapping[int, int]) -> FormalTCharacter:
    """Product of a windowed character with a finite character."""
    if not poly:
        return FormalTCharacter.zero(ch.floor, ch.cap)
    lo = min(poly)
    out: dict[int, int] = {}
    for p, c in ch.coeffs.items():
        for w, d in poly.items():
            out[p + w] = out.get(p + w, 0) + c * d
    if ch.cap is None:
        return FormalTCharacter(out, ch.floor + lo, None)
    # above cap + lo an unknown coefficient of ch would contribute
    cap = ch.cap + lo
    return FormalTCharacter({p: c for p, c in out.items() if p <= cap}, ch.floor + lo, cap)


def e1_term(h0: FormalTCharacter, h1: FormalTCharacter, nkperp_weights: Sequence[int], i: int,
            dim_n: int | None = None) -> FormalTCharacter:
    """``H_0 (x) Lambda^i(n / n_k) + H_1 (x) Lambda^(i-1)(n / n_k)`` as a t-character."""
    if i < 0:
        raise DomainError(f"degree {i} < 0")
    if dim_n is not None and len(nkperp_weights) != dim_n - 1:
        raise DomainError(f"expected {dim_n - 1} weights of n/n_k, got {len(nkperp_weights)}")
    parts = []
    for ch, k in ((h0, i), (h1, i - 1)):
        ext = exterior_power(nkperp_weights, k)
        if ext:
            parts.append(tensor(ch, ext))
    if not parts:
        return FormalTCharacter.zero(min(h0.floor, h1.floor))
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def finite_character(coeffs: Mapping[int, int]) -> FormalTCharacter:
    """A character with full support known (window = support hull)."""
    keys = [p for p, c in coeffs.items() if c]
    return FormalTCharacter(dict(coeffs), min(keys, default=0), None)


@dataclass(frozen=True)
class Certificates:
    n: int
    E_max: int
    A_pass: bool
    A_witness: tuple[int, int] | None
    B_pass: bool
    B_witness: tuple[int, int] | None
    closed_form: bool
    Lambda: Fraction

    @property
    def passed(self) -> bool:
        return self.A_pass and self.B_pass


def truncation_certificates(pi: PairInvariants, n: int, E_max: int) -> Certificates:
    """Scan the two weight inequalities that make truncation at ``n`` work.

    A: ``2 - |E| + lambda1 + lambda2 < |F|`` for all ``|E|, |F|`` in
    ``[n + 2, E_max]``.  B: no integer ``p`` with ``n + 2 <= p < |E|`` and
    ``p <= 2 - |E| + lambda1``.  ``closed_form`` is ``n >= Lambda``; the two agree
    whenever Lambda is an integer.
    """
    if E_max < n + 2:
        raise DomainError(f"E_max {E_max} < n + 2 = {n + 2}")
    l1, l2 = pi.lambda1, pi.lambda2
    a_wit = None
    for e in range(n + 2, E_max + 1):
        for f in range(n + 2, E_max + 1):
            if not 2 - e + l1 + l2 < f:
                a_wit = (e, f)
                break
        if a_wit:
            break
    b_wit = None
    for e in range(n + 2, E_max + 1):
        top = min(e - 1, 2 - e + l1)
        if top >= n + 2:
            b_wit = (e, n + 2)
            break
    return Certificates(n, E_max, a_wit is None, a_wit, b_wit is None, b_wit,
                        n >= pi.Lambda, pi.Lambda)
