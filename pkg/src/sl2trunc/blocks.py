"""Simple objects of a truncated block in the regular (Borel) case.

The simple objects ``L(E)`` with central character ``theta_gamma`` are indexed
by the linkage class of ``gamma``; the t-weights of ``M(E)`` rise from
``|E| = eta(h)``, so ``L(E)`` survives truncation at ``n + 2`` exactly when
``eta(h) >= n + 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, PreconditionError, UnsupportedCaseError
from .rootsys import RootSystem, Weight, orbit_array
from .sl2pair import Characteristic, HElement, pair_invariants, root_value


@dataclass(frozen=True)
class BlockParam:
    eta: Weight
    eta_h: int

    @property
    def minimal_k_type(self) -> int:
        return minimal_k_type(self.eta_h)


@dataclass(frozen=True)
class BlockCount:
    gamma: Weight
    n: int | None
    linkage_size: int
    truncated_params: list[BlockParam]
    lambda_ok: bool
    Lambda: Fraction | None

    @property
    def count(self) -> int:
        return len(self.truncated_params)


def minimal_k_type(E_weight: int) -> int:
    if E_weight < 2:
        raise DomainError(f"|E| = {E_weight} is below the truncation floor 2")
    return E_weight - 2


def _characteristic_of(rs: RootSystem, h: HElement) -> Characteristic:
    vals = []
    for i in range(rs.rank):
        v = root_value(rs, h, tuple(int(i == j) for j in range(rs.rank)))
        if v.denominator != 1 or v not in (0, 1, 2):
            raise DomainError(f"alpha_{i + 1}(h) = {v} is not a characteristic value")
        vals.append(int(v))
    return Characteristic(tuple(vals))


def count_truncated_simples(rs: RootSystem, h: HElement, gamma: Sequence, n: int | None,
                            cap: int | None = None, backend: str | None = None) -> BlockCount:
    """Count linked parameters ``eta`` with ``eta(h) >= n + 2``.

    ``n=None`` disables truncation.  Coincident parameters of a singular class
    are counted once.
    """
    c = _characteristic_of(rs, h)
    if not c.is_regular:
        raise UnsupportedCaseError(
            f"h with characteristic {c} is not regular; only the Borel case is supported")
    gamma = tuple(Fraction(x) for x in gamma)
    if h(gamma).denominator != 1:
        raise PreconditionError(f"gamma(h) = {h(gamma)} is not an integer")
    try:
        Lambda = pair_invariants(rs, c).Lambda
    except DomainError:
        # g = k: no quotient, no truncation bound
        Lambda = None

    shifted = tuple(g - 1 for g in gamma)
    pts, den = orbit_array(rs, shifted, cap, backend)
    hden = math.lcm(*(x.denominator for x in h.n))
    hn = np.array([int(x * hden) for x in h.n], dtype=np.int64)
    # eta(h) = (pts @ hn + rho(h) * scale) / scale, all in integers
    scale = den * hden
    tot = pts @ hn + int(h.rho_h * scale)
    keep = tot % scale == 0
    if n is not None:
        keep &= tot >= (n + 2) * scale
    params = [BlockParam(tuple(Fraction(v, den) + 1 for v in row), val // scale)
              for row, val in zip(pts[keep].tolist(), tot[keep].tolist())]
    return BlockCount(
        gamma=gamma,
        n=n,
        linkage_size=int(pts.shape[0]),
        truncated_params=params,
        lambda_ok=n is not None and Lambda is not None and n >= Lambda,
        Lambda=Lambda,
    )
