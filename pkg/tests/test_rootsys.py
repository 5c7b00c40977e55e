from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import bfs_orbit, reflection_closure_roots
from sl2trunc.errors import ResourceError, ValidationError
from sl2trunc.rootsys import (AlgebraSpec, build_root_system, dominant_representative,
                              is_antidominant_shifted, linkage_class, orbit_size,
                              positive_root_closure, reflect,
                              simple_weyl_order, stabilizer_root_set, weyl_order_from_heights,
                              weyl_orbit)

CLASSICAL_COUNTS = {"A": lambda r: r * (r + 1) // 2, "B": lambda r: r * r, "C": lambda r: r * r,
                    "D": lambda r: r * (r - 1)}
EXCEPTIONAL_COUNTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


def all_simple(max_rank=8):
    out = []
    for fam in "ABCD":
        for r in range(1, max_rank + 1):
            try:
                out.append(AlgebraSpec(((fam, r),)))
            except ValidationError:
                pass
    out += [AlgebraSpec((k,)) for k in EXCEPTIONAL_COUNTS]
    return out


@pytest.mark.parametrize("spec", all_simple(), ids=str)
def test_positive_root_counts(spec):
    fam, r = spec.factors[0]
    rs = build_root_system(spec)
    expected = CLASSICAL_COUNTS[fam](r) if fam in CLASSICAL_COUNTS else EXCEPTIONAL_COUNTS[(fam, r)]
    assert len(rs.positive_roots) == expected


@pytest.mark.parametrize("spec", all_simple(), ids=str)
def test_structure_invariants(spec):
    rs = build_root_system(spec)
    for i in range(rs.rank):
        assert rs.cartan[i][i] == 2
        assert all(rs.cartan[i][j] <= 0 for j in range(rs.rank) if j != i)
    top = rs.highest_root(0)
    assert tuple(rs.marks) == top
    assert all(all(t >= a for t, a in zip(top, root)) for root in rs.positive_roots)
    assert rs.rho == tuple(Fraction(1) for _ in range(rs.rank))
    assert weyl_order_from_heights(rs.cartan) == rs.weyl_order


@pytest.mark.parametrize("spec", [s for s in all_simple() if s.rank <= 6], ids=str)
def test_root_closure_matches_reflection_oracle(spec):
    rs = build_root_system(spec)
    assert sorted(rs.positive_roots) == reflection_closure_roots(rs.cartan)


def test_examples():
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    assert len(a2.positive_roots) == 3 and a2.marks == (1, 1)
    a1 = build_root_system(AlgebraSpec.parse("a1"))
    assert len(a1.positive_roots) == 1 and a1.marks == (1,)
    b2 = build_root_system(AlgebraSpec.parse("B2"))
    assert len(b2.positive_roots) == 4 and sum(b2.marks) == 3
    assert 2 * sum(b2.marks) == 6


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "A", "", "A1+"])
def test_invalid_specs(text):
    with pytest.raises(ValidationError):
        AlgebraSpec.parse(text)


def test_composite_concatenates():
    ab = build_root_system(AlgebraSpec.parse("A2+B2"))
    a = build_root_system(AlgebraSpec.parse("A2"))
    b = build_root_system(AlgebraSpec.parse("B2"))
    assert ab.rank == 4
    assert ab.marks == a.marks + b.marks
    assert ab.weyl_order == a.weyl_order * b.weyl_order == 48
    assert len(ab.positive_roots) == len(a.positive_roots) + len(b.positive_roots)
    assert tuple(row[:2] for row in ab.cartan[:2]) == a.cartan
    assert tuple(row[2:] for row in ab.cartan[2:]) == b.cartan


def test_reflect_examples():
    a1 = build_root_system(AlgebraSpec.parse("A1"))
    assert reflect(a1, 1, (1,)) == (Fraction(-1),)
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    assert reflect(a2, 1, (1, 0)) == (-1, 1)
    assert reflect(a2, 2, a2.zero) == a2.zero
    with pytest.raises(ValidationError):
        reflect(a2, 3, (0, 0))
    with pytest.raises(ValidationError):
        reflect(a2, 0, (0, 0))


weights = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=3, max_size=3)


@given(weights, st.integers(1, 3))
def test_reflect_involution(w, i):
    rs = build_root_system(AlgebraSpec.parse("B3"))
    assert reflect(rs, i, reflect(rs, i, w)) == tuple(w)


def test_orbit_examples(backend):
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    assert weyl_orbit(a2, a2.zero, backend=backend) == [a2.zero]
    assert len(weyl_orbit(a2, a2.rho, backend=backend)) == 6
    b2 = build_root_system(AlgebraSpec.parse("B2"))
    assert len(weyl_orbit(b2, b2.rho, backend=backend)) == 8


@pytest.mark.parametrize("text", ["A1", "A2", "A3", "B2", "C3", "G2", "B3", "A1+A1", "A2+G2", "D4"])
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_orbit_matches_bfs_oracle(text, data):
    rs = build_root_system(AlgebraSpec.parse(text))
    w = data.draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2),
                           min_size=rs.rank, max_size=rs.rank))
    orb = weyl_orbit(rs, w)
    assert orb == bfs_orbit(rs.cartan, w)
    assert orb == sorted(orb)
    assert rs.weyl_order % len(orb) == 0
    assert len(orb) == orbit_size(rs, w)


def test_orbit_divides_weyl_order_by_enumeration():
    for text in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1+B3"):
        rs = build_root_system(AlgebraSpec.parse(text))
        for w in (rs.rho, rs.zero, tuple(range(rs.rank)), tuple((-1) ** k for k in range(rs.rank))):
            assert rs.weyl_order % len(weyl_orbit(rs, w)) == 0
        assert len(weyl_orbit(rs, rs.rho)) == rs.weyl_order


def test_known_weyl_orders():
    assert [simple_weyl_order(f, r) for f, r in [("A", 3), ("B", 3), ("D", 4), ("E", 6), ("G", 2)]] == \
        [24, 48, 192, 51840, 12]


def test_orbit_cap(backend):
    e8 = build_root_system(AlgebraSpec.parse("E8"))
    with pytest.raises(ResourceError, match="10000000"):
        weyl_orbit(e8, e8.rho, backend=backend)
    a3 = build_root_system(AlgebraSpec.parse("A3"))
    with pytest.raises(ResourceError, match="cap of 23"):
        weyl_orbit(a3, a3.rho, cap=23, backend=backend)
    assert len(weyl_orbit(a3, a3.rho, cap=24, backend=backend)) == 24


def test_orbit_cap_env(monkeypatch):
    a3 = build_root_system(AlgebraSpec.parse("A3"))
    monkeypatch.setenv("SL2TRUNC_ORBIT_CAP", "5")
    with pytest.raises(ResourceError):
        weyl_orbit(a3, a3.rho)
    monkeypatch.setenv("SL2TRUNC_ORBIT_CAP", "nope")
    with pytest.raises(ValidationError):
        weyl_orbit(a3, a3.rho)


def test_linkage_examples():
    a1 = build_root_system(AlgebraSpec.parse("A1"))
    assert linkage_class(a1, (-1,)) == [(Fraction(-1),), (Fraction(3),)]
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    assert linkage_class(a2, a2.rho) == [a2.rho]
    # gamma - rho = (2, 3) is regular
    assert len(linkage_class(a2, (3, 4))) == 6


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A1", "A2", "B2", "A3", "G2", "A1+A2"]), st.data())
def test_linkage_unique_antidominant_and_invariant(text, data):
    rs = build_root_system(AlgebraSpec.parse(text))
    g = data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank))
    cls = linkage_class(rs, g)
    assert sum(is_antidominant_shifted(rs, eta) for eta in cls) == 1
    other = data.draw(st.sampled_from(cls))
    assert linkage_class(rs, other) == cls


def test_antidominant_examples():
    b2 = build_root_system(AlgebraSpec.parse("B2"))
    assert is_antidominant_shifted(b2, b2.rho)
    assert is_antidominant_shifted(b2, b2.zero)
    assert not is_antidominant_shifted(b2, (2, 1))


def test_stabilizer_examples():
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    assert stabilizer_root_set(a2, (3, 4)) == frozenset()
    assert stabilizer_root_set(a2, a2.rho) == frozenset(a2.positive_roots)
    # gamma - rho = (0, 5)
    assert stabilizer_root_set(a2, (1, 6)) == {(1, 0)}


@pytest.mark.parametrize("text", ["A3", "B3", "C3", "G2", "A1+B2"])
def test_stabilizer_size_matches_parabolic(text):
    # stabilizers of W-conjugate weights are conjugate; for the dominant member
    # it is the parabolic subgroup on the zero coordinates
    rs = build_root_system(AlgebraSpec.parse(text))
    for w in product(range(-2, 3), repeat=rs.rank):
        stab = stabilizer_root_set(rs, tuple(x + 1 for x in w))
        dom = dominant_representative(rs, w)
        zeros = [i for i, x in enumerate(dom) if x == 0]
        sub = [[rs.cartan[i][j] for j in zeros] for i in zeros]
        assert len(stab) == (len(positive_root_closure(sub)) if zeros else 0)
        assert rs.weyl_order // orbit_size(rs, w) == weyl_order_from_heights(sub)


def test_b2_coroots():
    b2 = build_root_system(AlgebraSpec.parse("B2"))
    # alpha_2 short: (alpha_1 + alpha_2)^vee = 2 h_1 + h_2, (alpha_1 + 2 alpha_2)^vee = h_1 + h_2
    assert b2.coroots[(1, 1)] == (2, 1)
    assert b2.coroots[(1, 2)] == (1, 1)


def test_weight_length_checked():
    a2 = build_root_system(AlgebraSpec.parse("A2"))
    with pytest.raises(ValidationError):
        weyl_orbit(a2, (1, 2, 3))
