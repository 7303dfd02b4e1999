import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ikit.catalog import bowtie, chain, diamond, pentagon, powerset, standard_catalog
from ikit.errors import (
    AntisymmetryViolation,
    CapExceeded,
    NotALattice,
    ReflexivityViolation,
    TransitivityViolation,
)
from ikit.order import (
    MonotoneMap,
    as_complete_lattice,
    check_monotone,
    compose,
    lattice,
    monotone_maps,
    validate_poset,
)

SMALL = {k: v for k, v in standard_catalog().items() if len(v) <= 6}


def test_chain_is_valid_poset():
    p = validate_poset([0, 1, 2], lambda x, y: x <= y)
    assert len(p) == 3 and p.leq(0, 2) and not p.leq(2, 0)


def test_two_cycle_is_antisymmetry_violation():
    with pytest.raises(AntisymmetryViolation) as exc:
        validate_poset(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])
    assert exc.value.witness == ("a", "b")


def test_reflexivity_and_transitivity_witnesses():
    with pytest.raises(ReflexivityViolation) as exc:
        validate_poset(["a", "b"], [("a", "a")])
    assert exc.value.witness == ("b",)
    rel = [("x", "x"), ("y", "y"), ("z", "z"), ("x", "y"), ("y", "z")]
    with pytest.raises(TransitivityViolation) as exc:
        validate_poset(["x", "y", "z"], rel)
    assert exc.value.witness == ("x", "y", "z")


def test_empty_element_list_rejected():
    with pytest.raises(ValueError):
        validate_poset([], [])


def test_powerset_of_two_points_matches_inclusion_oracle():
    subs = oracles.all_subsets("ab")
    p = validate_poset(subs, lambda x, y: x <= y)
    assert len(p) == 4
    for x, y in itertools.product(subs, repeat=2):
        assert p.leq(x, y) == (x <= y)


def test_powerset_of_three_points_top_bottom():
    L = powerset("abc")
    assert L.top == frozenset("abc") and L.bottom == frozenset()


def test_bowtie_is_not_a_lattice():
    P = bowtie()
    with pytest.raises(NotALattice) as exc:
        as_complete_lattice(P)
    assert set(exc.value.witness) == {"m1", "m2"}
    assert not oracles.is_complete_lattice(P.elements, P.leq)


def test_chain_meet_is_min_join_is_max():
    L = chain(3)
    for x, y in itertools.product(L.elements, repeat=2):
        assert L.meet(x, y) == min(x, y) and L.join(x, y) == max(x, y)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_subset_bounds_match_definition(name):
    L = SMALL[name]
    for S in oracles.all_subsets(L.elements):
        assert L.meet_all(S) == oracles.glb(L.elements, L.leq, S)
        assert L.join_all(S) == oracles.lub(L.elements, L.leq, S)
    assert L.meet_all([]) == L.top and L.join_all([]) == L.bottom


@pytest.mark.parametrize("name", sorted(SMALL))
def test_binary_lattice_laws(name):
    L = SMALL[name]
    els = L.elements
    for x, y in itertools.product(els, repeat=2):
        assert L.meet(x, y) == L.meet(y, x) and L.join(x, y) == L.join(y, x)
        assert L.meet(x, L.join(x, y)) == x and L.join(x, L.meet(x, y)) == x
    for x in els:
        assert L.meet(x, x) == x == L.join(x, x)
    for x, y, z in itertools.product(els, repeat=3):
        assert L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z)
        assert L.join(x, L.join(y, z)) == L.join(L.join(x, y), z)


def test_subset_fold_matches_pairwise_and_respects_cap():
    L = pentagon()
    meets = L.subset_meets()
    for mask in range(1 << len(L)):
        members = [L.elements[k] for k in range(len(L)) if mask >> k & 1]
        assert L.elements[meets[mask]] == L.meet_all(members)
    with pytest.raises(CapExceeded):
        powerset("abcd").subset_joins(cap=12)


def test_check_monotone_examples():
    L = chain(3, ["0", "1", "2"])
    assert check_monotone(MonotoneMap.identity(L))
    bad = MonotoneMap.from_mapping(L, L, {"0": "1", "1": "0", "2": "2"})
    v = check_monotone(bad)
    assert not v and v.witness == ("0", "1")
    P = powerset("a")
    comp = MonotoneMap.from_mapping(P, P, {frozenset(): frozenset("a"), frozenset("a"): frozenset()})
    assert check_monotone(comp).witness == (frozenset(), frozenset("a"))


@pytest.mark.parametrize("dom,cod", [(chain(3), chain(2)), (diamond(), chain(2)), (powerset("ab"), chain(3))])
def test_monotone_map_enumeration_matches_filter(dom, cod):
    ours = {tuple(t) for t in monotone_maps(dom, cod)}
    ref = set()
    for vals in itertools.product(range(len(cod)), repeat=len(dom)):
        f = {dom.elements[k]: cod.elements[v] for k, v in enumerate(vals)}
        if oracles.is_monotone(dom.elements, dom.leq, cod.leq, f):
            ref.add(vals)
    assert ours == ref


def test_compose_order():
    L = chain(3)
    f = MonotoneMap.from_mapping(L, L, {0: 0, 1: 0, 2: 2})
    g = MonotoneMap.from_mapping(L, L, {0: 1, 1: 1, 2: 2})
    assert compose(g, f).as_dict() == {0: 1, 1: 1, 2: 2}
    assert f.then(g) == compose(g, f)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_random_relations_validate_iff_partial_order(n, data):
    els = list(range(n))
    rel = data.draw(st.sets(st.tuples(st.sampled_from(els), st.sampled_from(els))))
    is_order = (all((x, x) in rel for x in els)
                and all(not ((x, y) in rel and (y, x) in rel) or x == y for x in els for y in els)
                and all((x, z) in rel for x, y in rel for y2, z in rel if y == y2))
    try:
        validate_poset(els, rel)
        assert is_order
    except (ReflexivityViolation, AntisymmetryViolation, TransitivityViolation):
        assert not is_order


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_random_closure_relations_lattice_iff_oracle(n, data):
    """Transitive closure of a random DAG on ``0..n-1``; completeness agrees with bounds oracle."""
    els = list(range(n))
    edges = data.draw(st.sets(st.tuples(st.sampled_from(els), st.sampled_from(els)).filter(lambda e: e[0] < e[1])))
    rel = np.eye(n, dtype=bool)
    for a, b in edges:
        rel[a, b] = True
    for k in range(n):
        rel |= rel[:, [k]] & rel[[k], :]
    leq = lambda x, y: bool(rel[x, y])  # noqa: E731
    try:
        lattice(els, leq)
        assert oracles.is_complete_lattice(els, leq)
    except NotALattice:
        assert not oracles.is_complete_lattice(els, leq)
