import itertools

import pytest

import oracles
from ikit.adjunction import AdjointPair, check_preservation
from ikit.errors import Associativity, CompositionClosure, IdentityLaw, ObjectMismatch
from ikit.interior import InteriorOp, check_interior, enumerate_interior_ops, initial_interior, is_continuous
from ikit.sieves import (
    GrothTopology,
    SieveInteriorFamily,
    Sieve,
    all_sieves,
    arrow_category,
    category_to_raw,
    chain_category,
    check_grothendieck,
    check_pullback_functoriality,
    check_sieve_interior,
    discrete_family,
    is_right_ideal,
    make_sieve,
    maximal_sieve,
    open_sieve_topology,
    pullback_action,
    pullback_sieve,
    sieve_lattice,
    trivial_family,
    validate_category,
)

fs = frozenset
TWO = arrow_category()
CHAIN3 = chain_category()


def _tables(C):
    dom = {f: C.dom(f) for f in C.morphisms}
    cod = {f: C.cod(f) for f in C.morphisms}
    return list(C.morphisms), dom, cod, dict(C.comp)


def test_validate_category_examples():
    assert TWO.objects == ("a", "b")
    assert CHAIN3.compose("bc", "ab") == "ac"
    raw = category_to_raw(TWO)
    raw["composition"] = [["u", "id_a", "id_b"]]
    with pytest.raises(IdentityLaw) as exc:
        validate_category(raw)
    assert exc.value.witness == ("u",)


def test_composition_closure_and_associativity():
    raw = category_to_raw(CHAIN3)
    raw["composition"] = []
    with pytest.raises(CompositionClosure) as exc:
        validate_category(raw)
    assert exc.value.witness == ("bc", "ab")
    raw = category_to_raw(CHAIN3)
    raw["composition"] = [["bc", "ab", "bc"]]
    with pytest.raises(CompositionClosure):
        validate_category(raw)
    # one object, two non-identity arrows e, z with e∘e = z, everything∘z = z,
    # z∘e = e (wrong): associativity breaks at (e, e, z) or earlier
    raw = {"objects": ["o"], "morphisms": [["id", "o", "o"], ["e", "o", "o"], ["z", "o", "o"]],
           "identities": {"o": "id"},
           "composition": [["e", "e", "z"], ["e", "z", "z"], ["z", "e", "e"], ["z", "z", "z"]]}
    with pytest.raises(Associativity):
        validate_category(raw)


def test_all_sieves_examples():
    assert [s.arrows for s in all_sieves(TWO, "b")] == [fs(), fs({"u"}), fs({"id_b", "u"})]
    assert [s.arrows for s in all_sieves(TWO, "a")] == [fs(), fs({"id_a"})]
    one = validate_category({"objects": ["o"], "morphisms": [["id", "o", "o"]],
                             "identities": {"o": "id"}, "composition": []})
    assert [s.arrows for s in all_sieves(one, "o")] == [fs(), fs({"id"})]
    with pytest.raises(ObjectMismatch):
        all_sieves(TWO, "z")


@pytest.mark.parametrize("C", [TWO, CHAIN3], ids=["two", "chain3"])
def test_all_sieves_match_right_ideal_filter(C):
    mors, dom, cod, comp = _tables(C)
    for c in C.objects:
        ours = {s.arrows for s in all_sieves(C, c)}
        assert ours == set(oracles.sieves_by_filter(mors, dom, cod, comp, c))
        L = sieve_lattice(C, c)
        assert L.top == maximal_sieve(C, c) and L.bottom.arrows == fs()
        for S, T in itertools.product(L.elements, repeat=2):
            assert L.meet(S, T).arrows == S.arrows & T.arrows
            assert L.join(S, T).arrows == S.arrows | T.arrows


def test_maximal_sieve_examples():
    assert maximal_sieve(TWO, "b").arrows == {"id_b", "u"}
    assert maximal_sieve(TWO, "a").arrows == {"id_a"}


def test_pullback_examples():
    tb, ta = maximal_sieve(TWO, "b"), maximal_sieve(TWO, "a")
    assert pullback_sieve(TWO, "u", tb) == ta
    assert pullback_sieve(TWO, "u", make_sieve(TWO, "b", {"u"})) == ta
    for S in all_sieves(TWO, "b"):
        assert pullback_sieve(TWO, "id_b", S) == S
    with pytest.raises(ObjectMismatch):
        pullback_sieve(TWO, "u", ta)


@pytest.mark.parametrize("C", [TWO, CHAIN3], ids=["two", "chain3"])
def test_pullback_functoriality(C):
    assert check_pullback_functoriality(C)
    for h in C.morphisms:
        for S in all_sieves(C, C.cod(h)):
            pulled = pullback_sieve(C, h, S)
            assert is_right_ideal(C, pulled.at, pulled.arrows)


@pytest.mark.parametrize("C", [TWO, CHAIN3], ids=["two", "chain3"])
def test_pullback_action_adjoints(C):
    for h in C.morphisms:
        a = pullback_action(C, h)
        assert check_preservation(AdjointPair(a.existential, a.inverse))
        assert check_preservation(AdjointPair(a.inverse, a.universal))
        for iY in enumerate_interior_ops(a.target):
            init = initial_interior(a, iY)
            assert check_interior(init) and is_continuous(a, init, iY)


def test_sieve_interior_examples():
    assert check_sieve_interior(discrete_family(TWO))
    assert check_sieve_interior(trivial_family(TWO))
    tb, u = maximal_sieve(TWO, "b"), make_sieve(TWO, "b", {"u"})
    tables = {"a": {S: S for S in all_sieves(TWO, "a")},
              "b": {S: (u if S == tb else S) for S in all_sieves(TWO, "b")}}
    v = check_sieve_interior(SieveInteriorFamily.from_tables(TWO, tables))
    assert v.law == "upper_bound" and v.witness == ("b", tb)


def _covers(J):
    return {c: {S.arrows for S in J.sorted_covers(c)} for c in J.category.objects}


def test_open_sieve_topology_examples():
    J = open_sieve_topology(discrete_family(TWO))
    assert _covers(J) == {"a": {fs(), fs({"id_a"})}, "b": {fs(), fs({"u"}), fs({"id_b", "u"})}}
    J = open_sieve_topology(trivial_family(TWO))
    assert _covers(J) == {"a": {fs(), fs({"id_a"})}, "b": {fs(), fs({"id_b", "u"})}}
    tb, u, empty = maximal_sieve(TWO, "b"), make_sieve(TWO, "b", {"u"}), Sieve("b", fs())
    ta = maximal_sieve(TWO, "a")
    # a family fixing exactly t_b and {u} at b cannot be contractive at ∅,
    # so the fixpoint read-off always adds ∅
    tables = {"a": {S: (ta if S == ta else Sieve("a", fs())) for S in all_sieves(TWO, "a")},
              "b": {empty: empty, u: u, tb: tb}}
    J = open_sieve_topology(SieveInteriorFamily.from_tables(TWO, tables))
    assert _covers(J) == {"a": {fs(), fs({"id_a"})}, "b": {fs(), fs({"u"}), fs({"id_b", "u"})}}


def test_check_grothendieck_examples():
    ta, tb = maximal_sieve(TWO, "a"), maximal_sieve(TWO, "b")
    assert check_grothendieck(GrothTopology(TWO, {"a": [ta], "b": [tb]}))
    assert check_grothendieck(open_sieve_topology(discrete_family(TWO)))
    v = check_grothendieck(GrothTopology(TWO, {"a": [ta], "b": [make_sieve(TWO, "b", {"u"})]}))
    assert v.law == "maximality" and v.witness == ("b",)


def test_trivial_family_fails_transitivity():
    for C, c, R in ((TWO, "b", {"u"}), (CHAIN3, "b", {"ab"})):
        v = check_grothendieck(open_sieve_topology(trivial_family(C)))
        assert v.law == "transitivity"
        assert v.witness == (c, Sieve(c, fs()), Sieve(c, fs(R)))


def test_premise_annotation():
    J = open_sieve_topology(discrete_family(TWO))
    v = check_grothendieck(J, e_morphisms=["id_a", "id_b", "u"])
    assert v and v.details["premise"] is False
    assert v.details["premise_failures"][0] == ("a", Sieve("a", fs()))
    ta, tb = maximal_sieve(TWO, "a"), maximal_sieve(TWO, "b")
    v = check_grothendieck(GrothTopology(TWO, {"a": [ta], "b": [tb]}), e_morphisms=["id_a", "id_b"])
    assert v and v.details == {"premise": True, "premise_failures": []}


@pytest.mark.parametrize("C", [TWO, CHAIN3], ids=["two", "chain3"])
def test_grothendieck_check_matches_oracle_on_every_candidate(C):
    mors, dom, cod, comp = _tables(C)
    per_object = [all_sieves(C, c) for c in C.objects]
    choices = [list(itertools.chain.from_iterable(itertools.combinations(s, r) for r in range(len(s) + 1)))
               for s in per_object]
    valid = 0
    for pick in itertools.product(*choices):
        covers = dict(zip(C.objects, pick))
        J = GrothTopology(C, covers)
        ref = oracles.is_grothendieck(C.objects, mors, dom, cod, comp,
                                      {c: {S.arrows for S in covers[c]} for c in C.objects})
        assert bool(check_grothendieck(J)) == ref
        valid += ref
    # maximal-only, everything, and the dense-style ones in between
    assert valid >= 2


@pytest.mark.parametrize("C", [TWO, CHAIN3], ids=["two", "chain3"])
def test_open_sieve_topology_is_grothendieck_only_for_discrete(C):
    """∅ is fixed by every family, and once ∅ covers, transitivity forces
    every sieve to cover; so only the discrete family passes."""
    per_object = [list(enumerate_interior_ops(sieve_lattice(C, c))) for c in C.objects]
    for ops in itertools.product(*per_object):
        fam = SieveInteriorFamily(C, dict(zip(C.objects, ops)))
        assert check_sieve_interior(fam)
        passes = bool(check_grothendieck(open_sieve_topology(fam)))
        is_discrete = all(isinstance(op, InteriorOp) and (op.table == range(len(op.carrier))).all()
                          for op in ops)
        assert passes == is_discrete
