import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_coloring.constructions import matchings_graph
from acyclic_coloring.graph import is_connected, is_regular
from acyclic_coloring.permutations import (
    PerfectMatchingSet,
    Permutation,
    PermutationError,
    compose,
    cycle_type,
    inverse,
    lemma1_exhaustive_oracle,
    lemma1_sign_check,
    sign,
    sign_by_inversions,
    union_is_hamiltonian,
)


@st.composite
def perms(draw, n=None):
    n = draw(st.integers(0, 8)) if n is None else n
    return Permutation(draw(st.permutations(range(n))))


@st.composite
def perm_pairs(draw):
    n = draw(st.integers(0, 8))
    return draw(perms(n)), draw(perms(n))


def test_constructor_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])


def test_compose_and_inverse():
    sigma = Permutation([2, 0, 1])
    assert compose(Permutation.identity(3), sigma) == sigma
    three_cycle = Permutation([1, 2, 0])  # 0->1->2->0
    assert inverse(three_cycle) == Permutation([2, 0, 1])
    with pytest.raises(PermutationError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_composition_order_applies_right_first():
    pi = Permutation([1, 0, 2])
    sigma = Permutation([0, 2, 1])
    # sigma sends 1 -> 2, then pi fixes 2
    assert compose(pi, sigma)[1] == 2
    assert (pi * sigma)[0] == 1


@settings(max_examples=200)
@given(perms())
def test_inverse_is_group_inverse(pi):
    assert compose(pi, inverse(pi)) == Permutation.identity(len(pi))
    assert compose(inverse(pi), pi) == Permutation.identity(len(pi))


def test_cycle_type():
    assert cycle_type(Permutation.identity(5)) == (1, 1, 1, 1, 1)
    assert cycle_type(Permutation.shift(5, 1)) == (5,)
    assert cycle_type(Permutation([1, 0, 2, 3])) == (2, 1, 1)


def test_sign_examples():
    assert sign(Permutation.identity(4)) == 1
    assert sign(Permutation([1, 0, 2, 3])) == -1
    for n in (2, 4, 6, 8):
        assert sign(Permutation.shift(n, 1)) == -1


@settings(max_examples=500)
@given(perm_pairs())
def test_sign_is_multiplicative(pair):
    p, q = pair
    assert sign(compose(p, q)) == sign(p) * sign(q)


@pytest.mark.parametrize("n", range(0, 9))
def test_sign_routes_agree(n):
    items = itertools.permutations(range(n))
    if n > 6:
        items = itertools.islice(items, 0, None, 97)
    for images in items:
        p = Permutation(images)
        assert sign(p) == sign_by_inversions(p)


def test_union_is_hamiltonian_examples():
    # K_{3,3}: a0-b0-a2-b2-a1-b1-a0 traced by hand is one 6-cycle
    assert union_is_hamiltonian(Permutation.shift(3, 0), Permutation.shift(3, 1))
    assert not union_is_hamiltonian(Permutation.identity(4), Permutation([1, 0, 3, 2]))
    assert union_is_hamiltonian(Permutation.identity(2), Permutation([1, 0]))
    with pytest.raises(PermutationError):
        union_is_hamiltonian(Permutation.identity(3), Permutation([0, 2, 1]))


@pytest.mark.parametrize("n", range(1, 7))
def test_union_is_hamiltonian_matches_graph(n):
    ident = Permutation.identity(n)
    for images in itertools.permutations(range(n)):
        p = Permutation(images)
        if any(p[i] == i for i in range(n)):
            continue
        g = matchings_graph(n, [ident, p])
        is_ham_cycle = is_regular(g) == 2 and is_connected(g)
        assert union_is_hamiltonian(ident, p) == is_ham_cycle


def test_union_is_hamiltonian_matches_graph_general_pairs():
    n = 4
    all_perms = [Permutation(p) for p in itertools.permutations(range(n))]
    for p, q in itertools.product(all_perms, repeat=2):
        if any(p[i] == q[i] for i in range(n)):
            continue
        g = matchings_graph(n, [p, q])
        assert union_is_hamiltonian(p, q) == (is_regular(g) == 2 and is_connected(g))


def test_lemma1_sign_check_shift_triple():
    ms = PerfectMatchingSet(4, [Permutation.shift(4, s) for s in range(3)])
    v = lemma1_sign_check(ms)
    assert v.status == "non-hamiltonian-pair"
    assert v.pair == (0, 2) and v.pair_cycle_type == (2, 2)
    assert v.triple_signs == {(0, 1): -1, (0, 2): 1, (1, 2): -1}
    assert "cycle type [2, 2]" in v.explain()


def test_lemma1_sign_check_errors():
    with pytest.raises(PermutationError):
        lemma1_sign_check(PerfectMatchingSet(3, [Permutation.shift(3, s) for s in range(3)]))
    with pytest.raises(PermutationError):
        # K_{2,2} has no three disjoint matchings
        PerfectMatchingSet(2, [Permutation([0, 1]), Permutation([1, 0]), Permutation([0, 1])])
    with pytest.raises(PermutationError):
        lemma1_sign_check(PerfectMatchingSet(2, [Permutation([0, 1]), Permutation([1, 0])]))


def test_lemma1_every_disjoint_triple_on_n4_fails():
    n = 4
    all_perms = [Permutation(p) for p in itertools.permutations(range(n))]
    count = 0
    for a, b, c in itertools.combinations(all_perms, 3):
        try:
            ms = PerfectMatchingSet(n, [a, b, c])
        except PermutationError:
            continue
        count += 1
        v = lemma1_sign_check(ms)
        assert v.status == "non-hamiltonian-pair"
        assert v.triple_signs[(0, 1)] * v.triple_signs[(0, 2)] * v.triple_signs[(1, 2)] == 1
    assert count > 0


@pytest.mark.parametrize("n", [0, 2, 4, 6])
def test_lemma1_exhaustive_oracle(n):
    assert lemma1_exhaustive_oracle(n)


def test_lemma1_exhaustive_oracle_bounds():
    with pytest.raises(PermutationError):
        lemma1_exhaustive_oracle(3)
    with pytest.raises(PermutationError):
        lemma1_exhaustive_oracle(8)


def test_permutation_parse_and_str():
    p = Permutation.parse("2 0 1")
    assert str(p) == "2 0 1"
    with pytest.raises(PermutationError):
        Permutation.parse("a b")
