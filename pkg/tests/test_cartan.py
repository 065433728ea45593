import itertools

import pytest
from hypothesis import given, settings, strategies as st

from weylseed.cartan import (
    CartanMatrix,
    QuiverOrientation,
    ReducedWord,
    Weight,
    b_vector,
    beta_sequence,
    dim_V,
    euler_form,
    fundamental_weight,
    is_bracket_closed,
    is_reduced,
    positive_roots_upto,
    reflect_root,
    reflect_weight,
    sym_form,
)
from weylseed.errors import NonDominantError, NotReducedError


def test_reflect_root_simple(a2):
    assert reflect_root(a2, 1, (1, 0)) == (-1, 0)
    assert reflect_root(a2, 1, (0, 1)) == (1, 1)


def test_reflect_root_double_bond():
    c = CartanMatrix.from_edges(2, [(1, 2, 2)])
    assert reflect_root(c, 1, (0, 1)) == (2, 1)


@settings(max_examples=60)
@given(
    st.integers(1, 3),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
)
def test_reflect_root_involutive(i, d):
    c = CartanMatrix.from_edges(3, [(1, 2, 2), (2, 3, 1)])
    assert reflect_root(c, i, reflect_root(c, i, d)) == d


def test_reflect_weight_fundamental(double_edge):
    w2 = fundamental_weight(3, 2)
    assert reflect_weight(double_edge, 1, w2) == w2
    moved = reflect_weight(double_edge, 2, w2)
    assert moved.fund == w2.fund and moved.alpha == (0, -1, 0)
    assert reflect_weight(double_edge, 2, moved) == w2


@settings(max_examples=60)
@given(
    st.integers(1, 3),
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
)
def test_reflect_weight_involutive(i, fund, alpha):
    c = CartanMatrix.from_edges(3, [(1, 2, 2), (2, 3, 1)])
    lam = Weight(fund, alpha)
    assert reflect_weight(c, i, reflect_weight(c, i, lam)) == lam


def test_is_reduced_basics(a2, a4):
    assert not is_reduced(a2, (1, 1))
    assert is_reduced(a4, (3, 4, 2, 1, 3, 4, 2, 1))


def test_is_reduced_matches_group_enumeration(a2):
    """Brute force over the 6-element dihedral group of rank-2 type A."""

    def perm_of(printed):
        # letters act as adjacent transpositions of (1,2,3)
        p = (1, 2, 3)
        for letter in reversed(printed):
            lst = list(p)
            lst[letter - 1], lst[letter] = lst[letter], lst[letter - 1]
            p = tuple(lst)
        return p

    shortest = {}
    for length in range(0, 4):
        for word in itertools.product((1, 2), repeat=length):
            p = perm_of(word)
            shortest.setdefault(p, length)
    for length in range(1, 4):
        for word in itertools.product((1, 2), repeat=length):
            expected = shortest[perm_of(word)] == length
            assert is_reduced(a2, word) == expected


def test_beta_sequence_star(star4):
    w = ReducedWord(star4, (3, 4, 2, 1, 4))
    assert set(w.betas) == {
        (0, 0, 0, 1),
        (1, 0, 0, 1),
        (0, 1, 0, 1),
        (1, 1, 0, 1),
        (1, 1, 1, 2),
    }
    assert len(set(w.betas)) == 5


def test_beta_sequence_single_letter(a2):
    assert beta_sequence(ReducedWord(a2, (2,))) == ((0, 1),)


def test_beta_sequence_wild(word_wild10):
    expected = [
        (1, 0, 0),
        (3, 1, 0),
        (8, 3, 0),
        (24, 8, 1),
        (40, 13, 2),
        (189, 63, 8),
        (527, 176, 22),
        (1392, 465, 58),
    ]
    assert list(word_wild10.betas[:8]) == expected


def test_not_reduced_raises(a2):
    with pytest.raises(NotReducedError):
        ReducedWord(a2, (1, 2, 1, 2))


def test_bracket_closed(a2, star4):
    w = ReducedWord(star4, (3, 4, 2, 1, 4))
    assert is_bracket_closed(star4, w.betas, height=12)
    assert is_bracket_closed(a2, [(1, 0)], height=4)
    assert not is_bracket_closed(a2, [(1, 0), (0, 1)], height=4)


def test_bracket_closed_on_random_words():
    import random

    from weylseed.acceptance import random_reduced_word

    rng = random.Random(7)
    pool = [
        CartanMatrix.from_edges(3, [(1, 2, 1), (2, 3, 1)]),
        CartanMatrix.from_edges(4, [(1, 4, 1), (2, 4, 1), (3, 4, 1)]),
        CartanMatrix.from_edges(3, [(1, 2, 2), (2, 3, 1)]),
    ]
    for _ in range(10):
        cartan = rng.choice(pool)
        word = random_reduced_word(rng, cartan, rng.randint(1, 7))
        assert is_bracket_closed(cartan, word.betas, height=40)


def test_positive_roots_a2(a2):
    assert positive_roots_upto(a2, 8) == {(1, 0), (0, 1), (1, 1)}


def test_positive_roots_affine():
    affine = CartanMatrix.from_edges(2, [(1, 2, 2)])
    roots = positive_roots_upto(affine, 6)
    # real roots alpha1+k*delta etc. and imaginary multiples of delta
    assert (1, 1) in roots and (2, 2) in roots and (2, 1) in roots
    assert (2, 0) not in roots


def test_dim_v(triangle, word_a4_running):
    w = ReducedWord(triangle, (3, 2, 1, 3, 2, 1))
    assert dim_V(w, 5) == (4, 3, 2)
    assert dim_V(w, 1) == (1, 0, 0)
    # increments recover the root sequence
    prev = (0,) * 4
    for k in range(1, word_a4_running.r + 1):
        cur = dim_V(word_a4_running, k)
        km = word_a4_running.k_minus(k)
        base = dim_V(word_a4_running, km) if km else (0,) * 4
        assert tuple(c - b for c, b in zip(cur, base)) == word_a4_running.beta(k)


def test_b_vector_goldens(double_edge):
    w2 = ReducedWord(double_edge, (2, 1))
    assert b_vector(w2, fundamental_weight(3, 2)) == (2, 1)
    w7 = ReducedWord(double_edge, (3, 1, 2, 3, 1, 2, 1))
    assert b_vector(w7, fundamental_weight(3, 3)) == (4, 3, 2, 0, 1, 0, 1)
    w1 = ReducedWord(double_edge, (2,))
    assert b_vector(w1, fundamental_weight(3, 2)) == (1,)


def test_b_vector_prefix_sums(word_mut7):
    for k in range(1, word_mut7.r + 1):
        prefix = word_mut7.prefix(k)
        lam = fundamental_weight(3, prefix.letter(k))
        b = b_vector(prefix, lam)
        assert all(x >= 0 for x in b)
        assert sum(b) == sum(dim_V(word_mut7, k))


def test_b_vector_requires_dominant(a2):
    w = ReducedWord(a2, (1,))
    with pytest.raises(NonDominantError):
        b_vector(w, Weight((-1, 0), (0, 0)))


def test_euler_and_sym_form(a2):
    q = QuiverOrientation.from_arrows(2, [(1, 2, 1)])
    assert euler_form(q, (1, 0), (1, 0)) == 1
    assert sym_form(a2, (1, 0), (1, 0)) == 2
    assert euler_form(q, (1, 0), (0, 1)) == -1
    assert euler_form(q, (0, 1), (1, 0)) == 0


@settings(max_examples=50)
@given(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
)
def test_sym_form_is_symmetrized_euler(d, e):
    q = QuiverOrientation.from_arrows(3, [(1, 2, 2), (3, 2, 1)])
    assert euler_form(q, d, e) + euler_form(q, e, d) == sym_form(q.cartan, d, e)


def test_real_roots_have_norm_two(word_wild10, word_a4_running):
    for w in (word_wild10, word_a4_running):
        for beta in w.betas:
            assert sym_form(w.cartan, beta, beta) == 2


def test_word_index_maps(word_gamma7):
    w = word_gamma7
    assert w.positions == (1, 2, 1, 3, 2, 1, 3)
    assert [w.k_plus(k) for k in range(1, 8)] == [3, 5, 6, 7, 8, 8, 8]
    assert [w.k_minus(k) for k in range(1, 8)] == [0, 0, 1, 0, 2, 3, 4]
    assert w.frozen_positions() == frozenset({5, 6, 7})
    for k in range(1, 8):
        if w.k_minus(k):
            assert w.k_plus(w.k_minus(k)) == k


def test_json_roundtrip(word_gamma7):
    doc = word_gamma7.to_json()
    again = ReducedWord(
        CartanMatrix.from_edges(doc["rank"], doc["edges"]), doc["word"]
    )
    assert again.printed == word_gamma7.printed
