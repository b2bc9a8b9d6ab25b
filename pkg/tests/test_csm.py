import itertools
import random

import pytest

from csmflag.coeff import SparsePoly, is_positive
from csmflag.csm import (
    bruhat_interval,
    codim1_check,
    csm_cell,
    csm_cell_equiv,
    csm_variety,
    leading_term_product,
    positive_root_product,
    pushforward_GP,
    specialize,
)
from csmflag.rootsys import build
from csmflag.schubop import ClassVector, t_word
from csmflag.verify import alternate_reduced_word
from csmflag.weyl import (
    bruhat_leq,
    elements,
    from_permutation,
    from_word,
    inverse,
    is_min_coset_rep,
    longest_element,
    min_coset_rep,
    reduced_word,
    simple,
    to_permutation,
)

# open cell of Fl(4), full expansion
FL4_OPEN_CELL = {
    "4321": 1, "4312": 1, "4231": 1, "3421": 1, "4213": 2, "4132": 2,
    "3412": 1, "3241": 2, "2431": 2, "4123": 1, "3214": 5, "3142": 5,
    "2413": 3, "2341": 1, "1432": 5, "3124": 3, "2314": 4, "2143": 6,
    "1423": 4, "1342": 3, "2134": 3, "1324": 4, "1243": 3, "1234": 1,
}

GRASSMANNIAN_24 = {"3412": 1, "2413": 3, "1423": 4, "2314": 4, "1324": 4, "1234": 1}

FL3_ORDER = ["123", "132", "213", "231", "312", "321"]


def gamma_t():
    """The 6x6 equivariant matrix for Fl(3), entry (u, w) = c^T(u; w)."""
    def lin(c, x, y):
        return SparsePoly.linear((x, y), constant=c)

    z = SparsePoly(2)
    one = lin(1, 0, 0)
    p1, p2, p12 = lin(1, 1, 0), lin(1, 0, 1), lin(1, 1, 1)
    q = lin(2, 1, 1)
    return [
        [one, one, one, one, one, one],
        [z, p2, z, q, p2, q],
        [z, z, p1, p1, q, q],
        [z, z, z, p1 * p12, z, p1 * p12],
        [z, z, z, z, p2 * p12, p2 * p12],
        [z, z, z, z, z, p1 * p2 * p12],
    ]


def by_perm(gamma):
    return {"".join(map(str, to_permutation(w))): c for w, c in gamma.items()}


def test_identity_cell(A3):
    assert csm_cell(A3.weyl.identity) == ClassVector.point(A3)


def test_fl4_open_cell(perm3):
    assert by_perm(csm_cell(perm3("4321"))) == FL4_OPEN_CELL


def test_commuting_cell_example(A3, perm3):
    expected = {"2143": 1, "2134": 1, "1243": 1, "1234": 1}
    assert by_perm(csm_cell(perm3("2143"))) == expected
    assert by_perm(csm_variety(perm3("2143"))) == {"2143": 1, "2134": 2, "1243": 2, "1234": 4}


def test_variety_examples(A2, perm2):
    assert csm_variety(A2.weyl.identity) == ClassVector.point(A2)
    got = by_perm(csm_variety(perm2("321")))
    # row sums of the constant terms of the Fl(3) matrix
    table = gamma_t()
    expected = {u: sum(c.constant_term() for c in table[i]) for i, u in enumerate(FL3_ORDER)}
    assert expected == {"123": 6, "132": 6, "213": 6, "231": 2, "312": 2, "321": 1}
    assert got == expected


def test_equivariant_fl3_matrix(perm2):
    table = gamma_t()
    for j, w in enumerate(FL3_ORDER):
        cell = csm_cell_equiv(perm2(w))
        for i, u in enumerate(FL3_ORDER):
            assert cell[perm2(u)] == table[i][j], (u, w)
            if table[i][j]:
                assert is_positive(cell[perm2(u)])


def test_equivariant_leading_terms(perm2):
    a2 = build("A", 2)
    w0 = perm2("321")
    assert csm_cell_equiv(w0)[w0] == positive_root_product(a2)
    assert str(positive_root_product(a2)) == "1 + 2*a1 + 2*a2 + a1^2 + 3*a1*a2 + a2^2 + a1^2*a2 + a1*a2^2"
    c = csm_cell_equiv(perm2("231"))[perm2("231")]
    assert c.total_degree() == 2


@pytest.mark.parametrize("lie_type,rank", [("A", 2), ("A", 3), ("B", 2), ("G", 2), ("B", 3)])
def test_equivariant_structure(lie_type, rank):
    rs = build(lie_type, rank)
    e = rs.weyl.identity
    for w in elements(rs):
        ct = csm_cell_equiv(w)
        assert ct[e] == 1
        assert specialize(ct) == csm_cell(w)
        for u, c in ct.items():
            assert c.total_degree() <= u.length
        assert ct[w] == leading_term_product(w)
        assert ct[w] == leading_term_product(w, alternate_reduced_word(w))
    w0 = longest_element(rs)
    assert csm_cell_equiv(w0)[w0] == positive_root_product(rs)


def test_pushforward_grassmannian(A3, perm3):
    out = pushforward_GP(csm_cell(perm3("4321")), {1, 3})
    assert by_perm(out) == GRASSMANNIAN_24
    assert all(is_min_coset_rep(u, {1, 3}) for u in out)
    # coset reps index the result, one per surviving coset
    assert len({min_coset_rep(u, {1, 3}) for u in out}) == len(out)


def test_pushforward_trivial_cases(A3, perm3):
    g = csm_cell(perm3("3142"))
    assert pushforward_GP(g, ()) == g
    w = perm3("2413")
    assert pushforward_GP(ClassVector.basis(w), {1, 3}) == ClassVector.basis(w)
    assert pushforward_GP(csm_cell(perm3("2143")), {1, 3}) == ClassVector.point(A3)


@pytest.mark.parametrize("parabolic", [{1}, {2}, {1, 2}, {2, 3}, {1, 3}])
def test_pushforward_preserves_coset_coefficients(A3, parabolic):
    for w in elements(A3):
        cell = csm_cell(w)
        push = pushforward_GP(cell, parabolic)
        for u, c in cell.items():
            if is_min_coset_rep(u, parabolic):
                assert push[u] == c
        # push-forward of the cell of w equals that of its minimal representative
        assert push == pushforward_GP(csm_cell(min_coset_rep(w, parabolic)), parabolic)


def test_codim1_examples(A3, perm3):
    assert codim1_check(perm3("4321"))
    cell = csm_cell(perm3("4321"))
    for u in ("4312", "4231", "3421"):
        assert cell[perm3(u)] == 1
    for k in (1, 2, 3):
        assert codim1_check(simple(A3, k))
        assert csm_cell(simple(A3, k))[A3.weyl.identity] == 1
    assert codim1_check(longest_element(build("G", 2)))


@pytest.mark.parametrize("lie_type,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)])
def test_word_independence_and_normalization(lie_type, rank):
    rs = build(lie_type, rank)
    e = rs.weyl.identity
    for w in elements(rs):
        cell = csm_cell(w)
        assert csm_cell(w, alternate_reduced_word(w)) == cell
        assert cell[w] == 1 and cell[e] == 1
        interval = bruhat_interval(w)
        assert cell.support() <= interval
        assert all(bruhat_leq(u, w) for u in cell.support())


def test_word_must_be_reduced(A3, perm3):
    with pytest.raises(ValueError):
        csm_cell(perm3("2143"), [1, 3, 1, 1])


@pytest.mark.parametrize("lie_type,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_operator_action_on_cells(lie_type, rank):
    rs = build(lie_type, rank)
    ws = list(elements(rs))
    rng = random.Random(5)
    for _ in range(30):
        u, w = rng.choice(ws), rng.choice(ws)
        assert t_word(reduced_word(u), csm_cell(w)) == csm_cell(w * inverse(u))
    for w in ws:
        assert t_word(reduced_word(inverse(w)), ClassVector.point(rs)) == csm_cell(w)


def _commuting_elements(rs):
    nodes = range(1, rs.rank + 1)
    for size in range(rs.rank + 1):
        for subset in itertools.combinations(nodes, size):
            if all(rs.cartan[i - 1][j - 1] == 0 for i, j in itertools.combinations(subset, 2)):
                yield from_word(rs, subset)


@pytest.mark.parametrize("lie_type,rank", [("A", 5), ("D", 4), ("B", 3)])
def test_commuting_closed_forms(lie_type, rank):
    rs = build(lie_type, rank)
    count = 0
    for w in _commuting_elements(rs):
        count += 1
        lower = [u for u in elements(rs, max_length=w.length) if bruhat_leq(u, w)]
        assert len(lower) == 2**w.length
        assert csm_cell(w) == ClassVector(rs, {u: 1 for u in lower})
        assert csm_variety(w) == ClassVector(rs, {u: 2 ** (w.length - u.length) for u in lower})
    assert count > rank


@pytest.mark.parametrize("lie_type,rank", [("A", 4), ("D", 4), ("B", 4)])
def test_distinct_letters_positive(lie_type, rank):
    rs = build(lie_type, rank)
    for perm in itertools.permutations(range(1, rank + 1)):
        w = from_word(rs, perm)
        cell = csm_cell(w)
        assert cell.support() == bruhat_interval(w)
        assert all(c > 0 for c in cell.terms.values())


def test_interval_matches_bruhat(A3):
    for w in elements(A3):
        assert bruhat_interval(w) == {u for u in elements(A3) if bruhat_leq(u, w)}


def test_fl4_permutation_listing(A3):
    # every element of S4 appears in the open cell exactly once
    assert {"".join(map(str, p)) for p in itertools.permutations(range(1, 5))} == set(FL4_OPEN_CELL)
    assert all(from_permutation(A3, [int(c) for c in p]).length >= 0 for p in FL4_OPEN_CELL)
