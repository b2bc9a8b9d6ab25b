import random

import pytest

from csmflag.rootsys import build, pairing, parse_type, rho, root_to_weight

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 6), ("B", 2), ("B", 3), ("B", 5), ("C", 3),
             ("C", 4), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

ROOT_COUNT = {"A": lambda r: r * (r + 1) // 2, "B": lambda r: r * r, "C": lambda r: r * r,
              "D": lambda r: r * (r - 1), "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
              "F": lambda r: 24, "G": lambda r: 6}


def brute_force_roots(cartan):
    """Close the simple roots under reflection, written independently of the library."""
    r = len(cartan)
    roots = {tuple(int(i == j) for i in range(r)) for j in range(r)}
    changed = True
    while changed:
        changed = False
        for beta in list(roots):
            for k in range(r):
                p = sum(cartan[k][j] * beta[j] for j in range(r))
                img = tuple(b - (p if i == k else 0) for i, b in enumerate(beta))
                if all(c >= 0 for c in img) and img not in roots:
                    roots.add(img)
                    changed = True
    return roots


def test_build_a2():
    rs = build("A", 2)
    assert rs.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert len(rs.positive_roots) == 3


def test_build_g2_count():
    assert len(build("G", 2).positive_roots) == 6


def test_build_a3_highest_root():
    rs = build("A", 3)
    assert set(rs.positive_roots) == brute_force_roots(rs.cartan)
    assert len(rs.positive_roots) == 6
    assert rs.positive_roots[-1] == (1, 1, 1)


@pytest.mark.parametrize("lie_type,rank", ALL_TYPES)
def test_cartan_and_root_invariants(lie_type, rank):
    rs = build(lie_type, rank)
    a = rs.cartan
    for i in range(rank):
        assert a[i][i] == 2
        for j in range(rank):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
    assert len(rs.positive_roots) == ROOT_COUNT[lie_type](rank)
    assert set(rs.positive_roots) == brute_force_roots(a)
    for k in range(1, rank + 1):
        assert rs.positive_roots[k - 1] == rs.simple_root(k)
        assert rs.positive_coroots[k - 1] == rs.simple_root(k)
    heights = [sum(b) for b in rs.positive_roots]
    assert heights == sorted(heights)
    for beta in rs.positive_roots:
        assert min(beta) >= 0


@pytest.mark.parametrize("lie_type,rank", ALL_TYPES)
def test_reflection_closure_and_coroot_duality(lie_type, rank):
    rs = build(lie_type, rank)
    for beta, co in zip(rs.positive_roots, rs.positive_coroots):
        assert pairing(rs, root_to_weight(rs, beta), co) == 2
        for k in range(1, rank + 1):
            img = rs.reflect_root(k, beta)
            assert rs.is_root(img)
            if beta != rs.simple_root(k):
                assert min(img) >= 0
            # coroot of the image is the image of the coroot
            assert rs.coroot(img) == rs.reflect_coroot(k, co)


@pytest.mark.parametrize("lie_type,rank", [("B", 3), ("C", 3), ("G", 2), ("F", 4), ("D", 4)])
def test_pairing_invariance(lie_type, rank):
    rs = build(lie_type, rank)
    rng = random.Random(7)
    for _ in range(200):
        lam_root = [rng.randint(-3, 3) for _ in range(rank)]
        i = rng.randrange(len(rs.positive_roots))
        k = rng.randint(1, rank)
        beta, co = rs.positive_roots[i], rs.positive_coroots[i]
        lhs = pairing(rs, root_to_weight(rs, rs.reflect_root(k, lam_root)), rs.reflect_coroot(k, co))
        assert lhs == pairing(rs, root_to_weight(rs, lam_root), co)
        assert rs.coroot(rs.reflect_root(k, beta)) == rs.reflect_coroot(k, co)


def test_pairing_examples():
    a2 = build("A", 2)
    for k in (1, 2):
        ak = a2.simple_root(k)
        assert pairing(a2, root_to_weight(a2, ak), ak) == 2
    for i in (1, 2):
        for j in (1, 2):
            assert pairing(a2, a2.fundamental_weight(i), a2.simple_root(j)) == int(i == j)
    assert a2.coroot((1, 1)) == (1, 1)
    assert pairing(a2, rho(a2), a2.coroot((1, 1))) == 2


def test_pairing_rank_mismatch():
    with pytest.raises(ValueError):
        pairing(build("A", 2), (1, 1, 1), (1, 0))


def test_root_to_weight_examples():
    a2, a3 = build("A", 2), build("A", 3)
    assert root_to_weight(a2, (1, 0)) == (2, -1)
    assert root_to_weight(a2, (1, 1)) == (1, 1)
    assert root_to_weight(a3, (0, 1, 0)) == (-1, 2, -1)


def test_rho():
    assert rho(build("A", 2)) == (1, 1)
    assert rho(build("B", 2)) == (1, 1)
    assert rho(build("A", 3)) == (1, 1, 1)


def test_non_simply_laced_lengths():
    b2 = build("B", 2)
    # alpha_2 short: <alpha_1, alpha_2^vee> = -2
    assert b2.cartan == ((2, -1), (-2, 2))
    g2 = build("G", 2)
    assert g2.cartan == ((2, -3), (-1, 2))
    assert g2.positive_roots[-1] == (3, 2)


@pytest.mark.parametrize("lie_type,rank", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5),
                                           ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_invalid_types(lie_type, rank):
    with pytest.raises(ValueError):
        build(lie_type, rank)


def test_parse_type_and_sharing():
    assert parse_type("a3") is build("A", 3)
    with pytest.raises(ValueError):
        parse_type("A")
