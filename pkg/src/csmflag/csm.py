"""CSM classes of Schubert cells and varieties, equivariant classes, push-forward.

The class of a cell is generated from the point class by the involutions
``T_k``: if ``w = s_{i1} ... s_{ik}`` is reduced then

    c_SM(X(w)°) = T_{ik} ... T_{i1} [pt].

Cells are cached per Weyl group (bounded LRU); the cache never changes a
result, it only avoids recomputing parents when many cells are requested.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from .coeff import SparsePoly, constant_term
from .rootsys import RootSystem, rho
from .schubop import ClassVector, chevalley_mul, t_op, t_op_equiv
from .weyl import (
    WeylElement,
    bruhat_leq,
    elements,
    from_word,
    is_min_coset_rep,
    reduced_word,
)

__all__ = [
    "csm_cell",
    "csm_variety",
    "csm_cell_equiv",
    "pushforward_GP",
    "codim1_check",
    "leading_term_product",
    "positive_root_product",
    "bruhat_interval",
    "specialize",
    "CELL_CACHE_SIZE",
]

CELL_CACHE_SIZE = 4096


def _cell_cache(rs: RootSystem, equivariant: bool):
    name = "csm_cell_equiv" if equivariant else "csm_cell"
    caches = rs.weyl.caches
    fn = caches.get(name)
    if fn is None:
        step = t_op_equiv if equivariant else t_op

        @lru_cache(maxsize=CELL_CACHE_SIZE)
        def fn(w: WeylElement) -> ClassVector:
            if w.length == 0:
                return ClassVector.point(rs, equivariant=equivariant)
            k = reduced_word(w)[-1]
            return step(k, fn(w.rmul(k)))

        fn = caches.setdefault(name, fn)
    return fn


def _along_word(w: WeylElement, word: Sequence[int], equivariant: bool) -> ClassVector:
    rs = w.rs
    word = tuple(word)
    if len(word) != w.length or from_word(rs, word) != w:
        raise ValueError(f"{word} is not a reduced word for {w!r}")
    step = t_op_equiv if equivariant else t_op
    gamma = ClassVector.point(rs, equivariant=equivariant)
    for k in word:
        gamma = step(k, gamma)
    return gamma


def csm_cell(w: WeylElement, word: Sequence[int] | None = None) -> ClassVector:
    """``c_SM(X(w)°)`` in the Schubert basis.

    By default the canonical reduced word is used (and results are cached);
    pass another reduced ``word`` of ``w`` to compute along it instead.
    """
    if word is not None:
        return _along_word(w, word, equivariant=False)
    return _cell_cache(w.rs, False)(w)


def csm_cell_equiv(w: WeylElement, word: Sequence[int] | None = None) -> ClassVector:
    """Torus-equivariant ``c_SM^T(X(w)°)``, coefficients polynomial in the simple roots."""
    if word is not None:
        return _along_word(w, word, equivariant=True)
    return _cell_cache(w.rs, True)(w)


def bruhat_interval(w: WeylElement) -> set[WeylElement]:
    """``{u : u <= w}`` as the set of subword products of a reduced word of ``w``."""
    lower = {w.group.identity}
    for k in reduced_word(w):
        lower |= {u.rmul(k) for u in lower}
    return lower


def csm_variety(w: WeylElement) -> ClassVector:
    """``c_SM(X(w)) = sum over v <= w of c_SM(X(v)°)``."""
    total = ClassVector.zero(w.rs)
    for v in elements(w.rs, max_length=w.length):
        if bruhat_leq(v, w):
            total = total + csm_cell(v)
    return total


def pushforward_GP(gamma: ClassVector, parabolic: Iterable[int]) -> ClassVector:
    """Push forward along ``G/B -> G/P``.

    ``[X(w)]`` maps to ``[X(w W_P)]`` when ``w`` is already the minimal
    representative of its coset, and to zero otherwise.  The result is indexed
    by minimal coset representatives.
    """
    ks = sorted(set(parabolic))
    for k in ks:
        gamma.rs._check_index(k)
    return ClassVector._raw(
        gamma.rs, {u: c for u, c in gamma._terms.items() if is_min_coset_rep(u, ks)}
    )


def codim1_check(w: WeylElement) -> bool:
    """Codimension-one part of ``c_SM(X(w)°)`` equals ``c_1(L_rho) . [X(w)]``."""
    if w.length == 0:
        return True
    piece = csm_cell(w).graded_piece(w.length - 1)
    return piece == chevalley_mul(rho(w.rs), ClassVector.basis(w))


def leading_term_product(w: WeylElement, word: Sequence[int] | None = None) -> SparsePoly:
    """``prod_t (1 + s_{i1} ... s_{i(t-1)}(alpha_{it}))`` along a reduced word."""
    rs = w.rs
    word = reduced_word(w) if word is None else tuple(word)
    prefix = rs.weyl.identity
    result = SparsePoly.constant(1, rs.rank)
    for k in word:
        result = result * SparsePoly.linear(prefix.apply(rs.simple_root(k)), constant=1)
        prefix = prefix.rmul(k)
    return result


def positive_root_product(rs: RootSystem) -> SparsePoly:
    """``prod over positive roots alpha of (1 + alpha)``."""
    result = SparsePoly.constant(1, rs.rank)
    for beta in rs.positive_roots:
        result = result * SparsePoly.linear(beta, constant=1)
    return result


def specialize(gamma: ClassVector) -> ClassVector:
    """Set every simple root to zero, coefficient-wise."""
    return gamma.map_coefficients(constant_term)
