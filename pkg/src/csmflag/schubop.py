"""Class vectors in the Schubert basis and the operators acting on them.

A :class:`ClassVector` is a finitely supported map ``WeylElement -> R`` with
``R`` either ``int`` or :class:`~csmflag.coeff.SparsePoly`.  Operators act on
basis vectors and extend linearly; coefficients are never acted on by W.

Per-basis-element images of ``T_k`` are memoized on the Weyl group, since a
sweep applies the same column many times.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence

from .coeff import SparsePoly
from .rootsys import RootSystem, pairing
from .weyl import WeylElement, format_element, reduced_word

__all__ = [
    "ClassVector",
    "bgg_delta",
    "weyl_sk",
    "chevalley_mul",
    "t_op",
    "t_word",
    "t_op_equiv",
    "t_word_equiv",
    "alpha_coroot_pairings",
]


def _sort_key(w: WeylElement):
    return (w.length, reduced_word(w))


class ClassVector:
    """An element of ``H_*(G/B)`` (or its equivariant version) in the Schubert basis.

    >>> from csmflag.rootsys import build
    >>> from csmflag.weyl import simple
    >>> rs = build("A", 2)
    >>> v = ClassVector.basis(simple(rs, 1)) + 2 * ClassVector.point(rs)
    >>> v[simple(rs, 1)], len(v)
    (1, 2)
    """

    __slots__ = ("rs", "_terms")

    def __init__(self, rs: RootSystem, terms: Mapping[WeylElement, object] | None = None):
        self.rs = rs
        clean = {}
        if terms:
            for w, c in terms.items():
                if w.group is not rs.weyl:
                    raise ValueError(f"element {w!r} does not belong to {rs.name}")
                if c:
                    clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, rs: RootSystem, terms: dict) -> ClassVector:
        v = cls.__new__(cls)
        v.rs = rs
        v._terms = terms
        return v

    @classmethod
    def basis(cls, w: WeylElement, coeff=1) -> ClassVector:
        """The Schubert class ``[X(w)]`` (times ``coeff``)."""
        return cls(w.rs, {w: coeff})

    @classmethod
    def point(cls, rs: RootSystem, equivariant: bool = False) -> ClassVector:
        """``[pt] = [X(id)]``; with polynomial unit coefficient when equivariant."""
        one = SparsePoly.constant(1, rs.rank) if equivariant else 1
        return cls._raw(rs, {rs.weyl.identity: one})

    @classmethod
    def zero(cls, rs: RootSystem) -> ClassVector:
        return cls._raw(rs, {})

    # -- mapping protocol -------------------------------------------------------
    def __getitem__(self, w: WeylElement):
        return self._terms.get(w, 0)

    coefficient = __getitem__

    def __contains__(self, w) -> bool:
        return w in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(sorted(self._terms, key=_sort_key))

    def items(self) -> list[tuple[WeylElement, object]]:
        """Terms ordered by length, then canonical reduced word."""
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]))

    def support(self) -> set[WeylElement]:
        return set(self._terms)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def equivariant(self) -> bool:
        return any(isinstance(c, SparsePoly) for c in self._terms.values())

    # -- module structure ---------------------------------------------------------
    def _check(self, other: ClassVector) -> None:
        if not isinstance(other, ClassVector):
            raise TypeError(f"expected ClassVector, got {type(other).__name__}")
        if other.rs is not self.rs:
            raise ValueError(f"root system mismatch: {self.rs.name} vs {other.rs.name}")

    def __add__(self, other: ClassVector) -> ClassVector:
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            v = terms.get(w, 0) + c
            if v:
                terms[w] = v
            else:
                terms.pop(w, None)
        return ClassVector._raw(self.rs, terms)

    def __neg__(self) -> ClassVector:
        return ClassVector._raw(self.rs, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: ClassVector) -> ClassVector:
        return self + (-other)

    def __mul__(self, scalar) -> ClassVector:
        if isinstance(scalar, ClassVector):
            return NotImplemented
        terms = {}
        for w, c in self._terms.items():
            v = scalar * c
            if v:
                terms[w] = v
        return ClassVector._raw(self.rs, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self.rs is other.rs and self._terms == other._terms

    __hash__ = None

    def map_coefficients(self, f) -> ClassVector:
        terms = {}
        for w, c in self._terms.items():
            v = f(c)
            if v:
                terms[w] = v
        return ClassVector._raw(self.rs, terms)

    def graded_piece(self, length: int) -> ClassVector:
        """Terms ``[X(u)]`` with ``l(u) = length``."""
        return ClassVector._raw(
            self.rs, {w: c for w, c in self._terms.items() if w.length == length}
        )

    def __repr__(self) -> str:
        if not self._terms:
            return f"ClassVector({self.rs.name}, 0)"
        body = " + ".join(f"({c})[X({format_element(w)})]" for w, c in self.items())
        return f"ClassVector({self.rs.name}, {body})"


def _accumulate(rs: RootSystem, gamma: ClassVector, column) -> ClassVector:
    """Linear extension of a basis map ``column(u) -> [(v, a), ...]``."""
    out: dict = {}
    get = out.get
    for u, c in gamma._terms.items():
        for v, a in column(u):
            out[v] = get(v, 0) + (c if a == 1 else c * a)
    return ClassVector._raw(rs, {w: c for w, c in out.items() if c})


def _check_k(gamma: ClassVector, k: int) -> None:
    gamma.rs._check_index(k)


def alpha_coroot_pairings(rs: RootSystem) -> list[list[int]]:
    """``table[k-1][i] = <alpha_k, beta_i^vee>`` over the positive roots."""
    cache = rs.weyl.caches
    if "alpha_coroot" not in cache:
        from .rootsys import root_to_weight

        cache["alpha_coroot"] = [
            [pairing(rs, root_to_weight(rs, rs.simple_root(k)), co) for co in rs.positive_coroots]
            for k in range(1, rs.rank + 1)
        ]
    return cache["alpha_coroot"]


# -- the BGG operator ----------------------------------------------------------

def bgg_delta(k: int, gamma: ClassVector) -> ClassVector:
    """``[X(w)] -> [X(w s_k)]`` when the length goes up, else 0."""
    _check_k(gamma, k)
    terms = {}
    for u, c in gamma._terms.items():
        if u.ascends(k):
            terms[u.rmul(k)] = c
    return ClassVector._raw(gamma.rs, terms)


# -- right Weyl group action (non-equivariant) ---------------------------------

def weyl_sk(k: int, gamma: ClassVector) -> ClassVector:
    """Right action of ``s_k`` on homology, coefficient ring ``int`` only."""
    _check_k(gamma, k)
    if gamma.equivariant:
        raise TypeError(
            "weyl_sk is defined for integer coefficients only; use t_op_equiv for "
            "equivariant computations"
        )
    rs = gamma.rs
    pair = alpha_coroot_pairings(rs)[k - 1]
    simple_index = rs.root_index(rs.simple_root(k))

    def column(u: WeylElement):
        if not u.ascends(k):
            return ((u, 1),)
        target = u.length
        v = u.rmul(k)
        out = [(u, -1)]
        for i, p in enumerate(pair):
            if i == simple_index or not p:
                continue
            x = v.reflect(i)
            if x.length == target:
                out.append((x, -p))
        return out

    return _accumulate(rs, gamma, column)


# -- Chevalley multiplication ---------------------------------------------------

def chevalley_mul(weight: Sequence[int], gamma: ClassVector) -> ClassVector:
    """Cap with ``c_1(L_weight)``: ``[X(w)] -> sum <weight, beta^vee> [X(w s_beta)]``."""
    rs = gamma.rs
    if len(weight) != rs.rank:
        raise ValueError(f"weight must have {rs.rank} coordinates")
    pairs = [pairing(rs, weight, co) for co in rs.positive_coroots]

    def column(u: WeylElement):
        out = []
        target = u.length - 1
        if target < 0:
            return out
        for i, p in enumerate(pairs):
            if not p:
                continue
            x = u.reflect(i)
            if x.length == target:
                out.append((x, p))
        return out

    return _accumulate(rs, gamma, column)


# -- Demazure-Lusztig type operators --------------------------------------------

def _t_column(rs: RootSystem, u: WeylElement, k: int):
    """Image of ``[X(u)]`` under ``T_k`` as ``(us_k-or-None, rest)``.

    ``rest`` lists ``(element, int coefficient)`` for every term except the
    ``[X(u s_k)]`` term, whose coefficient depends on the ring.
    """
    cache = rs.weyl.caches.setdefault("t_columns", {})
    key = (u, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not u.ascends(k):
        result = (None, ((u, -1),))
    else:
        v = u.rmul(k)
        pair = alpha_coroot_pairings(rs)[k - 1]
        simple_index = rs.root_index(rs.simple_root(k))
        rest = [(u, 1)]
        target = u.length
        for i, p in enumerate(pair):
            if i == simple_index or not p:
                continue
            x = v.reflect(i)
            if x.length == target:
                rest.append((x, p))
        result = (v, tuple(rest))
    cache[key] = result
    return result


def t_op(k: int, gamma: ClassVector) -> ClassVector:
    """``T_k = d_k - s_k`` on integer class vectors, via the explicit basis formula."""
    _check_k(gamma, k)
    rs = gamma.rs

    def column(u: WeylElement):
        up, rest = _t_column(rs, u, k)
        if up is None:
            return rest
        return ((up, 1),) + rest

    return _accumulate(rs, gamma, column)


def t_op_equiv(k: int, gamma: ClassVector) -> ClassVector:
    """Equivariant ``T_k``: the ``[X(w s_k)]`` term carries ``1 + w(alpha_k)``."""
    _check_k(gamma, k)
    rs = gamma.rs
    lin = rs.weyl.caches.setdefault("one_plus_root", {})

    def column(u: WeylElement):
        up, rest = _t_column(rs, u, k)
        if up is None:
            return rest
        key = (u, k)
        factor = lin.get(key)
        if factor is None:
            factor = SparsePoly.linear(u.image_of_simple(k), constant=1)
            lin[key] = factor
        return ((up, factor),) + rest

    return _accumulate(rs, gamma, column)


def _word_letters(rs: RootSystem, word: Iterable[int]) -> list[int]:
    letters = [int(k) for k in word]
    for k in letters:
        rs._check_index(k)
    return letters


def t_word(word: Iterable[int], gamma: ClassVector) -> ClassVector:
    """``T_{i1} T_{i2} ... T_{ik} (gamma)``: the last letter acts first."""
    for k in reversed(_word_letters(gamma.rs, word)):
        gamma = t_op(k, gamma)
    return gamma


def t_word_equiv(word: Iterable[int], gamma: ClassVector) -> ClassVector:
    for k in reversed(_word_letters(gamma.rs, word)):
        gamma = t_op_equiv(k, gamma)
    return gamma
