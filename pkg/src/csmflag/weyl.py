"""Weyl group elements, words, length, Bruhat order and parabolic quotients.

An element is stored as its action on the simple-root basis: column ``j`` of
the matrix is ``w(alpha_j)`` in simple-root coordinates.  Elements are
interned per group, so two equal elements are the same object and hashing
is cheap.  Right multiplication by simple reflections is cached on the
element; every other operation reduces to it.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

from .rootsys import RootSystem

__all__ = [
    "WeylElement",
    "WeylGroup",
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "identity",
    "simple",
    "from_word",
    "multiply",
    "inverse",
    "right_descent",
    "reduced_word",
    "bruhat_leq",
    "elements",
    "longest_element",
    "support",
    "min_coset_rep",
    "is_min_coset_rep",
    "to_permutation",
    "from_permutation",
    "parse_element",
    "format_element",
]

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapError(ValueError):
    """Raised when a full enumeration would exceed the configured cap."""


class WeylElement:
    """An element of the Weyl group of a fixed root system.

    Do not construct directly; use :func:`from_word`, :func:`simple` etc.
    """

    __slots__ = ("group", "key", "length", "_index", "_next", "_word", "__weakref__")

    def __init__(self, group: WeylGroup, key: tuple[int, ...], length: int, index: int):
        self.group = group
        self.key = key
        self.length = length
        self._index = index
        self._next: list[WeylElement | None] = [None] * group.rank
        self._word: tuple[int, ...] | None = None

    def __hash__(self) -> int:
        return self._index

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.group is other.group and self.key == other.key

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"<{self.group.rs.name} {format_element(self)}>"

    def __reduce__(self):
        rs = self.group.rs
        return (_unpickle, (rs.lie_type, rs.rank, self.key))

    @property
    def rs(self) -> RootSystem:
        return self.group.rs

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row-major action matrix: ``matrix[i][j]`` = coefficient of alpha_i in w(alpha_j)."""
        r = self.group.rank
        return tuple(tuple(self.key[j * r + i] for j in range(r)) for i in range(r))

    def image_of_simple(self, k: int) -> tuple[int, ...]:
        """``w(alpha_k)`` in simple-root coordinates."""
        r = self.group.rank
        return self.key[(k - 1) * r : k * r]

    def apply(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Act on a vector in simple-root coordinates."""
        r = self.group.rank
        key = self.key
        return tuple(sum(key[j * r + i] * beta[j] for j in range(r)) for i in range(r))

    def ascends(self, k: int) -> bool:
        """True iff ``l(w s_k) > l(w)``, i.e. ``w(alpha_k)`` is positive."""
        r = self.group.rank
        return sum(self.key[(k - 1) * r : k * r]) > 0

    def rmul(self, k: int) -> WeylElement:
        """``w * s_k``."""
        nxt = self._next[k - 1]
        if nxt is None:
            nxt = self.group._right_simple(self, k)
            self._next[k - 1] = nxt
        return nxt

    def rmul_word(self, word: Iterable[int]) -> WeylElement:
        w = self
        for k in word:
            w = w.rmul(k)
        return w

    def reflect(self, root_index: int) -> WeylElement:
        """``w * s_beta`` for the positive root with the given index."""
        return self.rmul_word(self.group.rs.reflection_words[root_index])

    def word(self) -> tuple[int, ...]:
        return reduced_word(self)


def _unpickle(lie_type: str, rank: int, key: tuple[int, ...]) -> WeylElement:
    from .rootsys import build

    return build(lie_type, rank).weyl._intern(key)


class WeylGroup:
    """Registry of interned elements for one root system, plus shared caches."""

    def __init__(self, rs: RootSystem, bruhat_cache_size: int = 2**20):
        self.rs = rs
        self.rank = rs.rank
        self._elements: dict[tuple[int, ...], WeylElement] = {}
        self._lock = threading.Lock()
        # operator column tables keyed by name; filled by csmflag.schubop
        self.caches: dict[str, dict] = {}
        r = rs.rank
        ident = tuple(int(i == j) for j in range(r) for i in range(r))
        self.identity = self._register(ident, 0)
        self._bruhat = lru_cache(maxsize=bruhat_cache_size)(self._bruhat_uncached)

    def __repr__(self) -> str:
        return f"WeylGroup({self.rs!r})"

    def __len__(self) -> int:
        return self.rs.order

    def _register(self, key: tuple[int, ...], length: int) -> WeylElement:
        el = self._elements.get(key)
        if el is not None:
            return el
        with self._lock:
            el = self._elements.get(key)
            if el is None:
                el = WeylElement(self, key, length, len(self._elements))
                self._elements[key] = el
        return el

    def _intern(self, key: tuple[int, ...]) -> WeylElement:
        el = self._elements.get(key)
        if el is None:
            el = self._register(key, self._inversions(key))
        return el

    def _inversions(self, key: tuple[int, ...]) -> int:
        r = self.rank
        count = 0
        for beta in self.rs.positive_roots:
            image = [sum(key[j * r + i] * beta[j] for j in range(r)) for i in range(r)]
            if sum(image) < 0:
                count += 1
        return count

    def _right_simple(self, w: WeylElement, k: int) -> WeylElement:
        # (w s_k)(alpha_j) = w(alpha_j) - <alpha_j, alpha_k^vee> w(alpha_k)
        r = self.rank
        key = w.key
        row = self.rs.cartan[k - 1]
        col_k = key[(k - 1) * r : k * r]
        new = []
        for j in range(r):
            a = row[j]
            col = key[j * r : (j + 1) * r]
            if j == k - 1:
                new.extend(-c for c in col)
            elif a:
                new.extend(c - a * ck for c, ck in zip(col, col_k))
            else:
                new.extend(col)
        length = w.length + (1 if sum(col_k) > 0 else -1)
        return self._register(tuple(new), length)

    def _bruhat_uncached(self, u: WeylElement, w: WeylElement) -> bool:
        if u.length > w.length:
            return False
        if u is w:
            return True
        if u.length == w.length:
            return False
        if u.length == 0:
            return True
        k = _first_descent(w)
        ws = w.rmul(k)
        us = u.rmul(k)
        if not u.ascends(k):
            return self._bruhat(us, ws)
        return self._bruhat(u, ws)


def _first_descent(w: WeylElement) -> int:
    for k in range(1, w.group.rank + 1):
        if not w.ascends(k):
            return k
    raise ValueError("identity has no descent")


def _group(rs_or_el) -> WeylGroup:
    if isinstance(rs_or_el, WeylGroup):
        return rs_or_el
    if isinstance(rs_or_el, WeylElement):
        return rs_or_el.group
    return rs_or_el.weyl


def identity(rs: RootSystem) -> WeylElement:
    return rs.weyl.identity


def simple(rs: RootSystem, k: int) -> WeylElement:
    """The simple reflection ``s_k``."""
    rs._check_index(k)
    return rs.weyl.identity.rmul(k)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """``s_{i1} s_{i2} ... s_{ik}``; the word need not be reduced."""
    w = rs.weyl.identity
    for k in word:
        rs._check_index(k)
        w = w.rmul(k)
    return w


def _same_group(u: WeylElement, v: WeylElement) -> None:
    if u.group is not v.group:
        raise ValueError(f"elements of different Weyl groups: {u.rs.name} vs {v.rs.name}")


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    _same_group(u, v)
    return u.rmul_word(reduced_word(v))


def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.rs, reversed(reduced_word(w)))


def right_descent(w: WeylElement, k: int) -> bool:
    """True iff ``l(w s_k) < l(w)``."""
    w.rs._check_index(k)
    return not w.ascends(k)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Canonical reduced word: strip the smallest right descent repeatedly."""
    if w._word is not None:
        return w._word
    letters = []
    v = w
    while v.length:
        k = _first_descent(v)
        letters.append(k)
        v = v.rmul(k)
    w._word = tuple(reversed(letters))
    return w._word


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order test via the descent recursion (memoized per group)."""
    _same_group(u, w)
    return u.group._bruhat(u, w)


def elements(
    rs: RootSystem,
    max_length: int | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[WeylElement]:
    """Yield group elements breadth-first by length.

    Within one length the order is lexicographic in the canonical reduced
    word.  Without ``max_length`` the whole group is produced, which is
    refused when its order exceeds ``cap``.
    """
    if max_length is None and rs.order > cap:
        raise EnumerationCapError(
            f"|W({rs.name})| = {rs.order} exceeds the enumeration cap {cap}; "
            "pass max_length to bound the enumeration"
        )
    layer = [rs.weyl.identity]
    length = 0
    while layer:
        yield from layer
        if max_length is not None and length >= max_length:
            return
        seen = set()
        nxt = []
        for w in layer:
            for k in range(1, rs.rank + 1):
                if w.ascends(k):
                    v = w.rmul(k)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        nxt.sort(key=reduced_word)
        layer = nxt
        length += 1


def longest_element(rs: RootSystem) -> WeylElement:
    """The unique element of maximal length (climb ascents until none remain)."""
    w = rs.weyl.identity
    while True:
        for k in range(1, rs.rank + 1):
            if w.ascends(k):
                w = w.rmul(k)
                break
        else:
            return w


def support(w: WeylElement) -> frozenset[int]:
    """Simple reflections occurring in (any) reduced word of ``w``."""
    return frozenset(reduced_word(w))


def _parabolic(rs: RootSystem, parabolic: Iterable[int]) -> tuple[int, ...]:
    ks = tuple(sorted(set(parabolic)))
    for k in ks:
        rs._check_index(k)
    return ks


def min_coset_rep(w: WeylElement, parabolic: Iterable[int]) -> WeylElement:
    """Minimal length representative of ``w W_P``."""
    ks = _parabolic(w.rs, parabolic)
    while True:
        for k in ks:
            if not w.ascends(k):
                w = w.rmul(k)
                break
        else:
            return w


def is_min_coset_rep(w: WeylElement, parabolic: Iterable[int]) -> bool:
    """True iff ``l(w) = l(w W_P)``, i.e. ``w`` has no right descent in P."""
    return all(w.ascends(k) for k in parabolic)


# -- type A permutations --------------------------------------------------

def _require_type_a(rs: RootSystem) -> None:
    if rs.lie_type != "A":
        raise ValueError(f"permutation encoding is only defined in type A, not {rs.name}")


def to_permutation(w: WeylElement) -> tuple[int, ...]:
    """One-line notation (1-based) of a type A element."""
    _require_type_a(w.rs)
    perm = list(range(1, w.rs.rank + 2))
    for k in reduced_word(w):
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
    return tuple(perm)


def from_permutation(rs: RootSystem, perm: Sequence[int]) -> WeylElement:
    """Inverse of :func:`to_permutation`; right multiplication by s_i swaps positions i, i+1."""
    _require_type_a(rs)
    n = rs.rank + 1
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    # bubble sort records a word sorting perm; its reverse builds perm from the identity
    letters = []
    p = list(perm)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                letters.append(i + 1)
                changed = True
    return from_word(rs, reversed(letters))


# -- textual encodings ----------------------------------------------------

def parse_element(rs: RootSystem, text: str) -> WeylElement:
    """Parse ``"1,2,1"`` (word), ``""``/``"e"`` (identity) or ``"4312"`` (type A one-line).

    A string without commas is read as a permutation in type A when it has
    exactly ``rank + 1`` digits, and as a one-letter word otherwise.
    """
    text = text.strip()
    if text in ("", "e", "id"):
        return rs.weyl.identity
    if "," not in text and rs.lie_type == "A" and len(text) == rs.rank + 1 and text.isdigit():
        return from_permutation(rs, [int(c) for c in text])
    try:
        word = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed element {text!r}: expected a word like '1,2,1'") from None
    return from_word(rs, word)


def parse_permutation(rs: RootSystem, text: str) -> WeylElement:
    text = text.strip()
    if "," in text:
        digits = [int(t) for t in text.split(",")]
    elif text.isdigit():
        digits = [int(c) for c in text]
    else:
        raise ValueError(f"malformed permutation {text!r}")
    if len(digits) != rs.rank + 1:
        raise ValueError(f"permutation {text!r} must have {rs.rank + 1} entries for {rs.name}")
    return from_permutation(rs, digits)


def format_element(w: WeylElement) -> str:
    """One-line permutation in type A with rank < 9, else the comma-separated word."""
    if w.rs.lie_type == "A" and w.rs.rank < 9:
        return "".join(map(str, to_permutation(w)))
    word = reduced_word(w)
    return ",".join(map(str, word)) if word else "e"
