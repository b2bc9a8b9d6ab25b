"""Cartan data and root/coroot/weight arithmetic for the simple types.

Coordinates used throughout the package:

* roots live in simple-root coordinates,
* coroots in simple-coroot coordinates,
* weights in fundamental-weight coordinates.

With these choices every pairing is an integer dot product.  The Cartan
matrix is stored as ``cartan[i][j] = <alpha_j, alpha_i^vee>`` (0-based
indices internally, 1-based in every public argument).  Simple roots follow
Bourbaki numbering; see ``docs/conventions.md``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

__all__ = [
    "RootSystem",
    "build",
    "pairing",
    "root_to_weight",
    "rho",
    "parse_type",
]

Root = tuple[int, ...]
Coroot = tuple[int, ...]
Weight = tuple[int, ...]

VALID_TYPES = "ABCDEFG"


def _chain(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def _gram(lie_type: str, rank: int) -> list[list[int]]:
    """Integer Gram matrix of the simple roots (Bourbaki numbering)."""
    norms = [2] * rank
    edges: list[tuple[int, int, int]] = []
    if lie_type == "A":
        edges = [(i, j, -1) for i, j in _chain(rank)]
    elif lie_type == "B":
        # alpha_r short
        norms = [2] * (rank - 1) + [1]
        edges = [(i, j, -1) for i, j in _chain(rank)]
    elif lie_type == "C":
        # alpha_r long
        norms = [2] * (rank - 1) + [4]
        edges = [(i, j, -1) for i, j in _chain(rank - 1)] + [(rank - 2, rank - 1, -2)]
    elif lie_type == "D":
        edges = [(i, j, -1) for i, j in _chain(rank - 1)] + [(rank - 3, rank - 1, -1)]
    elif lie_type == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        edges = [(0, 2, -1), (1, 3, -1)] + [(i, i + 1, -1) for i in range(2, rank - 1)]
    elif lie_type == "F":
        norms = [4, 4, 2, 2]
        edges = [(0, 1, -2), (1, 2, -2), (2, 3, -1)]
    elif lie_type == "G":
        norms = [2, 6]
        edges = [(0, 1, -3)]
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = norms[i]
    for i, j, v in edges:
        gram[i][j] = gram[j][i] = v
    return gram


def _check_type(lie_type: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(lie_type, False)
    if not ok:
        raise ValueError(
            f"invalid simple type {lie_type}{rank}: expected A_r (r>=1), B_r (r>=2), "
            "C_r (r>=3), D_r (r>=4), E6, E7, E8, F4 or G2"
        )


def _weyl_order(lie_type: str, rank: int) -> int:
    if lie_type == "A":
        return factorial(rank + 1)
    if lie_type in "BC":
        return 2**rank * factorial(rank)
    if lie_type == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(lie_type, rank)]


class RootSystem:
    """Cartan datum of a simple root system, with its positive roots.

    Instances are immutable once built and are shared: :func:`build`
    returns the same object for the same ``(lie_type, rank)``.

    Attributes
    ----------
    lie_type, rank
        The Cartan type letter and rank.
    cartan
        ``cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>``.
    positive_roots
        Positive roots in simple-root coordinates, sorted by height and then
        so that the simple roots come out as ``alpha_1, ..., alpha_r``.
    positive_coroots
        ``positive_coroots[i]`` is the coroot of ``positive_roots[i]`` in
        simple-coroot coordinates.
    reflection_words
        ``reflection_words[i]`` is a word in simple reflections (1-based,
        palindromic) whose product is the reflection in ``positive_roots[i]``.
    """

    def __init__(self, lie_type: str, rank: int):
        _check_type(lie_type, rank)
        self.lie_type = lie_type
        self.rank = rank
        gram = _gram(lie_type, rank)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(2 * gram[i][j] // gram[i][i] for j in range(rank)) for i in range(rank)
        )
        self._generate_roots()
        self.order = _weyl_order(lie_type, rank)
        self._root_index = {b: i for i, b in enumerate(self.positive_roots)}
        self._weyl = None

    def __repr__(self) -> str:
        return f"RootSystem('{self.lie_type}', {self.rank})"

    def __reduce__(self):
        return (build, (self.lie_type, self.rank))

    @property
    def name(self) -> str:
        return f"{self.lie_type}{self.rank}"

    def _generate_roots(self) -> None:
        r = self.rank
        simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
        # root -> (coroot, reflection word); breadth-first from the simple roots
        found: dict[Root, tuple[Coroot, tuple[int, ...]]] = {
            a: (a, (j + 1,)) for j, a in enumerate(simple)
        }
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                cobeta, word = found[beta]
                for j in range(r):
                    image = self.reflect_root(j + 1, beta)
                    if min(image) < 0 or image in found:
                        continue
                    # <alpha_j, beta^vee> with alpha_j as a weight: column j of the Cartan matrix
                    p = sum(cobeta[i] * self.cartan[i][j] for i in range(r))
                    co = tuple(c - (p if i == j else 0) for i, c in enumerate(cobeta))
                    found[image] = (co, (j + 1,) + word + (j + 1,))
                    nxt.append(image)
            frontier = nxt
        order = sorted(found, key=lambda b: (sum(b), tuple(-c for c in b)))
        self.positive_roots: tuple[Root, ...] = tuple(order)
        self.positive_coroots: tuple[Coroot, ...] = tuple(found[b][0] for b in order)
        self.reflection_words: tuple[tuple[int, ...], ...] = tuple(found[b][1] for b in order)

    # -- root arithmetic -------------------------------------------------
    def simple_root(self, k: int) -> Root:
        self._check_index(k)
        return tuple(int(i == k - 1) for i in range(self.rank))

    def reflect_root(self, k: int, beta: Sequence[int]) -> Root:
        """``s_k(beta) = beta - <beta, alpha_k^vee> alpha_k``."""
        row = self.cartan[k - 1]
        p = sum(row[j] * beta[j] for j in range(self.rank))
        return tuple(b - (p if i == k - 1 else 0) for i, b in enumerate(beta))

    def reflect_coroot(self, k: int, c: Sequence[int]) -> Coroot:
        """``s_k(c) = c - <alpha_k, c> alpha_k^vee`` (transpose-Cartan action)."""
        p = sum(c[i] * self.cartan[i][k - 1] for i in range(self.rank))
        return tuple(x - (p if i == k - 1 else 0) for i, x in enumerate(c))

    def root_index(self, beta: Sequence[int]) -> int:
        """Position of a positive root in :attr:`positive_roots`."""
        return self._root_index[tuple(beta)]

    def is_root(self, beta: Sequence[int]) -> bool:
        beta = tuple(beta)
        return beta in self._root_index or tuple(-b for b in beta) in self._root_index

    def coroot(self, beta: Sequence[int]) -> Coroot:
        """Coroot of any (positive or negative) root."""
        beta = tuple(beta)
        if beta in self._root_index:
            return self.positive_coroots[self._root_index[beta]]
        neg = tuple(-b for b in beta)
        return tuple(-c for c in self.positive_coroots[self._root_index[neg]])

    def _check_index(self, k: int) -> None:
        if not 1 <= k <= self.rank:
            raise ValueError(f"simple index {k} out of range 1..{self.rank} for {self.name}")

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    @property
    def weyl(self):
        """The :class:`csmflag.weyl.WeylGroup` of this root system."""
        if self._weyl is None:
            from .weyl import WeylGroup

            self._weyl = WeylGroup(self)
        return self._weyl


@lru_cache(maxsize=None)
def _build(lie_type: str, rank: int) -> RootSystem:
    return RootSystem(lie_type, rank)


def build(lie_type: str, rank: int) -> RootSystem:
    """Return the (shared) root system of type ``lie_type`` and rank ``rank``.

    >>> rs = build("A", 2)
    >>> rs.positive_roots
    ((1, 0), (0, 1), (1, 1))
    """
    lie_type = str(lie_type).upper()
    if lie_type not in VALID_TYPES or len(lie_type) != 1:
        raise ValueError(f"unknown Lie type {lie_type!r}; expected one of A-G")
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise ValueError(f"rank must be an integer, got {rank!r}")
    _check_type(lie_type, rank)
    return _build(lie_type, rank)


def parse_type(text: str) -> RootSystem:
    """Build from a compact name such as ``"A3"`` or ``"g2"``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise ValueError(f"cannot parse root system name {text!r}")
    return build(text[0], int(text[1:]))


def pairing(rs: RootSystem, weight: Sequence[int], coroot: Sequence[int]) -> int:
    """Evaluate ``<weight, coroot>``; weight in omega-coordinates."""
    if len(weight) != rs.rank or len(coroot) != rs.rank:
        raise ValueError(
            f"rank mismatch: {rs.name} needs length-{rs.rank} vectors, "
            f"got {len(weight)} and {len(coroot)}"
        )
    return sum(w * c for w, c in zip(weight, coroot))


def root_to_weight(rs: RootSystem, beta: Sequence[int]) -> Weight:
    """Express a root-lattice vector in fundamental-weight coordinates."""
    if len(beta) != rs.rank:
        raise ValueError(f"rank mismatch: expected length {rs.rank}, got {len(beta)}")
    return tuple(sum(rs.cartan[i][j] * beta[j] for j in range(rs.rank)) for i in range(rs.rank))


def rho(rs: RootSystem) -> Weight:
    """Sum of the fundamental weights."""
    return (1,) * rs.rank
