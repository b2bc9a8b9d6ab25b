"""Sparse integer polynomials in the simple-root variables ``a1, ..., ar``.

Equivariant coefficients are stored as a mapping from exponent vectors to
nonzero Python ints (arbitrary precision).  Values are treated as immutable.
Monomials are ordered graded-lexicographically: lower total degree first,
and within a degree ``a1`` before ``a2``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

__all__ = [
    "SparsePoly",
    "constant_term",
    "is_positive",
    "total_degree",
]

Exponent = tuple[int, ...]


def _monomial_key(e: Exponent):
    return (sum(e), tuple(-x for x in e))


class SparsePoly:
    """A polynomial with integer coefficients in ``nvars`` variables.

    >>> a1, a2 = SparsePoly.variable(0, 2), SparsePoly.variable(1, 2)
    >>> print((1 + a1) * (1 + a2))
    1 + a1 + a2 + a1*a2
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != nvars or min(e, default=0) < 0:
                        raise ValueError(f"bad exponent vector {e} for {nvars} variables")
                    clean[e] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> SparsePoly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value: int, nvars: int) -> SparsePoly:
        return cls._raw(nvars, {(0,) * nvars: int(value)} if value else {})

    @classmethod
    def variable(cls, i: int, nvars: int) -> SparsePoly:
        """The variable ``a_{i+1}`` (0-based index)."""
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int], constant: int = 0) -> SparsePoly:
        """``constant + sum coeffs[i] * a_{i+1}``; roots become linear forms this way."""
        n = len(coeffs)
        terms: dict[Exponent, int] = {}
        if constant:
            terms[(0,) * n] = int(constant)
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = int(c)
        return cls._raw(n, terms)

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _monomial_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return SparsePoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> SparsePoly:
        return self

    def __sub__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def scale(self, k: int) -> SparsePoly:
        if not k:
            return SparsePoly._raw(self.nvars, {})
        if k == 1:
            return self
        return SparsePoly._raw(self.nvars, {e: k * c for e, c in self._terms.items()})

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return SparsePoly._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SparsePoly:
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(1, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    # -- evaluation -------------------------------------------------------------
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def is_positive(self) -> bool:
        return bool(self._terms) and all(c > 0 for c in self._terms.values())

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, degree: int) -> SparsePoly:
        return SparsePoly._raw(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v**k
            total += term
        return total

    # -- serialization -----------------------------------------------------------
    def to_records(self) -> list[dict]:
        """``[{"exponents": [...], "coeff": "<decimal>"}]`` in graded-lex order."""
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping], nvars: int) -> SparsePoly:
        terms: dict[Exponent, int] = {}
        for rec in records:
            e = tuple(int(x) for x in rec["exponents"])
            terms[e] = terms.get(e, 0) + int(rec["coeff"])
        return cls(nvars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                f"a{i + 1}" if k == 1 else f"a{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


def constant_term(p) -> int:
    """Value at ``a1 = ... = ar = 0``; ints are their own constant term."""
    return p if isinstance(p, int) else p.constant_term()


def is_positive(p) -> bool:
    """Nonzero with every coefficient strictly positive."""
    return p > 0 if isinstance(p, int) else p.is_positive()


def total_degree(p) -> int:
    """Maximal monomial degree; ``-1`` for the zero polynomial."""
    if isinstance(p, int):
        return 0 if p else -1
    return p.total_degree()

