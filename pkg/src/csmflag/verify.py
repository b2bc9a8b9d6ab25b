"""Verification sweeps: positivity of CSM coefficients and operator identities.

The positivity sweep walks the tree of canonical reduced words.  The
canonical word of ``w`` ends in its smallest right descent ``k``, so its
parent is ``w s_k`` and ``c_SM(X(w)°) = T_k c_SM(X(w s_k)°)``: one operator
application per element, and only the current root-to-leaf path is held in
memory.  Subtrees are independent and can be farmed out to worker processes;
records are sorted before reporting, so the report does not depend on the
number of workers.
"""

from __future__ import annotations

import logging
import multiprocessing
import random
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coeff import SparsePoly, is_positive, total_degree
from .csm import leading_term_product, positive_root_product, specialize
from .rootsys import RootSystem, build, root_to_weight, rho
from .schubop import (
    ClassVector,
    bgg_delta,
    chevalley_mul,
    t_op,
    t_op_equiv,
    t_word,
    weyl_sk,
)
from .weyl import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    WeylElement,
    format_element,
    from_word,
    longest_element,
    reduced_word,
)

__all__ = [
    "CsmReport",
    "IdentityReport",
    "verify_positivity",
    "verify_identities",
    "random_class_vector",
    "alternate_reduced_word",
]

log = logging.getLogger(__name__)


@dataclass
class CsmReport:
    """Outcome of a positivity sweep.

    ``counterexamples`` holds every ``(w, u)`` with ``u <= w`` whose
    coefficient is not positive (zero included).  ``structural_failures``
    holds violations of the normalization and support checks that run
    alongside.  ``classes`` is filled only when requested.
    """

    lie_type: str
    rank: int
    scope: dict
    equivariant: bool
    cells_checked: int = 0
    coefficients_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    structural_failures: list[dict] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    classes: dict | None = None

    @property
    def all_positive(self) -> bool:
        return not self.counterexamples

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.structural_failures

    @property
    def verdict(self) -> str:
        if self.ok:
            return "all-positive"
        if self.counterexamples:
            return "counterexamples"
        return "structural-failures"

    def to_payload(self) -> dict:
        """Deterministic summary (no timing) for serialization."""
        return {
            "scope": self.scope,
            "equivariant": self.equivariant,
            "verdict": self.verdict,
            "cells_checked": self.cells_checked,
            "coefficients_checked": self.coefficients_checked,
            "checks": dict(sorted(self.checks.items())),
            "counterexamples": self.counterexamples,
            "structural_failures": self.structural_failures,
        }


def _first_descent(w: WeylElement) -> int:
    for k in range(1, w.group.rank + 1):
        if not w.ascends(k):
            return k
    return 0


def _children(w: WeylElement) -> list[tuple[int, WeylElement]]:
    out = []
    for k in range(1, w.group.rank + 1):
        if w.ascends(k):
            v = w.rmul(k)
            if _first_descent(v) == k:
                out.append((k, v))
    return out


class _NodeChecker:
    """Runs every per-element check and accumulates records."""

    def __init__(self, rs: RootSystem, equivariant: bool, keep_classes: bool):
        self.rs = rs
        self.equivariant = equivariant
        self.rho = rho(rs)
        self.w0 = longest_element(rs) if equivariant else None
        self.top_product = positive_root_product(rs) if equivariant else None
        self.records: list[tuple] = []
        self.classes = {} if keep_classes else None

    def check(self, w: WeylElement, cell: ClassVector, interval: set, cell_t: ClassVector | None):
        rs = self.rs
        e = rs.weyl.identity
        word = reduced_word(w)
        bad: list[dict] = []
        fails: list[dict] = []
        counts = {}

        def fail(name, u=None, detail=""):
            rec = {"check": name, "w": format_element(w)}
            if u is not None:
                rec["u"] = format_element(u)
            if detail:
                rec["detail"] = detail
            fails.append(rec)

        counts["top_coefficient_one"] = 1
        if cell[w] != 1:
            fail("top_coefficient_one", w, str(cell[w]))
        counts["point_coefficient_one"] = 1
        if cell[e] != 1:
            fail("point_coefficient_one", e, str(cell[e]))
        counts["support_in_interval"] = 1
        outside = [u for u in cell._terms if u not in interval]
        for u in sorted(outside, key=lambda x: (x.length, reduced_word(x))):
            fail("support_in_interval", u, str(cell[u]))
        counts["codim1"] = 1
        if w.length:
            expected = chevalley_mul(self.rho, ClassVector.basis(w))
            if cell.graded_piece(w.length - 1) != expected:
                fail("codim1")

        ordered = sorted(interval, key=lambda x: (x.length, reduced_word(x)))
        for u in ordered:
            c = cell[u]
            if not c > 0:
                bad.append({"w": format_element(w), "u": format_element(u), "coeff": str(c)})

        if cell_t is not None:
            for name in ("equiv_point_one", "equiv_specializes", "equiv_degree_bound",
                         "equiv_leading_term"):
                counts[name] = 1
            if cell_t[e] != 1:
                fail("equiv_point_one", e, str(cell_t[e]))
            if specialize(cell_t) != cell:
                fail("equiv_specializes")
            for u, c in cell_t._terms.items():
                if total_degree(c) > u.length:
                    fail("equiv_degree_bound", u, str(c))
            if cell_t[w] != leading_term_product(w):
                fail("equiv_leading_term", w, str(cell_t[w]))
            if w is self.w0:
                counts["equiv_longest_product"] = 1
                if cell_t[w] != self.top_product:
                    fail("equiv_longest_product", w, str(cell_t[w]))
            for u in ordered:
                c = cell_t[u]
                if not is_positive(c):
                    bad.append({"w": format_element(w), "u": format_element(u),
                                "coeff": str(c), "equivariant": True})

        if self.classes is not None:
            self.classes[w] = cell_t if cell_t is not None else cell
        self.records.append(((w.length, word), len(ordered), bad, fails, counts))


def _walk(rs: RootSystem, word: tuple[int, ...], max_length: int | None,
          equivariant: bool, checker: _NodeChecker, stop_depth: int | None = None,
          frontier: list | None = None) -> None:
    """Depth-first walk of the canonical-word subtree rooted at ``word``.

    With ``stop_depth`` set, nodes at that length are appended to ``frontier``
    instead of being processed.
    """
    w = rs.weyl.identity
    cell = ClassVector.point(rs)
    cell_t = ClassVector.point(rs, equivariant=True) if equivariant else None
    interval = {w}
    for k in word:
        w = w.rmul(k)
        cell = t_op(k, cell)
        if cell_t is not None:
            cell_t = t_op_equiv(k, cell_t)
        interval = interval | {u.rmul(k) for u in interval}

    stack = [(w, cell, interval, cell_t)]
    while stack:
        w, cell, interval, cell_t = stack.pop()
        if stop_depth is not None and w.length == stop_depth:
            frontier.append(reduced_word(w))
            continue
        checker.check(w, cell, interval, cell_t)
        if max_length is not None and w.length >= max_length:
            continue
        for k, v in reversed(_children(w)):
            stack.append((
                v,
                t_op(k, cell),
                interval | {u.rmul(k) for u in interval},
                t_op_equiv(k, cell_t) if cell_t is not None else None,
            ))


def _subtree_job(args):
    lie_type, rank, word, max_length, equivariant = args
    rs = build(lie_type, rank)
    checker = _NodeChecker(rs, equivariant, keep_classes=False)
    _walk(rs, tuple(word), max_length, equivariant, checker)
    return checker.records


def verify_positivity(
    rs: RootSystem,
    max_length: int | None = None,
    elements: Iterable[WeylElement] | None = None,
    equivariant: bool = False,
    jobs: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    keep_classes: bool = False,
) -> CsmReport:
    """Compute ``c_SM(X(w)°)`` for every ``w`` in scope and check positivity.

    Scope is the whole group, all ``w`` with ``l(w) <= max_length``, or an
    explicit list of ``elements``.  The sweep never stops at the first
    failure.  Alongside positivity it checks the normalizations
    ``c(w;w) = c(id;w) = 1``, the support bound, the codimension-one formula
    and (equivariantly) the specialization, degree and leading-term
    properties.
    """
    start = time.perf_counter()
    if elements is not None:
        targets = sorted(set(elements), key=lambda x: (x.length, reduced_word(x)))
        scope = {"kind": "list", "elements": [format_element(w) for w in targets]}
    elif max_length is None:
        if rs.order > cap:
            raise EnumerationCapError(
                f"|W({rs.name})| = {rs.order} exceeds the cap {cap}; bound the sweep "
                "with max_length"
            )
        scope = {"kind": "all"}
    else:
        scope = {"kind": "length-bounded", "max_length": max_length}

    checker = _NodeChecker(rs, equivariant, keep_classes)
    if elements is not None:
        for w in targets:
            _walk(rs, reduced_word(w), w.length, equivariant, checker)
        records = checker.records
    elif jobs <= 1:
        _walk(rs, (), max_length, equivariant, checker)
        records = checker.records
    else:
        records = _parallel(rs, max_length, equivariant, jobs, checker)

    report = CsmReport(rs.lie_type, rs.rank, scope, equivariant)
    for _, n, bad, fails, counts in sorted(records, key=lambda r: r[0]):
        report.cells_checked += 1
        report.coefficients_checked += n
        report.counterexamples.extend(bad)
        report.structural_failures.extend(fails)
        for name, c in counts.items():
            report.checks[name] = report.checks.get(name, 0) + c
    report.classes = checker.classes
    report.elapsed = time.perf_counter() - start
    log.info("%s sweep: %d cells in %.2fs", rs.name, report.cells_checked, report.elapsed)
    return report


def _parallel(rs, max_length, equivariant, jobs, checker) -> list:
    # split depth: first length with enough subtrees to balance the pool
    depth = 0
    layer = [rs.weyl.identity]
    while len(layer) < 4 * jobs and layer:
        if max_length is not None and depth >= max_length:
            break
        layer = [v for w in layer for _, v in _children(w)]
        depth += 1
    if depth == 0:
        _walk(rs, (), max_length, equivariant, checker)
        return checker.records
    frontier: list = []
    _walk(rs, (), max_length, equivariant, checker, stop_depth=depth, frontier=frontier)
    tasks = [(rs.lie_type, rs.rank, word, max_length, equivariant) for word in sorted(frontier)]
    ctx = multiprocessing.get_context("fork")
    records = list(checker.records)
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
        for part in pool.map(_subtree_job, tasks):
            records.extend(part)
    return records


# -- identity suite ----------------------------------------------------------

@dataclass
class IdentityReport:
    lie_type: str
    rank: int
    samples: int
    seed: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)
    max_witnesses: int = 5

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def record(self, name: str, passed: bool, witness=None) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        self.failures.setdefault(name, [])
        if not passed and len(self.failures[name]) < self.max_witnesses:
            self.failures[name].append(witness)

    @property
    def failure_counts(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.failures.items()}

    def to_payload(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "verdict": "verified" if self.ok else "violations",
            "identities": {
                name: {"checked": self.checked[name], "witnesses": self.failures.get(name, [])}
                for name in sorted(self.checked)
            },
        }


def random_element(rs: RootSystem, rng: random.Random) -> WeylElement:
    n = rng.randint(0, len(rs.positive_roots))
    return from_word(rs, [rng.randint(1, rs.rank) for _ in range(n)])


def random_class_vector(rs: RootSystem, rng: random.Random, terms: int = 5,
                        equivariant: bool = False) -> ClassVector:
    """Random class vector with small nonzero integer (or polynomial) coefficients."""
    data = {}
    for _ in range(rng.randint(1, terms)):
        w = random_element(rs, rng)
        if equivariant:
            c = SparsePoly.linear([rng.randint(-2, 2) for _ in range(rs.rank)],
                                  constant=rng.randint(-3, 3))
            if rng.random() < 0.5:
                c = c * SparsePoly.linear([rng.randint(0, 1) for _ in range(rs.rank)], 1)
        else:
            c = rng.choice([-3, -2, -1, 1, 2, 3, 5])
        data[w] = c
    return ClassVector(rs, data)


def alternate_reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Reduced word built by stripping the largest right descent (differs from the canonical one in general)."""
    letters = []
    v = w
    while v.length:
        k = max(i for i in range(1, w.group.rank + 1) if not v.ascends(i))
        letters.append(k)
        v = v.rmul(k)
    return tuple(reversed(letters))


def _braid_order(rs: RootSystem, i: int, j: int) -> int:
    prod = rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def _alternating(i: int, j: int, m: int) -> list[int]:
    return [i if t % 2 == 0 else j for t in range(m)]


def _apply_word(op, word, gamma):
    for k in reversed(word):
        gamma = op(k, gamma)
    return gamma


def verify_identities(rs: RootSystem, samples: int = 100, seed: int = 0,
                      max_witnesses: int = 5) -> IdentityReport:
    """Check the operator identities on ``samples`` random class vectors.

    Covered: ``d_k^2 = 0``, ``s_k^2 = id``, ``T_k^2 = id``, equivariant
    ``T_k^2 = id``, the commutation rules between ``d_k`` and ``s_k``,
    ``T_k = d_k - s_k``, ``s_k = id - c_1(L_{alpha_k}) d_k``, braid relations
    for ``d`` and ``T``, equivariant specialization, and word-independence of
    ``T_{w0}`` on two different reduced words.
    """
    rng = random.Random(seed)
    report = IdentityReport(rs.lie_type, rs.rank, samples, seed, max_witnesses=max_witnesses)
    r = rs.rank
    alpha_weights = [root_to_weight(rs, rs.simple_root(k)) for k in range(1, r + 1)]
    w0 = longest_element(rs)
    word1 = reduced_word(w0)
    word2 = alternate_reduced_word(w0)
    pairs = [(i, j, _braid_order(rs, i, j)) for i in range(1, r + 1) for j in range(i + 1, r + 1)]

    def witness(gamma, k=None, extra=None):
        out = {"vector": [[format_element(w), str(c)] for w, c in gamma.items()]}
        if k is not None:
            out["k"] = k
        if extra:
            out.update(extra)
        return out

    for _ in range(samples):
        g = random_class_vector(rs, rng)
        gt = random_class_vector(rs, rng, equivariant=True)
        for k in range(1, r + 1):
            d = bgg_delta(k, g)
            s = weyl_sk(k, g)
            t = t_op(k, g)
            report.record("delta_squared_zero", bgg_delta(k, d) == 0, witness(g, k))
            report.record("sk_involution", weyl_sk(k, s) == g, witness(g, k))
            report.record("tk_involution", t_op(k, t) == g, witness(g, k))
            tt = t_op_equiv(k, gt)
            report.record("tk_equiv_involution", t_op_equiv(k, tt) == gt, witness(gt, k))
            sd = weyl_sk(k, d)
            ds = bgg_delta(k, s)
            report.record("sk_delta_equals_delta", sd == d, witness(g, k))
            report.record("delta_sk_equals_minus_delta", ds == -d, witness(g, k))
            report.record("delta_sk_anticommute", sd + ds == 0, witness(g, k))
            report.record("tk_equals_delta_minus_sk", t == d - s, witness(g, k))
            report.record(
                "sk_via_chevalley",
                s == g - chevalley_mul(alpha_weights[k - 1], d),
                witness(g, k),
            )
            report.record(
                "equiv_specialization",
                specialize(tt) == t_op(k, specialize(gt)),
                witness(gt, k),
            )
        for i, j, m in pairs:
            left, right = _alternating(i, j, m), _alternating(j, i, m)
            report.record(
                "braid_delta",
                _apply_word(bgg_delta, left, g) == _apply_word(bgg_delta, right, g),
                witness(g, extra={"i": i, "j": j}),
            )
            report.record(
                "braid_t",
                _apply_word(t_op, left, g) == _apply_word(t_op, right, g),
                witness(g, extra={"i": i, "j": j}),
            )
        report.record(
            "t_word_independence",
            word1 == word2 or t_word(word1, g) == t_word(word2, g),
            witness(g, extra={"words": [list(word1), list(word2)]}),
        )
    return report
