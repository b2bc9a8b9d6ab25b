import itertools
import sys

import pytest
from hypothesis import HealthCheck, settings

from csmflag.rootsys import build
from csmflag.weyl import from_permutation

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def reflection_matrix(cartan, k):
    """Matrix of s_k on simple-root coordinates, straight from the Cartan matrix."""
    r = len(cartan)
    m = [[int(i == j) for j in range(r)] for i in range(r)]
    for j in range(r):
        m[k - 1][j] -= cartan[k - 1][j]
    return m


def matmul(a, b):
    r = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(r)) for j in range(r)] for i in range(r)]


def freeze(m):
    return tuple(map(tuple, m))


class OracleGroup:
    """Brute-force Weyl group: BFS over words with matrix products, no shared code."""

    def __init__(self, rs):
        self.rs = rs
        r = rs.rank
        self.gens = [reflection_matrix(rs.cartan, k) for k in range(1, r + 1)]
        ident = freeze([[int(i == j) for j in range(r)] for i in range(r)])
        self.word = {ident: ()}
        layer = [ident]
        while layer:
            nxt = []
            for m in layer:
                for k, g in enumerate(self.gens, start=1):
                    p = freeze(matmul([list(row) for row in m], g))
                    if p not in self.word:
                        self.word[p] = self.word[m] + (k,)
                        nxt.append(p)
            layer = nxt

    def product(self, word):
        r = self.rs.rank
        m = [[int(i == j) for j in range(r)] for i in range(r)]
        for k in word:
            m = matmul(m, self.gens[k - 1])
        return freeze(m)

    def length(self, m):
        return len(self.word[m])

    def below(self, m):
        """Bruhat lower set by brute force over all subwords of a shortest word."""
        w = self.word[m]
        out = set()
        for mask in itertools.product((0, 1), repeat=len(w)):
            out.add(self.product([k for k, keep in zip(w, mask) if keep]))
        return out


@pytest.fixture(scope="session")
def oracle_cache():
    return {}


@pytest.fixture
def oracle(oracle_cache):
    def get(lie_type, rank):
        key = (lie_type, rank)
        if key not in oracle_cache:
            oracle_cache[key] = OracleGroup(build(lie_type, rank))
        return oracle_cache[key]

    return get


@pytest.fixture
def A3():
    return build("A", 3)


@pytest.fixture
def A2():
    return build("A", 2)


@pytest.fixture
def perm3(A3):
    return lambda s: from_permutation(A3, [int(c) for c in s])


@pytest.fixture
def perm2(A2):
    return lambda s: from_permutation(A2, [int(c) for c in s])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS):
            terminalreporter.write_line(line)
