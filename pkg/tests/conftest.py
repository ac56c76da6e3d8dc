"""Shared fixtures: paths to bundled data and a corpus of small permutation groups."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

import pytest

from sporadic_designs.catalog import load_catalog, parse_generator_file
from sporadic_designs.perm import build_chain, from_cycles, from_images, generated

DATA = Path(str(resources.files("sporadic_designs") / "data"))
FIXTURES = DATA / "fixtures"
CATALOG_PATH = DATA / "atlas.dat"
GOLDEN = Path(__file__).parent / "golden"


def cyc(n, *cycles):
    return from_cycles(n, cycles)


def _mobius_group(q):
    """PSL(2,q) on the projective line {0..q-1, inf=q}, q prime."""
    inf = q

    def perm(f):
        return from_images(q + 1, [f(x) for x in range(q + 1)])

    def shift(x):
        return inf if x == inf else (x + 1) % q

    sq = next(a for a in range(2, q) if pow(a, 2, q) != 1)
    sq = sq * sq % q

    def scale(x):
        return inf if x == inf else x * sq % q

    def flip(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, q)) % q

    return generated(q + 1, [perm(shift), perm(scale), perm(flip)])


def _small_group_corpus():
    c = {}
    for n in range(3, 8):
        c[f"S{n}"] = generated(n, [cyc(n, (0, 1)), cyc(n, tuple(range(n)))])
    for n in range(4, 8):
        long = tuple(range(n)) if n % 2 else tuple(range(1, n))
        c[f"A{n}"] = generated(n, [cyc(n, (0, 1, 2)), cyc(n, long)])
    c["C5"] = generated(5, [cyc(5, (0, 1, 2, 3, 4))])
    c["C12"] = generated(12, [cyc(12, tuple(range(12)))])
    c["C3 on 4"] = generated(4, [cyc(4, (0, 1, 2))])
    c["V4"] = generated(4, [cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))])
    c["D8"] = generated(4, [cyc(4, (0, 1, 2, 3)), cyc(4, (1, 3))])
    c["D10"] = generated(5, [cyc(5, (0, 1, 2, 3, 4)), cyc(5, (1, 4), (2, 3))])
    c["D12"] = generated(6, [cyc(6, tuple(range(6))), cyc(6, (1, 5), (2, 4))])
    c["AGL(1,7)"] = generated(7, [cyc(7, tuple(range(7))), from_images(7, [3 * x % 7 for x in range(7)])])
    c["C3xS3"] = generated(6, [cyc(6, (0, 1, 2)), cyc(6, (3, 4, 5)), cyc(6, (3, 4))])
    c["S2 wr S3"] = generated(6, [cyc(6, (0, 1)), cyc(6, (0, 2, 4), (1, 3, 5)), cyc(6, (0, 2), (1, 3))])
    c["trivial"] = generated(3, [])
    for q in (5, 7, 11):
        c[f"PSL(2,{q})"] = _mobius_group(q)
    c["C7 biplane group"] = generated(7, [cyc(7, tuple(range(7)))])
    return c


CORPUS = _small_group_corpus()

# Orders known independently of any algorithm in the package.
CORPUS_ORDERS = {
    "S3": 6, "S4": 24, "S5": 120, "S6": 720, "S7": 5040,
    "A4": 12, "A5": 60, "A6": 360, "A7": 2520,
    "C5": 5, "C12": 12, "C3 on 4": 3, "V4": 4, "D8": 8, "D10": 10, "D12": 12,
    "AGL(1,7)": 42, "C3xS3": 18, "S2 wr S3": 48, "trivial": 1,
    "PSL(2,5)": 60, "PSL(2,7)": 168, "PSL(2,11)": 660, "C7 biplane group": 7,
}


def closure(gens):
    """All group elements by BFS over image tuples, independent of the library."""
    gl = [g.images for g in gens]
    start = tuple(range(gens.degree))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gl:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def chain_of(name):
    return build_chain(CORPUS[name])


@lru_cache(maxsize=None)
def elements_of(name):
    return frozenset(closure(CORPUS[name]))


@lru_cache(maxsize=None)
def fixture_gens(stem):
    return parse_generator_file((FIXTURES / f"{stem}.gens").read_bytes())


@lru_cache(maxsize=None)
def fixture_chain(stem):
    return build_chain(fixture_gens(stem))


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(CATALOG_PATH)


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion, printed after the run

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
