"""Permutation groups on {0, ..., n-1}.

Composition is left-to-right: ``p * q`` (or ``compose(p, q)``) maps ``x`` to
``q(p(x))``. Points are 0-based everywhere. Group orders are Python ints, so
they never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, prod
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    BoundExceeded,
    DegreeMismatch,
    DegreeOverflow,
    DuplicateImage,
    LengthMismatch,
    NotTransitive,
    OrbitLimitExceeded,
    OutOfRange,
)

MAX_DEGREE = 2**31 - 1
DEFAULT_ORBIT_LIMIT = 10**7
DEFAULT_SUBSET_DEGREE_LIMIT = 10**6

# A word is a tuple of (generator index, exponent) factors.
Word = tuple


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: tuple):
        # unchecked; use from_images for untrusted input
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        return power(self, e)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *map(len, self.cycles()))

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body}, degree={self.degree})"


def from_images(degree: int, images: Sequence[int]) -> Permutation:
    if not 1 <= degree <= MAX_DEGREE:
        raise OutOfRange(f"degree {degree} outside 1..{MAX_DEGREE}")
    if len(images) != degree:
        raise LengthMismatch(f"expected {degree} images, got {len(images)}")
    seen = bytearray(degree)
    for x in images:
        if not 0 <= x < degree:
            raise OutOfRange(f"image {x} outside 0..{degree - 1}")
        if seen[x]:
            raise DuplicateImage(f"image {x} appears twice")
        seen[x] = 1
    return Permutation(tuple(int(x) for x in images))


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            if a in seen:
                raise DuplicateImage(f"point {a} occurs in two cycles")
            seen.add(a)
            if not (0 <= a < degree and 0 <= b < degree):
                raise OutOfRange(f"cycle point outside 0..{degree - 1}")
            images[a] = b
    return Permutation(tuple(images))


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: x -> q(p(x))."""
    if len(p.images) != len(q.images):
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Permutation(kernels.compose(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return Permutation(kernels.invert(p.images))


def power(p: Permutation, e: int) -> Permutation:
    if e < 0:
        p, e = inverse(p), -e
    result = identity(p.degree).images
    base = p.images
    while e:
        if e & 1:
            result = kernels.compose(result, base)
        base = kernels.compose(base, base)
        e >>= 1
    return Permutation(result)


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    generators: tuple[Permutation, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("a generator set needs at least one generator")
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a degree-{self.degree} set")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != len(self.generators):
                raise ValueError("names must align with generators")
            if len(set(self.names)) != len(self.names):
                raise ValueError("generator names must be distinct")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def images(self) -> list[tuple]:
        return [g.images for g in self.generators]

    def name_map(self) -> dict[str, Permutation]:
        names = self.names or tuple(f"g{i}" for i in range(len(self.generators)))
        return dict(zip(names, self.generators))

    def word_to_perm(self, word: Word) -> Permutation:
        """Evaluate a word of (generator index, exponent) factors."""
        out = identity(self.degree)
        for idx, e in word:
            out = out * power(self.generators[idx], e)
        return out


def generated(degree: int, gens: Iterable[Permutation], names=None) -> GeneratorSet:
    gens = list(gens)
    if not gens:
        gens = [identity(degree)]
    return GeneratorSet(degree, tuple(gens), names)


# ---------------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class OrbitPartition:
    degree: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.classes)


def _check_point(gens: GeneratorSet, point: int):
    if not 0 <= point < gens.degree:
        raise OutOfRange(f"point {point} outside 0..{gens.degree - 1}")


def orbit(gens: GeneratorSet, point: int) -> list[int]:
    """Orbit of ``point`` in BFS discovery order."""
    _check_point(gens, point)
    return kernels.orbit(gens.images, point)


def orbit_partition(gens: GeneratorSet) -> OrbitPartition:
    n = gens.degree
    seen = bytearray(n)
    classes = []
    imgs = gens.images
    for x in range(n):
        if seen[x]:
            continue
        orb = kernels.orbit(imgs, x)
        for y in orb:
            seen[y] = 1
        classes.append(tuple(sorted(orb)))
    return OrbitPartition(n, tuple(classes))


def is_transitive(gens: GeneratorSet) -> bool:
    return len(kernels.orbit(gens.images, 0)) == gens.degree


def _minimal_block(imgs, n, beta):
    """Union-find closure of {0, beta} under the generators; returns the class of 0."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[beta] = 0
    pending = [(0, beta)]
    classes = n - 1
    while pending and classes > 1:
        a, b = pending.pop()
        for g in imgs:
            ra, rb = find(g[a]), find(g[b])
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra
                classes -= 1
                pending.append((g[a], g[b]))
    return classes


def is_primitive(gens: GeneratorSet) -> bool:
    """True iff no non-trivial block system exists (group must be transitive)."""
    n = gens.degree
    if not is_transitive(gens):
        raise NotTransitive("primitivity is only defined for transitive groups")
    if n <= 2:
        return True
    imgs = gens.images
    for beta in range(1, n):
        if _minimal_block(imgs, n, beta) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# stabilizer chains


class _Level:
    __slots__ = ("point", "gens", "trans", "inv", "tested")

    def __init__(self, point, degree):
        ident = tuple(range(degree))
        self.point = point
        self.gens = []
        self.trans = {point: ident}
        self.inv = {point: ident}
        self.tested = set()

    def add_generator(self, g):
        self.gens.append(g)
        # extend the transversal, keeping existing representatives
        compose = kernels.compose
        queue = list(self.trans)
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            ux = self.trans[x]
            for s in self.gens:
                y = s[x]
                if y not in self.trans:
                    uy = compose(ux, s)
                    self.trans[y] = uy
                    self.inv[y] = kernels.invert(uy)
                    queue.append(y)


class ChainBuilder:
    """Deterministic incremental Schreier-Sims.

    New base points are the smallest points moved by the element that
    forces a new level. ``base_prefix`` fixes the leading base points.
    """

    def __init__(self, degree: int, base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = [_Level(b, degree) for b in base_prefix]

    @property
    def order(self) -> int:
        return prod((len(lvl.trans) for lvl in self.levels), start=1)

    def sift(self, h, start=0):
        compose = kernels.compose
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            inv = lvl.inv.get(h[lvl.point])
            if inv is None:
                return h, j
            h = compose(h, inv)
        return h, len(self.levels)

    def _install(self, h, lo, hi):
        for l in range(lo, hi + 1):
            if l == len(self.levels):
                moved = next(i for i, x in enumerate(h) if i != x)
                self.levels.append(_Level(moved, self.degree))
            self.levels[l].add_generator(h)

    def extend(self, g) -> bool:
        """Add a group element; returns True if the group grew."""
        h, j = self.sift(g)
        if h == self.identity:
            return False
        self._install(h, 0, j)
        self._complete(j)
        return True

    def _complete(self, start):
        compose = kernels.compose
        ident = self.identity
        i = min(start, len(self.levels) - 1)
        while i >= 0:
            lvl = self.levels[i]
            grew = False
            for x in list(lvl.trans):
                ux = lvl.trans[x]
                for si, s in enumerate(lvl.gens):
                    if (x, si) in lvl.tested:
                        continue
                    lvl.tested.add((x, si))
                    h = compose(compose(ux, s), lvl.inv[s[x]])
                    if h == ident:
                        continue
                    res, j = self.sift(h, i + 1)
                    if res != ident:
                        self._install(res, i + 1, j)
                        i = j
                        grew = True
                        break
                if grew:
                    break
            if not grew:
                i -= 1

    def freeze(self) -> "StabilizerChain":
        levels = tuple(
            ChainLevel(
                lvl.point,
                tuple(Permutation(g) for g in lvl.gens),
                dict(lvl.trans),
                dict(lvl.inv),
            )
            for lvl in self.levels
            if len(lvl.trans) > 1 or lvl.gens
        )
        return StabilizerChain(self.degree, levels)


@dataclass(frozen=True)
class ChainLevel:
    point: int
    strong_generators: tuple[Permutation, ...]
    transversal: dict = field(repr=False)
    transversal_inv: dict = field(repr=False)

    @property
    def orbit(self) -> list[int]:
        return list(self.transversal)


@dataclass(frozen=True)
class StabilizerChain:
    degree: int
    levels: tuple[ChainLevel, ...]

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self.levels)

    @property
    def order(self) -> int:
        return prod((len(lvl.transversal) for lvl in self.levels), start=1)

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(self.levels[0].strong_generators) if self.levels else []

    def sift(self, p: Permutation) -> Permutation:
        h = p.images
        compose = kernels.compose
        for lvl in self.levels:
            inv = lvl.transversal_inv.get(h[lvl.point])
            if inv is None:
                break
            h = compose(h, inv)
        return Permutation(h)


def build_chain(gens: GeneratorSet, base_prefix: Sequence[int] = ()) -> StabilizerChain:
    builder = ChainBuilder(gens.degree, base_prefix)
    for g in gens:
        builder.extend(g.images)
    return builder.freeze()


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    if p.degree != chain.degree:
        raise DegreeMismatch(f"degree {p.degree} element tested against degree-{chain.degree} chain")
    return chain.sift(p).is_identity()


def group_order(gens: GeneratorSet) -> int:
    return build_chain(gens).order


# ---------------------------------------------------------------------------
# set orbits and stabilizers


@dataclass(frozen=True)
class SetOrbitResult:
    orbit: list[tuple[int, ...]]
    transversal: list[Word]
    stabilizer: GeneratorSet
    stabilizer_words: list[Word]
    stabilizer_order: int


def _invert_word(word):
    return tuple((i, -e) for i, e in reversed(word))


def _reduce_word(word):
    out = []
    for f in word:
        if out and out[-1][0] == f[0]:
            e = out[-1][1] + f[1]
            out.pop()
            if e:
                out.append((f[0], e))
        else:
            out.append(f)
    return tuple(out)


def set_orbit_and_stabilizer(
    gens: GeneratorSet,
    chain: StabilizerChain,
    seed: Iterable[int],
    limit: int = DEFAULT_ORBIT_LIMIT,
) -> SetOrbitResult:
    """Orbit of a point set and generators for its setwise stabilizer.

    Schreier generators are filtered by sifting against the stabilizer chain
    built so far; generation stops once the stabilizer reaches
    ``|G| / |orbit|``.
    """
    seed = tuple(sorted(set(seed)))
    if not seed:
        raise ValueError("seed set must be nonempty")
    for x in seed:
        _check_point(gens, x)
    imgs = gens.images
    found = kernels.set_orbit(imgs, seed, limit)
    if found is None:
        raise OrbitLimitExceeded(f"set orbit exceeds {limit} members")
    orb, parents = found

    words = [()] * len(orb)
    reps = [None] * len(orb)
    reps[0] = tuple(range(gens.degree))
    for i in range(1, len(orb)):
        j, s = parents[i]
        words[i] = words[j] + ((s, 1),)
        reps[i] = kernels.compose(reps[j], imgs[s])

    index = {S: i for i, S in enumerate(orb)}
    target, rem = divmod(chain.order, len(orb))
    if rem:
        raise ValueError("orbit length does not divide the group order; chain and generators disagree")

    builder = ChainBuilder(gens.degree)
    kept, kept_words = [], []
    if target > 1:
        ident = builder.identity
        done = False
        for i, S in enumerate(orb):
            for s, g in enumerate(imgs):
                img = tuple(sorted(g[x] for x in S))
                j = index[img]
                h = kernels.compose(kernels.compose(reps[i], g), kernels.invert(reps[j]))
                if h == ident:
                    continue
                if builder.extend(h):
                    kept.append(Permutation(h))
                    kept_words.append(_reduce_word(words[i] + ((s, 1),) + _invert_word(words[j])))
                    if builder.order == target:
                        done = True
                        break
            if done:
                break
    stab = generated(gens.degree, kept)
    return SetOrbitResult(list(orb), words, stab, kept_words, builder.order)


def point_stabilizer(chain: StabilizerChain, point: int) -> GeneratorSet:
    """Generators of the stabilizer of ``point``.

    With ``point`` first in the base, the strong generators of the deeper
    levels all fix it and together generate its stabilizer.
    """
    if not 0 <= point < chain.degree:
        raise OutOfRange(f"point {point} outside 0..{chain.degree - 1}")
    if not (chain.levels and chain.levels[0].point == point):
        chain = build_chain(generated(chain.degree, chain.strong_generators), base_prefix=(point,))
    gens = dict.fromkeys(g for lvl in chain.levels if lvl.point != point for g in lvl.strong_generators)
    return generated(chain.degree, [g for g in gens if g.images[point] == point])


# ---------------------------------------------------------------------------
# derived actions and enumeration


def induced_subset_action(
    gens: GeneratorSet, k: int, max_degree: int = DEFAULT_SUBSET_DEGREE_LIMIT
) -> GeneratorSet:
    """Action on k-subsets; subsets are labeled by lexicographic rank."""
    n = gens.degree
    if not 1 <= k <= n:
        raise OutOfRange(f"subset size {k} outside 1..{n}")
    m = comb(n, k)
    if m > max_degree:
        raise DegreeOverflow(f"C({n},{k}) = {m} exceeds {max_degree}")
    subsets = list(combinations(range(n), k))
    rank = {S: i for i, S in enumerate(subsets)}
    out = []
    for g in gens.images:
        out.append(Permutation(tuple(rank[tuple(sorted(g[x] for x in S))] for S in subsets)))
    return GeneratorSet(m, tuple(out), gens.names)


def subset_labels(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def closure_with_words(gens: GeneratorSet, bound: int) -> list[tuple[Permutation, Word]]:
    """All group elements with shortest words, by BFS from the identity."""
    imgs = gens.images
    start = tuple(range(gens.degree))
    seen = {start: ()}
    order = [start]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for s, g in enumerate(imgs):
            y = kernels.compose(x, g)
            if y not in seen:
                if len(order) >= bound:
                    raise BoundExceeded(f"group has more than {bound} elements")
                seen[y] = seen[x] + ((s, 1),)
                order.append(y)
    return [(Permutation(x), _reduce_word(seen[x])) for x in order]


def enumerate_elements(gens: GeneratorSet, bound: int) -> list[Permutation]:
    order = build_chain(gens).order
    if order > bound:
        raise BoundExceeded(f"group order {order} exceeds bound {bound}")
    return [p for p, _ in closure_with_words(gens, bound)]
