"""Derive the group fixtures shipped in src/sporadic_designs/data/fixtures.

Not part of the library. Every fixture is produced by a deterministic
computation from first principles, and each one is checked before it is
written:

C7
    The cyclic group on 7 points and the base block {0, 3, 5, 6}.

M11
    Standard generators on 11 points (ATLAS v3, converted to 0-based points).
    Subgroup words are found by BFS element closure over all 7920 elements:

    * ``m10``: the stabilizer of point 0 (order 720). M11 has one class of
      subgroups of this order.
    * ``sylow2``: a Sylow 2-subgroup (order 16, semidihedral), built from an
      element of order 8 and the first element that extends it to order 16.
    * ``c8``, ``q8``, ``d8``: the three subgroups of order 8 of that Sylow
      subgroup. Every subgroup of order 8 of M11 lies in a Sylow subgroup,
      where it is the unique subgroup of its isomorphism type, so these
      represent all classes.
    * ``s5``: a subgroup of order 120 (one class in M11).

HS
    The Higman-Sims graph is built from the extended binary Golay code: the
    vertices are a point oo, the 22 points of the Steiner system S(3,6,22) and
    its 77 hexads. Graph automorphisms are found by individualization and
    refinement; their commutators generate HS on 100 vertices. The 7-regular
    50-vertex subsets obtained from heptads form one HS-orbit of size 352,
    which splits into 176 complementary pairs: that is the degree-176 action.
    Two random elements generating HS become the fixture generators.

    The base block is a cycle of length 8 of an element of order 8 whose set
    orbit has length 1100. ``k1`` is the setwise stabilizer of that block.
    ``k2`` is the stabilizer of an edge of the graph, which is the other
    class of subgroups of index 1100.

Orbit lengths
    McL (v = 299376, |G_B| = 1152) and J3:2 (v = 25840, |G_B| = 576) orbit
    lengths as reported in the literature; only the smallest are known.

Usage: python tools/derive_fixtures.py
"""
from __future__ import annotations

import random
import sys
import time
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from sporadic_designs import kernels  # noqa: E402
from sporadic_designs.catalog import (  # noqa: E402
    BlockSpec,
    SubgroupSpec,
    format_block_file,
    format_generator_file,
    format_subgroup_file,
    word_from_factors,
)
from sporadic_designs.errors import OrbitLimitExceeded  # noqa: E402
from sporadic_designs.perm import (  # noqa: E402
    GeneratorSet,
    Permutation,
    build_chain,
    closure_with_words,
    from_cycles,
    generated,
    induced_subset_action,
    is_primitive,
    orbit_partition,
    set_orbit_and_stabilizer,
)

OUT = ROOT / "src" / "sporadic_designs" / "data" / "fixtures"
NAMES = ("a", "b")


def write(name, text):
    (OUT / name).write_text(text)
    print("wrote", name)


def subgroup_order(degree, perms):
    return build_chain(generated(degree, perms)).order


# ---------------------------------------------------------------------------
# C7


def derive_c7():
    gens = GeneratorSet(7, (from_cycles(7, [range(7)]),), ("a",))
    write("C7.gens", format_generator_file(gens, "C7", ["cyclic group of order 7"]))
    write("C7.block", format_block_file(BlockSpec(7, (0, 3, 5, 6)),
                                        ["base block of the 2-(7,4,2) biplane"]))


# ---------------------------------------------------------------------------
# M11


def derive_m11():
    # ATLAS standard generators, points shifted to 0-based
    a = from_cycles(11, [(1, 9), (3, 10), (4, 6), (7, 8)])
    b = from_cycles(11, [(0, 3, 2, 7), (1, 4, 5, 8)])
    gens = GeneratorSet(11, (a, b), NAMES)
    assert build_chain(gens).order == 7920
    write("M11.gens", format_generator_file(
        gens, "M11", ["M11 standard generators (a of order 2, b of order 4), 0-based"]))

    elements = closure_with_words(gens, 8000)
    assert len(elements) == 7920
    by_order = {}
    for p, w in elements:
        by_order.setdefault(p.order(), []).append((p, w))

    def first_extension(base, target, pool):
        for p, w in pool:
            if subgroup_order(11, [x for x, _ in base] + [p]) == target:
                return base + [(p, w)]
        raise RuntimeError(f"no extension to order {target}")

    def save(name, pairs, note):
        words = tuple(word_from_factors(w, NAMES) for _, w in pairs)
        write(f"M11_{name}.sub", format_subgroup_file(SubgroupSpec(name, "M11", words), [note]))

    # stabilizer of point 0
    fix0 = [(p, w) for p, w in elements if p(0) == 0 and not p.is_identity()]
    m10, cur = [], 1
    for p, w in fix0:
        new = subgroup_order(11, [q for q, _ in m10] + [p])
        if new > cur:
            m10.append((p, w))
            cur = new
        if cur == 720:
            break
    save("m10", m10, "stabilizer of point 0, order 720")

    x8 = by_order[8][0]
    sylow = first_extension([x8], 16, elements)
    save("sylow2", sylow, "Sylow 2-subgroup, order 16")
    sylow_elems = closure_with_words(generated(11, [p for p, _ in sylow]), 32)
    # words of Sylow elements relative to the Sylow generators -> rewrite in a, b
    sw = [w for _, w in sylow]

    def to_ab(word):
        out = []
        for i, e in word:
            src = sw[i]
            for _ in range(abs(e)):
                out.extend(src if e > 0 else [(j, -f) for j, f in reversed(src)])
        return tuple(out)

    sylow_pairs = [(p, to_ab(w)) for p, w in sylow_elems]
    found = {}
    for i, (p, w) in enumerate(sylow_pairs):
        for q, u in sylow_pairs[i:]:
            grp = generated(11, [p, q])
            if build_chain(grp).order != 8:
                continue
            elems = closure_with_words(grp, 16)
            invols = sum(1 for e, _ in elems if e.order() == 2)
            has8 = any(e.order() == 8 for e, _ in elems)
            kind = "c8" if has8 else ("q8" if invols == 1 else ("d8" if invols == 5 else None))
            if kind and kind not in found:
                found[kind] = [(p, w), (q, u)]
    assert set(found) == {"c8", "q8", "d8"}, found.keys()
    for kind in ("c8", "q8", "d8"):
        save(kind, found[kind], f"subgroup of order 8 of the Sylow 2-subgroup ({kind})")

    x5 = by_order[5][0]
    s5 = first_extension([x5], 120, elements)
    save("s5", s5, "subgroup of order 120 (isomorphic to S5)")

    # sanity: orbit lengths on unordered pairs
    g55 = induced_subset_action(gens, 2)
    for name, pairs in (("sylow2", sylow), ("s5", s5)):
        sub = generated(55, [induced_subset_action(generated(11, [p]), 2).generators[0] for p, _ in pairs])
        print(name, "orbits on 55 points:", orbit_partition(sub).lengths)
    assert build_chain(g55).order == 7920


# ---------------------------------------------------------------------------
# HS


def golay_octads():
    qr = {(i * i) % 23 for i in range(1, 23)}
    basis = []
    for s in range(23):
        v = sum(1 << ((i + s) % 23) for i in qr)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    ext = [w | ((bin(w).count("1") & 1) << 23) for w in words]
    octads = [frozenset(i for i in range(24) if w >> i & 1) for w in ext if bin(w).count("1") == 8]
    assert len(octads) == 759
    return octads


def hs_graph(octads):
    hexads = [o - {22, 23} for o in octads if {22, 23} <= o]
    heptads = [o - {22} for o in octads if 22 in o and 23 not in o]
    assert len(hexads) == 77
    n = 100
    nbr = [set() for _ in range(n)]

    def edge(x, y):
        nbr[x].add(y)
        nbr[y].add(x)

    for p in range(22):
        edge(0, 1 + p)
    for h, hx in enumerate(hexads):
        for p in hx:
            edge(1 + p, 23 + h)
        for h2 in range(h + 1, 77):
            if not hx & hexads[h2]:
                edge(23 + h, 23 + h2)
    assert {len(s) for s in nbr} == {22}
    return hexads, heptads, nbr


def automorphism(nbr, rng):
    """One random automorphism by individualization and refinement."""
    n = len(nbr)
    nbl = [sorted(s) for s in nbr]

    def refine(c1, c2):
        while True:
            s1 = [(c1[v], tuple(sorted(c1[u] for u in nbl[v]))) for v in range(n)]
            s2 = [(c2[v], tuple(sorted(c2[u] for u in nbl[v]))) for v in range(n)]
            if sorted(s1) != sorted(s2):
                return None
            keys = {k: i for i, k in enumerate(sorted(set(s1)))}
            n1 = [keys[k] for k in s1]
            n2 = [keys[k] for k in s2]
            if len(keys) == len(set(c1)):
                return n1, n2
            c1, c2 = n1, n2

    def rec(c1, c2):
        r = refine(c1, c2)
        if r is None:
            return None
        c1, c2 = r
        if len(set(c1)) == n:
            where = {c: w for w, c in enumerate(c2)}
            m = tuple(where[c1[v]] for v in range(n))
            if all(m[u] in nbr[m[v]] for v in range(n) for u in nbl[v]):
                return m
            return None
        cnt = Counter(c1)
        cell = min((c for c in cnt if cnt[c] > 1), key=lambda c: (cnt[c], c))
        u = min(v for v in range(n) if c1[v] == cell)
        ws = [w for w in range(n) if c2[w] == cell]
        rng.shuffle(ws)
        for w in ws:
            d1, d2 = list(c1), list(c2)
            d1[u] = d2[w] = n + 1
            m = rec(d1, d2)
            if m:
                return m
        return None

    return rec([0] * n, [0] * n)


def random_word_element(imgs, rng, length):
    x = tuple(range(len(imgs[0])))
    for _ in range(length):
        x = kernels.compose(x, rng.choice(imgs))
    return x


def derive_hs():
    sys.setrecursionlimit(10000)
    octads = golay_octads()
    hexads, heptads, nbr = hs_graph(octads)
    rng = random.Random(1)
    auts = [automorphism(nbr, rng) for _ in range(4)]

    def comm(x, y):
        return kernels.compose(kernels.compose(kernels.invert(x), kernels.invert(y)), kernels.compose(x, y))

    cs = [comm(auts[i], auts[j]) for i in range(4) for j in range(i + 1, 4)]
    hs100 = GeneratorSet(100, tuple(Permutation(c) for c in cs))
    assert build_chain(hs100).order == 44352000

    # two generators
    rng2 = random.Random(3)
    while True:
        x = random_word_element(hs100.images, rng2, 40)
        y = random_word_element(hs100.images, rng2, 40)
        pair = GeneratorSet(100, (Permutation(x), Permutation(y)), NAMES)
        if build_chain(pair).order == 44352000:
            break
    print("HS on 100 points: 2 generators found")

    # degree-176 action on complementary pairs of 7-regular 50-sets
    hept = heptads[0]
    A = {0} | {1 + p for p in hept} | {23 + h for h, hx in enumerate(hexads) if len(hx & hept) == 1}
    assert len(A) == 50 and all(len(nbr[v] & A) == 7 for v in A)
    chain100 = build_chain(pair)
    res = set_orbit_and_stabilizer(pair, chain100, A)
    assert len(res.orbit) == 352
    halves = sorted(S for S in res.orbit if 0 in S)
    index = {S: i for i, S in enumerate(halves)}
    everything = set(range(100))

    def act(g):
        out = []
        for S in halves:
            img = {g[x] for x in S}
            if 0 not in img:
                img = everything - img
            out.append(index[tuple(sorted(img))])
        return Permutation(tuple(out))

    hs176 = GeneratorSet(176, tuple(act(g.images) for g in pair.generators), NAMES)
    chain176 = build_chain(hs176)
    assert chain176.order == 44352000 and is_primitive(hs176)
    write("HS.gens", format_generator_file(
        hs176, "HS", ["HS on 176 points (complementary pairs of 7-regular 50-sets of the",
                      "Higman-Sims graph); see tools/derive_fixtures.py"]))

    # base block: an 8-cycle of an element of order 8 with set orbit 1100
    rng3 = random.Random(7)
    block = k1 = None
    for _ in range(2000):
        x = Permutation(random_word_element(hs176.images, rng3, 30))
        o = x.order()
        if o % 8:
            continue
        for c in (x ** (o // 8)).cycles():
            if len(c) != 8:
                continue
            try:
                r = set_orbit_and_stabilizer(hs176, chain176, c, limit=1101)
            except OrbitLimitExceeded:
                continue
            if len(r.orbit) == 1100:
                block, k1 = tuple(sorted(c)), r
                break
        if block:
            break
    assert k1.stabilizer_order == 40320
    assert orbit_partition(k1.stabilizer).lengths == [8, 168]
    write("HS.block", format_block_file(BlockSpec(176, block), ["base block of the 2-(176,8,2) design"]))
    words = tuple(word_from_factors(w, NAMES) for w in k1.stabilizer_words)
    write("HS_k1.sub", format_subgroup_file(SubgroupSpec("k1", "HS", words),
                                            ["setwise stabilizer of the base block, order 40320"]))

    # the other class: stabilizer of an edge of the graph (vertex 0 ~ vertex 1)
    e = set_orbit_and_stabilizer(pair, chain100, (0, 1))
    assert len(e.orbit) == 1100 and e.stabilizer_order == 40320
    k2 = generated(176, [act(p.images) for p in e.stabilizer.generators])
    print("k2 orbits on 176 points:", orbit_partition(k2).lengths)
    words = tuple(word_from_factors(w, NAMES) for w in e.stabilizer_words)
    write("HS_k2.sub", format_subgroup_file(SubgroupSpec("k2", "HS", words),
                                            ["stabilizer of an edge of the Higman-Sims graph, order 40320"]))


def derive_orbit_lengths():
    write("McL_299376.orbits",
          "# smallest orbit lengths of the two classes of subgroups of order 1152\n"
          "group McL v 299376 stabilizer 1152\n"
          "subgroup l1 smallest 144 288^5 576\n"
          "subgroup l2 smallest 48 288^4 384^10 576\n")
    write("J3_2_25840.orbits",
          "# smallest orbit lengths of the two classes of subgroups of order 576\n"
          "group J3:2 v 25840 stabilizer 576\n"
          "subgroup n1 smallest 64 96^3 144\n"
          "subgroup n2 smallest 16 48^2 72^2\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    t = time.time()
    derive_c7()
    derive_m11()
    derive_orbit_lengths()
    derive_hs()
    print(f"done in {time.time() - t:.1f}s")
