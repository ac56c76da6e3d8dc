"""Pure-Python hot loops. Same API as the compiled ``_kernels`` extension.

Permutations are tuples of images; ``compose(p, q)`` maps x to q[p[x]].
"""
from collections import deque


def compose(p, q):
    return tuple(map(q.__getitem__, p))


def invert(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def orbit(gens, start):
    """Points reachable from ``start``, in BFS discovery order."""
    seen = {start}
    out = [start]
    i = 0
    while i < len(out):
        x = out[i]
        i += 1
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def set_orbit(gens, seed, limit):
    """BFS over images of a sorted point tuple.

    Returns ``(orbit, parents)`` where ``parents[i] = (j, s)`` means
    ``orbit[i]`` is the image of ``orbit[j]`` under ``gens[s]``; the seed has
    parent ``(-1, -1)``. Returns ``None`` if the orbit grows past ``limit``.
    """
    index = {seed: 0}
    orb = [seed]
    parents = [(-1, -1)]
    i = 0
    while i < len(orb):
        cur = orb[i]
        for s, g in enumerate(gens):
            img = tuple(sorted(map(g.__getitem__, cur)))
            if img not in index:
                if len(orb) >= limit:
                    return None
                index[img] = len(orb)
                orb.append(img)
                parents.append((i, s))
        i += 1
    return orb, parents


def pair_coverage(v, blocks):
    """Counts of blocks through each unordered pair, indexed by pair rank.

    Pair (i, j) with i < j has rank ``i*(2v - i - 1)//2 + (j - i - 1)``.
    """
    counts = [0] * (v * (v - 1) // 2)
    for blk in blocks:
        n = len(blk)
        for a in range(n):
            i = blk[a]
            base = i * (2 * v - i - 1) // 2 - i - 1
            for b in range(a + 1, n):
                counts[base + blk[b]] += 1
    return counts


def pair_orbit_size(point_gens, block_gens, point, block):
    """Orbit length of (point, block) under simultaneous action.

    ``block_gens[s]`` is the permutation induced by ``point_gens[s]`` on
    block indices.
    """
    nb = len(block_gens[0])
    start = point * nb + block
    seen = bytearray(len(point_gens[0]) * nb)
    seen[start] = 1
    queue = deque([start])
    size = 1
    pairs = list(zip(point_gens, block_gens))
    while queue:
        state = queue.popleft()
        p, b = divmod(state, nb)
        for pg, bg in pairs:
            nxt = pg[p] * nb + bg[b]
            if not seen[nxt]:
                seen[nxt] = 1
                size += 1
                queue.append(nxt)
    return size
