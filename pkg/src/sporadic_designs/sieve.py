"""Arithmetic elimination of candidate 2-designs.

Everything here is exact integer arithmetic. A parameter tuple
``(v, b, r, k, lam)`` is admissible for a group G acting on v points when

1. ``b * k == v * r``
2. ``lam * (v - 1) == r * (k - 1)``
3. ``b >= v`` (Fisher)
4. ``2 < k < v``
5. ``b`` divides ``|G|`` (block-transitivity)
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from sympy import factorint

from .catalog import CatalogEntry, MaximalRecord
from .errors import DomainError, SizeLimitExceeded

DEFAULT_MAX_WITNESSES = 64
DEFAULT_MAX_LENGTHS = 10_000
DEFAULT_MAX_TARGET = 10**7


@dataclass(frozen=True)
class DesignParameters:
    v: int
    b: int
    r: int
    k: int
    lam: int = 2

    def __post_init__(self):
        problems = parameter_violations(self)
        if problems:
            raise DomainError(f"{self.astuple()}: " + "; ".join(problems))

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.b, self.r, self.k, self.lam)

    def __str__(self):
        return "(" + ",".join(map(str, self.astuple())) + ")"


def parameter_violations(p, group_order: int | None = None) -> list[str]:
    """Which admissibility conditions fail (empty list when all hold)."""
    v, b, r, k, lam = p.v, p.b, p.r, p.k, p.lam
    out = []
    if b * k != v * r:
        out.append("bk != vr")
    if lam * (v - 1) != r * (k - 1):
        out.append("lambda(v-1) != r(k-1)")
    if b < v:
        out.append("b < v")
    if not 2 < k < v:
        out.append("k outside (2, v)")
    if lam < 1:
        out.append("lambda < 1")
    if group_order is not None and group_order % b:
        out.append("b does not divide |G|")
    return out


@dataclass(frozen=True)
class Inadmissible:
    reason: str

    def __bool__(self):
        return False


def complete_parameters(v: int, k: int, lam: int = 2) -> DesignParameters | Inadmissible:
    """Solve for r and b from v, k and lambda."""
    if v <= 2 or not 2 < k < v or lam < 1:
        raise DomainError(f"need v > 2, 2 < k < v and lambda >= 1; got v={v}, k={k}, lambda={lam}")
    r, rem = divmod(lam * (v - 1), k - 1)
    if rem:
        return Inadmissible(f"r = {lam * (v - 1)}/{k - 1} is not an integer")
    b, rem = divmod(v * r, k)
    if rem:
        return Inadmissible(f"b = {v * r}/{k} is not an integer")
    if b < v:
        return Inadmissible(f"b = {b} < v = {v}")
    return DesignParameters(v, b, r, k, lam)


def _divisors_up_to(fact: dict[int, int], bound: int) -> list[int]:
    out = []
    primes = sorted(fact)

    def rec(i, acc):
        if i == len(primes):
            out.append(acc)
            return
        p = primes[i]
        x = acc
        for _ in range(fact[p] + 1):
            if x > bound:
                break
            rec(i + 1, x)
            x *= p

    rec(0, 1)
    return out


def admissible_parameters(v: int, group_order: int, lam: int = 2) -> list[DesignParameters]:
    """All admissible tuples for a group of the given order on v points.

    Every block count b divides g = gcd(|G|, lam*v*(v-1)) and is at least v,
    so we enumerate the cofactors e = g/b <= g/v (g divides |G|, so it
    factors quickly) and solve k(k-1) = lam*v*(v-1)/b for k.
    """
    if v <= 2 or group_order < v or lam < 1:
        raise DomainError(f"need v > 2, |G| >= v and lambda >= 1; got v={v}, |G|={group_order}")
    total = lam * v * (v - 1)
    g = gcd(group_order, total)
    out = []
    for e in _divisors_up_to(factorint(g), g // v):
        b = g // e
        c = total // b
        # k(k-1) = c  =>  k = (1 + sqrt(1 + 4c)) / 2
        s = isqrt(1 + 4 * c)
        if s * s != 1 + 4 * c:
            continue
        k = (1 + s) // 2
        if not 2 < k < v or (lam * (v - 1)) % (k - 1):
            continue
        params = complete_parameters(v, k, lam)
        if params and params.b == b:
            out.append(params)
    out.sort(key=lambda p: p.k)
    return out


def naive_admissible_parameters(v: int, group_order: int, lam: int = 2) -> list[DesignParameters]:
    """Reference implementation: try every k in (2, v)."""
    out = []
    for k in range(3, v):
        p = complete_parameters(v, k, lam)
        if p and group_order % p.b == 0:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# divisibility into maximal subgroups


def maximal_divisibility_filter(
    stab_order: int,
    entry: CatalogEntry,
    catalog: dict,
    depth: int = 0,
    warnings: list | None = None,
) -> bool:
    """Can a subgroup of order ``stab_order`` be a proper subgroup of ``entry``?

    It must lie in some maximal subgroup M with ``stab_order`` dividing |M|.
    With ``depth > 0`` the same question is asked of M's own catalog entry,
    unless the orders agree (then the subgroup would be M itself). Entries
    missing from the catalog count as passing; a warning is recorded.
    """
    if stab_order < 1 or depth < 0:
        raise DomainError("stab_order must be positive and depth non-negative")
    for rec in entry.maximal_subgroups:
        if rec.order % stab_order:
            continue
        if depth == 0 or rec.order == stab_order:
            return True
        sub = catalog.get(rec.name)
        if sub is None:
            if warnings is not None:
                warnings.append(
                    f"no catalog entry for {rec.name} (maximal in {entry.name}); "
                    "its subgroups of admissible order were not excluded"
                )
            return True
        if maximal_divisibility_filter(stab_order, sub, catalog, depth - 1, warnings):
            return True
    return False


# ---------------------------------------------------------------------------
# orbit-length sums


@dataclass(frozen=True)
class OrbitSumResult:
    representable: bool
    # each witness is a tuple of indices into the input sequence
    witnesses: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    truncated: bool = False

    def __bool__(self):
        return self.representable

    def witness_values(self) -> list[tuple[int, ...]]:
        """Distinct witnesses as sorted tuples of orbit lengths."""
        seen = []
        for w in self.witnesses:
            vals = tuple(sorted(self.lengths[i] for i in w))
            if vals not in seen:
                seen.append(vals)
        return seen


def orbit_sum_representable(
    lengths,
    k: int,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    max_lengths: int = DEFAULT_MAX_LENGTHS,
    max_target: int = DEFAULT_MAX_TARGET,
) -> OrbitSumResult:
    """Decide whether some sub-multiset of ``lengths`` sums to ``k``.

    Reachable sums are tracked as bits of a Python integer, suffix by
    suffix, which lets the witness search prune dead branches. Witnesses are
    index subsets in lexicographic order; at most ``max_witnesses`` are kept.
    """
    lengths = tuple(int(x) for x in lengths)
    if k < 0:
        raise DomainError("k must be non-negative")
    if any(x < 1 for x in lengths):
        raise DomainError("orbit lengths must be positive")
    if len(lengths) > max_lengths:
        raise SizeLimitExceeded(f"{len(lengths)} lengths exceed the bound {max_lengths}")
    if k > max_target:
        raise SizeLimitExceeded(f"target {k} exceeds the bound {max_target}")
    mask = (1 << (k + 1)) - 1
    n = len(lengths)
    # suffix[i]: bit s set iff some subset of lengths[i:] sums to s
    suffix = [0] * (n + 1)
    suffix[n] = 1
    for i in range(n - 1, -1, -1):
        x = lengths[i]
        suffix[i] = (suffix[i + 1] | (suffix[i + 1] << x)) & mask if x <= k else suffix[i + 1]
    if not suffix[0] >> k & 1:
        return OrbitSumResult(False, (), lengths)

    witnesses = []
    truncated = False
    chosen = []

    def rec(i, remaining):
        nonlocal truncated
        if len(witnesses) >= max_witnesses:
            truncated = True
            return
        if remaining == 0:
            witnesses.append(tuple(chosen))
            return
        x = lengths[i]
        if x <= remaining and suffix[i + 1] >> (remaining - x) & 1:
            chosen.append(i)
            rec(i + 1, remaining - x)
            chosen.pop()
        if suffix[i + 1] >> remaining & 1:
            rec(i + 1, remaining)

    rec(0, k)
    return OrbitSumResult(True, tuple(witnesses), lengths, truncated)


# ---------------------------------------------------------------------------
# catalog sieve


@dataclass(frozen=True)
class CandidateCase:
    group: CatalogEntry
    point_stabilizer: MaximalRecord
    params: DesignParameters
    stabilizer_order: int

    def __post_init__(self):
        if self.params.v * self.point_stabilizer.order != self.group.order:
            raise DomainError("v must equal |G| / |G_alpha|")
        if self.stabilizer_order * self.params.b != self.group.order:
            raise DomainError("|G_B| * b must equal |G|")


def sieve_entry(entry: CatalogEntry, lam: int = 2) -> list[CandidateCase]:
    """Candidate cases for one group; point stabilizers giving the same
    degree are reported once, under the first maximal subgroup listed."""
    out = []
    seen_v = set()
    for rec in entry.maximal_subgroups:
        v = rec.index
        if v <= 3 or v in seen_v:
            continue
        seen_v.add(v)
        for p in admissible_parameters(v, entry.order, lam):
            out.append(CandidateCase(entry, rec, p, entry.order // p.b))
    return out


def sieve_catalog(catalog, lam: int = 2, warnings: list | None = None) -> list[CandidateCase]:
    """Sieve every sporadic group and sporadic automorphism group in the catalog.

    Auxiliary entries (non-sporadic groups kept for the divisibility
    recursion) are skipped. Groups whose maximal subgroup list is marked
    incomplete add a warning, whatever the outcome.
    """
    entries = catalog.values() if isinstance(catalog, dict) else catalog
    out = []
    for entry in entries:
        if not entry.is_almost_simple_sporadic:
            continue
        out.extend(sieve_entry(entry, lam))
        if not entry.complete_list and warnings is not None:
            warnings.append(
                f"{entry.name}: the maximal subgroup list is incomplete; "
                "the sieve covers only the listed subgroups"
            )
    return out
