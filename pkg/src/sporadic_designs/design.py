"""Incidence structures, 2-design verification and per-case pipelines."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from . import kernels
from .catalog import (
    BlockSpec,
    OrbitLengthFixture,
    SubgroupSpec,
    parse_block_file,
    parse_named_generator_file,
    parse_orbit_file,
    parse_subgroup_file,
)
from .errors import DomainError, FixtureMissing, MalformedStructure, NotDeveloped, OrbitLimitExceeded
from .perm import (
    GeneratorSet,
    StabilizerChain,
    build_chain,
    induced_subset_action,
    is_primitive,
    is_transitive,
    orbit_partition,
    set_orbit_and_stabilizer,
)
from .sieve import CandidateCase, DesignParameters, orbit_sum_representable


@dataclass(frozen=True)
class IncidenceStructure:
    v: int
    blocks: tuple[tuple[int, ...], ...]
    declared_lambda: int = 2
    # set by develop_block: the structure is one orbit of the developing group
    block_transitive: bool = False

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise MalformedStructure("no blocks")
        k = len(blocks[0])
        if not 2 < k < self.v:
            raise MalformedStructure(f"block size {k} is not strictly between 2 and v = {self.v}")
        for b in blocks:
            if len(b) != k:
                raise MalformedStructure("blocks have different sizes")
            if len(set(b)) != k:
                raise MalformedStructure(f"block {b} repeats a point")
            if b[0] < 0 or b[-1] >= self.v:
                raise MalformedStructure(f"block {b} leaves 0..{self.v - 1}")
        if len(set(blocks)) != len(blocks):
            raise MalformedStructure("repeated block")
        if self.declared_lambda < 1:
            raise MalformedStructure("lambda must be positive")

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass
class VerificationReport:
    params: DesignParameters | None
    failure: str | None
    pair_coverage_histogram: dict[int, int]
    replication: int | None
    transitivity_flags: dict[str, bool] = field(default_factory=dict)

    @property
    def is_design(self) -> bool:
        return self.params is not None


def develop_block(
    gens: GeneratorSet, chain: StabilizerChain, base, declared_lambda: int = 2, limit: int | None = None
) -> IncidenceStructure:
    """Blocks = the orbit of ``base`` under the group."""
    base = tuple(sorted(set(base)))
    if not 2 < len(base) < gens.degree:
        raise DomainError(f"block size {len(base)} is not strictly between 2 and {gens.degree}")
    res = set_orbit_and_stabilizer(gens, chain, base, **({"limit": limit} if limit else {}))
    return IncidenceStructure(gens.degree, tuple(res.orbit), declared_lambda, block_transitive=True)


def pair_coverage_histogram(s: IncidenceStructure) -> dict[int, int]:
    counts = kernels.pair_coverage(s.v, s.blocks)
    return dict(sorted(Counter(counts).items()))


def verify_two_design(s: IncidenceStructure) -> VerificationReport:
    """Count blocks through every point pair; a 2-design has one count, lambda."""
    hist = pair_coverage_histogram(s)
    lam = s.declared_lambda
    if list(hist) != [lam]:
        return VerificationReport(None, "pair coverage is not constantly lambda", hist, None)
    per_point = Counter(x for blk in s.blocks for x in blk)
    reps = {per_point.get(x, 0) for x in range(s.v)}
    if len(reps) != 1:
        return VerificationReport(None, "replication number is not constant", hist, None)
    r = reps.pop()
    v, b, k = s.v, s.b, s.k
    if b * k != v * r or lam * (v - 1) != r * (k - 1):
        raise MalformedStructure("design identities fail although coverage is uniform")
    try:
        params = DesignParameters(v, b, r, k, lam)
    except DomainError as exc:
        raise MalformedStructure(str(exc)) from None
    return VerificationReport(params, None, hist, r)


def _block_action(gens: GeneratorSet, s: IncidenceStructure) -> list[tuple[int, ...]]:
    index = {blk: i for i, blk in enumerate(s.blocks)}
    out = []
    for g in gens.images:
        row = []
        for blk in s.blocks:
            img = tuple(sorted(g[x] for x in blk))
            j = index.get(img)
            if j is None:
                raise NotDeveloped("the group does not preserve the block set")
            row.append(j)
        out.append(tuple(row))
    return out


def _require_developed(gens: GeneratorSet, s: IncidenceStructure) -> list[tuple[int, ...]]:
    if gens.degree != s.v:
        raise NotDeveloped(f"group degree {gens.degree} differs from v = {s.v}")
    block_gens = _block_action(gens, s)
    if len(kernels.orbit(block_gens, 0)) != s.b:
        raise NotDeveloped("blocks are not a single orbit of the group")
    return block_gens


def flag_orbit_size(gens: GeneratorSet, s: IncidenceStructure) -> int:
    block_gens = _require_developed(gens, s)
    return kernels.pair_orbit_size(gens.images, block_gens, s.blocks[0][0], 0)


def antiflag_orbit_size(gens: GeneratorSet, s: IncidenceStructure) -> int:
    if s.k >= s.v:
        raise DomainError("no antiflags when k = v")
    block_gens = _require_developed(gens, s)
    inside = set(s.blocks[0])
    point = next(x for x in range(s.v) if x not in inside)
    return kernels.pair_orbit_size(gens.images, block_gens, point, 0)


def flag_transitivity(gens: GeneratorSet, chain: StabilizerChain, s: IncidenceStructure) -> bool:
    """One orbit on incident (point, block) pairs, i.e. an orbit of size b*k."""
    return flag_orbit_size(gens, s) == s.b * s.k


def antiflag_transitivity(gens: GeneratorSet, chain: StabilizerChain, s: IncidenceStructure) -> bool:
    return antiflag_orbit_size(gens, s) == s.v * s.b - s.b * s.k


def full_report(
    gens: GeneratorSet,
    chain: StabilizerChain,
    s: IncidenceStructure,
    check_flags: bool = False,
    check_primitivity: bool = False,
) -> VerificationReport:
    report = verify_two_design(s)
    flags = report.transitivity_flags
    flags["block-transitive"] = s.block_transitive
    if check_flags:
        flags["flag-transitive"] = flag_transitivity(gens, chain, s)
        flags["antiflag-transitive"] = antiflag_transitivity(gens, chain, s)
    if check_primitivity:
        flags["point-transitive"] = is_transitive(gens)
        flags["primitive"] = flags["point-transitive"] and is_primitive(gens)
    return report


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Eliminated:
    reason: str  # "divisibility", "orbit-sum", "orbit-length" or "not a 2-design"
    detail: str = ""

    def label(self) -> str:
        return f"Eliminated({self.reason})"


@dataclass(frozen=True)
class Constructed:
    design: IncidenceStructure
    report: VerificationReport
    detail: str = ""

    def label(self) -> str:
        return "Constructed"


@dataclass(frozen=True)
class DataRequired:
    detail: str = ""

    def label(self) -> str:
        return "DataRequired"


CaseVerdict = Eliminated | Constructed | DataRequired


# ---------------------------------------------------------------------------
# fixtures


@dataclass
class _GroupData:
    gens: GeneratorSet
    chain: StabilizerChain


class FixtureStore:
    """Generator, subgroup, block and orbit-length fixtures from a directory.

    A ``.block`` file belongs to the ``.gens`` file with the same stem. When no
    generator file has the degree a case needs, actions on k-subsets of an
    existing representation are tried.
    """

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else None
        self.generator_files: dict[str, list[GeneratorSet]] = {}
        self.subgroups: dict[str, list[SubgroupSpec]] = {}
        self.blocks: dict[str, list[BlockSpec]] = {}
        self.orbit_fixtures: list[OrbitLengthFixture] = []
        self._cache: dict[tuple[str, int], _GroupData | None] = {}
        if self.directory is None:
            return
        if not self.directory.is_dir():
            raise FixtureMissing(f"fixture directory {self.directory} does not exist")
        stems = {}
        for path in sorted(self.directory.glob("*.gens")):
            gens, name = parse_named_generator_file(path.read_bytes())
            self.generator_files.setdefault(name, []).append(gens)
            stems[path.stem] = name
        for path in sorted(self.directory.glob("*.sub")):
            spec = parse_subgroup_file(path.read_bytes())
            self.subgroups.setdefault(spec.group, []).append(spec)
        for path in sorted(self.directory.glob("*.block")):
            if path.stem in stems:
                self.blocks.setdefault(stems[path.stem], []).append(parse_block_file(path.read_bytes()))
        for path in sorted(self.directory.glob("*.orbits")):
            self.orbit_fixtures.append(parse_orbit_file(path.read_bytes()))

    @classmethod
    def default(cls) -> "FixtureStore":
        from importlib import resources

        return cls(Path(str(resources.files("sporadic_designs") / "data" / "fixtures")))

    def representation(self, group: str, degree: int, order: int | None = None) -> _GroupData | None:
        """A transitive action of ``group`` on ``degree`` points, if derivable."""
        key = (group, degree)
        if key in self._cache:
            return self._cache[key]
        found = None
        for gens in self.generator_files.get(group, []):
            candidates = []
            if gens.degree == degree:
                candidates.append(gens)
            else:
                for k in range(2, gens.degree // 2 + 1):
                    if comb(gens.degree, k) == degree:
                        candidates.append(induced_subset_action(gens, k))
            for cand in candidates:
                if not is_transitive(cand):
                    continue
                chain = build_chain(cand)
                if order is None or chain.order == order:
                    found = _GroupData(cand, chain)
                    break
            if found:
                break
        self._cache[key] = found
        return found

    def matching_subgroups(self, group: str, order: int) -> list[SubgroupSpec]:
        """Subgroup fixtures of ``group`` whose order is exactly ``order``.

        Orders are computed in the group's own generator file, so no large
        derived action is built for subgroups that do not qualify.
        """
        files = self.generator_files.get(group)
        if not files:
            return []
        return [s for s in self.subgroups.get(group, []) if build_chain(s.generators(files[0])).order == order]

    def orbit_fixture(self, group: str, v: int, stabilizer_order: int) -> OrbitLengthFixture | None:
        for fx in self.orbit_fixtures:
            if (fx.group, fx.v, fx.stabilizer_order) == (group, v, stabilizer_order):
                return fx
        return None


# ---------------------------------------------------------------------------
# case pipeline


@dataclass(frozen=True)
class SubgroupOutcome:
    subgroup: str
    orbit_lengths: tuple[int, ...]
    stage: str  # "orbit-sum", "orbit-length", "not a 2-design" or "constructed"
    developed_sizes: tuple[int, ...] = ()
    design: IncidenceStructure | None = None
    report: VerificationReport | None = None


def examine_subgroup(name: str, data: _GroupData, sub: GeneratorSet, params: DesignParameters):
    """Steps (i)-(iv) for one candidate block stabilizer."""
    part = orbit_partition(sub)
    classes = sorted(part.classes, key=lambda c: (len(c), min(c)))
    lengths = tuple(len(c) for c in classes)
    rep = orbit_sum_representable(lengths, params.k)
    if not rep:
        return SubgroupOutcome(name, lengths, "orbit-sum")
    sizes = []
    best = None
    for witness in rep.witnesses:
        block = sorted(x for i in witness for x in classes[i])
        try:
            res = set_orbit_and_stabilizer(data.gens, data.chain, block, limit=params.b + 1)
            size = len(res.orbit)
        except OrbitLimitExceeded:
            size = -1  # more than b blocks
        sizes.append(size)
        if size != params.b:
            continue
        s = IncidenceStructure(params.v, tuple(res.orbit), params.lam, block_transitive=True)
        report = verify_two_design(s)
        if report.is_design:
            return SubgroupOutcome(name, lengths, "constructed", tuple(sizes), s, report)
        best = best or (s, report)
    if best is None:
        return SubgroupOutcome(name, lengths, "orbit-length", tuple(sizes))
    return SubgroupOutcome(name, lengths, "not a 2-design", tuple(sizes), best[0], best[1])


def _fmt_lengths(lengths) -> str:
    c = Counter(lengths)
    return ", ".join(f"{x}^{m}" if m > 1 else str(x) for x, m in sorted(c.items()))


def _describe(o: SubgroupOutcome, b: int) -> str:
    text = f"{o.subgroup}: orbits {_fmt_lengths(o.orbit_lengths)}"
    if o.stage == "orbit-sum":
        return text + "; k is no sum of orbit lengths"
    sizes = ", ".join(f">{b}" if s < 0 else str(s) for s in o.developed_sizes)
    if o.stage == "orbit-length":
        return text + f"; block orbits {sizes} != {b}"
    if o.stage == "not a 2-design":
        hist = o.report.pair_coverage_histogram
        return text + f"; {b} blocks but pair coverage {sorted(hist)}"
    return text + f"; block orbit {b}, 2-design"


def run_case(case: CandidateCase, fixtures: FixtureStore) -> CaseVerdict:
    """Group-level verdict for one candidate case from whatever fixtures exist."""
    params = case.params
    gname = case.group.name
    specs = fixtures.matching_subgroups(gname, case.stabilizer_order)
    data = fixtures.representation(gname, params.v, case.group.order) if specs else None
    subs = [(spec.name, spec.generators(data.gens)) for spec in specs] if data else []
    if subs:
        outcomes = [examine_subgroup(name, data, sub, params) for name, sub in subs]
        detail = "; ".join(_describe(o, params.b) for o in outcomes)
        for o in outcomes:
            if o.stage == "constructed":
                return Constructed(o.design, o.report, detail)
        stages = {o.stage for o in outcomes}
        for reason in ("not a 2-design", "orbit-length", "orbit-sum"):
            if reason in stages:
                return Eliminated(reason, detail)

    fx = fixtures.orbit_fixture(gname, params.v, case.stabilizer_order)
    if fx is not None:
        notes = []
        conclusive = True
        for rec in fx.subgroups:
            rep = orbit_sum_representable(rec.lengths, params.k)
            shown = _fmt_lengths(rec.lengths)
            if rep:
                vals = " or ".join("+".join(map(str, w)) for w in rep.witness_values())
                notes.append(f"{rec.name}: {params.k} = {vals}")
                conclusive = False
            elif rec.partial and max(rec.lengths, default=0) < params.k:
                notes.append(f"{rec.name}: smallest orbits {shown} do not settle k = {params.k}")
                conclusive = False
            else:
                notes.append(f"{rec.name}: orbits {shown}; k is no sum of orbit lengths")
        detail = "recorded orbit lengths: " + "; ".join(notes)
        if conclusive:
            return Eliminated("orbit-sum", detail)
        return DataRequired(detail + "; needs generators for the group action")

    for spec in fixtures.blocks.get(gname, []):
        if spec.v != params.v or len(spec.block) != params.k:
            continue
        data = fixtures.representation(gname, params.v, case.group.order)
        if data is not None:
            s = develop_block(data.gens, data.chain, spec.block, params.lam)
            report = verify_two_design(s)
            if report.is_design and s.b == params.b:
                return Constructed(s, report, "developed from the base-block fixture")
    return DataRequired("no subgroup fixtures for this case")
