"""Group data ingestion: catalog records, generator files, words, blocks.

All formats are line-oriented ASCII. Blank lines and lines starting with
``#`` are ignored (except that blank lines separate catalog records).

``.gens``::

    degree 3
    name c3
    gen a 1 2 0

``.atlas``::

    group M11 order 7920 out 1 complete yes
    max M10 order 720

``.sub``::

    subgroup sylow2 of M11
    word a*b^-1
    word (a*b)^3

``.block``::

    v 7
    block 0 3 5 6

Word grammar (whitespace is insignificant)::

    word := term { "*" term }
    term := atom [ "^" signed-integer ]
    atom := name | "(" word ")"
    name := [a-z][a-z0-9]*
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import FileDegreeMismatch, NonBijection, NonDividingMaximal, ParseError, UnboundName
from .perm import GeneratorSet, Permutation, identity, power

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "He",
    "Ru", "O'N", "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B", "Monster",
)

# Fi24' is the simple group; its automorphism group is conventionally written Fi24.
_EXTENSION_NAMES = {f"{s}:2": s for s in SPORADIC_NAMES}
_EXTENSION_NAMES["Fi24"] = "Fi24'"


def socle_name(name: str) -> str | None:
    """The sporadic socle of a catalog name, or None for auxiliary entries."""
    if name in SPORADIC_NAMES:
        return name
    return _EXTENSION_NAMES.get(name)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class MaximalRecord:
    name: str
    order: int
    index: int


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    out_order: int
    maximal_subgroups: tuple[MaximalRecord, ...]
    complete_list: bool = True

    def __post_init__(self):
        object.__setattr__(self, "maximal_subgroups", tuple(self.maximal_subgroups))
        if self.order < 1:
            raise ValueError("group order must be positive")
        for rec in self.maximal_subgroups:
            if self.order % rec.order:
                raise NonDividingMaximal(self.name, rec.name)
            if rec.order * rec.index != self.order:
                raise ValueError(f"{rec.name}: order times index differs from |{self.name}|")
        if self.is_sporadic and self.out_order not in (1, 2):
            raise ValueError(f"{self.name}: sporadic groups have |Out| 1 or 2")

    @property
    def is_sporadic(self) -> bool:
        return self.name in SPORADIC_NAMES

    @property
    def is_almost_simple_sporadic(self) -> bool:
        return socle_name(self.name) is not None


class Catalog(dict):
    """Name -> CatalogEntry, iterating in file order."""

    def entries(self) -> list[CatalogEntry]:
        return list(self.values())


_DECIMAL = re.compile(r"[0-9]+\Z")


def _decimal(tok: str, lineno: int, what: str) -> int:
    if not _DECIMAL.match(tok):
        raise ParseError(f"{what} must be a decimal integer, got {tok!r}", line=lineno)
    return int(tok)


def _text(data) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    return data


def parse_catalog_file(data) -> Catalog:
    text = _text(data)
    catalog = Catalog()
    current = None  # (name, order, out, complete, maxes, lineno)

    def flush():
        if current is None:
            return
        name, order, out, complete, maxes, lineno = current
        if name in catalog:
            raise ParseError(f"duplicate group {name}", line=lineno)
        recs = []
        for mname, morder, mline in maxes:
            if morder == 0 or order % morder:
                raise NonDividingMaximal(name, mname)
            recs.append(MaximalRecord(mname, morder, order // morder))
        catalog[name] = CatalogEntry(name, order, out, tuple(recs), complete)

    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush()
            current = None
            continue
        toks = line.split()
        if toks[0] == "group":
            if current is not None:
                raise ParseError("group record not separated by a blank line", line=lineno)
            if len(toks) != 8 or toks[2] != "order" or toks[4] != "out" or toks[6] != "complete":
                raise ParseError("expected 'group <name> order <n> out <1|2> complete <yes|no>'", line=lineno)
            order = _decimal(toks[3], lineno, "order")
            if order == 0:
                raise ParseError("order must be positive", line=lineno)
            if toks[5] not in ("1", "2"):
                raise ParseError("out must be 1 or 2", line=lineno)
            if toks[7] not in ("yes", "no"):
                raise ParseError("complete must be yes or no", line=lineno)
            current = (toks[1], order, int(toks[5]), toks[7] == "yes", [], lineno)
        elif toks[0] == "max":
            if current is None:
                raise ParseError("max line outside a group record", line=lineno)
            if len(toks) != 4 or toks[2] != "order":
                raise ParseError("expected 'max <name> order <n>'", line=lineno)
            current[4].append((toks[1], _decimal(toks[3], lineno, "order"), lineno))
        else:
            raise ParseError(f"unknown record keyword {toks[0]!r}", line=lineno)
    flush()
    return catalog


def default_catalog_path() -> Path:
    return Path(str(resources.files("sporadic_designs") / "data" / "atlas.dat"))


def load_catalog(path=None) -> Catalog:
    path = Path(path) if path is not None else default_catalog_path()
    return parse_catalog_file(path.read_bytes())


# ---------------------------------------------------------------------------
# generator files


def parse_generator_file(data) -> GeneratorSet:
    gs, _ = _parse_generator_file(data)
    return gs


def parse_named_generator_file(data) -> tuple[GeneratorSet, str]:
    """Like :func:`parse_generator_file` but also returns the group name."""
    return _parse_generator_file(data)


def _parse_generator_file(data):
    text = _text(data)
    degree = name = None
    gens, names = [], []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if degree is None:
            if toks[0] != "degree" or len(toks) != 2:
                raise ParseError("first line must be 'degree <n>'", line=lineno)
            degree = _decimal(toks[1], lineno, "degree")
            if not 1 <= degree <= 2**31 - 1:
                raise ParseError("degree out of range", line=lineno)
        elif name is None:
            if toks[0] != "name" or len(toks) != 2:
                raise ParseError("second line must be 'name <identifier>'", line=lineno)
            name = toks[1]
        else:
            if toks[0] != "gen" or len(toks) < 2:
                raise ParseError("expected 'gen <name> <images...>'", line=lineno)
            gname = toks[1]
            if not _NAME.fullmatch(gname):
                raise ParseError(f"bad generator name {gname!r}", line=lineno)
            if gname in names:
                raise ParseError(f"generator {gname} declared twice", line=lineno)
            imgs = [_decimal(t, lineno, "image") for t in toks[2:]]
            if len(imgs) != degree:
                raise FileDegreeMismatch(
                    f"generator {gname} has {len(imgs)} images, degree is {degree}", line=lineno
                )
            seen = bytearray(degree)
            for x in imgs:
                if x >= degree:
                    raise NonBijection(f"image {x} outside 0..{degree - 1}", line=lineno)
                if seen[x]:
                    raise NonBijection(f"image {x} repeated", line=lineno)
                seen[x] = 1
            gens.append(Permutation(tuple(imgs)))
            names.append(gname)
    if degree is None or name is None:
        raise ParseError("missing 'degree' or 'name' header")
    if not gens:
        raise ParseError("no generators")
    return GeneratorSet(degree, tuple(gens), tuple(names)), name


def format_generator_file(gens: GeneratorSet, name: str, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"degree {gens.degree}", f"name {name}"]
    for gname, g in gens.name_map().items():
        lines.append(f"gen {gname} " + " ".join(map(str, g.images)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Term:
    atom: Union[str, "GroupWord"]
    exponent: int = 1


@dataclass(frozen=True)
class GroupWord:
    terms: tuple[Term, ...]

    def factors(self) -> list[tuple[str, int]]:
        """Flatten into (name, exponent) factors, expanding grouped powers."""
        out = []
        for t in self.terms:
            if isinstance(t.atom, str):
                if t.exponent:
                    out.append((t.atom, t.exponent))
                continue
            inner = t.atom.factors()
            if t.exponent < 0:
                inner = [(n, -e) for n, e in reversed(inner)]
            out.extend(inner * abs(t.exponent))
        return out

    def names(self) -> set[str]:
        out = set()
        for t in self.terms:
            out |= {t.atom} if isinstance(t.atom, str) else t.atom.names()
        return out

    def __str__(self):
        return format_word(self)


_NAME = re.compile(r"[a-z][a-z0-9]*")
_TOKEN = re.compile(r"\s*(?:([a-z][a-z0-9]*)|(-?[0-9]+)|([*^()]))")


class _WordParser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", position=pos + 1)
            start = m.start(m.lastindex)
            self.toks.append((m.lastindex, m.group(m.lastindex), start + 1))
            pos = m.end()
        self.toks.append((0, "", len(text) + 1))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def word(self) -> GroupWord:
        terms = [self.term()]
        while self.peek()[1] == "*":
            self.take()
            terms.append(self.term())
        return GroupWord(tuple(terms))

    def term(self) -> Term:
        atom = self.atom()
        exp = 1
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != 2:
                raise ParseError("expected an integer exponent", position=pos)
            exp = int(val)
        return Term(atom, exp)

    def atom(self):
        kind, val, pos = self.take()
        if kind == 1:
            return val
        if val == "(":
            w = self.word()
            kind, val, pos = self.take()
            if val != ")":
                raise ParseError("expected ')'", position=pos)
            return w
        raise ParseError(f"expected a generator name or '(' but found {val or 'end of input'!r}", position=pos)


def parse_word(text: str) -> GroupWord:
    p = _WordParser(text)
    w = p.word()
    kind, val, pos = p.peek()
    if kind != 0:
        raise ParseError(f"unexpected {val!r}", position=pos)
    return w


def format_word(word: GroupWord) -> str:
    parts = []
    for t in word.terms:
        atom = t.atom if isinstance(t.atom, str) else f"({format_word(t.atom)})"
        parts.append(atom if t.exponent == 1 else f"{atom}^{t.exponent}")
    return "*".join(parts)


def word_from_factors(factors, names) -> GroupWord:
    """Build a flat word from (generator index, exponent) factors."""
    if not factors:
        return GroupWord((Term(names[0], 0),))
    return GroupWord(tuple(Term(names[i], e) for i, e in factors))


def evaluate_word(word: GroupWord, gens: GeneratorSet) -> Permutation:
    table = gens.name_map()
    for name in sorted(word.names()):
        if name not in table:
            raise UnboundName(name)
    out = identity(gens.degree)
    cache = {}
    for name, e in word.factors():
        key = (name, e)
        if key not in cache:
            cache[key] = power(table[name], e)
        out = out * cache[key]
    return out


# ---------------------------------------------------------------------------
# subgroup and block fixtures


@dataclass(frozen=True)
class SubgroupSpec:
    name: str
    group: str
    words: tuple[GroupWord, ...]

    def generators(self, gens: GeneratorSet) -> GeneratorSet:
        perms = [evaluate_word(w, gens) for w in self.words]
        if not perms:
            perms = [identity(gens.degree)]
        return GeneratorSet(gens.degree, tuple(perms))


def parse_subgroup_file(data) -> SubgroupSpec:
    text = _text(data)
    header = None
    words = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            toks = line.split()
            if len(toks) != 4 or toks[0] != "subgroup" or toks[2] != "of":
                raise ParseError("first line must be 'subgroup <name> of <group>'", line=lineno)
            header = (toks[1], toks[3])
            continue
        if not line.startswith("word ") and line != "word":
            raise ParseError("expected 'word <word-text>'", line=lineno)
        try:
            words.append(parse_word(line[4:]))
        except ParseError as exc:
            raise ParseError(f"bad word ({exc})", line=lineno) from None
    if header is None:
        raise ParseError("missing 'subgroup' header")
    return SubgroupSpec(header[0], header[1], tuple(words))


def format_subgroup_file(spec: SubgroupSpec, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"subgroup {spec.name} of {spec.group}")
    lines += [f"word {format_word(w)}" for w in spec.words]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BlockSpec:
    v: int
    block: tuple[int, ...]


def parse_block_file(data) -> BlockSpec:
    text = _text(data)
    v = None
    block = None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if v is None:
            if toks[0] != "v" or len(toks) != 2:
                raise ParseError("first line must be 'v <n>'", line=lineno)
            v = _decimal(toks[1], lineno, "v")
        elif block is None:
            if toks[0] != "block":
                raise ParseError("expected 'block <points...>'", line=lineno)
            pts = [_decimal(t, lineno, "point") for t in toks[1:]]
            if not pts:
                raise ParseError("empty block", line=lineno)
            if any(b <= a for a, b in zip(pts, pts[1:])):
                raise ParseError("block points must be strictly ascending", line=lineno)
            if pts[-1] >= v:
                raise ParseError(f"point {pts[-1]} outside 0..{v - 1}", line=lineno)
            block = tuple(pts)
        else:
            raise ParseError("unexpected content after the block line", line=lineno)
    if v is None or block is None:
        raise ParseError("missing 'v' or 'block' line")
    return BlockSpec(v, block)


def format_block_file(spec: BlockSpec, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"v {spec.v}", "block " + " ".join(map(str, spec.block))]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OrbitLengthRecord:
    name: str
    lengths: tuple[int, ...]
    # True when only the smallest orbit lengths are listed
    partial: bool


@dataclass(frozen=True)
class OrbitLengthFixture:
    """Orbit lengths of block-stabilizer candidates, recorded without generators.

    ``.orbits`` format::

        group McL v 299376 stabilizer 1152
        subgroup l1 smallest 144 288^5 576
        subgroup l2 all 16 48^2

    ``smallest`` marks a list of the smallest orbit lengths only; ``all``
    marks a complete list. ``x^m`` repeats length x m times.
    """

    group: str
    v: int
    stabilizer_order: int
    subgroups: tuple[OrbitLengthRecord, ...]


def parse_orbit_file(data) -> OrbitLengthFixture:
    text = _text(data)
    header = None
    subs = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 6 or toks[0] != "group" or toks[2] != "v" or toks[4] != "stabilizer":
                raise ParseError("first line must be 'group <name> v <n> stabilizer <order>'", line=lineno)
            header = (toks[1], _decimal(toks[3], lineno, "v"), _decimal(toks[5], lineno, "stabilizer order"))
            continue
        if toks[0] != "subgroup" or len(toks) < 4 or toks[2] not in ("smallest", "all"):
            raise ParseError("expected 'subgroup <name> smallest|all <lengths...>'", line=lineno)
        lengths = []
        for tok in toks[3:]:
            base, _, mult = tok.partition("^")
            x = _decimal(base, lineno, "orbit length")
            m = _decimal(mult, lineno, "multiplicity") if mult else 1
            if x == 0:
                raise ParseError("orbit lengths must be positive", line=lineno)
            lengths.extend([x] * m)
        subs.append(OrbitLengthRecord(toks[1], tuple(lengths), toks[2] == "smallest"))
    if header is None:
        raise ParseError("missing 'group' header")
    return OrbitLengthFixture(header[0], header[1], header[2], tuple(subs))
