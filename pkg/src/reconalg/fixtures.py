"""Golden fixtures for two singularities outside type A.

Each fixture is a pair of plain-text files (undeformed and deformed) in
``fixtures/``; see ``D5_2.txt`` for the format.  Verification is done
with the Groebner engine in the ambient polynomial ring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DomainError
from .groebner import buchberger
from .polyring import Polynomial, PolyRing, parse_polynomials, substitute

__all__ = [
    "FIXTURE_NAMES",
    "FixtureArrow",
    "FixturePart",
    "GoldenFixture",
    "VerificationReport",
    "parse_fixture_text",
    "load_fixture",
    "verify_fixture",
]

FIXTURE_NAMES = ("D5_2", "nonquotient_minus4")
FIXTURE_DIR = Path(__file__).with_name("fixtures")

_SECTIONS = ("parameters", "variables", "relations", "modules", "arrows", "loops", "specialization")


@dataclass
class FixtureArrow:
    src: str
    dst: str
    text: str
    forms: list[tuple[Polynomial, Polynomial]]

    @property
    def is_inclusion(self) -> bool:
        return self.text.strip() == "inc"


@dataclass
class FixturePart:
    name: str
    ring: PolyRing
    relations: list[Polynomial]
    relation_text: list[str]
    modules: dict[str, list[list[Polynomial]]]
    arrows: list[FixtureArrow]
    loops: dict[str, list[Polynomial]] = field(default_factory=dict)
    specialization: dict[str, str] = field(default_factory=dict)
    parameters: dict[str, Fraction] = field(default_factory=dict)

    @property
    def vertices(self) -> list[str]:
        return list(self.modules)

    def groebner(self):
        if not hasattr(self, "_gb"):
            self._gb = buchberger(self.relations, ring=self.ring)
        return self._gb


@dataclass
class GoldenFixture:
    name: str
    undeformed: FixturePart
    deformed: FixturePart
    lam: Fraction | None = None

    @property
    def specialization(self) -> dict[str, str]:
        return self.deformed.specialization


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _read_sections(text: str) -> tuple[dict, dict]:
    header, sections, current = {}, {s: [] for s in _SECTIONS}, None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            if m.group(1) not in sections:
                raise DomainError(f"unknown fixture section [{m.group(1)}]")
            current = m.group(1)
            continue
        if current is None:
            key, _, value = line.partition("=")
            header[key.strip()] = value.strip()
        else:
            sections[current].append(line)
    return header, sections


def parse_fixture_text(text: str, lam: Fraction | None = None) -> FixturePart:
    header, sec = _read_sections(text)
    params = {}
    for line in sec["parameters"]:
        key, _, value = line.partition("=")
        params[key.strip()] = Fraction(value.strip())
    if lam is not None and "lambda" in params:
        params["lambda"] = Fraction(lam)
    if "lambda" in params and params["lambda"] in (0, 1):
        raise DomainError("lambda must avoid 0 and 1")
    names = [n for line in sec["variables"] for n in line.split()]
    ring = PolyRing(names)
    texts = []

    def note(t):
        texts.append(t)
        return len(texts) - 1

    rel_idx = [note(t) for t in sec["relations"]]
    modules_idx = {}
    for line in sec["modules"]:
        mname, _, rhs = line.partition("=")
        pres = []
        for alt in rhs.split("~"):
            alt = alt.strip()
            if not (alt.startswith("(") and alt.endswith(")")):
                raise DomainError(f"module presentation {alt!r} must be parenthesized")
            pres.append([note(g) for g in _split_top(alt[1:-1], ",")])
        modules_idx[mname.strip()] = pres
    arrow_idx = []
    for line in sec["arrows"]:
        m = re.fullmatch(r"(\S+)\s*->\s*(\S+)\s*:\s*(.+)", line)
        if not m:
            raise DomainError(f"bad arrow line {line!r}")
        src, dst, label = m.groups()
        forms = []
        if label.strip() != "inc":
            for form in _split_top(label, "="):
                num_den = _split_top(form, "/")
                if len(num_den) == 1:
                    num_den.append("1")
                if len(num_den) != 2:
                    raise DomainError(f"bad fraction {form!r}")
                forms.append((note(num_den[0]), note(num_den[1])))
        else:
            forms.append((note("1"), note("1")))
        arrow_idx.append((src, dst, label.strip(), forms))
    loops_idx = {}
    for line in sec["loops"]:
        vname, _, rhs = line.partition(":")
        loops_idx[vname.strip()] = [note(g) for g in _split_top(rhs, ",")]
    spec = {}
    for line in sec["specialization"]:
        lhs, _, rhs = line.partition("->")
        spec[lhs.strip()] = rhs.strip()

    pnames = list(params)
    _, polys = parse_polynomials(texts, names=list(ring.names) + pnames)
    big = polys[0].ring if polys else ring
    values = {p: v for p, v in params.items()}

    def fix(i):
        p = polys[i]
        if values:
            p = substitute(p, {k: big.const(v) for k, v in values.items()}, partial=True)
        return p.to_ring(ring)

    modules = {k: [[fix(i) for i in pres] for pres in v] for k, v in modules_idx.items()}
    arrows_ = []
    for src, dst, label, forms in arrow_idx:
        for end in (src, dst):
            if end not in modules:
                raise DomainError(f"arrow endpoint {end} is not a module")
        arrows_.append(FixtureArrow(src, dst, label, [(fix(n), fix(d)) for n, d in forms]))
    return FixturePart(
        header.get("name", ""),
        ring,
        [fix(i) for i in rel_idx],
        list(sec["relations"]),
        modules,
        arrows_,
        {k: [fix(i) for i in v] for k, v in loops_idx.items()},
        spec,
        params,
    )


def load_fixture(name: str, lam=None, directory=None) -> GoldenFixture:
    if name not in FIXTURE_NAMES:
        raise DomainError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    directory = Path(directory) if directory else FIXTURE_DIR
    lam = Fraction(lam) if lam is not None else None
    und = parse_fixture_text((directory / f"{name}.txt").read_text(), lam)
    dfm = parse_fixture_text((directory / f"{name}_deformed.txt").read_text(), lam)
    return GoldenFixture(name, und, dfm, und.parameters.get("lambda"))


# -- verification ---------------------------------------------------------------


@dataclass
class VerificationReport:
    title: str
    entries: list[tuple[str, str, bool, str]] = field(default_factory=list)

    def add(self, check: str, item: str, ok: bool, detail: str = "") -> None:
        self.entries.append((check, item, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok, _ in self.entries)

    def failures(self):
        return [e for e in self.entries if not e[2]]

    def format_text(self) -> str:
        lines = [f"# {self.title}"]
        for check, item, ok, detail in self.entries:
            line = f"{'PASS' if ok else 'FAIL'}  {check:<16} {item}"
            if detail:
                line += f"  -- {detail}"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"{len(self.entries) - n_fail}/{len(self.entries)} checks passed")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "entries": [
                {"check": c, "item": i, "ok": ok, "detail": d} for c, i, ok, d in self.entries
            ],
        }


def _arrow_name(ar: FixtureArrow) -> str:
    return f"{ar.src} -> {ar.dst} : {ar.text}"


def _verify_part(part: FixturePart, report: VerificationReport, tag: str) -> None:
    G = part.groebner()
    report.add(f"{tag}:ideal", "relation ideal is proper", not G.is_unit_ideal())
    cache: dict = {}
    for ar in part.arrows:
        n, d = ar.forms[0]
        if G.contains(d):
            report.add(f"{tag}:map", _arrow_name(ar), False, "denominator vanishes modulo the ideal")
            continue
        # (1) alternative forms agree after cross-multiplication
        for n2, d2 in ar.forms[1:]:
            cross = n * d2 - n2 * d
            report.add(f"{tag}:identity", f"{ar.src}->{ar.dst}: ({n})/({d}) = ({n2})/({d2})",
                       G.contains(cross), "" if G.contains(cross) else f"{cross} not in ideal")
        # (2) well-definedness: n*g in d*T + I for every source generator g
        target = part.modules[ar.dst][0]
        key = (d, ar.dst)
        if key not in cache:
            cache[key] = buchberger(part.relations + [d * t for t in target], ring=part.ring)
        H = cache[key]
        bad = [str(g) for g in part.modules[ar.src][0] if not H.contains(n * g)]
        report.add(f"{tag}:map", _arrow_name(ar), not bad, f"images of {bad} leave {ar.dst}" if bad else "")
    # alternative module presentations are proportional generator lists
    for mname, pres in part.modules.items():
        first = pres[0]
        for alt in pres[1:]:
            ok = len(alt) == len(first) and all(
                G.contains(alt[k] * first[0] - alt[0] * first[k]) for k in range(len(first))
            )
            report.add(f"{tag}:module-iso", f"{mname}: {tuple(map(str, first))} ~ {tuple(map(str, alt))}", ok)
    for vname, loops in part.loops.items():
        report.add(f"{tag}:loops", f"{vname}: {', '.join(map(str, loops))}", vname in part.modules)


def verify_fixture(f: GoldenFixture) -> VerificationReport:
    """Identity, well-definedness and specialization checks for a fixture."""
    report = VerificationReport(f"golden fixture {f.name}" + (f" (lambda = {f.lam})" if f.lam is not None else ""))
    und, dfm = f.undeformed, f.deformed
    report.add("shape", f"{len(und.vertices)} vertices, {len(und.arrows)} arrows (undeformed)",
               len(und.vertices) == len(dfm.vertices) and len(und.arrows) == len(dfm.arrows))
    _verify_part(und, report, "undeformed")
    _verify_part(dfm, report, "deformed")
    # (3) specialization
    smap = {}
    for n in dfm.ring.names:
        target = f.specialization.get(n, n)
        if target not in und.ring.index:
            report.add("specialization", n, False, f"{target} is not an undeformed variable")
            return report
        smap[n] = und.ring.var(target)
    G0 = und.groebner()
    for rel, text in zip(dfm.relations, dfm.relation_text):
        img = substitute(rel, smap)
        report.add("specialization", f"relation {text} -> {img}", G0.contains(img))
    for mname, pres in dfm.modules.items():
        want = und.modules.get(mname)
        got = [substitute(g, smap) for g in pres[0]]
        ok = want is not None and sorted(map(str, got)) == sorted(map(str, want[0]))
        report.add("specialization", f"module {mname}", ok, "" if ok else f"{got} vs {want and want[0]}")
    for ar_d, ar_u in zip(dfm.arrows, und.arrows):
        same = (ar_d.src, ar_d.dst) == (ar_u.src, ar_u.dst)
        n, d = ar_d.forms[0]
        n0, d0 = ar_u.forms[0]
        ok = same and G0.contains(substitute(n, smap) * d0 - n0 * substitute(d, smap))
        report.add("specialization", f"arrow {_arrow_name(ar_d)}", ok)
    return report
