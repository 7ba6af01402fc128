"""Plain structured-text input formats.

All formats are line based; ``#`` starts a comment and blank lines are
ignored.  Scalar literals follow the exact-complex syntax ``a/b + c/d i``
(whitespace-insensitive, ``i`` alone means the imaginary unit).

Category files::

    objects: x y
    morphism g : x -> y
    compose: p q = r        # r is "p then q"
    orth: g g               # one pair per line
    orth-mode: generators   # generators (closure applied) | closed

Algebra files (one monoid; usable as a one-object functor)::

    mode: vec               # vec | set
    basis: E11 E12 E21 E22  # set mode uses "elements:"
    mul: E11 E12 = E12      # right side: combination; omitted products = 0
    unit: E11 + E22
    star: E12 -> E21        # basis image, antilinear extension implied

Combinations are ``+``/``-`` separated terms, each ``[coeff] name`` with an
optional leading scalar; complex coefficients with inner signs must be
parenthesized, e.g. ``(1/2+1/3i) g``.

Functor files: ``[object x]`` sections containing algebra lines, and
``[map g]`` sections with ``source-basis -> target-combination`` lines.

State files: ``omega: basis = scalar`` lines; missing basis names mean 0.
"""
from __future__ import annotations

import re
from pathlib import Path

from .cvec import ZERO, mat_identity, parse_scalar
from .fincat import OrthCategory, orthogonal_closure, validate_category, validate_orthogonality
from .gns import StatePresentation
from .staralg import FunctorToMon, MonoidPresentation


class ParseError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


def _lines(path):
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def load_category(path) -> OrthCategory:
    objects: list = []
    morphisms: dict = {}
    composition: dict = {}
    orth_pairs: list = []
    orth_mode = "generators"
    for lineno, line in _lines(path):
        if line.startswith("objects:"):
            objects.extend(line.split(":", 1)[1].split())
        elif line.startswith("morphism"):
            m = re.fullmatch(r"morphism\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)", line)
            if not m:
                raise ParseError(path, lineno, "expected 'morphism name : src -> tgt'")
            name, src, tgt = m.groups()
            morphisms[name] = (src, tgt)
        elif line.startswith("compose:"):
            m = re.fullmatch(r"compose:\s*(\S+)\s+(\S+)\s*=\s*(\S+)", line)
            if not m:
                raise ParseError(path, lineno, "expected 'compose: first then = result'")
            first, then, result = m.groups()
            composition[(first, then)] = result
        elif line.startswith("orth-mode:"):
            orth_mode = line.split(":", 1)[1].strip()
            if orth_mode not in ("generators", "closed"):
                raise ParseError(path, lineno, f"unknown orth-mode {orth_mode!r}")
        elif line.startswith("orth:"):
            parts = line.split(":", 1)[1].split()
            if len(parts) != 2:
                raise ParseError(path, lineno, "expected 'orth: f g'")
            orth_pairs.append(tuple(parts))
        else:
            raise ParseError(path, lineno, f"unrecognized line {line!r}")
    if not objects:
        raise ParseError(path, 0, "no objects declared")
    cat = validate_category(objects, morphisms, composition)
    if orth_mode == "generators":
        rel = orthogonal_closure(cat, orth_pairs)
    else:
        rel = validate_orthogonality(cat, orth_pairs)
    return cat.with_orth(rel)


def parse_combination(text: str, names, path="<combo>", lineno=0):
    """Coefficient vector of a +/- separated combination of basis names."""
    index = {n: i for i, n in enumerate(names)}
    coeffs = [ZERO for _ in names]
    body = text.strip()
    if body == "0":
        return tuple(coeffs)
    # split at top-level +/- (never inside parentheses)
    terms = []
    depth = 0
    current = ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and current.strip():
            terms.append(current)
            current = ch
        else:
            current += ch
    if current.strip():
        terms.append(current)
    for term in terms:
        term = term.strip()
        scale = parse_scalar("1")
        if term.startswith("+"):
            term = term[1:].strip()
        elif term.startswith("-"):
            scale = parse_scalar("-1")
            term = term[1:].strip()
        m = re.fullmatch(r"\((?P<paren>[^()]*)\)\s*\*?\s*(?P<name1>\S+)", term)
        if m:
            coeff = parse_scalar(m.group("paren")) * scale
            name = m.group("name1")
        else:
            parts = term.replace("*", " ").split()
            if len(parts) == 1:
                coeff, name = scale, parts[0]
            elif len(parts) == 2:
                coeff, name = parse_scalar(parts[0]) * scale, parts[1]
            else:
                raise ParseError(path, lineno, f"cannot parse term {term!r}")
        if name not in index:
            raise ParseError(path, lineno, f"unknown basis element {name!r}")
        coeffs[index[name]] = coeffs[index[name]] + coeff
    return tuple(coeffs)


def _build_monoid(name, fields, path):
    mode = fields.get("mode", "vec")
    if mode == "set":
        elements = tuple(fields["elements"])
        mul = {}
        for (a, b), rhs, lineno in fields["mul"]:
            rhs = rhs.strip()
            if rhs not in elements:
                raise ParseError(path, lineno, f"unknown element {rhs!r}")
            mul[(a, b)] = rhs
        for a in elements:
            for b in elements:
                if (a, b) not in mul:
                    raise ParseError(path, 0, f"missing product {a}.{b}")
        unit = fields.get("unit")
        if unit not in elements:
            raise ParseError(path, 0, f"unit {unit!r} is not an element")
        star = None
        if fields["star"]:
            star = {a: b.strip() for (a, b, _ln) in fields["star"]}
        return MonoidPresentation(
            name=name, elements=elements, mul=mul, unit=unit, star=star, mode="set"
        )
    basis = tuple(fields["elements"])
    dim = len(basis)
    idx = {b: i for i, b in enumerate(basis)}
    mul = {
        (i, j): tuple(ZERO for _ in basis) for i in range(dim) for j in range(dim)
    }
    for (a, b), rhs, lineno in fields["mul"]:
        if a not in idx or b not in idx:
            raise ParseError(path, lineno, f"unknown basis in product {a}.{b}")
        mul[(idx[a], idx[b])] = parse_combination(rhs, basis, path, lineno)
    unit_text = fields.get("unit")
    if unit_text is None:
        raise ParseError(path, 0, "missing unit")
    unit = parse_combination(unit_text, basis, path, 0)
    star = None
    if fields["star"]:
        columns = {a: parse_combination(b, basis, path, ln)
                   for (a, b, ln) in fields["star"]}
        missing = [b for b in basis if b not in columns]
        if missing:
            raise ParseError(path, 0, f"star images missing for {missing}")
        star = tuple(
            tuple(columns[basis[j]][r] for j in range(dim)) for r in range(dim)
        )
    return MonoidPresentation(
        name=name, elements=basis, mul=mul, unit=unit, star=star, mode="vec"
    )


def _collect_monoid_fields(path, lines):
    fields = {"mul": [], "star": []}
    for lineno, line in lines:
        if line.startswith("mode:"):
            fields["mode"] = line.split(":", 1)[1].strip()
        elif line.startswith("basis:") or line.startswith("elements:"):
            fields["elements"] = line.split(":", 1)[1].split()
        elif line.startswith("mul:"):
            m = re.fullmatch(r"mul:\s*(\S+)\s+(\S+)\s*=\s*(.+)", line)
            if not m:
                raise ParseError(path, lineno, "expected 'mul: a b = combination'")
            fields["mul"].append(((m.group(1), m.group(2)), m.group(3), lineno))
        elif line.startswith("unit:"):
            fields["unit"] = line.split(":", 1)[1].strip()
        elif line.startswith("star:"):
            m = re.fullmatch(r"star:\s*(\S+)\s*->\s*(.+)", line)
            if not m:
                raise ParseError(path, lineno, "expected 'star: a -> combination'")
            fields["star"].append((m.group(1), m.group(2), lineno))
        else:
            raise ParseError(path, lineno, f"unrecognized line {line!r}")
    if "elements" not in fields:
        raise ParseError(path, 0, "no basis/elements declared")
    return fields


def load_algebra(path) -> MonoidPresentation:
    fields = _collect_monoid_fields(path, _lines(path))
    return _build_monoid(Path(path).stem, fields, path)


def load_functor(path, cat: OrthCategory) -> FunctorToMon:
    """Functor file with [object x] and [map f] sections.

    A file without section headers is read as a single algebra and lifted
    to the unique object of a one-object category.
    """
    sections: list = []
    current = None
    plain = []
    for lineno, line in _lines(path):
        m = re.fullmatch(r"\[(object|map)\s+(\S+)\]", line)
        if m:
            current = (m.group(1), m.group(2), [])
            sections.append(current)
        elif current is None:
            plain.append((lineno, line))
        else:
            current[2].append((lineno, line))
    if not sections:
        if len(cat.objects) != 1:
            raise ParseError(path, 0, "sectionless functor file needs a one-object category")
        monoid = _build_monoid(Path(path).stem, _collect_monoid_fields(path, plain), path)
        (obj,) = cat.objects
        if monoid.mode == "set":
            ident = {e: e for e in monoid.elements}
        else:
            ident = mat_identity(monoid.dim)
        return FunctorToMon(monoids={obj: monoid}, maps={cat.identities[obj]: ident})
    if plain:
        raise ParseError(path, plain[0][0], "content before the first section")

    monoids: dict = {}
    map_sections: dict = {}
    for kind, label, body in sections:
        if kind == "object":
            if label not in cat.objects:
                raise ParseError(path, 0, f"unknown object {label!r}")
            monoids[label] = _build_monoid(
                label, _collect_monoid_fields(path, body), path
            )
        else:
            if label not in cat.morphisms:
                raise ParseError(path, 0, f"unknown morphism {label!r}")
            map_sections[label] = body
    for obj in cat.objects:
        if obj not in monoids:
            raise ParseError(path, 0, f"no [object {obj}] section")

    maps: dict = {}
    for obj in cat.objects:
        idn = cat.identities[obj]
        m = monoids[obj]
        maps[idn] = (
            {e: e for e in m.elements} if m.mode == "set" else mat_identity(m.dim)
        )
    for fname, body in map_sections.items():
        src, tgt = cat.morphisms[fname]
        ms, mt = monoids[src], monoids[tgt]
        if ms.mode == "set":
            table = {}
            for lineno, line in body:
                m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", line)
                if not m:
                    raise ParseError(path, lineno, "expected 'element -> element'")
                table[m.group(1)] = m.group(2)
            maps[fname] = table
        else:
            columns = {}
            for lineno, line in body:
                m = re.fullmatch(r"(\S+)\s*->\s*(.+)", line)
                if not m:
                    raise ParseError(path, lineno, "expected 'basis -> combination'")
                columns[m.group(1)] = parse_combination(
                    m.group(2), mt.elements, path, lineno
                )
            missing = [b for b in ms.elements if b not in columns]
            if missing:
                raise ParseError(path, 0, f"map {fname}: images missing for {missing}")
            maps[fname] = tuple(
                tuple(columns[ms.elements[j]][r] for j in range(ms.dim))
                for r in range(mt.dim)
            )
    for fname in cat.morphisms:
        if fname not in maps:
            raise ParseError(path, 0, f"no [map {fname}] section")
    return FunctorToMon(monoids=monoids, maps=maps)


def load_state(path, algebra: MonoidPresentation) -> StatePresentation:
    if algebra.mode != "vec":
        raise ParseError(path, 0, "states require a vector-mode algebra")
    idx = {b: i for i, b in enumerate(algebra.elements)}
    row = [ZERO for _ in algebra.elements]
    for lineno, line in _lines(path):
        m = re.fullmatch(r"omega:\s*(\S+)\s*=\s*(.+)", line)
        if not m:
            raise ParseError(path, lineno, "expected 'omega: basis = scalar'")
        name, value = m.groups()
        if name not in idx:
            raise ParseError(path, lineno, f"unknown basis element {name!r}")
        row[idx[name]] = parse_scalar(value)
    return StatePresentation(algebra, tuple(row))
