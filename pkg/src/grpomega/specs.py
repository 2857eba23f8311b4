"""The group-spec mini-language and catalog files.

A spec string names a group by constructor recipe, e.g. "cyclic:12",
"dirprod(cyclic:11,alt:5)", "semidirect(3,4,2)".  Catalogs are JSON files
listing (name, spec) entries of one order, optionally flagged complete when
they cover every isomorphism type of that order.

Grammar (whitespace insensitive, integers decimal):

    spec := atom | "dirprod(" spec "," spec ")" | "semidirect(" int "," int "," int ")"
    atom := ("cyclic" | "dihedral" | "sym" | "alt" | "psl2") ":" int
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, List, Tuple, Union

from . import groups
from .groups import FiniteGroup
from .stats import order_spectrum, validate_spectrum


class ParseError(ValueError):
    """Malformed spec string; carries the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class CyclicSpec:
    n: int

    def render(self) -> str:
        return f"cyclic:{self.n}"


@dataclass(frozen=True)
class DihedralSpec:
    order: int

    def render(self) -> str:
        return f"dihedral:{self.order}"


@dataclass(frozen=True)
class SymSpec:
    n: int

    def render(self) -> str:
        return f"sym:{self.n}"


@dataclass(frozen=True)
class AltSpec:
    n: int

    def render(self) -> str:
        return f"alt:{self.n}"


@dataclass(frozen=True)
class Psl2Spec:
    p: int

    def render(self) -> str:
        return f"psl2:{self.p}"


@dataclass(frozen=True)
class DirProdSpec:
    left: "GroupSpecAst"
    right: "GroupSpecAst"

    def render(self) -> str:
        return f"dirprod({self.left.render()},{self.right.render()})"


@dataclass(frozen=True)
class SemidirectSpec:
    n: int
    m: int
    k: int

    def render(self) -> str:
        return f"semidirect({self.n},{self.m},{self.k})"


GroupSpecAst = Union[
    CyclicSpec, DihedralSpec, SymSpec, AltSpec, Psl2Spec, DirProdSpec, SemidirectSpec
]

_ATOMS = {
    "cyclic": CyclicSpec,
    "dihedral": DihedralSpec,
    "sym": SymSpec,
    "alt": AltSpec,
    "psl2": Psl2Spec,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}, found {self.peek()!r}")
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos].isalpha():
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
        if self.pos == start:
            raise self.error("expected a constructor name")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def spec(self) -> GroupSpecAst:
        name = self.word()
        if name == "dirprod":
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return DirProdSpec(left, right)
        if name == "semidirect":
            self.expect("(")
            n = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return SemidirectSpec(n, m, k)
        if name in _ATOMS:
            self.expect(":")
            return _ATOMS[name](self.integer())
        raise self.error(f"unknown constructor {name!r}")


def _normalize(ast: GroupSpecAst) -> GroupSpecAst:
    """Right-nest direct products; the canonical shape."""
    if isinstance(ast, DirProdSpec):
        left = _normalize(ast.left)
        right = _normalize(ast.right)
        if isinstance(left, DirProdSpec):
            return _normalize(DirProdSpec(left.left, DirProdSpec(left.right, right)))
        return DirProdSpec(left, right)
    return ast


def parse_spec(text: str) -> GroupSpecAst:
    """Parse a spec string to its canonical AST.

    Syntax errors carry byte offsets; semantic errors (e.g. psl2 of a
    non-prime) surface at construction time.
    """
    parser = _Parser(text)
    ast = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input after spec")
    return _normalize(ast)


def render(ast: GroupSpecAst) -> str:
    return ast.render()


def canonical(text: str) -> str:
    return parse_spec(text).render()


@lru_cache(maxsize=256)
def _build_canonical(spec_string: str) -> FiniteGroup:
    ast = parse_spec(spec_string)
    if isinstance(ast, CyclicSpec):
        return groups.construct_cyclic(ast.n)
    if isinstance(ast, DihedralSpec):
        return groups.construct_dihedral(ast.order)
    if isinstance(ast, SymSpec):
        return groups.construct_symmetric(ast.n)
    if isinstance(ast, AltSpec):
        return groups.construct_alternating(ast.n)
    if isinstance(ast, Psl2Spec):
        return groups.construct_psl2(ast.p)
    if isinstance(ast, SemidirectSpec):
        return groups.semidirect_product(ast.n, ast.m, ast.k)
    if isinstance(ast, DirProdSpec):
        return groups.direct_product(
            _build_canonical(ast.left.render()), _build_canonical(ast.right.render())
        )
    raise TypeError(f"unhandled spec node {ast!r}")


def build_group(spec: Union[str, GroupSpecAst]) -> FiniteGroup:
    """Construct the group a spec names; constructions are cached."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return _build_canonical(spec.render())


# Isomorphism-type counts for the orders we ship complete catalogs for.
KNOWN_TYPE_COUNTS: Dict[int, int] = {1: 1, 2: 1, 3: 1, 4: 2, 6: 2, 8: 5, 12: 5, 60: 13}

Fingerprint = Tuple[Tuple[Tuple[int, int], ...], bool, int]  # spectrum, abelian, |center|


class CatalogError(ValueError):
    """Catalog file missing, malformed, or inconsistent with its groups."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: str
    fingerprint: Fingerprint

    def build(self) -> FiniteGroup:
        return build_group(self.spec)


@dataclass(frozen=True)
class Catalog:
    order: int
    complete: bool
    entries: Tuple[CatalogEntry, ...]
    warnings: Tuple[str, ...] = field(default=())

    def groups(self) -> List[FiniteGroup]:
        return [entry.build() for entry in self.entries]

    def entry(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(f"no catalog entry named {name!r}")


def _fingerprint(G: FiniteGroup) -> Fingerprint:
    spectrum = order_spectrum(G)
    validate_spectrum(spectrum, G.order)
    return (spectrum.counts, G.is_abelian(), len(G.center()))


def load_catalog(path: Union[str, Path]) -> Catalog:
    """Load and validate a catalog file.

    Every entry is constructed and checked against the catalog's order; a
    complete catalog must match the known isomorphism-type count and have
    pairwise distinct fingerprints (collisions demote to warnings since the
    fingerprint is not a full isomorphism test).
    """
    path = Path(path)
    if not path.is_file():
        raise CatalogError(f"catalog file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {path} is not valid JSON: {exc}") from exc
    for key in ("order", "complete", "entries"):
        if key not in raw:
            raise CatalogError(f"catalog {path} lacks required key {key!r}")
    order = raw["order"]
    complete = raw["complete"]
    if not isinstance(order, int) or order < 1:
        raise CatalogError(f"catalog order must be a positive integer, got {order!r}")
    if not isinstance(complete, bool):
        raise CatalogError(f"catalog complete flag must be boolean, got {complete!r}")

    entries: List[CatalogEntry] = []
    names = set()
    warnings: List[str] = []
    for i, item in enumerate(raw["entries"]):
        if not isinstance(item, dict) or "name" not in item or "spec" not in item:
            raise CatalogError(f"entry {i} must be an object with 'name' and 'spec'")
        name, spec = item["name"], item["spec"]
        if name in names:
            raise CatalogError(f"duplicate entry name {name!r}")
        names.add(name)
        try:
            G = build_group(spec)
        except (ParseError, groups.GroupConstructionError, groups.GroupSizeError) as exc:
            raise CatalogError(f"entry {name!r}: {exc}") from exc
        if G.order != order:
            raise CatalogError(f"entry {name!r} constructs order {G.order}, catalog says {order}")
        entries.append(CatalogEntry(name, canonical(spec), _fingerprint(G)))

    if complete:
        declared = KNOWN_TYPE_COUNTS.get(order)
        if declared is None:
            raise CatalogError(
                f"catalog claims completeness but no isomorphism-type count is known for order {order}"
            )
        if len(entries) != declared:
            raise CatalogError(
                f"complete catalog for order {order} must have {declared} entries, found {len(entries)}"
            )
    seen: Dict[Fingerprint, str] = {}
    for entry in entries:
        if entry.fingerprint in seen:
            warnings.append(
                f"entries {seen[entry.fingerprint]!r} and {entry.name!r} share a fingerprint"
            )
        else:
            seen[entry.fingerprint] = entry.name
    return Catalog(order, complete, tuple(entries), tuple(warnings))


PACKAGED_CATALOGS = ("order12", "order60", "order660", "order1092")


def packaged_catalog_path(name: str) -> Path:
    """Filesystem path of one of the catalogs shipped with the package."""
    if name not in PACKAGED_CATALOGS:
        raise KeyError(f"no packaged catalog {name!r}; have {PACKAGED_CATALOGS}")
    return Path(resources.files("grpomega").joinpath("catalogs", f"{name}.json"))
