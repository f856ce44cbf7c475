"""Interchange format: algebras, bimodules, maps, and friends as JSON.

All scalars travel as exact rational strings ("3", "-1/2"); floats are
rejected.  One file can bundle an algebra, a bimodule over it, named
linear maps, named elements, and named subspaces, so a whole worked
instance fits in a single artifact.

Parse problems raise ParseError (structurally bad input); axiom
violations surface as ValidationError from the constructors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from .algebra import Algebra, Bimodule, LinearMap
from .extension import ModuleExtension, trivial_extension
from .linalg import Matrix, Subspace

FORMAT_VERSION = "1"


class ParseError(ValueError):
    """Malformed input file; carries the JSON path of the offender."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__("%s: %s" % (path, message))


def parse_rational(value, path: str = "") -> Fraction:
    if isinstance(value, bool):
        raise ParseError(path, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(path, "floats are not allowed; use rational strings")
    if isinstance(value, str):
        try:
            f = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(path, "bad rational %r (%s)" % (value, e))
        return f
    raise ParseError(path, "expected a rational, got %s" % type(value).__name__)


def format_rational(x: Fraction) -> str:
    return str(x)


def _parse_matrix(rows, cols, data, path: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(path, "expected %d rows" % rows)
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError("%s[%d]" % (path, i), "expected %d entries" % cols)
        out.append(
            [parse_rational(x, "%s[%d][%d]" % (path, i, j)) for j, x in enumerate(row)]
        )
    return Matrix(rows, cols, out)


def _parse_tensor(d1, d2, d3, data, path: str):
    if not isinstance(data, list) or len(data) != d1:
        raise ParseError(path, "expected %d slices" % d1)
    out = []
    for i, plane in enumerate(data):
        if not isinstance(plane, list) or len(plane) != d2:
            raise ParseError("%s[%d]" % (path, i), "expected %d rows" % d2)
        rows = []
        for j, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != d3:
                raise ParseError(
                    "%s[%d][%d]" % (path, i, j), "expected %d entries" % d3
                )
            rows.append(
                [
                    parse_rational(x, "%s[%d][%d][%d]" % (path, i, j, k))
                    for k, x in enumerate(row)
                ]
            )
        out.append(rows)
    return out


@dataclass
class MapEntry:
    name: str
    source: str  # "algebra" | "module" | "total"
    target: str
    matrix: Matrix


@dataclass
class ArtifactFile:
    """Parsed (but structurally validated only) contents of one file."""

    algebra: Algebra
    module: Optional[Bimodule] = None
    maps: Dict[str, MapEntry] = field(default_factory=dict)
    elements: Dict[str, list] = field(default_factory=dict)
    subspaces: Dict[str, Subspace] = field(default_factory=dict)

    _extension: Optional[ModuleExtension] = None

    def extension(self) -> ModuleExtension:
        if self.module is None:
            raise ParseError("module", "file declares no bimodule section")
        if self._extension is None:
            self._extension = trivial_extension(self.algebra, self.module)
        return self._extension

    def carrier(self, tag: str):
        if tag == "algebra":
            return self.algebra
        if tag == "module":
            if self.module is None:
                raise ParseError("maps", "map refers to a missing module section")
            return self.module
        if tag == "total":
            return self.extension().total
        raise ParseError("maps", "unknown carrier %r" % tag)

    def linear_map(self, name: str) -> LinearMap:
        if name not in self.maps:
            raise ParseError("maps", "no map named %r in file" % name)
        entry = self.maps[name]
        return LinearMap(
            self.carrier(entry.source), self.carrier(entry.target), entry.matrix
        )


def _carrier_dim(doc_dim, tag, algebra_dim, module_dim, path):
    if tag == "algebra":
        return algebra_dim
    if tag == "module":
        if module_dim is None:
            raise ParseError(path, "map refers to a missing module section")
        return module_dim
    if tag == "total":
        if module_dim is None:
            raise ParseError(path, "map refers to a missing module section")
        return algebra_dim + module_dim
    raise ParseError(path, "unknown carrier %r" % tag)


def parse_document(doc) -> ArtifactFile:
    if not isinstance(doc, dict):
        raise ParseError("$", "top level must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError("format_version", "unsupported version %r" % version)
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("dim", "must be a nonnegative integer")
    names = doc.get("basis_names")
    if names is not None and (
        not isinstance(names, list) or len(names) != dim
    ):
        raise ParseError("basis_names", "must list %d names" % dim)
    mul = _parse_tensor(dim, dim, dim, doc.get("mul"), "mul")
    algebra = Algebra(mul, basis_names=names)

    module = None
    module_dim = None
    if "module" in doc:
        sec = doc["module"]
        if not isinstance(sec, dict):
            raise ParseError("module", "must be an object")
        module_dim = sec.get("dim")
        if not isinstance(module_dim, int) or module_dim < 0:
            raise ParseError("module.dim", "must be a nonnegative integer")
        mnames = sec.get("basis_names")
        if mnames is not None and (
            not isinstance(mnames, list) or len(mnames) != module_dim
        ):
            raise ParseError("module.basis_names", "must list %d names" % module_dim)
        left = _parse_tensor(dim, module_dim, module_dim, sec.get("left"), "module.left")
        right = _parse_tensor(module_dim, dim, module_dim, sec.get("right"), "module.right")
        module = Bimodule(algebra, left, right, basis_names=mnames)

    out = ArtifactFile(algebra=algebra, module=module)

    for i, entry in enumerate(doc.get("maps", [])):
        path = "maps[%d]" % i
        if not isinstance(entry, dict) or "name" not in entry:
            raise ParseError(path, "map entries need a name")
        src = entry.get("source", "algebra")
        tgt = entry.get("target", "algebra")
        rows = _carrier_dim(doc, tgt, dim, module_dim, path)
        cols = _carrier_dim(doc, src, dim, module_dim, path)
        matrix = _parse_matrix(rows, cols, entry.get("matrix"), path + ".matrix")
        out.maps[entry["name"]] = MapEntry(entry["name"], src, tgt, matrix)

    for i, entry in enumerate(doc.get("elements", [])):
        path = "elements[%d]" % i
        if not isinstance(entry, dict) or "name" not in entry:
            raise ParseError(path, "element entries need a name")
        carrier = entry.get("carrier", "algebra")
        d = _carrier_dim(doc, carrier, dim, module_dim, path)
        coords = entry.get("coords")
        if not isinstance(coords, list) or len(coords) != d:
            raise ParseError(path + ".coords", "expected %d coordinates" % d)
        out.elements[entry["name"]] = [
            parse_rational(x, "%s.coords[%d]" % (path, j)) for j, x in enumerate(coords)
        ]

    for i, entry in enumerate(doc.get("subspaces", [])):
        path = "subspaces[%d]" % i
        if not isinstance(entry, dict) or "name" not in entry:
            raise ParseError(path, "subspace entries need a name")
        vectors = entry.get("vectors")
        if not isinstance(vectors, list):
            raise ParseError(path + ".vectors", "expected a list of vectors")
        parsed = []
        for j, v in enumerate(vectors):
            if not isinstance(v, list) or len(v) != dim:
                raise ParseError(
                    "%s.vectors[%d]" % (path, j), "expected %d coordinates" % dim
                )
            parsed.append(
                [
                    parse_rational(x, "%s.vectors[%d][%d]" % (path, j, k))
                    for k, x in enumerate(v)
                ]
            )
        out.subspaces[entry["name"]] = Subspace.from_vectors(dim, parsed)

    return out


def load_file(path: str) -> ArtifactFile:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError("$", "invalid JSON: %s" % e)
    return parse_document(doc)


def matrix_to_lists(m: Matrix):
    return [[format_rational(x) for x in row] for row in m.data]


def tensor_to_lists(t):
    return [[[format_rational(x) for x in row] for row in plane] for plane in t]


def algebra_to_document(
    algebra: Algebra,
    module: Optional[Bimodule] = None,
    maps=(),
    elements=(),
    subspaces=(),
) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "dim": algebra.dim,
        "basis_names": list(algebra.basis_names),
        "mul": tensor_to_lists(algebra.mul_tensor),
    }
    if module is not None:
        doc["module"] = {
            "dim": module.dim,
            "basis_names": list(module.basis_names),
            "left": tensor_to_lists(module.left),
            "right": tensor_to_lists(module.right),
        }
    if maps:
        doc["maps"] = [
            {
                "name": name,
                "source": source,
                "target": target,
                "matrix": matrix_to_lists(matrix),
            }
            for (name, source, target, matrix) in maps
        ]
    if elements:
        doc["elements"] = [
            {
                "name": name,
                "carrier": carrier,
                "coords": [format_rational(x) for x in coords],
            }
            for (name, carrier, coords) in elements
        ]
    if subspaces:
        doc["subspaces"] = [
            {"name": name, "vectors": [[format_rational(x) for x in v] for v in sub.basis]}
            for (name, sub) in subspaces
        ]
    return doc


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def save_file(path: str, doc: dict):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_document(doc))
