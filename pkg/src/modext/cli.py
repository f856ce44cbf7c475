"""Command-line interface.

Five subcommands over the JSON interchange format:

  validate    check the algebra / bimodule axioms of a file
  der         derivation space, inner derivations, H1
  decompose   block decomposition and innerness of a map on T(A,U)
  construct   the four derivation-building recipes
  analyze     center, radical, simplicity, annihilator, norm constant

Exit codes: 0 success, 1 axiom or hypothesis failure, 2 input error.
Output is deterministic: identical inputs and seed give identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import io as fileio
from .algebra import ValidationError, annihilator, unit_element
from .analysis import (
    center,
    is_idempotent,
    is_simple_prime,
    min_poly,
    radical,
)
from .blocks import blocks_of, check_block_conditions, inner_witness, split_d1_d2
from .constructions import corner_tau, lift, quotient_derivation, transport
from .derivations import derivation_space, inner_space, is_derivation
from .extension import submultiplicativity_constant
from .linalg import is_zero_vec
from .reports import ConditionReport, HypothesisError


def _fmt(x) -> str:
    return str(Fraction(x))


def _fmt_vec(v) -> str:
    return "[" + ", ".join(_fmt(x) for x in v) + "]"


def _fmt_matrix(m) -> list:
    return [_fmt_vec(row) for row in m.data]


def _witness_json(w):
    if w is None:
        return None
    idx, lhs, rhs = w
    def side(s):
        if s is None:
            return None
        return [_fmt(x) for x in s]
    return {"indices": list(idx), "lhs": side(lhs), "rhs": side(rhs)}


def _report_json(rep: ConditionReport):
    return {
        "title": rep.title,
        "passed": rep.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "witness": _witness_json(c.witness),
                "note": c.note,
                "informational": c.informational,
            }
            for c in rep.checks
        ],
    }


class Output:
    """Accumulates an ordered result tree; renders text or JSON."""

    def __init__(self):
        self.doc = {}

    def put(self, key, value):
        self.doc[key] = value

    def report(self, key, rep: ConditionReport):
        self.doc[key] = _report_json(rep)

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.doc, indent=2) + "\n"
        lines = []
        self._render_value(lines, self.doc, 0)
        return "\n".join(lines) + "\n"

    def _render_value(self, lines, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            for k, v in value.items():
                if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                    lines.append("%s%s:" % (pad, k))
                    self._render_value(lines, v, depth + 1)
                else:
                    lines.append("%s%s: %s" % (pad, k, _flat(v)))
        elif isinstance(value, list):
            for v in value:
                if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                    lines.append("%s-" % pad)
                    self._render_value(lines, v, depth + 1)
                else:
                    lines.append("%s- %s" % (pad, _flat(v)))
        else:
            lines.append("%s%s" % (pad, _flat(value)))


def _is_flat_list(v):
    return isinstance(v, list) and all(
        not isinstance(x, (dict, list)) for x in v
    )


def _flat(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(v)
    return str(v)


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _start(args, command: str) -> Output:
    out = Output()
    out.put("command", command)
    out.put("input", os.path.basename(args.file))
    out.put("input_digest", _digest(args.file))
    return out


def cmd_validate(args) -> int:
    out = _start(args, "validate")
    art = fileio.load_file(args.file)  # constructors enforce the axioms
    n = art.algebra.dim
    out.put("algebra_dim", n)
    out.put(
        "associativity", "%d/%d identities hold" % (n**3, n**3)
    )
    if art.module is not None:
        out.report("bimodule_axioms", art.module.axiom_report())
    out.put("valid", True)
    sys.stdout.write(out.render(args.json))
    return 0


def cmd_der(args) -> int:
    out = _start(args, "der")
    art = fileio.load_file(args.file)
    a = art.algebra
    if args.module == "file":
        if art.module is None:
            raise fileio.ParseError("module", "file declares no bimodule section")
        u = art.module
        out.put("module", "file bimodule (dim %d)" % u.dim)
    else:
        u = a.self_bimodule()
        out.put("module", "A as a bimodule over itself")
    der = derivation_space(a, u)
    out.put("dim Der", der.dim)
    out.put("der_basis", [_fmt_matrix(d.matrix) for d in der.basis])
    if args.inner or args.h1:
        inn = inner_space(a, u)
        out.put("dim Inn", inn.dim)
        if args.inner:
            out.put("inner_basis", [_fmt_vec(v) for v in inn.basis])
    if args.h1:
        out.put("H1", der.dim - inn.dim)
    sys.stdout.write(out.render(args.json))
    return 0


def cmd_decompose(args) -> int:
    out = _start(args, "decompose")
    art = fileio.load_file(args.file)
    t = art.extension()
    d = art.linear_map(args.map)
    if d.matrix.rows != t.total.dim or d.matrix.cols != t.total.dim:
        raise fileio.ParseError("maps", "map %r is not a square map on T(A,U)" % args.map)
    b = blocks_of(t, d)
    out.put("blocks", {
        "delta1": _fmt_matrix(b.delta1.matrix),
        "tau1": _fmt_matrix(b.tau1.matrix),
        "delta2": _fmt_matrix(b.delta2.matrix),
        "tau2": _fmt_matrix(b.tau2.matrix),
    })
    rep = check_block_conditions(t, b)
    out.report("block_conditions", rep)
    der = is_derivation(t.total, t.total.self_bimodule(), d)
    out.put("is_derivation", der.passed)
    if der.passed:
        d1, d2 = split_d1_d2(t, d)
        out.put("split", {
            "D1": _fmt_matrix(d1.matrix),
            "D2": _fmt_matrix(d2.matrix),
        })
        witness = inner_witness(t, d)
        if witness is None:
            out.put("inner", "not inner")
        else:
            bb, vv = witness
            out.put("inner", {
                "b": _fmt_vec(bb.coords),
                "v": _fmt_vec(vv.coords),
            })
    sys.stdout.write(out.render(args.json))
    return 0


def _write_result(args, out: Output, result) -> None:
    out.put("recipe", result.recipe)
    out.put("extension", {
        "base_dim": result.extension.base_dim,
        "module_dim": result.extension.module_dim,
        "total_dim": result.extension.total.dim,
    })
    out.put("derivation", _fmt_matrix(result.derivation.matrix))
    out.report("verification", result.verification)
    if args.out:
        t = result.extension
        doc = fileio.algebra_to_document(
            t.base,
            module=t.module,
            maps=[("D", "total", "total", result.derivation.matrix)],
        )
        fileio.save_file(args.out, doc)
        out.put("written", os.path.basename(args.out))


def cmd_construct(args) -> int:
    out = _start(args, "construct")
    art = fileio.load_file(args.file)
    a = art.algebra
    if args.recipe == "lift":
        t = art.extension()
        delta = art.linear_map(args.delta)
        result = lift(t, delta)
    elif args.recipe == "transport":
        t = art.extension()
        result = transport(
            t,
            art.linear_map(args.delta),
            art.linear_map(args.phi),
            art.linear_map(args.psi),
        )
    elif args.recipe == "quotient":
        if args.ideal not in art.subspaces:
            raise fileio.ParseError("subspaces", "no subspace named %r" % args.ideal)
        result = quotient_derivation(
            a, art.subspaces[args.ideal], art.linear_map(args.delta)
        )
    else:  # corner
        if args.idempotent not in art.elements:
            raise fileio.ParseError("elements", "no element named %r" % args.idempotent)
        result = corner_tau(
            a, art.elements[args.idempotent], art.linear_map(args.delta)
        )
    _write_result(args, out, result)
    sys.stdout.write(out.render(args.json))
    return 0


def cmd_analyze(args) -> int:
    out = _start(args, "analyze")
    art = fileio.load_file(args.file)
    a = art.algebra
    if args.center:
        z = center(a)
        out.put("center", {
            "dim": z.dim,
            "basis": [_fmt_vec(v) for v in z.basis],
        })
    if args.radical:
        rep = radical(a)
        out.put("radical", {
            "dim": rep.radical.dim,
            "basis": [_fmt_vec(v) for v in rep.radical.basis],
            "semisimple": rep.is_semisimple,
            "note": rep.note,
        })
    if args.unit:
        e = unit_element(a)
        out.put("unit", None if e is None else _fmt_vec(e.coords))
    if args.simple:
        rep = is_simple_prime(a, seed=args.seed)
        out.put("simple", {
            "simple": rep.simple,
            "prime": rep.prime,
            "evidence": rep.evidence,
        })
    if args.annihilator:
        if art.module is None:
            raise fileio.ParseError("module", "file declares no bimodule section")
        ann = annihilator(a, art.module)
        out.put("annihilator", {
            "dim": ann.dim,
            "basis": [_fmt_vec(v) for v in ann.basis],
        })
    if args.idempotent is not None:
        if args.idempotent not in art.elements:
            raise fileio.ParseError("elements", "no element named %r" % args.idempotent)
        coords = art.elements[args.idempotent]
        out.put("idempotent", {
            "name": args.idempotent,
            "idempotent": is_idempotent(a, coords),
            "nontrivial": not is_zero_vec(coords),
            "min_poly": str(min_poly(a, coords)),
        })
    if args.submult:
        out.put("submultiplicativity_constant", _fmt(submultiplicativity_constant(a)))
    sys.stdout.write(out.render(args.json))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modext",
        description="Exact toolkit for module-extension algebras and their derivations.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("file", help="input JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("validate", help="check algebra / bimodule axioms")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("der", help="derivation space, inner derivations, H1")
    common(p)
    p.add_argument("--module", choices=["self", "file"], default="self")
    p.add_argument("--inner", action="store_true")
    p.add_argument("--h1", action="store_true")
    p.set_defaults(func=cmd_der)

    p = sub.add_parser("decompose", help="block decomposition of a map on T(A,U)")
    common(p)
    p.add_argument("--map", required=True, help="name of the map in the file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="build a verified derivation")
    p.add_argument("recipe", choices=["lift", "transport", "quotient", "corner"])
    common(p)
    p.add_argument("--delta", default="delta", help="name of the derivation map")
    p.add_argument("--phi", default="phi")
    p.add_argument("--psi", default="psi")
    p.add_argument("--ideal", default="I", help="name of the ideal subspace")
    p.add_argument("--idempotent", default="p", help="name of the idempotent element")
    p.add_argument("--out", help="write the resulting T(A,U) and D to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="structural invariants and predicates")
    common(p)
    p.add_argument("--center", action="store_true")
    p.add_argument("--radical", action="store_true")
    p.add_argument("--unit", action="store_true")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--annihilator", action="store_true")
    p.add_argument("--idempotent", metavar="NAME")
    p.add_argument("--submult", action="store_true")
    p.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("MODEXT_SEED", "0")),
        help="seed for the randomized simplicity probe",
    )
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except fileio.ParseError as e:
        sys.stderr.write("input error: %s\n" % e)
        return 2
    except FileNotFoundError as e:
        sys.stderr.write("input error: %s\n" % e)
        return 2
    except ValidationError as e:
        sys.stderr.write("axiom violation: %s\n" % e)
        sys.stderr.write(e.report.summary() + "\n")
        return 1
    except HypothesisError as e:
        sys.stderr.write("hypothesis failure: %s\n" % e)
        if e.report is not None:
            sys.stderr.write(e.report.summary() + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
