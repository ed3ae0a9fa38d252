"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad syntax, degree guard,
mismatched spaces), 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import difflib
import json
import sys
from contextlib import nullcontext
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import hopfmaps, qsym, ssym
from ._config import max_degree
from .errors import PermhopfError
from .formal import Element, Tensor, antipode, coproduct, verify_hopf_axioms
from .orders import as_composition, boolean_mobius, parse_composition, weak_mobius, z_of
from .permcore import (
    DescentSet,
    Permutation,
    descents,
    format_descent_set,
    format_permutation,
    global_descents,
    grassmannians,
    parse_descent_set,
    parse_permutation,
    rho,
    standardize,
)
from .syntax import element_from_json, element_to_json, parse_element, tensor_from_json, tensor_to_json


class VerificationFailure(Exception):
    pass


# --------------------------------------------------------------------------
# values and their renderings


@dataclass(frozen=True)
class Value:
    """A command result: ``kind`` is one of element, tensor, int, bool, perms, subsets, text."""

    kind: str
    data: object


def _render_text(v: Value) -> str:
    if v.kind in ("element", "tensor"):
        return str(v.data)
    if v.kind == "bool":
        return "true" if v.data else "false"
    if v.kind == "int":
        return str(v.data)
    if v.kind == "perms":
        return "{" + ", ".join(format_permutation(u) for u in v.data) + "}"
    if v.kind == "subsets":
        return "{" + ", ".join(format_descent_set(S) for S in v.data) + "}"
    return str(v.data)


def _to_json(v: Value):
    if v.kind == "element":
        return element_to_json(v.data)
    if v.kind == "tensor":
        return tensor_to_json(v.data)
    if v.kind == "perms":
        return [list(u) for u in v.data]
    if v.kind == "subsets":
        return [{"members": list(S.members), "n": S.n} for S in v.data]
    return v.data


def _from_json(kind, raw) -> Value:
    if kind == "element":
        return Value(kind, element_from_json(raw))
    if kind == "tensor":
        return Value(kind, tensor_from_json(raw))
    if kind == "perms":
        return Value(kind, tuple(Permutation(u) for u in raw))
    if kind == "subsets":
        return Value(kind, tuple(DescentSet(tuple(s["members"]), s["n"]) for s in raw))
    return Value(kind, raw)


def _wrap(x) -> Value:
    if isinstance(x, Element):
        return Value("element", x)
    if isinstance(x, Tensor):
        return Value("tensor", x)
    if isinstance(x, bool):
        return Value("bool", x)
    if isinstance(x, int):
        return Value("int", x)
    return Value("text", str(x))


# --------------------------------------------------------------------------
# worked examples


def worked_examples() -> list:
    """``(label, Value)`` pairs for every worked example, in a fixed order."""
    P = parse_permutation
    out = []

    def add(label, value):
        out.append((label, value if isinstance(value, Value) else _wrap(value)))

    add("st(625)", Value("perms", (standardize((6, 2, 5)),)))
    add("Des(46512837)", Value("subsets", (descents(P("46512837")),)))
    add("GDes(3412)", Value("subsets", (global_descents(P("3412")),)))
    add("Sh(2,2)", Value("perms", grassmannians(2, 2)))
    add("rho_1324(12,21)", Value("perms", (rho(P("1324"), P("12"), P("21")),)))
    add("mu(4123,4132)", weak_mobius(P("4123"), P("4132")))
    add("mu(4123,4231)", weak_mobius(P("4123"), P("4231")))
    add("mu(4123,4321)", weak_mobius(P("4123"), P("4321")))
    for text in ("{}@3", "{1}@3", "{2}@3", "{1,2}@3"):
        add(f"Z({text})", Value("perms", (z_of(parse_descent_set(text)),)))
    add("Mq[(2)]*Mq[(1,1)]", qsym.M((2,)) * qsym.M((1, 1)))
    add("Delta(Mq[(2,1)])", coproduct(qsym.M((2, 1))))
    add("F[12]*F[312]", ssym.F(P("12")) * ssym.F(P("312")))
    add("Delta(F[42531])", coproduct(ssym.F(P("42531"))))
    add("M[4123] in F", ssym.m_from_f(P("4123")))
    add("M[12]*M[21]", ssym.M(P("12")) * ssym.M(P("21")))
    add("alpha(12,21;2431)", Value("perms", ssym.alpha_set(P("12"), P("21"), P("2431"))))
    add("S(F[231])", ssym.antipode(ssym.F(P("231"))))
    add("lambda(231,312) witnesses", Value("subsets", ssym.lambda_coefficient(P("231"), P("312")).witnesses))
    add("S(M[3412])", ssym.antipode(ssym.M(P("3412"))))
    add("kappa(3412,3412) witnesses", Value("perms", ssym.kappa_set(P("3412"), P("3412")).witnesses))
    for m in range(1, 6):
        add(f"S^{2 * m}(M[231])", ssym.antipode_power(ssym.M(P("231")), 2 * m))
    add("closed(3412)", hopfmaps.is_closed(P("3412")))
    add("primitives(3)", Value("perms", hopfmaps.primitive_basis(3)))
    add("#primitives(4)", len(hopfmaps.primitive_basis(4)))
    add("primitives(4)", Value("perms", hopfmaps.primitive_basis(4)))
    return out


def render_report(entries) -> str:
    return "".join(f"{label}: {_render_text(v)}\n" for label, v in entries)


def report_to_json(entries) -> str:
    body = [{"label": label, "kind": v.kind, "value": _to_json(v)} for label, v in entries]
    return json.dumps({"examples": body}, indent=1, ensure_ascii=False) + "\n"


def report_from_json(text: str) -> list:
    return [(e["label"], _from_json(e["kind"], e["value"])) for e in json.loads(text)["examples"]]


def golden_text() -> str:
    return resources.files("permhopf").joinpath("paper_examples/golden.txt").read_text(encoding="utf-8")


# --------------------------------------------------------------------------
# commands


def _element(text) -> Element:
    return parse_element(text)


def _perm(text) -> Permutation:
    return parse_permutation(text)


def _qsym_index(text):
    text = text.strip()
    return as_composition(parse_descent_set(text)) if text.startswith("{") else parse_composition(text)


def _same_space(x, y):
    if x.space != y.space:
        raise PermhopfError(f"operands live in {x.space} and {y.space}")


def cmd_product(a):
    x, y = _element(a.x), _element(a.y)
    _same_space(x, y)
    return _wrap(x * y)


def cmd_coproduct(a):
    return _wrap(coproduct(_element(a.x)))


def _antipode(x):
    return ssym.antipode(x) if x.space.algebra == "SSym" else antipode(x)


def cmd_antipode(a):
    return _wrap(_antipode(_element(a.x)))


def cmd_antipode_power(a):
    x = _element(a.x)
    if a.k < 0:
        raise PermhopfError("-k must be non-negative")
    for _ in range(a.k):
        x = _antipode(x)
    return _wrap(x)


def cmd_convert(a):
    x = _element(a.x)
    if x.space.algebra == "SSym":
        return _wrap(ssym.to_basis(x, a.to))
    return _wrap(qsym.to_qsym_f(x) if a.to == "F" else qsym.to_qsym_m(x))


def cmd_descent_map(a):
    return _wrap(hopfmaps.descent_map(_element(a.x), cross_check=a.check))


def cmd_split_z(a):
    return _wrap(hopfmaps.splitting_z(_element(a.x)))


def cmd_mobius(a):
    if a.order == "weak":
        return _wrap(weak_mobius(_perm(a.lower), _perm(a.upper)))
    return _wrap(boolean_mobius(_qsym_index(a.lower), _qsym_index(a.upper)))


def cmd_alpha(a):
    found = ssym.alpha_set(_perm(a.u), _perm(a.v), _perm(a.w))
    return _with_witnesses(len(found), Value("perms", found), a.witnesses)


def cmd_kappa(a):
    c = ssym.kappa_set(_perm(a.v), _perm(a.w))
    return _with_witnesses(c.coefficient, Value("perms", c.witnesses), a.witnesses)


def cmd_lambda(a):
    c = ssym.lambda_coefficient(_perm(a.v), _perm(a.w))
    return _with_witnesses(c.coefficient, Value("subsets", c.witnesses), a.witnesses)


def _with_witnesses(count, witnesses, show):
    if not show:
        return _wrap(count)
    return Value("witnessed", (count, witnesses))


def cmd_primitives(a):
    return Value("perms", hopfmaps.primitive_basis(a.n))


def cmd_coradical_level(a):
    report = hopfmaps.coradical_level(_element(a.x))
    return Value("level", report)


def cmd_kernel_basis(a):
    return Value("perms", hopfmaps.kernel_basis(a.n))


def cmd_kernel_test(a):
    return _wrap(hopfmaps.kernel_member(_element(a.x)))


def cmd_sigma(a):
    return _wrap(hopfmaps.cocycle_sigma(_qsym_index(a.s), _qsym_index(a.t)))


def cmd_verify(a):
    algebras = ("QSym", "SSym") if a.algebra == "both" else (a.algebra,)
    lines = []
    ok = True
    for name in algebras:
        report = verify_hopf_axioms(name, a.degree)
        ok &= report.ok
        lines.append(f"{name} through degree {a.degree}:")
        lines.extend("  " + line for line in report.summary().splitlines())
    v = Value("text", "\n".join(lines))
    if not ok:
        raise VerificationFailure(v)
    return v


def cmd_worked_examples(a):
    entries = worked_examples()
    if a.json:
        return Value("raw", report_to_json(entries))
    text = render_report(entries)
    golden = Path(a.golden).read_text(encoding="utf-8") if a.golden else golden_text()
    if text != golden:
        diff = "".join(difflib.unified_diff(golden.splitlines(True), text.splitlines(True), "golden", "computed"))
        raise VerificationFailure(Value("raw", text + "\n" + diff))
    return Value("raw", text)


# --------------------------------------------------------------------------
# output


def _emit(v: Value, as_json: bool, stream):
    if v.kind == "raw":
        stream.write(v.data)
        return
    if v.kind == "witnessed":
        count, wit = v.data
        if as_json:
            stream.write(json.dumps({"count": count, "witnesses": _to_json(wit)}) + "\n")
        else:
            stream.write(f"{count}\nwitnesses: {_render_text(wit)}\n")
        return
    if v.kind == "level":
        r = v.data
        if as_json:
            stream.write(json.dumps({"level": r.level, "certificate": tensor_to_json(r.certificate)}) + "\n")
        else:
            stream.write(f"{r.level}\ncertificate: {r.certificate}\n")
        return
    if as_json:
        stream.write(json.dumps(_to_json(v), ensure_ascii=False) + "\n")
    else:
        stream.write(_render_text(v) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--max-degree", type=int, default=None, help="raise the degree guard (default 8)")

    parser = argparse.ArgumentParser(prog="permhopf", description="Hopf algebras of permutations and quasi-symmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("product", cmd_product, "multiply two elements")
    p.add_argument("x")
    p.add_argument("y")
    add("coproduct", cmd_coproduct, "coproduct of an element").add_argument("x")
    add("antipode", cmd_antipode, "antipode of an element").add_argument("x")
    p = add("antipode-power", cmd_antipode_power, "antipode applied k times")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("x")
    p = add("convert", cmd_convert, "change of basis")
    p.add_argument("--to", choices=("F", "M"), required=True)
    p.add_argument("x")
    p = add("descent-map", cmd_descent_map, "image under the descent map")
    p.add_argument("--check", action="store_true", help="also compute through the other basis and compare")
    p.add_argument("x")
    add("split-z", cmd_split_z, "image of a QSym element under Z").add_argument("x")
    p = add("mobius", cmd_mobius, "Moebius function of the weak or Boolean order")
    p.add_argument("order", choices=("weak", "boolean"))
    p.add_argument("lower")
    p.add_argument("upper")
    p = add("alpha", cmd_alpha, "monomial structure constant alpha^w_{u,v}")
    for name in ("u", "v", "w"):
        p.add_argument(name)
    p.add_argument("--witnesses", action="store_true")
    for name, func in (("kappa", cmd_kappa), ("lambda", cmd_lambda)):
        p = add(name, func, f"antipode coefficient {name}(v, w)")
        p.add_argument("v")
        p.add_argument("w")
        p.add_argument("--witnesses", action="store_true")
    add("primitives", cmd_primitives, "permutations indexing primitive M_u").add_argument("-n", type=int, required=True)
    add("coradical-level", cmd_coradical_level, "coradical filtration level").add_argument("x")
    add("kernel-basis", cmd_kernel_basis, "basis of the left Hopf kernel of D").add_argument("-n", type=int, required=True)
    add("kernel-test", cmd_kernel_test, "membership in the left Hopf kernel of D").add_argument("x")
    p = add("sigma", cmd_sigma, "crossed-product cocycle on two QSym indices")
    p.add_argument("s")
    p.add_argument("t")
    p = add("verify", cmd_verify, "check the Hopf axioms")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--algebra", choices=("SSym", "QSym", "both"), default="both")
    p = add("paper-examples", cmd_worked_examples, "regenerate the worked examples and diff against the golden report")
    p.add_argument("--golden", help="golden file to compare against (default: bundled)")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        with max_degree(args.max_degree) if args.max_degree is not None else nullcontext():
            result = args.func(args)
    except VerificationFailure as exc:
        _emit(exc.args[0], args.json, stdout)
        stderr.write("verification failed\n")
        return 2
    except (PermhopfError, ValueError, TypeError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    _emit(result, args.json, stdout)
    return 0


def main_exit():  # pragma: no cover
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        code = 0
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main_exit()
