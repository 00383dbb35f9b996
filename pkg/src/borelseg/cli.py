"""Command line front end.

Exit status: 0 on success, 1 when the input is well formed but the
computation is undefined for it, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .dot import export_dot
from .enumeration import borel_generator
from .errors import BorelSegError, DomainError, ParseError
from .ideals import hilbert_polynomial, parse_ideal, regularity, truncate
from .monomials import format_term, parse_order
from .polynomials import gotzmann_decomposition, macaulay_form, parse_polynomial
from .segments import classify, no_order_witness
from .strata import build_stratum, decide_singularity, script_B, truncation_hint

# Each subcommand: positional arguments and options as (flags, dest, argparse kwargs).
# The same table drives parsing and ``render``.
COMMANDS = {
    "enumerate": {
        "help": "all saturated Borel ideals with a Hilbert polynomial",
        "positional": [],
        "options": [
            (("-n",), "n", {"type": int, "required": True, "help": "ambient ring K[x0..xn]"}),
            (("-p", "--polynomial"), "polynomial", {"required": True}),
            (("--format",), "format", {"choices": ["text", "json"], "default": "text"}),
            (("--classify",), "classify", {"default": None, "metavar": "ORDER"}),
            (("--jobs",), "jobs", {"type": int, "default": 1}),
        ],
    },
    "classify": {
        "help": "segment flags of a saturated Borel ideal",
        "positional": [("ideal", {})],
        "options": [
            (("-n",), "n", {"type": int, "default": None}),
            (("--order",), "order", {"default": "revlex"}),
            (("--json",), "json", {"action": "store_true"}),
        ],
    },
    "hilbert": {
        "help": "Hilbert function and polynomial of a Borel ideal",
        "positional": [("ideal", {})],
        "options": [
            (("-n",), "n", {"type": int, "default": None}),
            (("--upto",), "upto", {"type": int, "default": None}),
            (("--json",), "json", {"action": "store_true"}),
        ],
    },
    "gotzmann": {
        "help": "Gotzmann number and decompositions of a polynomial",
        "positional": [],
        "options": [
            (("-p", "--polynomial"), "polynomial", {"required": True}),
            (("--verbose", "-v"), "verbose", {"action": "store_true"}),
            (("--json",), "json", {"action": "store_true"}),
        ],
    },
    "stratum": {
        "help": "embedding dimension of the homogeneous Groebner stratum",
        "positional": [("ideal", {})],
        "options": [
            (("-n",), "n", {"type": int, "default": None}),
            (("--order",), "order", {"required": True}),
            (("--truncate",), "truncate", {"default": None, "metavar": "M|auto"}),
            (("--ed-only",), "ed_only", {"action": "store_true"}),
            (("--singularity",), "singularity", {"action": "store_true"}),
            (("--json",), "json", {"action": "store_true"}),
        ],
    },
    "graph": {
        "help": "DOT graph of a degree slice",
        "positional": [("ideal", {})],
        "options": [
            (("-n",), "n", {"type": int, "default": None}),
            (("-t", "--degree"), "degree", {"type": int, "required": True}),
        ],
    },
    "witness": {
        "help": "search for an obstruction to being a segment for any order",
        "positional": [("ideal", {})],
        "options": [
            (("-n",), "n", {"type": int, "default": None}),
            (("--from",), "t_from", {"type": int, "default": None}),
            (("--to",), "t_to", {"type": int, "default": None}),
            (("--json",), "json", {"action": "store_true"}),
        ],
    },
}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borelseg", description="Borel ideals, segments and Groebner strata")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, spec in COMMANDS.items():
        sp = sub.add_parser(name, help=spec["help"])
        for dest, kw in spec["positional"]:
            sp.add_argument(dest, **kw)
        for flags, dest, kw in spec["options"]:
            sp.add_argument(*flags, dest=dest, **kw)
    return parser


def parse(argv: Sequence[str]) -> argparse.Namespace:
    return build_parser().parse_args(list(argv))


def render(ns: argparse.Namespace) -> list:
    """argv that parses back to ``ns``."""
    spec = COMMANDS[ns.command]
    out = [ns.command]
    for dest, _ in spec["positional"]:
        out.append(str(getattr(ns, dest)))
    for flags, dest, kw in spec["options"]:
        value = getattr(ns, dest)
        if kw.get("action") == "store_true":
            if value:
                out.append(flags[0])
        elif value is not None and value != kw.get("default"):
            out.extend([flags[0], str(value)])
    return out


# ---------------------------------------------------------------- subcommands

def _ideal(ns, borel=False):
    return parse_ideal(ns.ideal, ns.n, borel=borel)


def _cmd_enumerate(ns, out):
    p = parse_polynomial(ns.polynomial)
    res = borel_generator(ns.n, p, jobs=ns.jobs)
    order = parse_order(ns.classify) if ns.classify else None
    if ns.format == "json":
        obj = res.to_json()
        if order is not None:
            obj["classification"] = [classify(J, order).to_json() for J in res.ideals]
        out.write(_dumps(obj) + "\n")
        return
    out.write(f"p = {p}, n = {ns.n}, r = {res.gotzmann}: {len(res.ideals)} ideals\n")
    for J in res.ideals:
        line = str(J)
        if order is not None:
            rep = classify(J, order)
            flags = [k for k, v in (("segment", rep.is_segment), ("hilb", rep.is_hilb_segment),
                                    ("reg", rep.is_reg_segment), ("gen", rep.is_gen_segment)) if v]
            line += "  [" + " ".join(flags) + "]"
        out.write(line + "\n")


def _cmd_classify(ns, out):
    J = _ideal(ns)
    rep = classify(J, parse_order(ns.order))
    if ns.json:
        out.write(_dumps(rep.to_json()) + "\n")
    else:
        out.write(str(rep) + "\n")


def _cmd_hilbert(ns, out):
    J = _ideal(ns)
    p = hilbert_polynomial(J)
    reg = regularity(J) if not J.is_zero else 0
    upto = ns.upto if ns.upto is not None else reg + 2
    values = [J.hilbert_function(t) for t in range(upto + 1)]
    if ns.json:
        obj = {"ideal": J.to_json(), "polynomial": p.to_json(), "regularity": reg, "hilbert_function": values}
        out.write(_dumps(obj) + "\n")
        return
    out.write(f"p = {p}\n")
    out.write(f"reg = {reg}\n")
    out.write("H = " + ", ".join(str(v) for v in values) + ", ...\n")


def _cmd_gotzmann(ns, out):
    p = parse_polynomial(ns.polynomial)
    dec = gotzmann_decomposition(p)
    if not dec and not p.is_zero:
        raise DomainError(f"{p} is {dec}")
    if ns.json:
        obj = {"polynomial": p.to_json(), "gotzmann": len(dec), "decomposition": list(dec)}
        if not p.is_zero:
            obj["macaulay"] = list(macaulay_form(p))
        out.write(_dumps(obj) + "\n")
        return
    out.write(f"r = {len(dec)}\n")
    if ns.verbose:
        out.write("a = " + ", ".join(map(str, dec)) + "\n")
        if not p.is_zero:
            out.write("m = " + ", ".join(map(str, macaulay_form(p))) + "\n")


def _cmd_stratum(ns, out):
    J = _ideal(ns, borel=False)
    order = parse_order(ns.order)
    m = None
    if ns.truncate == "auto":
        m = max(truncation_hint(J), J.initial_degree)
    elif ns.truncate is not None:
        try:
            m = int(ns.truncate)
        except ValueError:
            raise ParseError("--truncate takes an integer or 'auto'", ns.truncate, 0) from None
    K = truncate(J, m) if m else J
    st = build_stratum(K, order)
    cert = None
    if ns.singularity:
        cert = decide_singularity(J, order)
    if ns.json:
        obj = {"ed": st.embedding_dimension} if ns.ed_only else st.to_json()
        obj["truncation"] = m
        if cert is not None:
            obj["certificate"] = cert.to_json()
            obj["B"] = sorted(format_term(b) for b in script_B(J))
        out.write(_dumps(obj) + "\n")
        return
    if ns.ed_only:
        out.write(f"{st.embedding_dimension}\n")
    else:
        out.write(f"ideal = {K}\n")
        out.write(f"vars = {len(st.vars)}\n")
        out.write(f"rank = {st.linear_rank}\n")
        out.write(f"ed = {st.embedding_dimension}\n")
    if cert is not None:
        out.write(f"|G|*|B| = {cert.product}, nd = {cert.bound}: {cert.verdict.value} ({cert.method})\n")


def _cmd_graph(ns, out):
    out.write(export_dot(_ideal(ns), ns.degree))


def _cmd_witness(ns, out):
    J = _ideal(ns)
    rng = None
    if ns.t_from is not None or ns.t_to is not None:
        lo = ns.t_from if ns.t_from is not None else J.initial_degree
        hi = ns.t_to if ns.t_to is not None else lo
        rng = (lo, hi)
    w = no_order_witness(J, rng)
    if ns.json:
        obj = None
        if w is not None:
            t, a, b, g, d = w
            obj = {"degree": t, "alpha": format_term(a), "beta": format_term(b),
                   "gamma": format_term(g), "delta": format_term(d)}
        out.write(_dumps({"witness": obj}) + "\n")
        return
    if w is None:
        out.write("no witness\n")
    else:
        t, a, b, g, d = w
        out.write(f"t = {t}: {format_term(g)} * {format_term(d)} = {format_term(a)} * {format_term(b)}\n")


HANDLERS = {
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "hilbert": _cmd_hilbert,
    "gotzmann": _cmd_gotzmann,
    "stratum": _cmd_stratum,
    "graph": _cmd_graph,
    "witness": _cmd_witness,
}


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = parse(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        HANDLERS[ns.command](ns, out)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (BorelSegError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    code = run(sys.argv[1:] if argv is None else argv)
    raise SystemExit(code)
