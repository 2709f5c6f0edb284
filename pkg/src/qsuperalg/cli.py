"""Command-line front end.

Commands:
  generators    print a generator set in the canonical operator grammar
  verify        run the relation suites and emit a text or JSON report
  example-sl21  step-by-step transcript of the [e2,f2] check in U_q(sl(2|1))
  identities    check the Cartan-substitution linear-form identities

Exit codes: 0 all checks pass, 1 a suite failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .scalars import qnum
from . import superpoly as sp
from .operators import graded_commutator
from .algebra import (build_root_data, build_quantum, build_classical,
                      check_linform_identities)
from .verify import run_full


def _parse_weights(cfg, parser):
    if cfg.mode == "integer":
        if not cfg.weights:
            parser.error("--mode integer requires --weights")
        try:
            weights = [int(w) for w in cfg.weights.split(",")]
        except ValueError:
            parser.error("--weights must be a comma-separated integer list")
        if len(weights) != cfg.M + cfg.N + 1:
            parser.error("expected %d weights" % (cfg.M + cfg.N + 1))
        return weights
    return None


def _build(cfg, weights):
    data = build_root_data(cfg.M, cfg.N)
    if cfg.variant == "classical":
        return build_classical(data, weights)
    return build_quantum(data, weights, cfg.variant)


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _term_dict(cs, coeff, ops):
    out = {"coeff": coeff.render(), "ops": []}
    for op in ops:
        kind = op[0]
        if kind in ("x", "D", "d"):
            l, m = cs.coords[op[1]]
            out["ops"].append({"kind": kind, "l": l, "m": m})
        else:
            out["ops"].append({"kind": kind, "lin": op[1].render(cs)})
    return out


def cmd_generators(cfg, parser):
    weights = _parse_weights(cfg, parser)
    gens = _build(cfg, weights)
    prefix = "h" if cfg.variant == "classical" else "t"
    names = []
    for i in range(1, gens.data.K + 1):
        names.append(("%s%d" % (prefix, i), gens.t[i]))
    for i in range(1, gens.data.K + 1):
        names.append(("e%d" % i, gens.e[i]))
    for i in range(1, gens.data.K + 1):
        names.append(("f%d" % i, gens.f[i]))
    if cfg.format == "json":
        payload = {
            "algebra": {"M": cfg.M, "N": cfg.N},
            "variant": cfg.variant,
            "mode": cfg.mode,
            "generators": {
                name: [_term_dict(gens.cs, c, ops) for c, ops in op.terms]
                for name, op in names},
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg.output)
    else:
        lines = ["%s = %s" % (name, op.render()) for name, op in names]
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_verify(cfg, parser):
    weights = _parse_weights(cfg, parser)
    report = run_full(cfg.M, cfg.N, cfg.mode, cfg.degree, cfg.nmax,
                      cfg.variant, weights)
    if cfg.format == "json":
        _emit(report.to_json(), cfg.output)
    else:
        _emit(report.to_text(), cfg.output)
    return 0 if report.ok else 1


def cmd_identities(cfg, parser):
    lines = []
    failed = False
    for M in range(cfg.M + 1):
        for N in range(cfg.N + 1):
            data = build_root_data(M, N)
            report = check_linform_identities(data)
            for name in sorted(report):
                entry = report[name]
                status = "FAIL" if entry["failures"] else "pass"
                failed = failed or bool(entry["failures"])
                lines.append("(M,N)=(%d,%d) %s: %d instances %s%s" % (
                    M, N, name, entry["instances"], status,
                    " " + ",".join(entry["failures"]) if entry["failures"] else ""))
    _emit("\n".join(lines) + "\n", cfg.output)
    return 1 if failed else 0


def cmd_example_sl21(cfg, parser):
    weights = _parse_weights(cfg, parser)
    data = build_root_data(1, 0)
    gens = build_quantum(data, weights, "prop3")
    cs = gens.cs
    bracket = graded_commutator(gens.e[2], gens.f[2])
    eigen = type(gens.t[2]).term(cs, (("qnum", gens.t_form[2]),))
    lines = ["concrete check in U_q(sl(2|1)): [e2,f2] vs (t2-t2^-1)/(q-q^-1)",
             "e2 = " + gens.e[2].render(),
             "f2 = " + gens.f[2].render(),
             "[e2,f2] acts as [%s]" % gens.t_form[2].render(cs), ""]
    probes = [(), ((cs.pos[(1, 1)], 1),), ((cs.pos[(1, 2)], 1),),
              ((cs.pos[(2, 2)], 1),),
              ((cs.pos[(1, 1)], 2),),
              ((cs.pos[(1, 1)], 1), (cs.pos[(1, 2)], 1)),
              ((cs.pos[(1, 2)], 1), (cs.pos[(2, 2)], 1))]
    ok = True
    for mono in probes:
        mono = tuple(sorted(mono))
        lhs = bracket.apply_monomial(mono)
        rhs = eigen.apply_monomial(mono)
        agree = sp.poly_eq(lhs, rhs)
        ok = ok and agree
        lines.append("on %-22s -> %s" % (sp.mono_render(cs, mono),
                                         sp.poly_render(cs, lhs)))
        lines.append("   eigenvalue side      -> %s   [%s]" % (
            sp.poly_render(cs, rhs), "agree" if agree else "MISMATCH"))
    lines.append("")
    lines.append("all probes agree" if ok else "MISMATCH FOUND")
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qsuperalg",
        description="Exact q-difference operator realizations of the "
                    "quantum superalgebra of type sl(M+1|N+1) and machine "
                    "verification of its defining relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=3):
        p.add_argument("--M", type=int, default=1)
        p.add_argument("--N", type=int, default=0)
        p.add_argument("--mode", choices=("symbolic", "integer"),
                       default="symbolic")
        p.add_argument("--weights", default=None,
                       help="comma-separated integers, required with "
                            "--mode integer")
        p.add_argument("--degree", type=int, default=degree)
        p.add_argument("--nmax", type=int, default=2)
        p.add_argument("--variant", choices=("prop2", "prop3", "classical"),
                       default="prop3")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None)

    common(sub.add_parser("generators", help="print a generator set"))
    common(sub.add_parser("verify", help="run the relation suites"))
    common(sub.add_parser("identities",
                          help="check the linear-form identities"))
    common(sub.add_parser("example-sl21",
                          help="transcript of the [e2,f2] check"))
    return parser


def main(argv=None):
    parser = build_parser()
    cfg = parser.parse_args(argv)
    if cfg.M < 0 or cfg.N < 0 or cfg.degree < 0 or cfg.nmax < 1:
        parser.error("M, N, degree must be >= 0 and nmax >= 1")
    handlers = {
        "generators": cmd_generators,
        "verify": cmd_verify,
        "identities": cmd_identities,
        "example-sl21": cmd_example_sl21,
    }
    return handlers[cfg.command](cfg, parser)


if __name__ == "__main__":
    sys.exit(main())
