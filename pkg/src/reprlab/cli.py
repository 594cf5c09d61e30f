"""Command-line interface: reprlab <command> [options].

Every run reports the seed it used on stderr. Exit codes: 0 success or
passing gate, 1 failing statistical gate, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import montecarlo as mc
from . import plotting
from .partitions import Partition, dimension, parse_partition, profile
from .spin import (as_strict, catalan_q_equals_p, catalan_rhs, double_diagram_profile, sign_flip_positivity,
                   spin_p_sharp_explicit, spin_p_sharp_series, stanley_poly)
from .supercharacter import (SetPartition, arc_statistics, cell_measure, character_degree, character_norm,
                             omega_discrepancy, sample_superplancherel, set_partitions, superinduce,
                             supercharacter_value, superplancherel)
from .symrep import (SEMINORMAL, ORTHOGONAL, character, normalized_character, p_sharp, p_sharp_explicit,
                     parse_permutation, partial_trace, total_sum)

ENV_SEED = "REPR_LAB_SEED"


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _load_json_arg(text: str):
    if text == "-":
        return json.load(sys.stdin)
    if text.endswith(".json") and Path(text).exists():
        return json.loads(Path(text).read_text())
    return None


def _partition_arg(text: str) -> Partition:
    doc = _load_json_arg(text)
    if doc is not None:
        if "partition" not in doc:
            raise UsageError("JSON input has no 'partition' field")
        return Partition(tuple(doc["partition"]))
    return parse_partition(text)


def _set_partition_arg(text: str) -> SetPartition:
    doc = _load_json_arg(text)
    if doc is not None:
        if "set_partition" not in doc:
            raise UsageError("JSON input has no 'set_partition' field")
        return SetPartition.parse(doc["set_partition"])
    return SetPartition.parse(text)


def _rho_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "1", "id"):
        return ()
    return tuple(int(x) for x in text.split(",") if x.strip())


def _emit(args, rows: list[dict] | dict) -> None:
    rows = rows if isinstance(rows, list) else [rows]
    if args.format == "csv":
        buf = io.StringIO()
        keys: list[str] = []
        for r in rows:
            keys += [k for k in r if k not in keys]
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        text = buf.getvalue()
    else:
        text = json.dumps(rows[0] if len(rows) == 1 else rows, indent=2, default=_num) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_svg(path: str | None, svg: str) -> None:
    if path:
        Path(path).write_text(svg)


# commands

def cmd_sample(args) -> int:
    if args.kind == "plancherel":
        lam = mc.sample_plancherel(args.n, args.seed, args.index)
        _emit(args, {"kind": "plancherel", "n": args.n, "seed": args.seed, "index": args.index,
                     "partition": list(lam.parts), "length": len(lam), "first_row": lam.parts[0]})
    elif args.kind == "strict":
        lam = mc.sample_strict(args.n, args.seed, args.index)
        _emit(args, {"kind": "strict", "n": args.n, "seed": args.seed, "index": args.index,
                     "partition": list(lam.parts), "length": len(lam)})
    else:
        pi = sample_superplancherel(args.n, args.q, args.seed, args.index)
        st = arc_statistics(pi)
        _emit(args, {"kind": "superplancherel", "n": args.n, "q": args.q, "seed": args.seed,
                     "index": args.index, "set_partition": str(pi), "d": st.d, "dim": st.dim,
                     "crs": st.crs, "nst": st.nst})
    return 0


def cmd_char(args) -> int:
    lam = _partition_arg(args.lam)
    rho = _rho_arg(args.rho)
    rest = lam.n - sum(rho)
    if rest < 0:
        raise UsageError("rho is larger than lambda")
    full = Partition(tuple(sorted(rho, reverse=True)) + (1,) * rest)
    _emit(args, {"lambda": list(lam.parts), "rho": list(full.parts), "character": character(lam, full),
                 "dimension": dimension(lam), "normalized": _num(normalized_character(lam, full))})
    return 0


def cmd_p_sharp(args) -> int:
    lam = _partition_arg(args.lam)
    rho = _rho_arg(args.rho)
    if not rho:
        raise UsageError("--rho needs at least one part larger than 1")
    rho = tuple(sorted(rho, reverse=True))
    row = {"lambda": list(lam.parts), "rho": list(rho), "value": _num(p_sharp(Partition(rho), lam))}
    if len(rho) == 1:
        row["explicit"] = _num(p_sharp_explicit(rho[0], lam))
    _emit(args, row)
    return 0


def cmd_partial_trace(args) -> int:
    lam = _partition_arg(args.lam)
    sigma = parse_permutation(args.sigma, lam.n)
    u = Fraction(args.u)
    val = partial_trace(lam, sigma, u, args.flavor)
    _emit(args, {"lambda": list(lam.parts), "sigma": str(sigma), "u": str(u), "flavor": args.flavor,
                 "partial_trace": _num(val)})
    return 0


def cmd_total_sum(args) -> int:
    lam = _partition_arg(args.lam)
    sigma = parse_permutation(args.sigma, lam.n)
    val = total_sum(lam, sigma, args.flavor)
    _emit(args, {"lambda": list(lam.parts), "sigma": str(sigma), "flavor": args.flavor, "total_sum": _num(val)})
    return 0


def cmd_stanley(args) -> int:
    if args.what == "poly":
        poly = stanley_poly(args.k, args.m)
        if args.format == "csv":
            _emit(args, {"k": args.k, "m": args.m, "polynomial": poly.to_string()})
        else:
            sys.stdout.write(poly.to_string() + "\n")
        return 0
    if args.what == "positivity":
        bad = sign_flip_positivity(args.k, args.m)
        _emit(args, {"k": args.k, "m": args.m, "negative_coefficients": len(bad),
                     "examples": [[list(e), str(c)] for e, c in bad[:5]]})
        return 0 if not bad else 1
    lhs, rhs = catalan_q_equals_p(args.k)
    _emit(args, {"k": args.k, "F_at_q_eq_p": lhs.to_string(), "catalan_form": rhs.to_string(),
                 "equal": lhs == rhs, "equal_with_opposite_sign": lhs == catalan_rhs(args.k, -1)})
    return 0 if lhs == rhs else 1


def cmd_spin_char(args) -> int:
    lam = as_strict(_partition_arg(args.lam))
    _emit(args, {"lambda": list(lam.parts), "k": args.k,
                 "explicit": _num(spin_p_sharp_explicit(args.k, lam)),
                 "series": _num(spin_p_sharp_series(args.k, lam))})
    return 0


def cmd_supercharacter(args) -> int:
    q = args.q
    if args.what == "value":
        if not args.pi:
            raise UsageError("--pi is required")
        pi = _set_partition_arg(args.pi)
        sigma = _set_partition_arg(args.sigma) if args.sigma else SetPartition.arcless(pi.n)
        _emit(args, {"pi": str(pi), "sigma": str(sigma), "q": q,
                     "value": _num(supercharacter_value(pi, sigma, q)),
                     "degree": _num(character_degree(pi, q)), "norm": _num(character_norm(pi, q)),
                     "superplancherel": _num(superplancherel(pi, q))})
        return 0
    if args.what == "table":
        if args.n is None:
            raise UsageError("--n is required")
        parts = sorted(set_partitions(args.n), key=lambda p: (len(p.arcs), p.arcs))
        rows = []
        for p in parts:
            row = {"pi": str(p)}
            row.update({str(s): _num(supercharacter_value(p, s, q)) for s in parts})
            rows.append(row)
        _emit(args, rows)
        return 0
    if not args.pi:
        raise UsageError("--pi is required")
    pi = _set_partition_arg(args.pi)
    if args.what == "induce":
        rows = [{"sigma": str(s), "coefficient": c.to_string(), "at_q": _num(c.evaluate([q]))}
                for s, c in superinduce(pi).items()]
        _emit(args, rows)
        return 0
    mu = cell_measure(pi)
    st = arc_statistics(pi)
    _emit(args, {"pi": str(pi), "mass": _num(mu.mass), "I1": _num(mu.I1()), "I2": _num(mu.I2()),
                 "I": _num(mu.I()), "d": st.d, "dim": st.dim, "crs": st.crs, "nst": st.nst,
                 "adjacent": st.adjacent, "omega_discrepancy": omega_discrepancy(mu, args.grid)})
    return 0


def _report_svg(args, report: mc.StatReport) -> str | None:
    rng = mc.trial_rng(args.seed, 0)
    if args.what in ("clt", "main-term"):
        return plotting.histogram_svg(report.samples, title=report.statistic)
    if args.what == "semicircle":
        lam = mc.plancherel_growth_sample(args.n, rng)
        _, contents, w = mc.cotransition_weights(lam.parts)
        import numpy as np
        v = contents / np.sqrt(args.n)
        return plotting.cdf_svg(list(v), list(np.cumsum(w)), title=f"n={args.n}")
    if args.kind == "setpartition":
        pis = [sample_superplancherel(args.n, args.q, args.seed, i) for i in range(max(1, args.trials))]
        return plotting.heatmap_svg(pis, title=f"n={args.n}, q={args.q}")
    if args.kind == "classical":
        bp = profile(mc.plancherel_growth_sample(args.n, rng), rescale=True).scaled_breakpoints()
    else:
        bp = double_diagram_profile(mc.strict_growth_sample(args.n, rng, mc.EXACT_LIMIT), rescale=True).scaled_breakpoints()
    return plotting.shape_svg(bp, title=f"{args.kind}, n={args.n}")


def cmd_report(args) -> int:
    if args.what == "clt":
        rep = mc.kerov_clt_report(_rho_arg(args.rho), args.n, args.trials, args.seed, args.jobs,
                                  var_tol=args.var_tol)
    elif args.what == "limit-shape":
        rep = mc.limit_shape_report(args.kind, args.n, args.trials, args.seed, args.jobs, q=args.q)
    elif args.what == "semicircle":
        rep = mc.cotransition_semicircle_report(args.n, args.trials, args.seed, args.jobs)
    else:
        rep = mc.main_term_report(_rho_arg(args.rho), args.u, args.n, args.trials, args.seed, args.jobs,
                                  var_tol=args.var_tol)
    row = rep.to_json()
    if args.format == "csv":
        row = {k: v for k, v in row.items() if k != "checks"} | {f"check_{k}": v for k, v in rep.checks.items()}
    _emit(args, row)
    if args.svg:
        _write_svg(args.svg, _report_svg(args, rep))
    return 0 if rep.passed else 1


def cmd_plot(args) -> int:
    if args.what == "shape":
        rng = mc.trial_rng(args.seed, args.index)
        if args.kind == "strict":
            lam = mc.strict_growth_sample(args.n, rng, mc.EXACT_LIMIT)
            bp = double_diagram_profile(lam, rescale=True).scaled_breakpoints()
        else:
            lam = mc.plancherel_growth_sample(args.n, rng)
            bp = profile(lam, rescale=True).scaled_breakpoints()
        svg = plotting.shape_svg(bp, title=f"{args.kind}, n={args.n}")
    elif args.what == "arcs":
        pi = _set_partition_arg(args.pi) if args.pi else sample_superplancherel(args.n, args.q, args.seed, args.index)
        svg = plotting.arcs_svg(pi)
    else:
        pis = [sample_superplancherel(args.n, args.q, args.seed, i) for i in range(args.trials)]
        svg = plotting.heatmap_svg(pis, title=f"n={args.n}, q={args.q}")
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


# parser

def _default_seed() -> int:
    text = os.environ.get(ENV_SEED, "0")
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{ENV_SEED} must be an integer, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reprlab", description="Representation-theory computations and simulations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True, seed=True):
        if fmt:
            sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        if seed:
            sp.add_argument("--seed", type=int, default=None, help=f"defaults to ${ENV_SEED} or 0")
        return sp

    sp = common(sub.add_parser("sample", help="draw a random partition or set partition"))
    sp.add_argument("kind", choices=["plancherel", "strict", "superplancherel"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--index", type=int, default=0)
    sp.set_defaults(func=cmd_sample)

    sp = common(sub.add_parser("char", help="irreducible character value"))
    sp.add_argument("--lambda", dest="lam", required=True, help="partition '3,2' or a sample JSON file")
    sp.add_argument("--rho", default="", help="nontrivial cycle lengths, e.g. '2' or '3,2'")
    sp.set_defaults(func=cmd_char)

    sp = common(sub.add_parser("p-sharp", help="normalized character p#_rho(lambda)"))
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--rho", required=True)
    sp.set_defaults(func=cmd_p_sharp)

    for name, fn in (("partial-trace", cmd_partial_trace), ("total-sum", cmd_total_sum)):
        sp = common(sub.add_parser(name))
        sp.add_argument("--lambda", dest="lam", required=True)
        sp.add_argument("--sigma", required=True, help="cycle notation '(1,2)(3,4)' or one-line '[2,1,3]'")
        if name == "partial-trace":
            sp.add_argument("--u", required=True, help="level in [0, 1], e.g. 1/2 or 0.3")
        sp.add_argument("--flavor", choices=[SEMINORMAL, ORTHOGONAL], default=SEMINORMAL)
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("stanley", help="spin Stanley polynomials"))
    sp.add_argument("what", choices=["poly", "positivity", "catalan"])
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.set_defaults(func=cmd_stanley)

    sp = common(sub.add_parser("spin-char", help="spin normalized character on a strict partition"))
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_spin_char)

    sp = common(sub.add_parser("supercharacter", help="supercharacters of U_n(F_q)"))
    sp.add_argument("what", choices=["value", "table", "induce", "measure"])
    sp.add_argument("--pi")
    sp.add_argument("--sigma")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--grid", type=int, default=50)
    sp.set_defaults(func=cmd_supercharacter)

    sp = common(sub.add_parser("report", help="seeded statistical reports"))
    sp.add_argument("what", choices=["clt", "limit-shape", "semicircle", "main-term"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--rho", default="2")
    sp.add_argument("--u", type=float, default=0.5)
    sp.add_argument("--kind", choices=["classical", "strict", "setpartition"], default="classical")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--var-tol", type=float, default=None)
    sp.add_argument("--svg", help="also write a figure to this path")
    sp.set_defaults(func=cmd_report)

    sp = common(sub.add_parser("plot", help="static SVG figures"), fmt=False)
    sp.add_argument("what", choices=["shape", "arcs", "heatmap"])
    sp.add_argument("--n", type=int, default=200)
    sp.add_argument("--kind", choices=["classical", "strict"], default="classical")
    sp.add_argument("--pi")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--index", type=int, default=0)
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        if getattr(args, "var_tol", "absent") is None:
            args.var_tol = 0.15 if args.what == "main-term" else (0.12 if args.rho.strip() == "3" else 0.10)
        print(f"seed={getattr(args, 'seed', None)}", file=sys.stderr)
        return args.func(args)
    except (UsageError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"reprlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
