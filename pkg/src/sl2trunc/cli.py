"""Command-line front end: ``sl2trunc <subcommand> ...``.

Every number is printed exactly; rationals appear in JSON as ``[num, den]``.
Errors go to stderr as one line ``error: <reason>: <message>`` with exit code 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .blocks import count_truncated_simples
from .chars import gamma1_character, gamma_multiplicities, truncation_certificates, verma_t_character
from .errors import Sl2TruncError, ValidationError
from .rootsys import AlgebraSpec, RootSystem, build_root_system, parse_weight
from .sigma import DEFAULT_BOX_CAP, classify_sigma
from .sl2pair import (Characteristic, grading, k_decomposition, pair_invariants,
                      principal_characteristic, quotient_decomposition, solve_h)

CATALOG_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def simple_catalog(max_rank: int) -> list[AlgebraSpec]:
    """Every simple type of rank <= ``max_rank``, one per isomorphism class of label."""
    out = []
    for fam in CATALOG_FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(AlgebraSpec(((fam, r),)))
            except ValidationError:
                continue
    return out


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def fmt(x: Any) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(fmt(v) for v in x) + ")"
    return str(x)


def emit(payload: dict, output: str, table_rows: Sequence[tuple[str, Any]] | None = None,
         extra: str = "") -> None:
    if output == "json":
        sys.stdout.write(json.dumps(jsonable(payload), indent=2) + "\n")
        return
    rows = table_rows if table_rows is not None else list(payload.items())
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        sys.stdout.write(f"{k.ljust(width)}  {fmt(v)}\n")
    if extra:
        sys.stdout.write(extra)


def _setup(args) -> tuple[RootSystem, Characteristic]:
    rs = build_root_system(AlgebraSpec.parse(args.algebra))
    c = Characteristic.parse(getattr(args, "characteristic", "principal"), rs)
    return rs, c


def cmd_report(args) -> None:
    rs, c = _setup(args)
    h = solve_h(rs, c)
    gd = grading(rs, h)
    pi = pair_invariants(rs, c)
    dec = k_decomposition(gd)
    payload = {
        "algebra": str(rs.spec),
        "characteristic": list(c.values),
        "h_coroot_coords": list(h.n),
        "lambda1": pi.lambda1,
        "lambda2": pi.lambda2,
        "Lambda": pi.Lambda,
        "Lambda_integral": pi.Lambda_integral,
        "beta_h": pi.beta_h,
        "rho_h": pi.rho_h,
        "dim_g": pi.dim_g,
        "dim_n": pi.dim_n,
        "dim_Ct": pi.dim_Ct,
        "dim_s": pi.dim_s,
        "dim_c": pi.dim_c,
        "gdim_bound": pi.gdim_bound,
        "grading": {p: d for p, d in gd.as_sorted()},
        "k_decomposition": dec,
        "quotient_decomposition": quotient_decomposition(gd),
    }
    rows = [(k, v) for k, v in payload.items()
            if k not in ("grading", "k_decomposition", "quotient_decomposition")]
    extra = "\n  p  dim g(p)\n" + "".join(f"{p:>3}  {d}\n" for p, d in gd.as_sorted())
    extra += "\n mu  mult V(mu) in g\n" + "".join(f"{mu:>3}  {m}\n" for mu, m in dec.items())
    emit(payload, args.output, rows, extra)


def cmd_sigma(args) -> None:
    rs = build_root_system(AlgebraSpec.parse(args.algebra))
    h = solve_h(rs, principal_characteristic(rs))
    rep = classify_sigma(rs, h, cap=args.box_cap)

    def as_dict(r):
        d = {
            "algebra": r.algebra,
            "rho_h": r.rho_h,
            "beta_h": r.beta_h,
            "nonempty": r.nonempty,
            "strict": r.strict,
            "classification": r.classification.value,
            "box_size": r.box_size,
            "integral_point_count": r.integral_point_count,
            "integral_points": r.integral_points,
        }
        if r.factors:
            d["factors"] = [as_dict(f) for f in r.factors]
        return d

    payload = as_dict(rep)
    rows = [(k, v) for k, v in payload.items() if k not in ("integral_points", "factors")]
    extra = ""
    if args.output == "table" and rep.integral_points:
        extra = "".join(f"  {fmt(p)}\n" for p in rep.integral_points)
    emit(payload, args.output, rows, extra)


def cmd_block(args) -> None:
    rs, c = _setup(args)
    h = solve_h(rs, c)
    gamma = parse_weight(args.gamma)
    bc = count_truncated_simples(rs, h, gamma, args.n, cap=args.orbit_cap)
    params = [{"eta": p.eta, "eta_h": p.eta_h, "minimal_k_type": p.minimal_k_type}
              for p in bc.truncated_params]
    payload = {
        "algebra": str(rs.spec),
        "characteristic": list(c.values),
        "gamma": bc.gamma,
        "n": bc.n,
        "linkage_size": bc.linkage_size,
        "count": bc.count,
        "Lambda": bc.Lambda,
        "lambda_ok": bc.lambda_ok,
        "params": params,
    }
    rows = [(k, v) for k, v in payload.items() if k != "params"]
    extra = "".join(f"  eta={fmt(p['eta'])}  eta(h)={p['eta_h']}  min k-type={p['minimal_k_type']}\n"
                    for p in params)
    emit(payload, args.output, rows, extra)


def cmd_char(args) -> None:
    rs, c = _setup(args)
    gd = grading(rs, solve_h(rs, c))
    ch = verma_t_character(args.eweight, args.edim, gd, args.cap)
    payload: dict[str, Any] = {
        "algebra": str(rs.spec),
        "characteristic": list(c.values),
        "floor": ch.floor,
        "cap": ch.cap,
        "verma": ch.window(),
    }
    rows = [("floor", ch.floor), ("cap", ch.cap), ("verma", ch.window())]
    if args.gamma or args.gamma1:
        gm = gamma_multiplicities(ch)
        gamma_list = [gm.mults.get(mu, 0) for mu in range(gm.floor, gm.cap + 1)]
        payload["gamma"] = gamma_list
        payload["gamma_negative"] = list(gm.negative)
        rows.append(("gamma", gamma_list))
        if args.gamma1:
            g1 = gamma1_character(gm)
            payload["gamma1_floor"] = g1.floor
            payload["gamma1_cap"] = g1.cap
            payload["gamma1"] = g1.window()
            rows += [("gamma1_floor", g1.floor), ("gamma1", g1.window())]
    emit(payload, args.output, rows)


def cmd_certify(args) -> None:
    rs, c = _setup(args)
    pi = pair_invariants(rs, c)
    cert = truncation_certificates(pi, args.n, args.emax)
    payload = {
        "algebra": str(rs.spec),
        "characteristic": list(c.values),
        "n": cert.n,
        "E_max": cert.E_max,
        "lambda1": pi.lambda1,
        "lambda2": pi.lambda2,
        "Lambda": cert.Lambda,
        "A_pass": cert.A_pass,
        "A_witness": cert.A_witness,
        "B_pass": cert.B_pass,
        "B_witness": cert.B_witness,
        "pass": cert.passed,
        "n_ge_Lambda": cert.closed_form,
    }
    emit(payload, args.output)


def catalog_rows(max_rank: int, box_cap: int) -> list[dict]:
    rows = []
    for spec in simple_catalog(max_rank):
        rs = build_root_system(spec)
        c = principal_characteristic(rs)
        h = solve_h(rs, c)
        rep = classify_sigma(rs, h, cap=box_cap)
        row = {
            "algebra": str(spec),
            "rank": rs.rank,
            "dim_g": rs.dim,
            "rho_h": rep.rho_h,
            "beta_h": rep.beta_h,
            "classification": rep.classification.value,
            "integral_point_count": rep.integral_point_count,
        }
        if spec != AlgebraSpec((("A", 1),)):
            pi = pair_invariants(rs, c)
            row.update(Lambda=pi.Lambda, gdim_bound=pi.gdim_bound)
        else:
            row.update(Lambda=None, gdim_bound=None)
        rows.append(row)
    return rows


def cmd_catalog(args) -> None:
    rows = catalog_rows(args.max_rank, args.box_cap)
    if args.output == "json":
        sys.stdout.write(json.dumps(jsonable({"max_rank": args.max_rank, "rows": rows}), indent=2) + "\n")
        return
    cols = ["algebra", "rho_h", "beta_h", "Lambda", "classification", "integral_point_count",
            "gdim_bound"]
    table = [[fmt(r[k]) if r[k] is not None else "-" for k in cols] for r in rows]
    widths = [max(len(c), *(len(t[i]) for t in table)) for i, c in enumerate(cols)]
    sys.stdout.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for t in table:
        sys.stdout.write("  ".join(v.ljust(w) for v, w in zip(t, widths)).rstrip() + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl2trunc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, characteristic=True):
        sp.add_argument("--algebra", required=True, help='e.g. "A3", "A1+A1", "B2"')
        if characteristic:
            sp.add_argument("--characteristic", default="principal",
                            help='"principal" or comma-separated digits in {0,1,2}')
        sp.add_argument("--output", choices=("json", "table"), default="table")

    sp = sub.add_parser("report", help="pair invariants, grading and k-decomposition")
    common(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("sigma", help="the adapted-character region for principal k")
    common(sp, characteristic=False)
    sp.add_argument("--box-cap", type=int, default=DEFAULT_BOX_CAP)
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("block", help="simple objects of a truncated block")
    common(sp)
    sp.add_argument("--gamma", required=True, help='coroot evaluations, e.g. "-1,-1" or "1/2,0"')
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--orbit-cap", type=int, default=None,
                    help="max orbit size (default 10000000, or $SL2TRUNC_ORBIT_CAP)")
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("char", help="truncated t-characters")
    csub = sp.add_subparsers(dest="char_command", required=True)
    vp = csub.add_parser("verma", help="Verma t-character with gamma and Gamma^1 data")
    common(vp)
    vp.add_argument("--eweight", type=int, required=True)
    vp.add_argument("--edim", type=int, default=1)
    vp.add_argument("--cap", type=int, required=True)
    vp.add_argument("--gamma", action="store_true", help="also print gamma(mu)")
    vp.add_argument("--gamma1", action="store_true", help="also print the image k-character")
    vp.set_defaults(func=cmd_char)

    sp = sub.add_parser("certify", help="finite scans of the truncation inequalities")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emax", type=int, required=True)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("catalog", help="principal sweep over simple types")
    sp.add_argument("--max-rank", type=int, default=8)
    sp.add_argument("--box-cap", type=int, default=DEFAULT_BOX_CAP)
    sp.add_argument("--output", choices=("json", "table"), default="table")
    sp.set_defaults(func=cmd_catalog)
    return p


_VALUE_FLAGS = ("--gamma", "--characteristic")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--gamma -1,-1`` into ``--gamma=-1,-1`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        args.func(args)
    except Sl2TruncError as e:
        msg = " ".join(str(e).split())
        sys.stderr.write(f"error: {e.reason}: {msg}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
