"""Command-line front end: ``python -m hecke2b <command> ...``.

Every command prints deterministic JSON (or DOT/text where offered).  A
``--config`` file holds ``key = value`` lines whose keys are option names
(``rect = 5,4,3,3``); flags given on the command line take precedence.

Exit codes: 0 success, 1 internal error, 2 domain or validation error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .errors import DomainError, Hecke2bError
from .hecke import (
    GammaRegion,
    GenericModule,
    HeckeParams,
    build_calibrated,
    fixture_regions,
    generalized_weight_spaces,
    is_calibrated,
    is_irreducible,
    module_from_json,
    rank2_induced,
    relations_pass,
    verify_relations,
)
from .regions import (
    ContentVector,
    LocalRegion,
    configuration,
    is_skew,
    p_set,
    standard_fillings,
    standard_tableaux,
    z_set,
)
from .scalar import ONE, parse_scalar
from .schurweyl import (
    RectPair,
    bratteli,
    build_path_module,
    c0_doubled,
    count_paths,
    dimension_identity,
    lambda_to_zcJ,
    verify_path_module,
)
from .weyl import parse_root

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


# -- parsing helpers ------------------------------------------------------------------------


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise DomainError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _roots(text: Optional[str]) -> frozenset:
    if not text:
        return frozenset()
    return frozenset(parse_root(part) for part in text.split(",") if part.strip())


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


@dataclass
class RunConfig:
    """Parameters resolved from flags: exactly one of the direct or rectangle modes."""

    params: Optional[HeckeParams]
    mode: str
    rect: Optional[RectPair] = None

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        direct = [getattr(args, n, None) for n in ("t_half", "t0_half", "tk_half")]
        has_direct = any(v is not None for v in direct)
        has_rect = getattr(args, "rect", None) is not None
        if has_direct and has_rect:
            raise DomainError("give either --t-half/--t0-half/--tk-half or --rect, not both")
        check = not getattr(args, "no_check", False)
        if has_direct:
            if any(v is None for v in direct):
                raise DomainError("--t-half, --t0-half and --tk-half must be given together")
            return RunConfig(HeckeParams(*[parse_scalar(v) for v in direct], check=check), "direct")
        if has_rect:
            rect = RectPair.parse(args.rect, q=args.q)
            if check:
                rect.require_generic()
            return RunConfig(rect.params(check=check), "rect", rect)
        if getattr(args, "r1", None) is not None and getattr(args, "r2", None) is not None:
            return RunConfig(HeckeParams.from_markings(args.r1, args.r2, q=args.q, check=check), "markings")
        return RunConfig(None, "none")


def _content_vector(args: argparse.Namespace) -> ContentVector:
    if args.c is None or args.r1 is None or args.r2 is None:
        raise DomainError("--c, --r1 and --r2 are required")
    values = [x for x in args.c.replace(" ", "").split(",") if x]
    return ContentVector.from_values(values, args.r1, args.r2)


# -- commands ---------------------------------------------------------------------------------


def cmd_region(args: argparse.Namespace) -> int:
    region = LocalRegion(_content_vector(args), _roots(args.J))
    c = region.c
    tableaux = sorted(standard_tableaux(region, via="brute"))
    out: Dict[str, object] = region.to_json()
    out["Z"] = [str(r) for r in sorted(z_set(c))]
    out["P"] = [str(r) for r in sorted(p_set(c))]
    out["F"] = [list(w.window) for w in tableaux]
    out["skew"] = is_skew(region, tableaux)
    if c.is_canonical() and 0 not in (c.r1, c.r2) and c.k:
        kappa = configuration(region)
        fillings = standard_fillings(kappa)
        out["configuration"] = kappa.to_json()
        out["fillings"] = [s.to_json() for s in fillings]
        if args.format == "text":
            blocks = [kappa.render()] + [kappa.render(s) for s in fillings]
            _emit(args, "\n\n".join(blocks))
            return EXIT_OK
    _emit(args, _dump(out))
    return EXIT_OK


def _module_from_args(args: argparse.Namespace) -> GenericModule:
    """Build the module selected by exactly one source flag."""
    sources = [n for n in ("input", "rank2", "fixture", "lam", "gamma", "c") if getattr(args, n, None) is not None]
    if len(sources) != 1:
        raise DomainError("choose exactly one of --input, --rank2, --fixture, --lambda, --gamma, --c")
    source = sources[0]
    if source == "input":
        with open(args.input, encoding="utf-8") as fh:
            return module_from_json(json.load(fh))
    run = RunConfig.from_args(args)
    z = parse_scalar(args.z) if args.z is not None else ONE
    if source == "lam":
        if run.rect is None or args.k is None:
            raise DomainError("--lambda needs --rect and --k")
        return build_path_module(_int_list(args.lam), run.rect, args.k, backend=args.backend)
    params = run.params or HeckeParams.default()
    if source == "rank2":
        m = rank2_induced(args.rank2, params=params, z=z)
        return m if args.backend == "exact" else _to_float(m)
    if source == "fixture":
        regions = fixture_regions(params)
        if not 0 <= args.fixture < len(regions):
            raise DomainError(f"fixture index must lie in [0, {len(regions)})")
        region = regions[args.fixture]
    elif source == "gamma":
        gamma = [parse_scalar(g) for g in args.gamma.split(",") if g.strip()]
        region = GammaRegion(tuple(gamma), params, _roots(args.J))
    else:
        region = LocalRegion(_content_vector(args), _roots(args.J))
    normalization = "symmetric_float" if args.backend == "float" else "tau_basis"
    return build_calibrated(z, region, params, normalization=normalization)


def _to_float(m: GenericModule) -> GenericModule:
    mats = {n: np.array(mat.to_dense(), dtype=complex) for n, mat in m.mats.items()}
    return GenericModule(m.labels, mats, m.params, m.k, z=m.z, backend="float", name=m.name)


def cmd_module_build(args: argparse.Namespace) -> int:
    m = _module_from_args(args)
    out = m.to_json()
    if m.backend == "exact":
        out["weight_space_dims"] = sorted(len(b) for _, b in generalized_weight_spaces(m))
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_module_verify(args: argparse.Namespace) -> int:
    m = _module_from_args(args)
    report = verify_relations(m)
    ok = relations_pass(report)
    exact = m.backend == "exact"
    summary = {
        "dim": m.dim,
        "relations": report,
        "relations_pass": ok,
        "calibrated": is_calibrated(m) if exact else None,
        "irreducible": is_irreducible(m) if exact else None,
    }
    if args.format == "json":
        _emit(args, _dump(summary))
    else:
        lines = [f"{r['relation']}: {r['status']}" for r in report]
        lines.append(f"calibrated: {summary['calibrated']}")
        lines.append(f"irreducible: {summary['irreducible']}")
        lines.append("PASS" if ok else "FAIL")
        _emit(args, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def _rect(args: argparse.Namespace, check: bool = True) -> RectPair:
    if args.rect is None:
        raise DomainError("--rect a,c,b,d is required")
    rect = RectPair.parse(args.rect, q=args.q)
    if check and not getattr(args, "no_check", False):
        rect.require_generic()
    return rect


def cmd_bratteli(args: argparse.Namespace) -> int:
    rect = _rect(args, check=False)
    diagram = bratteli(rect, args.k, n_bound=args.n)
    _emit(args, diagram.to_dot() if args.format == "dot" else _dump(diagram.to_json()))
    return EXIT_OK


def cmd_map_lambda(args: argparse.Namespace) -> int:
    rect = _rect(args)
    lam = _int_list(args.lam)
    zcj = lambda_to_zcJ(lam, rect, args.k, check_generic=not args.no_check)
    out = {
        "rect": rect.to_json(),
        "k": args.k,
        "lambda": lam,
        "z": str(zcj.z),
        "z_sign": -1 if args.k % 2 else 1,
        "z_q_exponent": c0_doubled(lam, rect, args.k),
        "c": zcj.region.to_json()["c"],
        "J": [str(r) for r in sorted(zcj.J)],
        "paths": count_paths(rect, lam, args.k),
    }
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_verify_sw(args: argparse.Namespace) -> int:
    # The dimension identity is pure combinatorics; only the modules need genericity.
    rect = _rect(args, check=args.modules)
    report = dimension_identity(rect, args.n, args.k)
    ok = report["pass"]
    out: Dict[str, object] = {
        "rect": rect.to_json(),
        "n": args.n,
        "k": args.k,
        "dimension_identity": {"lhs": report["lhs"], "rhs": report["rhs"], "status": "PASS" if ok else "FAIL"},
    }
    if args.modules:
        checks = []
        for level in range(args.k + 1):
            for lam in bratteli(rect, level).levels[level]:
                r = verify_path_module(lam, rect, level)
                passed = r["relations_pass"] and r["irreducible"] and r["max_weight_space_dim"] <= 1 and r["weights_match"]
                ok = ok and passed
                checks.append(
                    {
                        "k": level,
                        "lambda": r["lambda"],
                        "dim": r["dim"],
                        "relations_pass": r["relations_pass"],
                        "irreducible": r["irreducible"],
                        "max_weight_space_dim": r["max_weight_space_dim"],
                        "weights_match": r["weights_match"],
                        "explicit_isomorphism": r["explicit_isomorphism"],
                        "status": "PASS" if passed else "FAIL",
                    }
                )
        out["path_modules"] = checks
    out["status"] = "PASS" if ok else "FAIL"
    _emit(args, _dump(out))
    return EXIT_OK if ok else EXIT_VERIFY


# -- argument parser ----------------------------------------------------------------------


def _add_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("parameters (direct mode or rectangle mode)")
    g.add_argument("--t-half", dest="t_half", help="t^(1/2), e.g. 2 or 3/2 or 1+i")
    g.add_argument("--t0-half", dest="t0_half")
    g.add_argument("--tk-half", dest="tk_half")
    g.add_argument("--rect", help="a,c,b,d for M = L(a^c), N = L(b^d)")
    g.add_argument("--q", default="2", help="value of q (default 2)")
    g.add_argument("--no-check", action="store_true", help="skip the genericity check")


def _add_region(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", help="contents c_1,...,c_k (integers or p/2)")
    p.add_argument("--r1", help="first marking diagonal")
    p.add_argument("--r2", help="second marking diagonal")
    p.add_argument("--J", help='comma-separated roots such as "e3-e2,e1"')


def _add_module_sources(p: argparse.ArgumentParser) -> None:
    _add_params(p)
    _add_region(p)
    p.add_argument("--input", help="module JSON written by module-build")
    p.add_argument("--rank2", help='rank-two induced family such as "L+(r1,r1)"')
    p.add_argument("--fixture", type=int, help="index into the fixture regions")
    p.add_argument("--gamma", help="multiplicative weight gamma_1,...,gamma_k")
    p.add_argument("--lambda", dest="lam", help="partition for the path module (needs --rect, --k)")
    p.add_argument("--k", type=int)
    p.add_argument("--z", help="value of W_0 (default 1)")
    p.add_argument("--backend", choices=("exact", "float"), default="exact")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecke2b", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", help="Z(c), P(c), F, the box configuration and its fillings")
    _add_region(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("module-build", help="build a module and print it as JSON")
    _add_module_sources(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_module_build)

    p = sub.add_parser("module-verify", help="check every defining relation")
    _add_module_sources(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_module_verify)

    p = sub.add_parser("bratteli", help="the Bratteli diagram of M (x) N (x) V^(x)k")
    p.add_argument("--rect")
    p.add_argument("--q", default="2")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, help="keep only partitions with at most n rows")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("map-lambda", help="the data (z, c, J) attached to a partition")
    p.add_argument("--rect")
    p.add_argument("--q", default="2")
    p.add_argument("--k", type=int, required=False)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--no-check", action="store_true", help="skip the genericity check")
    p.add_argument("--out")
    p.set_defaults(func=cmd_map_lambda)

    p = sub.add_parser("verify-sw", help="dimension identity and optional path-module checks")
    p.add_argument("--rect")
    p.add_argument("--q", default="2")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--modules", action="store_true", help="also verify every path module up to level k")
    p.add_argument("--no-check", action="store_true", help="skip the genericity check")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_sw)
    return parser


def _read_config(path: str) -> Dict[str, str]:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep option names such as J as written
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    parser.read_string("[run]\n" + text)
    return {k.replace("-", "_"): v.strip().strip('"').strip("'") for k, v in parser.items("run")}


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str], values: Dict[str, str]) -> argparse.Namespace:
    """Re-parse with config values as defaults for the chosen subcommand."""
    first = parser.parse_args(argv)
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    subparser = sub.choices[first.command]
    known = {a.dest: a for a in subparser._actions}
    aliases = {"lambda": "lam"}
    defaults = {}
    for key, raw in values.items():
        dest = aliases.get(key, key)
        if dest not in known:
            raise DomainError(f"config key {key!r} is not an option of {first.command}")
        action = known[dest]
        if isinstance(action, argparse._StoreTrueAction):
            defaults[dest] = raw.lower() in ("1", "true", "yes", "on")
        elif action.type is int:
            defaults[dest] = int(raw)
        else:
            defaults[dest] = raw
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            args = _apply_config(parser, argv, _read_config(args.config))
        if getattr(args, "k", 0) is None and args.command == "map-lambda":
            raise DomainError("--k is required")
        return args.func(args)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_DOMAIN if exc.code not in (0, None) else EXIT_OK
    except (Hecke2bError, OSError, configparser.Error) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except Exception as exc:  # pragma: no cover - reported as an internal error
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
