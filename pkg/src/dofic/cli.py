"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

Examples:
  dofic region --m1 3 --m2 1 --n1 4 --n2 2 --csi delayed
  dofic classify --m1 7 --m2 3 --n1 5 --n2 4 --format table
  dofic simulate --m1 3 --m2 1 --n1 4 --n2 2 --corner Po21 --trials 20 --seed 7
  dofic sweep --max 6 --check equality --trials 5
  dofic plotdata --m1 3 --m2 3 --n1 2 --n2 2 --out plots/
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path

from . import report
from .classify import TABLE, CornerLabel, classify_case, csi_comparison, taxonomy_check
from .config import AntennaConfig, CsiRegime, canonicalize
from .errors import AchievabilityGap, DoficError
from .polytope import RegionRelation
from .regions import region_for
from .schemes import build_corner_scheme, inflate_d1, simulate_scheme, verify_region
from .schemes.simulate import default_seed

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _antenna_flags(p):
    for name in ("m1", "m2", "n1", "n2"):
        p.add_argument(f"--{name}", type=int, required=True)


def _config(args) -> AntennaConfig:
    try:
        return AntennaConfig(args.m1, args.m2, args.n1, args.n2)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc


def _emit(text: str):
    sys.stdout.write(text)


def cmd_region(args) -> int:
    doc = report.region_report(_config(args), args.csi)
    if args.format == "json":
        _emit(report.to_json(doc))
    elif args.format == "csv":
        _emit(report.vertices_csv(region_for(_config(args), args.csi).vertices))
    else:
        _emit(report.region_table(doc))
    return EXIT_OK


def cmd_classify(args) -> int:
    doc = report.classify_report(_config(args))
    _emit(report.to_json(doc) if args.format == "json" else report.classify_table(doc))
    return EXIT_OK


def cmd_simulate(args) -> int:
    config = _config(args)
    canonical, swapped = canonicalize(config)
    case = classify_case(canonical)
    available = TABLE[case].corners
    if args.corner == "all":
        corners = list(available)
    else:
        try:
            corner = CornerLabel(args.corner)
        except ValueError:
            raise UsageError(f"unknown corner {args.corner!r}; choose from {[c.value for c in CornerLabel]}")
        if corner not in available:
            raise UsageError(f"CornerUndefinedForCase: corner {corner.value} is not defined for case {case.value}")
        corners = [corner]
    if not corners:
        raise UsageError(f"case {case.value} has no corner schemes; its region needs no CSI")
    seed = default_seed() if args.seed is None else args.seed
    docs, ok = [], True
    for corner in corners:
        scheme = build_corner_scheme(canonical, corner)
        if args.inflate_d1:
            scheme = inflate_d1(scheme, args.inflate_d1)
        sim = simulate_scheme(scheme, seed, args.trials, args.field)
        ok &= sim.all_passed
        docs.append(report.simulation_doc(sim, swapped))
    doc = {"config": report.config_doc(config), "swapped": swapped, "case": case.value, "seed": seed,
           "simulations": docs}
    if args.format == "json":
        _emit(report.to_json(doc))
    else:
        for d in docs:
            _emit(f"{d['corner']}: T={d['T']} dof=({d['dof'][0]},{d['dof'][1]}) "
                  f"{d['passes']}/{d['trials']} trials decodable\n")
    return EXIT_OK if ok else EXIT_FAIL


# Sweep checks return (status, detail) with status in {"ok", "deviation", "fail"}.

def _check_equality(config: AntennaConfig, trials: int, seed: int, field: str):
    try:
        rep = verify_region(config, trials, seed, field)
    except AchievabilityGap as exc:
        return "fail", str(exc)
    return "ok", rep.mode


def _check_taxonomy(config: AntennaConfig, *_):
    tax = taxonomy_check(config)
    if tax.ok:
        return "ok", tax.case.value
    return "fail", f"case {tax.case.value}: computed {report.labels(tax.computed)}"


def _check_chain(config: AntennaConfig, *_):
    cmp = csi_comparison(config)
    allowed = (RegionRelation.EQUAL, RegionRelation.FIRST_STRICT_SUBSET)
    if cmp.no_vs_delayed not in allowed or cmp.delayed_vs_perfect not in allowed:
        return "fail", f"containment broken: {cmp.no_vs_delayed.value}, {cmp.delayed_vs_perfect.value}"
    if cmp.agrees:
        return "ok", cmp.case.value
    if cmp.documented_deviation:
        return "deviation", f"case {cmp.case.value}: " + ", ".join(sorted(cmp.flags))
    return "fail", f"case {cmp.case.value}: computed {cmp.no_vs_delayed.value}/{cmp.delayed_vs_perfect.value}"


CHECKS = {"equality": _check_equality, "taxonomy": _check_taxonomy, "chain": _check_chain}


def _run_check(job):
    name, tup, trials, seed, field = job
    return CHECKS[name](AntennaConfig(*tup), trials, seed, field)


def sweep(check: str, k_max: int, trials: int = 5, seed: int = 0, field: str = "rational", jobs: int = 1) -> dict:
    """Run ``check`` over every tuple in {1..k_max}^4 via its canonical representative."""
    tuples = list(product(range(1, k_max + 1), repeat=4))
    reps = sorted({canonicalize(AntennaConfig(*t))[0].tuple for t in tuples})
    work = [(check, r, trials, seed, field) for r in reps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(zip(reps, pool.map(_run_check, work, chunksize=8)))
    else:
        results = dict(zip(reps, map(_run_check, work)))
    failures, deviations = [], []
    for t in tuples:
        status, detail = results[canonicalize(AntennaConfig(*t))[0].tuple]
        if status == "fail":
            failures.append({"config": list(t), "detail": detail})
        elif status == "deviation":
            deviations.append({"config": list(t), "detail": detail})
    return {
        "check": check, "max": k_max, "configs": len(tuples), "canonical": len(reps),
        "trials": trials if check == "equality" else None, "seed": seed if check == "equality" else None,
        "failures": failures, "documented_deviations": deviations,
        "passed": len(tuples) - len(failures) - len(deviations),
    }


def cmd_sweep(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    seed = default_seed() if args.seed is None else args.seed
    doc = sweep(args.check, args.max, args.trials, seed, args.field, args.jobs)
    if args.format == "json":
        _emit(report.to_json(doc))
    else:
        _emit(f"{doc['check']}: {doc['configs']} configs ({doc['canonical']} canonical), "
              f"{len(doc['failures'])} failures, {len(doc['documented_deviations'])} documented deviations\n")
        for f in doc["failures"]:
            _emit(f"  FAIL {tuple(f['config'])}: {f['detail']}\n")
    return EXIT_FAIL if doc["failures"] else EXIT_OK


def cmd_plotdata(args) -> int:
    config = _config(args)
    out = Path(args.out)
    stem = "dof_{}_{}_{}_{}".format(*config.tuple)
    regimes = (CsiRegime.NO_CSI, CsiRegime.DELAYED, CsiRegime.PERFECT)
    sidecar = {"config": report.config_doc(config), "regimes": {}}
    files = {}
    for regime in regimes:
        region = region_for(config, regime)
        files[out / f"{stem}_{regime.value}.csv"] = report.vertices_csv(region.vertices)
        sidecar["regimes"][regime.value] = report.region_doc(region)
    files[out / f"{stem}_bounds.json"] = report.to_json(sidecar)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for path, text in files.items():
            path.write_text(text, encoding="utf-8")
    except OSError as exc:
        sys.stderr.write(f"dofic: cannot write plot data: {exc}\n")
        return EXIT_IO
    for path in files:
        _emit(f"{path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dofic", description="DoF regions of the two-user MIMO interference channel.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("region", help="bounds, active bounds and vertices of a region")
    _antenna_flags(p)
    p.add_argument("--csi", choices=[r.value for r in CsiRegime], default="delayed")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("classify", help="case label, corners and regime comparison")
    _antenna_flags(p)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="simulate corner schemes on random channels")
    _antenna_flags(p)
    p.add_argument("--corner", default="all", help="corner label (P12, Po21, ...) or 'all'")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=None, help="default: $DOFIC_SEED or 0")
    p.add_argument("--field", choices=["rational", "prime"], default="rational")
    p.add_argument("--inflate-d1", type=int, default=0, metavar="K",
                   help="negative control: add K user-1 symbols without extra slots")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="run a check over all configs in {1..K}^4")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--check", choices=sorted(CHECKS), default="taxonomy")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--field", choices=["rational", "prime"], default="rational")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plotdata", help="write per-regime vertex CSVs and a bounds JSON")
    _antenna_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "trials", 1) is not None and getattr(args, "trials", 1) < 1:
            raise UsageError("--trials must be >= 1")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"dofic: error: {exc}\n")
        return EXIT_USAGE
    except DoficError as exc:
        sys.stderr.write(f"dofic: error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
