"""
Command-line entry point.

Usage:
    grunsky-hankel grunsky --family koebe --out table.json
    grunsky-hankel verify  --family herglotz --params 0.5,0,0.5,2.0
    grunsky-hankel audit   --family kfold_koebe --params 3 --format csv
    grunsky-hankel search  --atoms 4 --objective abs_h31 --restarts 32 --seed 42

A JSON config file (``--config``) may hold one object per subcommand; flags
given on the command line override the file.

Exit codes: 0 success, 1 verification failure on certified input,
2 configuration error, 3 insufficient truncation order.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
import warnings
from pathlib import Path

import numpy as np

from . import families
from .audit import MIN_AUDIT_ORDER, SOUND_RESIDUALS, audit_chain, maximize_phi, maximize_psi
from .errors import GrunskyHankelError, InsufficientOrder
from .families import DEFAULT_ORDER, SchlichtFunction
from .grunsky import (
    CANONICAL_PROBES,
    grunsky_residual,
    grunsky_table,
    random_probes,
    symmetry_defect,
    verify_coefficient_relations,
)
from .report import make_report, to_csv, to_json
from .search import OBJECTIVES, SearchSpec, multi_start_search

log = logging.getLogger("grunsky_hankel")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_ORDER = 0, 1, 2, 3
VERIFY_TOL = 1e-9
RELATION_NAMES = ("a2", "a3", "a4", "a5", "constraint")


class ConfigError(Exception):
    pass


def _parse_params(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip().replace(" ", "")
        if not tok:
            continue
        try:
            v = complex(tok)
        except ValueError as exc:
            raise ConfigError(f"cannot parse parameter {tok!r}") from exc
        out.append(v.real if v.imag == 0 else v)
    return out


def _function_block(f: SchlichtFunction) -> dict:
    return {
        "id": f.label,
        "family": f.family.value,
        "certified": f.certified,
        "order": f.order,
        "coefficients": list(f.coeffs.coeffs),
    }


def _audit_block(rep) -> dict:
    f = rep.source
    return {
        "function": _function_block(f),
        "h22": rep.h22,
        "h31": rep.h31,
        "b1": rep.b1,
        "b2": rep.b2,
        "b3": rep.b3,
        "b3_printed": rep.b3_printed,
        "psi_max": rep.psi_max,
        "chain_residuals": rep.chain_residuals,
        "sound_keys": list(SOUND_RESIDUALS),
        "violations": rep.violations(),
        "sound": rep.sound,
        "certified": rep.certified,
        "notes": rep.notes,
    }


def _audit(f: SchlichtFunction):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return audit_chain(f)


def _build_function(cfg: dict) -> SchlichtFunction:
    name = cfg.get("family", "koebe")
    params = cfg.get("params", [])
    if isinstance(params, str):
        params = _parse_params(params)
    order = int(cfg.get("order", DEFAULT_ORDER))
    try:
        return families.build(name, params, order)
    except InsufficientOrder:
        raise
    except (GrunskyHankelError, ValueError, TypeError, IndexError) as exc:
        raise ConfigError(f"bad function spec {cfg!r}: {exc}") from exc


def _functions(cfg: dict) -> list:
    if "functions" in cfg:
        base = {k: v for k, v in cfg.items() if k != "functions"}
        return [_build_function({**base, **item}) for item in cfg["functions"]]
    return [_build_function(cfg)]


def cmd_grunsky(cfg: dict) -> tuple:
    f = _build_function(cfg)
    max_index = int(cfg.get("max_index", 5))
    T = grunsky_table(f, max_index)
    table = [
        {"r": r, "s": s, "omega": T[r, s]}
        for r in range(1, max_index + 1, 2)
        for s in range(1, max_index + 1, 2)
    ]
    results = {
        "function": _function_block(f),
        "max_index": max_index,
        "symmetry_defect": symmetry_defect(T),
        "table": table,
    }
    return results, EXIT_OK


def cmd_verify(cfg: dict) -> tuple:
    f = _build_function(cfg)
    T = grunsky_table(f, int(cfg.get("max_index", 5)))
    res = verify_coefficient_relations(f, T)
    printed = verify_coefficient_relations(f, T, printed=True)[3]
    rng = np.random.default_rng(int(cfg.get("seed", 0)))
    n_random = int(cfg.get("probes", 8))
    probes = list(CANONICAL_PROBES) + random_probes(rng, n_random)[len(CANONICAL_PROBES) :]
    probe_rows = [{"x": list(p.x), "residual": grunsky_residual(T, p)} for p in probes]
    max_rel = float(np.max(np.abs(res)))
    min_probe = min(p["residual"] for p in probe_rows)
    ok = max_rel < VERIFY_TOL and min_probe >= -VERIFY_TOL
    results = {
        "function": _function_block(f),
        "certified": f.certified,
        "informational_only": not f.certified,
        "tolerance": VERIFY_TOL,
        "relations": [
            {"name": n, "residual": r, "modulus": abs(r)} for n, r in zip(RELATION_NAMES, res)
        ],
        "a5_printed": {"residual": printed, "modulus": abs(printed)},
        "probes": probe_rows,
        "max_residual": max(max_rel, max(0.0, -min_probe)),
        "pass": ok,
    }
    code = EXIT_FAIL if (f.certified and not ok) else EXIT_OK
    return results, code


def cmd_audit(cfg: dict) -> tuple:
    order = int(cfg.get("order", DEFAULT_ORDER))
    if order < MIN_AUDIT_ORDER:
        raise InsufficientOrder(f"audit needs truncation order >= {MIN_AUDIT_ORDER}, got {order}")
    reps = [_audit(f) for f in _functions(cfg)]
    results = {
        "reports": [_audit_block(r) for r in reps],
        "extrema": {"phi": maximize_phi(), "psi": maximize_psi()},
        "sound": all(r.sound for r in reps if r.certified),
    }
    code = EXIT_FAIL if any(r.certified and not r.sound for r in reps) else EXIT_OK
    return results, code


def search_spec_from(cfg: dict) -> SearchSpec:
    fields = ("family", "atoms", "objective", "restarts", "seed", "max_evals", "truncation")
    kw = {k: cfg[k] for k in fields if k in cfg}
    if "order" in cfg and "truncation" not in kw:
        kw["truncation"] = cfg["order"]
    try:
        for k in ("atoms", "restarts", "seed", "max_evals", "truncation"):
            if k in kw:
                kw[k] = int(kw[k])
        return SearchSpec(**kw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad search spec: {exc}") from exc


def cmd_search(cfg: dict) -> tuple:
    spec = search_spec_from(cfg)
    res = multi_start_search(spec)
    rep = res.audit
    results = {
        "spec": spec.__dict__,
        "best_value": res.best_value,
        "best_params": res.best_params,
        "best_function": _function_block(res.best_function),
        "evals_used": res.evals_used,
        "history": [{"restart": r, "value": v} for r, v in res.history],
        "budget_exhausted": res.budget_exhausted,
        "audit": _audit_block(rep),
    }
    return results, EXIT_OK


COMMANDS = {
    "grunsky": cmd_grunsky,
    "verify": cmd_verify,
    "audit": cmd_audit,
    "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grunsky-hankel",
        description="Grunsky coefficients, Hankel determinants and bound audits for univalent functions.",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", type=Path, help="JSON file with one object per subcommand")
    p.add_argument("--family", choices=[f.value for f in families.Family], help="function family")
    p.add_argument("--params", help="comma-separated family parameters")
    p.add_argument("--order", type=int, help=f"truncation order N (default {DEFAULT_ORDER})")
    p.add_argument("--out", type=Path, help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--max-index", type=int, dest="max_index", help="largest odd Grunsky index")
    p.add_argument("--atoms", type=int, help="Herglotz atom count for search")
    p.add_argument("--objective", choices=sorted(OBJECTIVES), help="search objective")
    p.add_argument("--max-evals", type=int, dest="max_evals", help="search evaluation budget")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        section = data.get(args.command, {})
        if not isinstance(section, dict):
            raise ConfigError(f"config section {args.command!r} must be an object")
        cfg.update(section)
    for key in ("family", "params", "order", "seed", "restarts", "max_index", "atoms", "objective", "max_evals"):
        v = getattr(args, key)
        if v is not None:
            cfg[key] = v
    if args.command == "search" and cfg.get("family") not in (None, "herglotz", "convex", "identity"):
        raise ConfigError("search supports the herglotz, convex and identity families")
    cfg.setdefault("format", "json")
    if args.format is not None:
        cfg["format"] = args.format
    if cfg["format"] not in ("json", "csv"):
        raise ConfigError(f"unknown format {cfg['format']!r}")
    if args.out is not None:
        cfg["out"] = str(args.out)
    return cfg


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(message)s")
    t0 = time.perf_counter()
    try:
        cfg = resolve_config(args)
        results, code = COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InsufficientOrder as exc:
        print(f"insufficient order: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except (GrunskyHankelError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    inputs = {k: v for k, v in cfg.items() if k not in ("out", "format")}
    report = make_report(args.command, inputs, results, {"total_seconds": time.perf_counter() - t0})
    text = to_csv(report) if cfg["format"] == "csv" else to_json(report)
    if "out" in cfg:
        Path(cfg["out"]).write_text(text)
        log.info("wrote %s", cfg["out"])
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
