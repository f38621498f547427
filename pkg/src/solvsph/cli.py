"""Command line interface.

    solvsph check  <file | --preset NAME>          sphericity + consistency
    solvsph semigroup <file | --preset NAME> [--json]
    solvsph verify <file | --preset NAME> [--height H] [--cap D] [--trials T]
    solvsph presets list | show NAME

Exit codes: 0 success, 1 negative verdict or failed check, 2 input error.
Options fall back to SOLVSPH_HEIGHT / SOLVSPH_CAP / SOLVSPH_TRIALS /
SOLVSPH_SEED and then to the config's [options] section.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle, presets
from .config import JobConfig, build_subgroup, parse_config_text
from .errors import AxiomViolation, ConfigParseError, NotSpherical, SolvsphError
from .rootsys import fmt_root, fmt_weight
from .semigroup import anchor_weights, bounded_members, generators
from .sphericity import active_roots, check_spherical, verify_active_axioms


def _parse_group_override(text):
    parts = text.replace("X", "x").split("x")
    out = []
    for p in parts:
        p = p.strip()
        if len(p) < 2 or not p[1:].isdigit():
            raise ConfigParseError(f"bad group spec {p!r} (expected e.g. A2 or A1xC2)")
        out.append((p[0].upper(), int(p[1:])))
    return tuple(out)


def load_config(args) -> JobConfig:
    if args.preset:
        override = _parse_group_override(args.group) if getattr(args, "group", None) else None
        try:
            return presets.get_preset(args.preset, override)
        except (KeyError, ValueError) as exc:
            raise ConfigParseError(str(exc))
    if not args.config:
        raise ConfigParseError("either a config file or --preset is required")
    with open(args.config) as fh:
        return parse_config_text(fh.read())


def _resolve(flag_value, env_name, config_value):
    if flag_value is not None:
        return flag_value
    env = os.environ.get(env_name)
    if env is not None:
        return int(env)
    return config_value


def cmd_check(config: JobConfig, out=None):
    """Validation, weight table, sphericity verdict, consistency report."""
    out = out if out is not None else sys.stdout
    sub = build_subgroup(config)
    print(f"group: {sub.root_system.describe()}   (n = {sub.root_system.n}, "
          f"d = {sub.tau.d}, dim N = {sub.dim_n} of {sub.dim_u})", file=out)
    print("weight table:", file=out)
    for phi, roots, c in sub.weight_table():
        names = " ".join(fmt_root(r) for r in roots)
        print(f"  chi={list(phi)}  codim={c}  roots: {names}", file=out)
    verdict = check_spherical(sub)
    if not verdict.spherical:
        print(f"NOT spherical: {verdict.violations}", file=out)
        return 1
    table = active_roots(sub)
    print(f"spherical: yes   (m = {table.m})", file=out)
    for i, fam in enumerate(table.families):
        names = " ".join(fmt_root(r) for r in fam.roots)
        anchors = " ".join(f"a{table.anchor[r.coords] + 1}" for r in fam.roots)
        print(f"  family {i + 1}: chi={list(fam.phi)}  roots: {names}  anchors: {anchors}", file=out)
    report = verify_active_axioms(sub, table)
    checks = ", ".join(f"{k}={v}" for k, v in sorted(report.checks.items()))
    print(f"consistency checks passed: {checks}", file=out)
    return 0


def _generators_json(config, sub, gens):
    return {
        "schema": 1,
        "config": config.to_json_dict(),
        "spherical": True,
        "n": gens.n,
        "m": gens.m,
        "generators": {
            "torus": [
                {"weight": list(w.coords), "chi": list(chi)} for w, chi in gens.torus_gens
            ],
            "active": [
                {
                    "weight": list(w.coords),
                    "chi": list(chi),
                    "family_weight": list(lam.coords),
                }
                for (w, chi), lam in zip(gens.active_gens, gens.anchor_wts)
            ],
        },
    }


def cmd_semigroup(config: JobConfig, as_json=False, out=None):
    """The free generators, as a table or as JSON."""
    out = out if out is not None else sys.stdout
    sub = build_subgroup(config)
    verdict = check_spherical(sub)
    if not verdict.spherical:
        print(f"NOT spherical: {verdict.violations}", file=out)
        return 1
    table = active_roots(sub)
    gens = generators(sub, table)
    if as_json or config.options.format == "json":
        print(json.dumps(_generators_json(config, sub, gens), indent=2, sort_keys=True), file=out)
        return 0
    print(f"{gens.n + gens.m} free generators (n = {gens.n}, m = {gens.m}):", file=out)
    for w, chi in gens.torus_gens:
        print(f"  ({fmt_weight(w)}, chi={list(chi)})   weight={list(w.coords)}  [torus]", file=out)
    for w, chi in gens.active_gens:
        print(f"  ({fmt_weight(w)}, chi={list(chi)})   weight={list(w.coords)}  [active]", file=out)
    return 0


def cmd_verify(config: JobConfig, height=None, cap=None, trials=None, seed=None, out=None):
    """Brute-force verification; one pass/fail line per criterion."""
    out = out if out is not None else sys.stdout
    height = _resolve(height, "SOLVSPH_HEIGHT", config.options.height_bound)
    cap = _resolve(cap, "SOLVSPH_CAP", config.options.dim_cap)
    trials = _resolve(trials, "SOLVSPH_TRIALS", config.options.trials)
    seed = _resolve(seed, "SOLVSPH_SEED", config.options.seed)

    sub = build_subgroup(config)
    verdict = check_spherical(sub)
    if not verdict.spherical:
        print(f"NOT spherical: {verdict.violations}", file=out)
        return 1
    table = active_roots(sub)
    gens = generators(sub, table)
    realization = oracle.build_realization(sub.algebra)
    rs = sub.root_system
    failures = 0

    def emit(ok, label):
        nonlocal failures
        failures += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] {label}", file=out)

    records = oracle.enumerate_semigroup(sub, realization, height, cap)
    emit(all(r.dim <= 1 for r in records), f"multiplicity free: {len(records)} records, all dim <= 1")

    found = {r.pair(rs) for r in records}
    member = bounded_members(gens, height)
    consistent = all(gens.decompose(p) is not None for p in member)
    emit(member == found and consistent,
         f"semigroup matches enumeration up to height {height}: {len(found)} pairs")

    for j in range(table.m):
        lam = anchor_weights(table, rs)[j]
        mod = oracle.build_irrep(realization, lam, cap)
        w = oracle.semi_invariant_witness(mod, sub, table, j)
        ok = any(x != 0 for x in w) and oracle.annihilated_by_nil(mod, sub, w)
        chi = oracle.vector_s_weight(mod, sub, w)
        expect = tuple(a - b for a, b in zip(sub.tau.restrict(lam), table.families[j].phi))
        emit(ok and chi == expect, f"witness vector for family {j + 1} is a semi-invariant")

    emit(oracle.open_orbit_check(sub, realization, trials=trials, seed=seed),
         f"open orbit witnessed within {trials} trials")
    return 1 if failures else 0


def cmd_presets(action, name=None, out=None):
    out = out if out is not None else sys.stdout
    if action == "list":
        for n in presets.preset_names():
            print(f"{n:20s} {presets.preset_description(n)}", file=out)
        return 0
    if name not in presets.preset_names():
        print(f"unknown preset {name!r}", file=out)
        return 2
    print(presets.get_preset(name).to_text(), end="", file=out)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(prog="solvsph", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("config", nargs="?", help="config file (or use --preset)")
        p.add_argument("--preset", help="bundled configuration name")
        p.add_argument("--group", help="group override for parametrized presets, e.g. A3")

    p_check = subs.add_parser("check", help="validate and test sphericity")
    add_source(p_check)

    p_semi = subs.add_parser("semigroup", help="print the free generators")
    add_source(p_semi)
    p_semi.add_argument("--json", action="store_true", help="machine-readable output")

    p_verify = subs.add_parser("verify", help="run the brute-force verification")
    add_source(p_verify)
    p_verify.add_argument("--height", type=int, help="enumeration height bound")
    p_verify.add_argument("--cap", type=int, help="module dimension cap")
    p_verify.add_argument("--trials", type=int, help="open-orbit sample count")
    p_verify.add_argument("--seed", type=int, help="random seed")

    p_presets = subs.add_parser("presets", help="list or show bundled configurations")
    p_presets.add_argument("action", choices=["list", "show"])
    p_presets.add_argument("name", nargs="?")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "presets":
            return cmd_presets(args.action, args.name)
        config = load_config(args)
        if args.command == "check":
            return cmd_check(config)
        if args.command == "semigroup":
            return cmd_semigroup(config, as_json=args.json)
        return cmd_verify(config, args.height, args.cap, args.trials, args.seed)
    except (NotSpherical, AxiomViolation) as exc:
        print(f"negative: {exc}", file=sys.stderr)
        return 1
    except (SolvsphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
