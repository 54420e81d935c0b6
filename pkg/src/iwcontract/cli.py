"""Command-line front end.

    iwcontract build      --family C --rank 2
    iwcontract invariants --family C --rank 2 --out inv.json
    iwcontract verify     --family A --rank 2 --suites all --seed 7
    iwcontract index      --family B --rank 3

Exit codes: 0 all pass, 1 some check failed, 2 inconclusive (no failure),
3 usage or configuration error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .errors import IWContractError, UnsupportedFamily, UnsupportedRank
from .liecore import AlgebraSpec, dumps_algebra
from . import verify as V

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
COMMANDS = ("build", "invariants", "verify", "index")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    command: str
    family: str
    rank: int
    mode: str | None = None
    seed: int = 0
    samples: int = 25
    suites: tuple[str, ...] = V.SUITES
    out: str | None = None

    @property
    def spec(self) -> AlgebraSpec:
        return AlgebraSpec(self.family, self.rank)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="iwcontract", allow_abbrev=False,
                description="Contractions b x| (u^-)^a of classical simple Lie algebras")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--family", required=True, choices=("A", "B", "C", "D"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--mode", choices=("symbolic", "sampled"), default=None,
                   help="default: symbolic for rank <= 3 or A_l with l <= 4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--suites", default="all",
                   help="comma list of " + ",".join(V.SUITES) + ",all")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    return p


def _parse_suites(text: str, family: str) -> tuple[str, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise UsageError("--suites is empty")
    out: list[str] = []
    for n in names:
        if n == "all":
            # the null-cone suite needs nilpotent representatives, built only in type A
            out.extend(s for s in V.SUITES if s != "nullcone" or family == "A")
        elif n in V.SUITES:
            out.append(n)
        else:
            raise UsageError(f"unknown suite {n!r}")
    return tuple(s for s in V.SUITES if s in out)


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    if ns.samples < 1:
        raise UsageError("--samples must be positive")
    return CliConfig(ns.command, ns.family, ns.rank, ns.mode, ns.seed, ns.samples,
                     _parse_suites(ns.suites, ns.family), ns.out)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("IWCONTRACT_THREADS", "1")))
    except ValueError:
        return 1


def _suite_job(args):
    spec, suite, mode, seed, samples = args
    return V.run_suite(spec, suite, mode, seed, samples)


def run_verify(cfg: CliConfig) -> tuple[dict, int]:
    spec = cfg.spec
    mode = cfg.mode or V.default_mode(spec)
    if "nullcone" in cfg.suites and spec.family != "A":
        raise UnsupportedFamily("the nullcone suite needs type A")
    jobs = [(spec, s, mode, cfg.seed, cfg.samples) for s in cfg.suites]
    n = min(_threads(), len(jobs))
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            parts = list(pool.map(_suite_job, jobs))
    else:
        parts = [_suite_job(j) for j in jobs]
    checks = [c for part in parts for c in part]
    doc = V.report_document(spec, mode, cfg.seed, checks)
    doc["suites"] = list(cfg.suites)
    doc["status"] = V.overall_status(checks)
    code = {V.PASS: EXIT_PASS, V.FAIL: EXIT_FAIL, V.INCONCLUSIVE: EXIT_INCONCLUSIVE}[doc["status"]]
    return doc, code


def run_index(cfg: CliConfig) -> tuple[dict, int]:
    checks = V.check_index_and_degrees(cfg.spec, cfg.seed, samples=5)
    doc = V.report_document(cfg.spec, "sampled", cfg.seed, checks)
    doc["status"] = V.overall_status(checks)
    code = {V.PASS: EXIT_PASS, V.FAIL: EXIT_FAIL, V.INCONCLUSIVE: EXIT_INCONCLUSIVE}[doc["status"]]
    return doc, code


def run_invariants(cfg: CliConfig) -> tuple[dict, int]:
    from .invariants import hat_invariants
    inv = hat_invariants(cfg.spec)
    return {"spec": cfg.spec.to_json(), "generators": inv.generator_docs()}, EXIT_PASS


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n")


def run_cli(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        if cfg.command == "build":
            _emit(dumps_algebra(cfg.spec), cfg.out)
            return EXIT_PASS
        runner = {"invariants": run_invariants, "verify": run_verify, "index": run_index}[cfg.command]
        doc, code = runner(cfg)
        _emit(json.dumps(doc, sort_keys=True, indent=1), cfg.out)
        return code
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"iwcontract: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedRank, UnsupportedFamily) as exc:
        print(f"iwcontract: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IWContractError as exc:
        print(f"iwcontract: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run_cli())
