"""Command-line front end: generate matrices, run suites, export reports.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on bad flags.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import checks, rtt
from .cg import StructureTensor, extended_rhat, sigma_cg, sigma_cg_family, structure_constants
from .laurent import SpaceConfig, op_r
from .operators import Operator, from_functional
from .scalars import Scalar, ScalarParseError

DEFAULT_SEED = 20090

VERIFY_SUITES = ("braid", "ybe", "cybe", "components", "ybfr", "qlie", "rtt")


@dataclass
class Config:
    n: int
    beta: Optional[Fraction] = None  # None means symbolic
    c: Optional[Fraction] = None
    p: Optional[Fraction] = None
    fmt: str = "json"
    out: Optional[str] = None
    seed: int = DEFAULT_SEED
    jobs: int = 1

    @property
    def subs(self) -> Optional[dict]:
        subs = {}
        if self.beta is not None:
            subs["beta"] = self.beta
        if self.c is not None:
            subs["c"] = self.c
        if self.p is not None:
            subs["p"] = self.p
        return subs or None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(parser, args)
    try:
        if args.command == "gen":
            return _cmd_gen(args, cfg)
        if args.command == "verify":
            return _cmd_verify(args, cfg, parser)
        if args.command == "cross-check":
            return _cmd_cross_check(args, cfg)
        if args.command == "dump-relations":
            return _cmd_dump(args, cfg)
    except ScalarParseError as exc:
        parser.error(str(exc))
    raise AssertionError(f"unhandled command {args.command}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlie",
        description="Generate and verify the Cremmer-Gervais quantum Lie algebra data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="space size, >= 1")
        p.add_argument("--beta", default="symbolic", help="rational value for b, or 'symbolic'")
        p.add_argument("--C", dest="c", default="symbolic", help="rational value for C, or 'symbolic'")
        p.add_argument("--p", default="symbolic", help="nonzero rational value for p, or 'symbolic'")
        p.add_argument("--out", default=None, help="write output to this file instead of stdout")

    gen = sub.add_parser("gen", help="emit a matrix or the structure constants")
    gen.add_argument("target", choices=("sigma", "sigma-family", "extended", "constants"))
    common(gen)
    gen.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("suite", choices=VERIFY_SUITES + ("hecke", "all"))
    common(ver)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized pre-filters")
    ver.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("QLIE_JOBS", "1")),
        help="suite-level parallelism (default: QLIE_JOBS or 1)",
    )
    ver.add_argument(
        "--corrupt",
        default=None,
        metavar="(I,J;K,L)=COEFF",
        help="override one entry of the operator under test (mutation testing)",
    )
    ver.add_argument(
        "--corrupt-constants",
        default=None,
        metavar="(K;I,J)=COEFF",
        help="override one structure constant (mutation testing)",
    )

    cross = sub.add_parser("cross-check", help="functional matrix vs closed-form blocks")
    common(cross)
    cross.add_argument(
        "--flip-s-sign",
        action="store_true",
        help="negate the C-term of the functional operator (mutation testing)",
    )

    dump = sub.add_parser("dump-relations", help="dump every exchange and calculus relation")
    common(dump)
    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Config:
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")

    def rational(text: str, flag: str) -> Optional[Fraction]:
        if text == "symbolic":
            return None
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            parser.error(f"{flag} expects a rational number or 'symbolic', got {text!r}")

    beta = rational(args.beta, "--beta")
    c = rational(args.c, "--C")
    p = rational(args.p, "--p")
    if p is not None and p == 0:
        parser.error("--p must be nonzero")
    return Config(
        n=args.n,
        beta=beta,
        c=c,
        p=p,
        fmt=getattr(args, "fmt", "json"),
        out=args.out,
        seed=getattr(args, "seed", DEFAULT_SEED),
        jobs=max(1, getattr(args, "jobs", 1)),
    )


def _emit(text: str, cfg: Config) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- gen ---------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace, cfg: Config) -> int:
    target = args.target
    if target == "constants":
        tensor = structure_constants(cfg.n)
        if cfg.subs:
            entries = {
                key: coeff.substitute(**cfg.subs)
                for key, coeff in tensor.entries.items()
            }
            tensor = StructureTensor(cfg.n, entries)
        text = {"json": tensor.to_json, "csv": tensor.to_csv, "text": tensor.to_text}[cfg.fmt]()
        _emit(text, cfg)
        return 0
    builder = {
        "sigma": sigma_cg,
        "sigma-family": sigma_cg_family,
        "extended": extended_rhat,
    }[target]
    op = builder(cfg.n)
    if cfg.subs:
        op = op.map_entries(lambda s: s.substitute(**cfg.subs))
    text = {"json": op.to_json, "csv": op.to_csv, "text": op.to_text}[cfg.fmt]()
    _emit(text, cfg)
    return 0


# -- verify ------------------------------------------------------------------


def _parse_entry_override(text: str) -> tuple[tuple[int, ...], tuple[int, ...], Scalar]:
    m = re.fullmatch(r"\s*\(([\d\s,]+);([\d\s,]+)\)\s*=\s*(.+)", text)
    if not m:
        raise ScalarParseError(f"bad entry override {text!r}", 0)
    out = tuple(int(x) for x in m.group(1).split(","))
    inp = tuple(int(x) for x in m.group(2).split(","))
    return out, inp, Scalar.parse(m.group(3))


def _parse_constant_override(text: str) -> tuple[int, tuple[int, int], Scalar]:
    m = re.fullmatch(r"\s*\((\d+)\s*;([\d\s,]+)\)\s*=\s*(.+)", text)
    if not m:
        raise ScalarParseError(f"bad constant override {text!r}", 0)
    lower = tuple(int(x) for x in m.group(2).split(","))
    if len(lower) != 2:
        raise ScalarParseError(f"bad constant override {text!r}", 0)
    return int(m.group(1)), lower, Scalar.parse(m.group(3))


def _run_one_suite(name: str, cfg: Config, args: argparse.Namespace) -> checks.VerificationReport:
    subs = cfg.subs
    corrupt = getattr(args, "corrupt", None)
    corrupt_ct = getattr(args, "corrupt_constants", None)

    def corrupted(op: Operator) -> Operator:
        if not corrupt:
            return op
        out, inp, coeff = _parse_entry_override(corrupt)
        return op.with_entry(out, inp, coeff)

    def corrupted_constants(ct: StructureTensor) -> StructureTensor:
        if not corrupt_ct:
            return ct
        upper, lower, coeff = _parse_constant_override(corrupt_ct)
        return ct.with_entry(upper, lower[0], lower[1], coeff)

    if name == "braid":
        return checks.suite_braid(cfg.n, subs, rhat=corrupted(extended_rhat(cfg.n)))
    if name == "ybe":
        return checks.suite_ybe(cfg.n, subs, rhat=corrupted(extended_rhat(cfg.n)))
    if name == "cybe":
        r = from_functional(op_r, SpaceConfig(cfg.n))
        return checks.suite_cybe(cfg.n, subs, r_matrix=corrupted(r))
    if name == "components":
        return checks.check_component_identities(cfg.n, subs)
    if name == "ybfr":
        return checks.check_quadratic_ybe_components(cfg.n, subs)
    if name == "qlie":
        return checks.suite_qlie(
            cfg.n,
            subs,
            sigma=corrupted(sigma_cg(cfg.n)) if corrupt else None,
            constants=corrupted_constants(structure_constants(cfg.n)),
        )
    if name == "rtt":
        return rtt.compare_relation_spans(
            cfg.n,
            seed=cfg.seed,
            bcc_constants=corrupted_constants(structure_constants(cfg.n)) if corrupt_ct else None,
        )
    if name == "hecke":
        return checks.suite_hecke(cfg.n, subs)
    raise AssertionError(f"unhandled suite {name}")


def _cmd_verify(args: argparse.Namespace, cfg: Config, parser: argparse.ArgumentParser) -> int:
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    if cfg.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(lambda s: _run_one_suite(s, cfg, args), names))
    else:
        reports = [_run_one_suite(name, cfg, args) for name in names]
    payload = json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n"
    _emit(payload, cfg)
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{report.suite}: {status} ({report.checked} checked, "
            f"{report.failures} failures, {report.millis} ms)",
            file=sys.stderr,
        )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_cross_check(args: argparse.Namespace, cfg: Config) -> int:
    report = checks.suite_cross_check(cfg.n, flip_s_sign=args.flip_s_sign)
    _emit(json.dumps(report.to_json_dict(), indent=2) + "\n", cfg)
    status = "PASS" if report.passed else "FAIL"
    print(f"cross-check: {status} ({report.failures} failures)", file=sys.stderr)
    return 0 if report.passed else 1


def _cmd_dump(args: argparse.Namespace, cfg: Config) -> int:
    _emit(rtt.dump_relations(cfg.n), cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
