"""Command line front end.

Three subcommands cover the package's capabilities:

* ``verify --a 1,0,0`` emits a cancellation certificate (exit 0 when
  verified, 1 when any check fails, 2 on usage errors).
* ``eval --zeta 1,3 --digits 50`` evaluates one zeta value with the fast
  engine and reports how many digits the slow series oracle confirms.
* ``check --family bbbl --n 1 --m 1`` runs a numeric rationality check and
  writes a report; ``--sweep`` iterates a whole family under the weight
  cap, optionally in parallel with ``--jobs``.

``MULTIZETA_DIGITS`` and ``MULTIZETA_WEIGHT_CAP`` override the built-in
defaults; explicit flags beat both.  Output is deterministic for identical
inputs and configuration: fixed key order, no timestamps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from mpmath import mp

from .numerics import (
    DEFAULT_DIGITS,
    DEFAULT_MAX_DENOMINATOR,
    DEFAULT_WEIGHT_CAP,
    check_bbbl_family,
    check_bowman_bradley,
    check_cyclic_insertion,
    check_symmetric_sum,
    eval_mzv_fast,
    eval_mzv_series,
    _weak_compositions,
)
from .verifier import build_instance, verify_instance
from .words import Composition

ORACLE_TERMS = 5000

FAMILIES = ("symmetric", "cyclic", "bowman-bradley", "bbbl")


@dataclass
class RunConfig:
    digits: int = DEFAULT_DIGITS
    max_denominator: int = DEFAULT_MAX_DENOMINATOR
    weight_cap: int = DEFAULT_WEIGHT_CAP
    fmt: str = "json"
    output: Optional[str] = None
    jobs: int = 1


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _int_tuple(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _add_shared_flags(sub: argparse.ArgumentParser, formats: Tuple[str, ...]) -> None:
    sub.add_argument(
        "--digits",
        type=int,
        default=_env_int("MULTIZETA_DIGITS", DEFAULT_DIGITS),
        help="working precision in decimal digits (default %(default)s)",
    )
    sub.add_argument(
        "--max-denominator",
        type=int,
        default=DEFAULT_MAX_DENOMINATOR,
        help="largest denominator accepted by rational readback (default %(default)s)",
    )
    sub.add_argument(
        "--weight-cap",
        type=int,
        default=_env_int("MULTIZETA_WEIGHT_CAP", DEFAULT_WEIGHT_CAP),
        help="refuse instances above this weight (default %(default)s)",
    )
    sub.add_argument("--output", default=None, help="write to this path instead of stdout")
    sub.add_argument(
        "--format",
        dest="fmt",
        choices=formats,
        default="json",
        help="output format (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multizeta",
        description="cancellation certificates and pi-power rationality checks for "
        "interleaved 2-block zeta values",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="emit a cancellation certificate")
    p_verify.add_argument(
        "--a", required=True, type=_int_tuple, metavar="B0,B1,...",
        help="block vector, an odd-length list of insertion counts",
    )
    _add_shared_flags(p_verify, ("json", "text"))

    p_eval = sub.add_parser("eval", help="evaluate one zeta value with both engines")
    p_eval.add_argument(
        "--zeta", required=True, type=_int_tuple, metavar="N1,N2,...",
        help="composition indexing the zeta value, last part >= 2",
    )
    _add_shared_flags(p_eval, ("json", "text"))

    p_check = sub.add_parser("check", help="numeric rationality report for a family")
    p_check.add_argument("--family", required=True, choices=FAMILIES)
    p_check.add_argument("--a", type=_int_tuple, metavar="B0,B1,...",
                         help="block vector (symmetric and cyclic families)")
    p_check.add_argument("--n", type=int, help="spine half-length (bbbl, bowman-bradley)")
    p_check.add_argument("--m", type=int, help="insertion count (bbbl, bowman-bradley)")
    p_check.add_argument("--sweep", action="store_true",
                         help="run every instance of the family under the weight cap")
    p_check.add_argument("--jobs", type=int, default=1,
                         help="parallel worker processes for --sweep (default 1)")
    _add_shared_flags(p_check, ("json", "csv", "text"))
    return parser


def _config_from(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    if args.digits < 20:
        parser.error(f"--digits must be at least 20, got {args.digits}")
    if args.weight_cap < 4:
        parser.error(f"--weight-cap must be at least 4, got {args.weight_cap}")
    if args.max_denominator < 1:
        parser.error(f"--max-denominator must be positive, got {args.max_denominator}")
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        parser.error(f"--jobs must be at least 1, got {jobs}")
    return RunConfig(
        digits=args.digits,
        max_denominator=args.max_denominator,
        weight_cap=args.weight_cap,
        fmt=args.fmt,
        output=args.output,
        jobs=jobs,
    )


def _certificate_text(cert) -> str:
    inst = cert.instance
    lines = [
        f"instance a={inst.base} n={inst.n} weight={inst.weight} "
        f"lambda={inst.multiplicity} words={len(inst.words)} sign={inst.sign:+d}"
    ]
    for check in cert.checks:
        state = "ok" if check.ok else "FAILED"
        lines.append(
            f"check r={check.r}: windows={check.window_count} "
            f"encodings={check.encoding_count} orbits={check.orbit_count} "
            f"residual={check.residual_size} {state}"
        )
        for failure in check.failures:
            lines.append(f"  ! {failure}")
    lines.append(f"verdict: {cert.verdict}")
    return "\n".join(lines) + "\n"


def cmd_verify(a: Tuple[int, ...], config: RunConfig) -> int:
    instance = build_instance(a)
    if instance.weight > config.weight_cap:
        raise ValueError(
            f"weight {instance.weight} exceeds the cap {config.weight_cap}"
        )
    cert = verify_instance(instance)
    text = cert.to_json() if config.fmt == "json" else _certificate_text(cert)
    _write(text, config.output)
    if cert.verdict == "verified":
        return 0
    for check in cert.checks:
        for failure in check.failures:
            print(f"r={check.r}: {failure}", file=sys.stderr)
    return 1


def cmd_eval(zeta: Tuple[int, ...], config: RunConfig) -> int:
    comp = Composition(zeta)
    fast = eval_mzv_fast(comp, config.digits)
    oracle = eval_mzv_series(comp, ORACLE_TERMS)
    with mp.workdps(config.digits + 10):
        diff = abs(fast.value - oracle.value)
        agreement = config.digits if diff == 0 else max(0, int(mp.floor(-mp.log10(diff))))
    payload = {
        "composition": list(zeta),
        "digits": config.digits,
        "value": mp.nstr(fast.value, config.digits),
        "engine_agreement_digits": agreement,
        "oracle_terms": ORACLE_TERMS,
    }
    if config.fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = (
            f"zeta{comp} = {payload['value']}\n"
            f"engines agree to {agreement} digits "
            f"(series oracle truncated at {ORACLE_TERMS} terms)\n"
        )
    _write(text, config.output)
    return 0


def _run_check(job: Tuple) -> dict:
    family, params, digits, max_denominator, weight_cap = job
    if family == "symmetric":
        return check_symmetric_sum(params["a"], digits, max_denominator, weight_cap)
    if family == "cyclic":
        return check_cyclic_insertion(params["a"], digits, max_denominator, weight_cap)
    if family == "bowman-bradley":
        return check_bowman_bradley(params["n"], params["m"], digits, max_denominator, weight_cap)
    if family == "bbbl":
        return check_bbbl_family(params["n"], params["m"], digits, max_denominator, weight_cap)
    raise ValueError(f"unknown family {family!r}")


def _partitions_into(total: int, slots: int):
    """Nonincreasing tuples of the given length summing to total."""

    def rec(remaining: int, slots_left: int, maximum: int):
        if slots_left == 0:
            if remaining == 0:
                yield ()
            return
        top = min(remaining, maximum)
        for first in range(top, -1, -1):
            if first * slots_left < remaining:
                break
            for rest in rec(remaining - first, slots_left - 1, first):
                yield (first,) + rest

    yield from rec(total, slots, total)


def _sweep_params(family: str, weight_cap: int) -> List[dict]:
    items: List[dict] = []
    if family in ("bbbl", "bowman-bradley"):
        n = 1
        while 4 * n <= weight_cap:
            per_two = 2 * (2 * n + 1) if family == "bbbl" else 2
            m = 0
            while 4 * n + per_two * m <= weight_cap:
                items.append({"n": n, "m": m})
                m += 1
            n += 1
        items.sort(key=lambda p: (4 * p["n"] + (2 * (2 * p["n"] + 1) if family == "bbbl" else 2) * p["m"], p["n"]))
        return items
    n = 1
    while 4 * n <= weight_cap:
        slots = 2 * n + 1
        for total in range((weight_cap - 4 * n) // 2 + 1):
            if family == "symmetric":
                # order inside the vector is irrelevant to the symmetrized sum
                for part in _partitions_into(total, slots):
                    items.append({"a": list(part)})
            else:
                # rotations give equal sums, keep one representative each
                for comp in _weak_compositions(total, slots):
                    rotations = [comp[i:] + comp[:i] for i in range(slots)]
                    if comp == min(rotations):
                        items.append({"a": list(comp)})
        n += 1
    return items


def _frac_compact(obj: Optional[dict]) -> str:
    if obj is None:
        return ""
    return f"{obj['num']}/{obj['den']}"


def _params_compact(params: dict) -> str:
    chunks = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, list):
            chunks.append(f"{key}=" + "|".join(str(v) for v in value))
        else:
            chunks.append(f"{key}={value}")
    return ";".join(chunks)


_CSV_COLUMNS = [
    "family", "params", "weight", "pi_power", "digits", "value",
    "reconstructed", "target", "matches_target", "proven_rational", "status",
]


def _reports_csv(reports: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for rep in reports:
        writer.writerow([
            rep["family"],
            _params_compact(rep["params"]),
            rep["weight"],
            rep["pi_power"],
            rep["digits"],
            rep["value"],
            _frac_compact(rep["reconstructed"]),
            _frac_compact(rep["target"]),
            "" if rep["matches_target"] is None else rep["matches_target"],
            rep["proven_rational"],
            rep["status"],
        ])
    return buf.getvalue()


def _reports_text(reports: List[dict]) -> str:
    lines = []
    for rep in reports:
        reconstructed = _frac_compact(rep["reconstructed"]) or "none"
        target = _frac_compact(rep["target"]) or "none"
        lines.append(
            f"{rep['family']} {_params_compact(rep['params'])} "
            f"weight={rep['weight']} status={rep['status']} "
            f"reconstructed={reconstructed} target={target}"
        )
    return "\n".join(lines) + "\n"


def cmd_check(args: argparse.Namespace, config: RunConfig) -> int:
    family = args.family
    if args.sweep:
        param_list = _sweep_params(family, config.weight_cap)
    else:
        if family in ("symmetric", "cyclic"):
            if args.a is None:
                raise ValueError(f"--family {family} requires --a")
            param_list = [{"a": list(args.a)}]
        else:
            if args.n is None or args.m is None:
                raise ValueError(f"--family {family} requires --n and --m")
            param_list = [{"n": args.n, "m": args.m}]
    jobs = [
        (family, params, config.digits, config.max_denominator, config.weight_cap)
        for params in param_list
    ]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_run_check, jobs))
    else:
        reports = [_run_check(job) for job in jobs]

    if config.fmt == "csv":
        text = _reports_csv(reports)
    elif config.fmt == "text":
        text = _reports_text(reports)
    elif args.sweep:
        text = json.dumps(reports, indent=2) + "\n"
    else:
        text = json.dumps(reports[0], indent=2) + "\n"
    _write(text, config.output)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    try:
        parser = build_parser()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    config = _config_from(args, parser)
    try:
        if args.command == "verify":
            return cmd_verify(args.a, config)
        if args.command == "eval":
            return cmd_eval(args.zeta, config)
        return cmd_check(args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
