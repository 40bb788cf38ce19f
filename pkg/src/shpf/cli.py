"""Command line entry point: ``shpf {expand,count,verify,enumerate,character}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from . import characters as ch
from . import core, parking, shifted
from . import symfunc as sf
from . import verify as vf
from .cache import Cache
from .serialize import (
    classfunction_to_json,
    expansion_to_json,
    fmt_q,
    naive_to_json,
    odd_to_json,
    symfunc_to_json,
    tsymfunc_to_json,
)

log = logging.getLogger("shpf")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    max_n: int | None = None
    format: str = "json"
    out: Path | None = None
    cache_dir: Path | None = None
    no_cache: bool = False
    jobs: int = 1
    suite: str = "all"
    brute_bound: int = 5
    brute_cap: int = vf.BRUTE_CAP
    max_n_cap: int = vf.MAX_N_CAP

    def validate(self) -> None:
        if self.n is not None and self.n < 1:
            raise UsageError("--n must be >= 1")
        if self.max_n is not None and not 1 <= self.max_n <= self.max_n_cap:
            raise UsageError(f"--max-n must be between 1 and {self.max_n_cap}")
        if not 1 <= self.brute_bound <= self.brute_cap:
            raise UsageError(f"--brute-bound must be between 1 and {self.brute_cap}")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")

    def cache(self) -> Cache:
        return Cache(self.cache_dir, enabled=not self.no_cache)


# ---- expand -------------------------------------------------------------

def compute_expansion(n: int, target: str, basis: str, variant: str = "naive") -> dict[str, Any]:
    if target == "sh_t":
        if basis != "p":
            raise UsageError("target sh_t is only available in the p basis")
        naive, odd = sf.t_graded(n)
        return tsymfunc_to_json(naive if variant == "naive" else odd)
    if target == "pf":
        if basis != "p":
            raise UsageError("PF_n is not in SymP; use --basis p")
        return symfunc_to_json(sf.pf_symfunc(n))
    if target == "sh":
        if basis == "p":
            return symfunc_to_json(sf.sh_symfunc(n))
        if basis == "v-odd":
            return expansion_to_json(sf.expand_odd_v(sf.sh_symfunc(n)), n, "v-odd")
        if basis == "v-naive":
            return expansion_to_json(sf.naive_v_expansion(n), n, "v-naive")
    raise UsageError(f"unsupported target/basis: {target}/{basis}")


def cmd_expand(cfg: RunConfig, target: str, basis: str, variant: str) -> tuple[Any, int]:
    if cfg.n is None:
        raise UsageError("expand needs --n")
    op = f"expand:{target}:{basis}:{variant if target == 'sh_t' else ''}"
    if target not in ("pf", "sh", "sh_t") or basis not in ("p", "v-odd", "v-naive"):
        raise UsageError(f"unsupported target/basis: {target}/{basis}")
    payload = cfg.cache().memo(op, cfg.n, lambda: compute_expansion(cfg.n, target, basis, variant))
    return payload, 0


def _terms_rows(payload: dict[str, Any]) -> list[dict[str, Any]]:
    rows = []
    for t in payload["terms"]:
        value = t["coeff"] if "coeff" in t else " ".join(t["poly"])
        rows.append({"partition": " ".join(map(str, t["partition"])), "value": value})
    return rows


# ---- count --------------------------------------------------------------

COUNTABLE = ("pf", "sorted-pf", "naive", "sorted-naive", "garages", "sorted-odd", "schroeder-paths")


def count_row(n: int, what: str) -> dict[str, Any]:
    if what == "pf":
        got, want = sum(1 for _ in parking.enumerate_pf(n)), (n + 1) ** (n - 1)
    elif what == "sorted-pf":
        got, want = sum(1 for _ in parking.enumerate_sorted_pf(n)), core.catalan(n)
    elif what == "naive":
        got = sum(2**n for _ in parking.enumerate_pf(n))
        want = 2**n * (n + 1) ** (n - 1)
    elif what == "sorted-naive":
        got, want = sum(1 for _ in parking.enumerate_sorted_naive(n)), core.schroeder(n)
    elif what == "garages":
        got = sum(1 for _ in shifted.enumerate_garages(n))
        want = len({shifted.garage_of(x) for x in parking.enumerate_sorted_naive(n)})
    elif what == "sorted-odd":
        got, want = sum(1 for _ in shifted.enumerate_sorted_odd(n)), core.schroeder(n)
    elif what == "schroeder-paths":
        got, want = sum(1 for _ in parking.enumerate_schroeder_paths(n)), core.schroeder(n)
    else:
        raise UsageError(f"unknown count target {what!r}")
    return {"n": n, "what": what, "count": got, "expected": want, "status": "PASS" if got == want else "FAIL"}


def cmd_count(cfg: RunConfig, what: list[str]) -> tuple[Any, int]:
    ns = [cfg.n] if cfg.n is not None else list(range(1, (cfg.max_n or 6) + 1))
    rows = [count_row(n, w) for n in ns for w in what]
    return rows, 0 if all(r["status"] == "PASS" for r in rows) else 1


# ---- enumerate ----------------------------------------------------------

ENUMERABLE = ("pf", "sorted-pf", "sorted-naive", "garages", "sorted-odd", "schroeder-paths")


def cmd_enumerate(cfg: RunConfig, what: str) -> tuple[Any, int]:
    if cfg.n is None:
        raise UsageError("enumerate needs --n")
    n = cfg.n
    if what == "pf":
        rows = [{"p": list(p)} for p in parking.enumerate_pf(n)]
    elif what == "sorted-pf":
        rows = [{"p": list(p)} for p in parking.enumerate_sorted_pf(n)]
    elif what == "sorted-naive":
        rows = [naive_to_json(x) for x in parking.enumerate_sorted_naive(n)]
    elif what == "garages":
        rows = [naive_to_json(x) for x in shifted.enumerate_garages(n)]
    elif what == "sorted-odd":
        rows = [odd_to_json(y) for y in shifted.enumerate_sorted_odd(n)]
    elif what == "schroeder-paths":
        rows = [{"path": s} for s in parking.enumerate_schroeder_paths(n)]
    else:
        raise UsageError(f"unknown enumeration {what!r}")
    return rows, 0


# ---- character ----------------------------------------------------------

CHARACTERS: dict[str, Callable[[int], ch.ClassFunction]] = {
    "pf": ch.pf_character,
    "exterior": ch.exterior_character,
    "naive": ch.naive_character,
    "clifford": ch.clifford_character,
    "spin-naive": ch.spin_naive_character,
}


def cmd_character(cfg: RunConfig, which: str, frobenius: bool) -> tuple[Any, int]:
    if cfg.n is None:
        raise UsageError("character needs --n")
    if which not in CHARACTERS:
        raise UsageError(f"unknown character {which!r}")

    def compute() -> dict[str, Any]:
        chi = CHARACTERS[which](cfg.n)
        out = {"character": classfunction_to_json(chi)}
        if frobenius and chi.kind == "ordinary":
            out["frobenius"] = symfunc_to_json(ch.frobenius(chi))
        elif frobenius:
            terms = ch.spin_characteristic_terms(chi)
            out["spin_characteristic"] = [
                {"partition": list(lam), "coeff": [fmt_q(c.a), fmt_q(c.b)]} for lam, c in terms.items()
            ]
        return out

    return cfg.cache().memo(f"character:{which}:{int(frobenius)}", cfg.n, compute), 0


# ---- verify -------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> tuple[Any, int]:
    bounds = vf.Bounds(max_n=cfg.max_n or cfg.n or 6, brute_bound=cfg.brute_bound)
    try:
        results = vf.run_suite(cfg.suite, bounds, jobs=cfg.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return results, 0 if all(r.ok for r in results) else 1


# ---- output -------------------------------------------------------------

def render(command: str, payload: Any, fmt: str) -> str:
    if command == "verify":
        if fmt == "json":
            return json.dumps(vf.results_to_json(payload), indent=2)
        if fmt == "csv":
            rows = [
                {"status": "PASS" if r.ok else "FAIL", "suite": r.suite, "claim": r.claim, "n": r.n,
                 "detail": r.detail, "counterexample": json.dumps(r.counterexample) if r.counterexample else ""}
                for r in payload
            ]
            return _csv(rows)
        lines = [r.line() for r in payload]
        for r in payload:
            if not r.ok and r.counterexample is not None:
                lines.append(f"  counterexample for {r.claim} (n={r.n}): {json.dumps(r.counterexample)}")
        passed = sum(r.ok for r in payload)
        lines.append(f"{passed}/{len(payload)} checks passed")
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if command == "expand":
        rows = _terms_rows(payload)
        if fmt == "csv":
            return _csv(rows)
        head = f"degree {payload['degree']}, basis {payload['basis']}"
        return "\n".join([head] + [f"  [{r['partition']}]  {r['value']}" for r in rows])
    if command == "character":
        rows = [
            {"type": " ".join(map(str, v["type"])),
             "value": v["value"] if isinstance(v["value"], str) else " + sqrt2*".join(v["value"])}
            for v in payload["character"]["values"]
        ]
        if fmt == "csv":
            return _csv(rows)
        return "\n".join(f"  [{r['type']}]  {r['value']}" for r in rows)
    rows = [{k: _flat(v) for k, v in row.items()} for row in payload]
    if fmt == "csv":
        return _csv(rows)
    return "\n".join("  ".join(f"{k}={v}" for k, v in row.items()) for row in rows)


def _flat(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(_flat(x) if isinstance(x, list) else str(x) for x in v) if v and isinstance(v[0], list) else " ".join(map(str, v))
    return str(v)


def _csv(rows: list[dict[str, Any]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _flat(v) for k, v in row.items()})
    return buf.getvalue().rstrip("\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--max-n", type=int)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", type=Path)
    common.add_argument("--cache-dir", type=Path)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--brute-bound", type=int, default=5)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="shpf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("expand", parents=[common], help="expand PF_n, SH_n or SH_n(1,t)")
    p.add_argument("--target", choices=("pf", "sh", "sh_t"), default="sh")
    p.add_argument("--basis", choices=("p", "v-odd", "v-naive"), default="p")
    p.add_argument("--variant", choices=("naive", "odd"), default="naive",
                   help="for sh_t: weight sorted naive objects by area or sorted odd objects by area_o")
    p = sub.add_parser("count", parents=[common], help="enumeration counts against closed forms")
    p.add_argument("--what", choices=COUNTABLE, action="append")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=vf.SUITES + ("all",), default="all")
    p = sub.add_parser("enumerate", parents=[common], help="dump combinatorial objects")
    p.add_argument("--what", choices=ENUMERABLE, default="sorted-odd")
    p = sub.add_parser("character", parents=[common], help="class functions of the modules")
    p.add_argument("--which", choices=tuple(CHARACTERS), default="naive")
    p.add_argument("--frobenius", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        cfg = RunConfig(
            command=args.command, n=args.n, max_n=args.max_n, format=args.format, out=args.out,
            cache_dir=args.cache_dir, no_cache=args.no_cache, jobs=args.jobs,
            suite=getattr(args, "suite", "all"), brute_bound=args.brute_bound,
        )
        cfg.validate()
        if args.command == "expand":
            payload, code = cmd_expand(cfg, args.target, args.basis, args.variant)
        elif args.command == "count":
            payload, code = cmd_count(cfg, args.what or list(COUNTABLE))
        elif args.command == "verify":
            payload, code = cmd_verify(cfg)
        elif args.command == "enumerate":
            payload, code = cmd_enumerate(cfg, args.what)
        else:
            payload, code = cmd_character(cfg, args.which, args.frobenius)
    except UsageError as exc:
        print(f"shpf: error: {exc}", file=sys.stderr)
        return 2
    text = render(cfg.command, payload, cfg.format)
    if cfg.out:
        cfg.out.write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
