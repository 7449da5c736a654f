"""Command-line front end.

Exit codes: 0 success / identity holds, 1 identity failure or property
violation, 2 usage error.  ``--json`` prints a sorted-key JSON document.
Defaults can be overridden with TCORE_ORDER, TCORE_BUDGET, TCORE_MAX_NORM,
TCORE_FORMAT and TCORE_JOBS.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import qseries
from .cyclotomic import CycInt, CyclotomicError, ExponentVector, counterexample_family, lemma14_decide
from .gbg import GbgError, gbg_direct, gbg_formula, nu, table1, table1_groups
from .littlewood import (
    LittlewoodError,
    counterexample_partition,
    decompose,
    gbg_injectivity_check,
    olsson_check,
    st_cores,
)
from .partition_core import NVector, PartitionError, parse_partition, r_vector
from .verify import SWEEPS, run_sweep


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    order: int = 60
    budget: int = 10**7
    max_norm: int = 30
    fmt: str = "table"
    jobs: int = 1

    @classmethod
    def from_env(cls) -> RunConfig:
        env = os.environ
        cfg = cls(
            order=int(env.get("TCORE_ORDER", 60)),
            budget=int(env.get("TCORE_BUDGET", 10**7)),
            max_norm=int(env.get("TCORE_MAX_NORM", 30)),
            fmt=env.get("TCORE_FORMAT", "table"),
            jobs=int(env.get("TCORE_JOBS", 1)),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.order < 2:
            raise UsageError("--order: truncation order must be >= 2")
        if self.budget < 1 or self.max_norm < 0 or self.jobs < 1:
            raise UsageError("budgets, --max-norm and --jobs must be positive")
        if self.fmt not in ("json", "table"):
            raise UsageError("TCORE_FORMAT must be 'json' or 'table'")


def cyc_json(v: CycInt) -> dict:
    return {"s": v.s, "coeffs": list(v.coeffs), "pretty": v.pretty()}


def _ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"{flag}: expected integers, got {text!r}") from None


def _partition(text: str, flag: str = "--partition"):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise UsageError(f"{flag}: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands: each returns (payload, ok, table_lines)
# ---------------------------------------------------------------------------

def cmd_gbg(args, cfg):
    if args.nvec is not None:
        n = _ints(args.nvec, "--nvec")
        try:
            value = gbg_formula(NVector.of(n), args.mod)
        except (PartitionError, GbgError) as exc:
            raise UsageError(f"--nvec: {exc}") from None
        payload = {"nvec": list(n), "s": args.mod, "value": cyc_json(value)}
        return payload, True, [f"GBG(n={n}, s={args.mod}) = {value}"]
    if args.partition is None:
        raise UsageError("--partition or --nvec is required")
    p = _partition(args.partition)
    try:
        r = r_vector(p, args.mod)
    except PartitionError as exc:
        raise UsageError(f"--mod: {exc}") from None
    value = gbg_direct(p, args.mod)
    payload = {"partition": list(p.parts), "s": args.mod, "r_vector": list(r.counts),
               "value": cyc_json(value)}
    return payload, True, [f"r{tuple(r.counts)}", f"GBG({p}, {args.mod}) = {value}"]


def cmd_nu(args, cfg):
    try:
        census = nu(args.s, args.t, budget=cfg.budget, jobs=cfg.jobs)
    except GbgError as exc:
        raise UsageError(str(exc)) from None
    from .cyclotomic import uniqueness_predicted

    predicted = uniqueness_predicted(args.s, args.t)
    equal = census.count == census.bound
    ok = census.count <= census.bound and equal == predicted
    payload = {
        "s": args.s, "t": args.t, "count": census.count, "bound": census.bound,
        "equality": equal, "equality_predicted": predicted,
        "values": [cyc_json(v) for v in census.sorted_values()],
    }
    lines = [f"nu({args.s},{args.t}) = {census.count}, bound = {census.bound}, equality = {equal}",
             "values: " + ", ".join(str(v) for v in census.sorted_values())]
    return payload, ok, lines


def cmd_table1(args, cfg):
    rows = table1()
    ok = all(r.label == r.expected_label for r in rows)
    payload = {
        "rows": [{"index": r.index, "n": list(r.representative), "residue": list(r.residue),
                  "label": r.label, "value": cyc_json(r.value)} for r in rows],
        "groups": {k: len(v) for k, v in table1_groups().items()},
        "matches_table": ok,
    }
    lines = [f"n_{r.index:<2} {str(r.representative):<18} {r.label}" for r in rows]
    lines.append("group sizes: " + ", ".join(f"{k}:{v}" for k, v in payload["groups"].items()))
    return payload, ok, lines


def cmd_lemma14(args, cfg):
    try:
        if args.j is not None or args.j_tilde is not None:
            if args.j is None or args.j_tilde is None:
                raise UsageError("--j and --j-tilde must be given together")
            j = ExponentVector.sorted_from(args.s, _ints(args.j, "--j"))
            jt = ExponentVector.sorted_from(args.s, _ints(args.j_tilde, "--j-tilde"))
        else:
            j, jt = counterexample_family(args.s, args.t, require_coprime=not args.allow_noncoprime)
        if j.t != args.t or jt.t != args.t:
            raise UsageError("--t: vector length does not match t")
        res = lemma14_decide(j, jt, require_coprime=not args.allow_noncoprime)
    except CyclotomicError as exc:
        raise UsageError(str(exc)) from None
    payload = res.to_dict()
    # a property violation: a coincidence occurs where uniqueness is predicted
    ok = not (res.uniqueness_predicted and res.conditions_hold and not res.equal_forced)
    lines = [f"j = {res.j}", f"j~ = {res.j_tilde}",
             f"conditions_hold = {res.conditions_hold}, equal_forced = {res.equal_forced}"]
    return payload, ok, lines


def _report_lines(reports):
    return [f"{r.id:<10} order={r.order:<4} {'holds' if r.holds else 'FAILS'}"
            + ("" if r.holds else f" first discrepancy at {r.first_discrepancy} ({r.failing_part})")
            for r in reports]


def _run_identity(args):
    id, order = args
    return qseries.check_identity(id, order)


def _map(fn, items, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_qcheck(args, cfg):
    order = args.order if args.order is not None else cfg.order
    if order < 2:
        raise UsageError("--order must be >= 2")
    if args.list:
        return {"ids": list(qseries.REGISTRY)}, True, list(qseries.REGISTRY)
    if args.all:
        ids = list(qseries.REGISTRY)
    elif args.id:
        ids = args.id
        unknown = [i for i in ids if i not in qseries.REGISTRY]
        if unknown:
            raise UsageError(f"--id: unknown identity {unknown[0]!r}")
    else:
        raise UsageError("--id, --all or --list is required")
    reports = _map(_run_identity, [(i, order) for i in ids], cfg.jobs)
    ok = all(r.holds for r in reports)
    payload = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports], "holds": ok}
    return payload, ok, _report_lines(reports)


def cmd_cores(args, cfg):
    try:
        if args.cores_cmd == "st":
            cs = st_cores(args.s, args.t)
            inj = gbg_injectivity_check(args.s, args.t)
            vals = dict(inj.values)
            payload = {
                "s": args.s, "t": args.t, "count": cs.size,
                "cores": [{"parts": list(p.parts), "norm": p.norm, "gbg": cyc_json(vals[p])} for p in cs.cores],
                "gbg_injective": inj.injective,
            }
            lines = [f"{str(p):<20} |p|={p.norm:<3} GBG={vals[p]}" for p in cs.cores]
            lines.append(f"{cs.size} ({args.s},{args.t})-cores; GBG mod {args.s} injective: {inj.injective}")
            return payload, True, lines
        if args.cores_cmd == "olsson":
            max_norm = args.max_norm if args.max_norm is not None else cfg.max_norm
            holds, bad = olsson_check(args.s, args.t, max_norm)
            payload = {"s": args.s, "t": args.t, "max_norm": max_norm, "holds": holds,
                       "counterexamples": [list(p.parts) for p in bad]}
            return payload, holds, [f"s-core of every {args.t}-core of norm < {max_norm} "
                                    f"is a {args.t}-core: {holds}"]
        if args.cores_cmd == "counterexample":
            p = counterexample_partition(args.s, args.t)
            return ({"s": args.s, "t": args.t, "partition": list(p.parts)}, True,
                    [f"{p} and () are ({args.s},{args.t})-cores with GBG 0"])
        return cmd_decompose(args, cfg)
    except (LittlewoodError, PartitionError) as exc:
        raise UsageError(str(exc)) from None


def cmd_decompose(args, cfg):
    p = _partition(args.partition)
    if args.t < 2:
        raise UsageError("--t must be >= 2")
    d = decompose(p, args.t)
    payload = {"partition": list(p.parts), **d.to_json()}
    lines = [f"core = {d.core}", "quotient = " + ", ".join(str(q) for q in d.quotient)]
    return payload, True, lines


def _run_sweep(name):
    return run_sweep(name)


def cmd_verify_all(args, cfg):
    order = args.order if args.order is not None else cfg.order
    ids = list(qseries.REGISTRY)
    reports = _map(_run_identity, [(i, order) for i in ids], cfg.jobs)
    sweeps = _map(_run_sweep, list(SWEEPS), cfg.jobs)
    ok = all(r.holds for r in reports) and all(s.ok for s in sweeps)
    payload = {"order": order, "identities": [r.to_dict() for r in reports],
               "sweeps": [s.to_dict() for s in sweeps], "ok": ok}
    lines = _report_lines(reports) + [
        f"{s.name:<26} {'ok' if s.ok else 'FAILS'} ({s.checked} cases)" for s in sweeps]
    return payload, ok, lines


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tcore", description="GBG-rank, t-cores and q-series checks")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default 1)")
    parser.add_argument("--budget", type=int, default=None, help="enumeration budget for nu")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", help="JSON on stdout")
        p.set_defaults(fn=fn)
        return p

    p = add("gbg", cmd_gbg, help="GBG-rank of a partition (or of the t-core with a given n-vector)")
    p.add_argument("--partition")
    p.add_argument("--nvec", help="zero-sum n-vector; uses the closed form")
    p.add_argument("--mod", type=int, required=True)

    p = add("nu", cmd_nu, help="number of GBG values of t-cores mod s")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    add("table1", cmd_table1, help="classify the 27 residue classes of 4-cores mod 3")

    p = add("lemma14", cmd_lemma14, help="root-of-unity sum/product coincidences")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--j")
    p.add_argument("--j-tilde", dest="j_tilde")
    p.add_argument("--allow-noncoprime", action="store_true")

    p = add("qcheck", cmd_qcheck, help="verify q-series identities")
    p.add_argument("--id", action="append")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--order", type=int)

    p = add("cores", cmd_cores, help="(s,t)-cores, s-cores of t-cores, decomposition")
    csub = p.add_subparsers(dest="cores_cmd", required=True)
    for name in ("st", "olsson", "counterexample"):
        c = csub.add_parser(name)
        c.add_argument("--s", type=int, required=True)
        c.add_argument("--t", type=int, required=True)
        c.add_argument("--json", action="store_true")
        if name == "olsson":
            c.add_argument("--max-norm", type=int, dest="max_norm")
    c = csub.add_parser("decompose")
    c.add_argument("--partition", required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--json", action="store_true")

    p = add("decompose", cmd_decompose, help="t-core and t-quotient of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("verify-all", cmd_verify_all, help="all identities plus property sweeps")
    p.add_argument("--order", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_env()
        if args.jobs is not None:
            cfg.jobs = args.jobs
        if args.budget is not None:
            cfg.budget = args.budget
        cfg.validate()
        payload, ok, lines = args.fn(args, cfg)
    except UsageError as exc:
        print(f"tcore {args.cmd}: error: {exc}", file=sys.stderr)
        return 2
    if args.json or cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
