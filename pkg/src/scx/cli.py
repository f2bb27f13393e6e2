"""Command-line entry point: ``scx {eval,check,verify,search,examples}``.

Exit codes: 0 pass, 1 violation or failed claim, 2 usage/parse/domain error.
With ``--json`` a single JSON document is written to stdout; its ``timing_s``
field is the only part that varies between identical runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from scx import axioms, theorems
from scx.corpus import run_corpus
from scx.document import read_profile, render_profile
from scx.errors import ScxError
from scx.profile import DEFAULT_VISIT_LIMIT, Domain
from scx.rules import get_rule
from scx.variable import MultiProfile, expand, strict_condorcet_variable

CLAIMS = ("thm1-forward", "thm2", "prop1", "prop2", "observation", "borda-loser", "borda-sum")


def witness_json(w: axioms.Witness | None):
    if w is None:
        return None
    return {
        "profiles": [render_profile(p) for p in w.profiles],
        "pair": list(w.pair) if w.pair else None,
        "alternative": w.alternative,
        "state": w.state,
        "choices": [sorted(c) for c in w.choices],
        "note": w.note,
    }


def witness_text(w: axioms.Witness) -> list[str]:
    lines = [f"witness: {w.note}"]
    for k, p in enumerate(w.profiles):
        chosen = " ".join(p.alts.ordered(w.choices[k])) if k < len(w.choices) else "?"
        lines.append(f"profile {k + 1} (chosen: {chosen}):")
        lines.extend("  " + row for row in render_profile(p).splitlines())
    return lines


def report_json(r: axioms.AxiomReport) -> dict:
    return {
        "axiom": r.axiom,
        "rule": r.rule,
        "mode": str(r.mode),
        "domain": r.domain,
        "m": r.m,
        "n": r.n,
        "verdict": r.verdict,
        "profiles_checked": r.profiles_checked,
        "witness": witness_json(r.witness),
    }


def claim_json(c: theorems.ClaimReport) -> dict:
    return {"claim": c.claim, "passed": c.passed, "counts": c.counts, "details": c.details,
            "witness": witness_json(c.witness)}


# ------------------------------------------------------------------ commands


def cmd_eval(args):
    rule = get_rule(args.rule, args.param)
    results, lines = [], []
    for path in args.files:
        prof = read_profile(path)
        if isinstance(prof, MultiProfile) and rule.name == "strict-condorcet":
            chosen = strict_condorcet_variable(prof)
        else:
            chosen = rule(expand(prof) if isinstance(prof, MultiProfile) else prof)
        ordered = prof.alts.ordered(chosen)
        results.append({"file": path, "chosen": ordered})
        text = " ".join(ordered)
        lines.append(text if len(args.files) == 1 else f"{path}: {text}")
    return {"results": results}, lines, 0


def _mode(args) -> axioms.Mode:
    if args.random:
        if args.seed is None or args.budget is None:
            raise ScxError("--random needs --seed and --budget")
        return axioms.Mode.random(args.seed, args.budget)
    return axioms.EXHAUSTIVE


def cmd_check(args):
    rule = get_rule(args.rule, args.param)
    report = axioms.check(args.axiom, rule, args.m, args.n, Domain.parse(args.domain), _mode(args),
                          limit=args.ceiling)
    lines = [report.summary()]
    if report.witness:
        lines += witness_text(report.witness)
    return report_json(report), lines, 0 if report.passed else 1


def cmd_search(args):
    rule = get_rule(args.rule, args.param)
    domain = Domain.parse(args.domain)
    w = axioms.search(rule, args.axiom, args.m, args.n, domain, args.seed, args.budget)
    payload = {"rule": rule.name, "axiom": args.axiom, "m": args.m, "n": args.n, "domain": domain.value,
               "seed": args.seed, "budget": args.budget, "found": w is not None, "witness": witness_json(w)}
    if w is None:
        return payload, [f"no {args.axiom} violation for {rule.name} within {args.budget} draws (seed {args.seed})"], 0
    return payload, [f"found {args.axiom} violation for {rule.name} (seed {args.seed})", *witness_text(w)], 1


def _opt(value, default):
    return default if value is None else value


def cmd_verify(args):
    claim = args.claim
    if claim == "prop2":
        w = theorems.verify_prop2_violation()
        rep = theorems.ClaimReport("prop2", True, {"m": 3, "n": 6}, w,
                                   ["unique weak Condorcet winner x at R(1), y at R(2); equal {x,y} restrictions"])
    elif claim == "thm1-forward":
        m, n = _opt(args.m, 3), _opt(args.n, 2)
        per_j = {j: theorems.verify_theorem1_forward(j, m, n) for j in range(1, n + 1)}
        rep = theorems.ClaimReport("thm1-forward", all(per_j.values()),
                                   {"m": m, "n": n, **{f"s-sdr:{j}": ok for j, ok in per_j.items()}})
    elif claim == "thm2":
        rep = theorems.verify_theorem2_uniqueness(_opt(args.m, 3), _opt(args.n, 3))
    elif claim == "prop1":
        rep = theorems.verify_prop1_equivalence(_opt(args.m, 3), _opt(args.n, 2), _opt(args.samples, 500), _opt(args.seed, 7))
    elif claim == "observation":
        rep = theorems.verify_observation(_opt(args.m, 3), _opt(args.n, 2), _opt(args.samples, 1000), _opt(args.seed, 11))
    elif claim == "borda-loser":
        ms = (args.m,) if args.m else (3, 4, 5)
        ns = (args.n,) if args.n else (3, 5, 7)
        rep = theorems.verify_borda_loser_exclusion(_opt(args.samples, 10**4), ms, ns, _opt(args.seed, 3))
    else:
        ms = (args.m,) if args.m else (3, 4, 5)
        ns = (args.n,) if args.n else (2, 3, 4, 5, 6, 7)
        rep = theorems.verify_borda_sum_identity(_opt(args.samples, 10**4), _opt(args.seed, 0), ms, ns)
    lines = [rep.summary(), *rep.details]
    if rep.witness:
        lines += witness_text(rep.witness)
    return claim_json(rep), lines, 0 if rep.passed else 1


def cmd_examples(args):
    checks = run_corpus()
    ok = all(c.ok for c in checks)
    payload = {"passed": ok, "checks": [
        {"block": c.block, "what": c.what, "ok": c.ok, "actual": _plain(c.actual), "expected": _plain(c.expected)}
        for c in checks]}
    lines = [c.line() for c in checks]
    lines.append(f"{sum(c.ok for c in checks)}/{len(checks)} assertions hold")
    return payload, lines, 0 if ok else 1


def _plain(v):
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, tuple):
        return list(v)
    return v


# ------------------------------------------------------------------- parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scx", description="State-dependent choice rules and axiom checks.")
    parser.add_argument("--json", action="store_true", help="emit a machine-readable JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return p

    p = add("eval", "evaluate a rule on profile files")
    p.add_argument("--rule", required=True)
    p.add_argument("--param", type=int)
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_eval)

    for name, help_ in (("check", "check an axiom on an enumerated or sampled domain"),
                        ("search", "seeded random counterexample search")):
        p = add(name, help_)
        p.add_argument("--rule", required=True)
        p.add_argument("--param", type=int)
        p.add_argument("--axiom", required=True, choices=axioms.AXIOMS)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--domain", default="full")
        p.add_argument("--seed", type=int, required=name == "search")
        p.add_argument("--budget", type=int, required=name == "search")
        if name == "check":
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--exhaustive", action="store_true")
            g.add_argument("--random", action="store_true")
            p.add_argument("--ceiling", type=int, default=DEFAULT_VISIT_LIMIT,
                           help="refuse exhaustive runs above this many profile visits")
            p.set_defaults(func=cmd_check)
        else:
            p.set_defaults(func=cmd_search)

    p = add("verify", "run a mechanized theorem check")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = add("examples", "replay every built-in example")
    p.set_defaults(func=cmd_examples)
    return parser


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json")}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, lines, code = args.func(args)
    except (ScxError, OSError) as exc:
        payload, lines, code = {"error": str(exc)}, [], 2
        print(f"error: {exc}", file=sys.stderr)
    elapsed = time.perf_counter() - start
    if args.json:
        doc = {"command": args.command, "args": _echo(args), "exit_code": code, "result": payload,
               "timing_s": round(elapsed, 6)}
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif lines:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
