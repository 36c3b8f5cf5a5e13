"""Command-line front end: ``logfan fan ...`` and ``logfan verify ...``.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(a JSON witness is printed), 2 on bad flags or out-of-range parameters.
"""

import argparse
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, List, Optional, Tuple

from .blowup import (MAX_MINOR_N, blowup_report_json, boundary_determinant, pivot_monomial,
                     random_chart, schur_rank_identity, verify_minor_divisibility)
from .errors import LogfanError
from .fixed_points import KINDS, MAX_N, ambient_rank, fixed_report_json, make_embedding, restricted_fan, verify_fixed
from .glfan import (MAX_FAN_N, ChartPermutation, SplitPermutation, anti_dominant_chamber, build_gl_fan,
                    chart_of_split_permutation, cone_of_split_permutation, enumerate_split_permutations,
                    has_limit)
from .polyhedra import dumps, fan_verify
from .strata import CONVENTIONS, census

EXHAUSTIVE_LIMIT_N = 3
LIMIT_RANGE = 4
MAX_CENSUS_N_IN_ALL = 3


class UsageError(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get("LOGFAN_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"LOGFAN_THREADS must be an integer, got {raw!r}")


def check_rng(seed: int, name: str) -> random.Random:
    # one stream per check so results do not depend on scheduling
    return random.Random(f"{seed}/{name}")


def _positive(name, value, lo=1, hi=None):
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < lo or (hi is not None and value > hi):
        bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
        raise UsageError(f"--{name} must be in {bound}, got {value}")
    return value


def _emit(payload: dict, out: Optional[str]):
    text = dumps(payload)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(name: str, witness) -> dict:
    return {"check": name, "passed": False, "witness": witness}


# --- individual checks; each returns (passed, summary, payload) ---

Result = Tuple[bool, str, dict]


def check_fan(n: int) -> Result:
    fan = build_gl_fan(n)
    rep = fan_verify(fan, anti_dominant_chamber(n))
    c = rep.checks
    summary = (f"{len(fan)} cones, {'smooth' if c['smooth'] else 'NOT smooth'}, "
               f"tiling {'ok' if c['tiling'] else 'FAILED'}")
    if c["face_compatible"] is False:
        summary += ", faces FAILED"
    payload = {"n": n, "maximal_cones": len(fan), **rep.to_dict()}
    return rep.ok, summary, payload


def blowup_charts(n: int, samples: int, rng: random.Random) -> List[ChartPermutation]:
    charts = [chart_of_split_permutation(sp) for sp in enumerate_split_permutations(n)]
    charts += [random_chart(n, rng) for _ in range(samples)]
    seen, out = set(), []
    for f in charts:
        if f.rows not in seen:
            seen.add(f.rows)
            out.append(f)
    return out


def check_blowup(n: int, samples: int, seed: int) -> Result:
    charts = blowup_charts(n, samples, check_rng(seed, "blowup"))
    minors = 0
    for f in charts:
        for d in range(1, n + 1):
            rep = verify_minor_divisibility(f, d)
            minors += rep.details["minors_checked"]
            if not rep.ok:
                return False, f"FAILED at f={f.encode()} d={d}", _fail("blowup", blowup_report_json(rep) | {
                    "witnesses": rep.witnesses})
    return True, f"{len(charts)} charts, {minors} minors, divisibility ok", {"charts": len(charts), "minors": minors}


def check_boundary(n: int, samples: int, seed: int) -> Result:
    charts = blowup_charts(n, samples, check_rng(seed, "boundary"))
    for f in charts:
        sm = boundary_determinant(f).as_signed_monomial()
        if sm is None or abs(sm[0]) != 1 or sm[1] != pivot_monomial(f, n):
            return False, f"FAILED at f={f.encode()}", _fail("boundary", {"f": f.encode()})
    return True, f"{len(charts)} charts, determinant = +-monomial", {"charts": len(charts)}


def limit_vectors(n: int, samples: int, rng: random.Random):
    if n <= EXHAUSTIVE_LIMIT_N:
        return list(product(range(-LIMIT_RANGE, LIMIT_RANGE + 1), repeat=n)), True
    return [tuple(rng.randint(-LIMIT_RANGE, LIMIT_RANGE) for _ in range(n)) for _ in range(samples)], False


def check_limits(n: int, samples: int, seed: int) -> Result:
    vectors, exhaustive = limit_vectors(n, samples, check_rng(seed, "limits"))
    sps = enumerate_split_permutations(n)
    for sp in sps:
        f = chart_of_split_permutation(sp)
        c = cone_of_split_permutation(sp)
        for a in vectors:
            if has_limit(f, a) != c.contains(a):
                return False, f"FAILED at {sp.label} a={list(a)}", _fail(
                    "limits", {"split_permutation": sp.to_dict(), "a": list(a)})
    kind = "exhaustive" if exhaustive else "sampled"
    return True, f"{len(sps)} charts x {len(vectors)} vectors, {kind} ok", {"vectors": len(vectors)}


def random_pivoted_matrix(rng: random.Random):
    rows, cols = rng.randint(2, 6), rng.randint(2, 6)
    M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
    pr, pc = rng.randrange(rows), rng.randrange(cols)
    M[pr][pc] = 1
    return M, pr, pc


def check_schur(samples: int, seed: int) -> Result:
    rng = check_rng(seed, "schur")
    for _ in range(samples):
        M, pr, pc = random_pivoted_matrix(rng)
        if not schur_rank_identity(M, pr, pc):
            return False, "FAILED", _fail("schur", {"matrix": M, "pivot": [pr, pc]})
    return True, f"{samples} matrices, rank identity ok", {"samples": samples}


def census_payload(table, convention: str = "rank") -> dict:
    d = table.to_json_dict()
    payload = {"n": d["n"], "q": d["q"], "total": d["total"], "by_invariant": d["by_invariant"],
               "by_stratum": d["by_stratum"] if convention == "rank" else d["by_stratum_displayed"]}
    payload["convention"] = convention
    payload["gaussian_binomial"] = d["gaussian_binomial"]
    return payload


def check_census(n: int, q: int, convention: str = "rank") -> Result:
    table = census(n, q)
    payload = census_payload(table, convention)
    problems = []
    if not table.total_ok:
        problems.append("total differs from the Gaussian binomial")
    if convention == "rank" and table.by_stratum["Z0"] != 0:
        problems.append("Z0 is not empty")
    summary = f"total {table.total}, Omega {table.omega}"
    if problems:
        return False, summary + " FAILED", _fail("census", {**payload, "problems": problems})
    return True, summary + ", ok", payload


def check_fixed(kind: str, r: int) -> Result:
    rep = verify_fixed(kind, r)
    payload = fixed_report_json(rep)
    summary = f"{payload['maximal_cones']} cones, index {payload['chamber_lattice_index']}"
    if not rep.ok:
        return False, summary + " FAILED", _fail("fixed", {**payload, **rep.to_dict()})
    return True, summary + ", ok", payload


# --- commands ---

def cmd_fan(args) -> int:
    if args.target == "gl":
        n = _positive("n", args.n, 1, MAX_FAN_N)
        fan = build_gl_fan(n)
        support = anti_dominant_chamber(n)
    else:
        if args.kind not in KINDS:
            raise UsageError(f"--kind must be one of {', '.join(KINDS)}")
        r = _positive("r", args.r, 2 if args.kind == "D" else 1)
        if ambient_rank(args.kind, r) > MAX_N:
            raise UsageError(f"--r {r} too large for type {args.kind} (ambient rank > {MAX_N})")
        emb = make_embedding(args.kind, r)
        fan = restricted_fan(build_gl_fan(emb.n), emb)
        support = emb.anti_chamber
    rep = fan_verify(fan, support)
    if not rep.ok:
        sys.stdout.write(dumps(_fail("fan", rep.to_dict())))
        return 1
    _emit(fan.to_json_dict(), args.out)
    return 0


def resolve_chart(text: str, n: int) -> ChartPermutation:
    if text == "auto":
        return chart_of_split_permutation(SplitPermutation(0, tuple(range(1, n + 1))))
    try:
        f = ChartPermutation.decode(text)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse --f {text!r}: {exc}")
    if f.n != n:
        raise UsageError(f"--f has {f.n} rows but --n is {n}")
    return f


def verify_blowup_cmd(args) -> Tuple[bool, dict]:
    n = _positive("n", args.n, 1, MAX_MINOR_N)
    f = resolve_chart(args.f, n)
    ds = [_positive("d", args.d, 1, n)] if args.d is not None else list(range(1, n + 1))
    reports = [verify_minor_divisibility(f, d) for d in ds]
    payloads = [blowup_report_json(r) for r in reports]
    ok = all(r.ok for r in reports)
    if not ok:
        bad = next(r for r in reports if not r.ok)
        return False, _fail("blowup", {**blowup_report_json(bad), "witnesses": bad.witnesses})
    return True, payloads[0] if len(payloads) == 1 else {"reports": payloads}


def registry(args) -> List[Tuple[str, Callable[[], Result]]]:
    """Checks run by ``verify all``, in report order."""
    n, seed, samples = args.n, args.seed, args.samples
    items: List[Tuple[str, Callable[[], Result]]] = [
        ("fan", lambda: check_fan(n)),
        ("limits", lambda: check_limits(n, samples, seed)),
    ]
    if n <= MAX_MINOR_N:
        items.append(("blowup", lambda: check_blowup(n, samples, seed)))
        items.append(("boundary", lambda: check_boundary(n, samples, seed)))
    items.append(("schur", lambda: check_schur(samples, seed)))
    if n <= MAX_CENSUS_N_IN_ALL:
        items.append(("census", lambda: check_census(n, args.q)))
    for kind in KINDS:
        for r in range(2 if kind == "D" else 1, n + 1):
            if ambient_rank(kind, r) <= n:
                items.append((f"fixed {kind}{r}", lambda k=kind, rr=r: check_fixed(k, rr)))
    return items


def run_registry(items) -> List[Tuple[str, Result]]:
    workers = worker_count()
    if workers == 1:
        return [(name, fn()) for name, fn in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [(name, pool.submit(fn)) for name, fn in items]
        return [(name, fut.result()) for name, fut in futures]


def cmd_verify(args) -> int:
    what = args.what
    if args.samples < 0:
        raise UsageError("--samples must be >= 0")
    if what == "all":
        args.n = _positive("n", args.n, 1, MAX_FAN_N)
        results = run_registry(registry(args))
        width = max(len(name) for name, _ in results)
        lines = [f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {summary}" for name, (ok, summary, _) in results]
        sys.stdout.write("\n".join(lines) + "\n")
        failed = [payload for _, (ok, _, payload) in results if not ok]
        if args.out:
            _emit({"n": args.n, "seed": args.seed,
                   "checks": {name: {"passed": ok, "summary": s} for name, (ok, s, _) in results}}, args.out)
        if failed:
            sys.stdout.write(dumps(failed[0]))
            return 1
        return 0
    if what == "blowup":
        ok, payload = verify_blowup_cmd(args)
    else:
        if what == "fan":
            result = check_fan(_positive("n", args.n, 1, MAX_FAN_N))
        elif what == "limits":
            result = check_limits(_positive("n", args.n, 1, MAX_FAN_N), args.samples, args.seed)
        elif what == "boundary":
            n = _positive("n", args.n, 1, MAX_MINOR_N)
            result = check_boundary(n, args.samples, args.seed)
        elif what == "schur":
            result = check_schur(args.samples, args.seed)
        elif what == "census":
            n = _positive("n", args.n, 1)
            if args.q not in (2, 3, 4):
                raise UsageError(f"--q must be 2, 3 or 4, got {args.q}")
            result = check_census(n, args.q, args.convention)
        else:
            if args.kind not in KINDS:
                raise UsageError(f"--kind must be one of {', '.join(KINDS)}")
            r = _positive("r", args.r, 2 if args.kind == "D" else 1)
            if ambient_rank(args.kind, r) > MAX_N:
                raise UsageError(f"--r {r} too large for type {args.kind}")
            result = check_fixed(args.kind, r)
        ok, _, payload = result
    if ok:
        _emit(payload, args.out)
        return 0
    sys.stdout.write(dumps(payload))
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="logfan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    fan = sub.add_parser("fan", help="write a fan as JSON")
    fan.add_argument("target", choices=("gl", "fixed"))
    fan.add_argument("--n", type=int)
    fan.add_argument("--kind", choices=KINDS)
    fan.add_argument("--r", type=int)
    fan.add_argument("--out")
    fan.set_defaults(func=cmd_fan)

    ver = sub.add_parser("verify", help="run checks and report")
    ver.add_argument("what", choices=("all", "fan", "limits", "blowup", "boundary", "schur", "census", "fixed"))
    ver.add_argument("--n", type=int)
    ver.add_argument("--kind", choices=KINDS)
    ver.add_argument("--r", type=int)
    ver.add_argument("--q", type=int, default=2)
    ver.add_argument("--d", type=int)
    ver.add_argument("--f", default="auto", help='chart: "auto" or an encoding like "1.1/1.2 2.1/2.2"')
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--samples", type=int, default=10)
    ver.add_argument("--convention", choices=CONVENTIONS, default="rank")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LogfanError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"logfan: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
