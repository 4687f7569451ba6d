"""Command-line front end: ``absorb-lab {analyze,check,ideals,chains,setopt,gen}``.

Exit codes: 0 success, 1 a checked property failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import chains, setopt
from .core import FiniteSemigroup, absorbing_element, idempotents, is_commutative, load, to_json, to_text
from .errors import AbsorbLabError, TooManyJClasses
from .generators import (
    enumerate_semigroups,
    generate_family,
    random_corpus_seeds,
    random_transformation_semigroup,
)
from .green import green_classes
from .ideals import (all_ideals, bottleneck_ideals, enumerate_left_ideals, enumerate_right_ideals,
                     minimal_ideals_over)
from .quasi import quasi_report
from .suite import SUITES, noncommutative_witnesses, verify_theorem_suite

SCHEMA = "absorb-lab/1"
EXIT_OK, EXIT_PROPERTY, EXIT_INPUT = 0, 1, 2


def max_workers() -> int:
    """Worker count: CPU count, capped by ABSORB_LAB_THREADS when set."""
    n = os.cpu_count() or 1
    cap = os.environ.get("ABSORB_LAB_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def ordered_map(fn, items: list) -> list:
    """Map in parallel when allowed; results always follow input order."""
    workers = max_workers()
    if workers <= 1 or len(items) < 8:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


# --- inputs -------------------------------------------------------------------

def parse_random(text: str) -> list[tuple[str, int, int, int]]:
    """``trans:DEG:NGEN:seed=S[:count=K]`` -> [(name, degree, ngen, seed), ...]."""
    parts = text.split(":")
    if len(parts) < 4 or parts[0] != "trans":
        raise ValueError(f"expected trans:DEG:NGEN:seed=S[:count=K], got {text!r}")
    degree, ngen = int(parts[1]), int(parts[2])
    opts = dict(p.split("=", 1) for p in parts[3:])
    if "seed" not in opts or set(opts) - {"seed", "count"}:
        raise ValueError(f"random spec needs seed= and optionally count=, got {text!r}")
    seed = int(opts["seed"])
    if "count" in opts:
        seeds = random_corpus_seeds(seed, int(opts["count"]))
    else:
        seeds = [seed]
    return [(f"trans:{degree}:{ngen}:seed={s}", degree, ngen, s) for s in seeds]


def gather_inputs(args) -> list[tuple[str, FiniteSemigroup]]:
    items: list[tuple[str, FiniteSemigroup]] = []
    for path in getattr(args, "paths", None) or []:
        items.append((path, load(path)))
    for fam in getattr(args, "family", None) or []:
        items.append((fam, generate_family(fam)))
    n = getattr(args, "enumerate", None)
    if n is not None:
        items += [(f"enum{n}#{i}", S) for i, S in enumerate(enumerate_semigroups(n))]
    for spec in getattr(args, "random", None) or []:
        for name, degree, ngen, seed in parse_random(spec):
            items.append((name, random_transformation_semigroup(degree, ngen, seed)))
    if not items:
        raise ValueError("no input: give a table file, --family, --enumerate or --random")
    return items


# --- analyze ------------------------------------------------------------------

def analysis_report(S: FiniteSemigroup, with_ideals: bool = True) -> dict:
    g = green_classes(S)
    q = quasi_report(S)
    z = absorbing_element(S)
    rep = {
        "schema": SCHEMA,
        "n": S.n,
        "labels": [S.label(i) for i in range(S.n)],
        "commutative": is_commutative(S),
        "absorbing": None if z is None else S.label(z),
        "idempotents": S.labels_of(idempotents(S)),
        "green": g.to_json(),
        "quasi": q.to_json(),
        "A(W)": S.labels_of(q.a_w),
        "P(A(W))": S.labels_of(q.primitives["A(W)"]),
        "noncommutative_witnesses": noncommutative_witnesses(S),
    }
    if S.n == 1:
        rep["notes"] = ["singleton: its element absorbs everything but is not counted as absorbing "
                        "(an absorbing element needs at least two elements)"]
    if with_ideals:
        try:
            ideals = all_ideals(S)
            rep["ideals"] = {
                "count": len(ideals),
                "bottlenecks": [S.labels_of(X) for X in bottleneck_ideals(S)],
                "quasi_minimal": [S.labels_of(X) for X in minimal_ideals_over(S, q.a_w)],
            }
        except TooManyJClasses as exc:
            rep["ideals"] = {"skipped": str(exc)}
    suite = verify_theorem_suite(S)
    rep["suite"] = {"passed": suite.passed, "statements": suite.to_json()}
    return rep


def render_analysis(S: FiniteSemigroup, rep: dict) -> str:
    q = rep["quasi"]
    lab = rep["labels"]

    def names(idx):
        return "{" + ", ".join(lab[i] for i in idx) + "}"

    lines = [
        f"n = {rep['n']}  commutative: {'yes' if rep['commutative'] else 'no'}  "
        f"absorbing: {rep['absorbing'] or 'none'}",
        "idempotents: {" + ", ".join(rep["idempotents"]) + "}",
    ]
    lines += [f"note: {x}" for x in rep.get("notes", [])]
    for kind in "LRHJ":
        lines.append(f"{kind}-classes: " + " ".join(names(c) for c in rep["green"][kind]))
    lines += [
        f"A_s = {names(q['A_s'])}  stages: " + (" ".join(names(s) for s in q["stages"]) or "none"),
        f"A_fin = {names(q['A_fin'])}",
        "A(W) = {" + ", ".join(rep["A(W)"]) + "}",
        f"E_lin = {names(q['E_lin'])}",
        "P(A(W)) = {" + ", ".join(rep["P(A(W))"]) + "}",
    ]
    ideals = rep.get("ideals")
    if ideals is not None:
        if "skipped" in ideals:
            lines.append(f"ideals: skipped ({ideals['skipped']})")
        else:
            lines.append(f"ideals: {ideals['count']}")
            lines.append("bottleneck ideals: " + " ".join("{" + ", ".join(x) + "}" for x in ideals["bottlenecks"]))
            lines.append("A(W)-minimal ideals: "
                         + (" ".join("{" + ", ".join(x) + "}" for x in ideals["quasi_minimal"]) or "none"))
    for w in rep["noncommutative_witnesses"]:
        rest = ", ".join(w["W(u)\\H(u)"])
        lines.append(f"W({w['u']})\\H({w['u']}) = {{{rest}}} is not an ideal")
    st = rep["suite"]["statements"]
    ok = sum(1 for s in st if s["passed"])
    lines.append(f"theorem suite: {ok}/{len(st)} statements passed")
    for s in st:
        if not s["passed"]:
            lines.append(f"  FAIL {s['name']}: {json.dumps(s.get('counterexample'), ensure_ascii=False)}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    S = gather_inputs(args)[0][1]
    rep = analysis_report(S, with_ideals=not args.no_ideals)
    print(_dump(rep) if args.json else render_analysis(S, rep))
    return EXIT_OK if rep["suite"]["passed"] else EXIT_PROPERTY


# --- check --------------------------------------------------------------------

def _check_one(job):
    name, S, suites = job
    rep = verify_theorem_suite(S, suites)
    return name, S.n, rep.passed, [r.to_json() for r in rep.failures()], len(rep.results)


def cmd_check(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    items = gather_inputs(args)
    results = ordered_map(_check_one, [(name, S, suites) for name, S in items])
    failed = [r for r in results if not r[2]]
    if args.json:
        print(_dump({"schema": SCHEMA, "suite": args.suite, "inputs": len(results),
                     "failures": [{"input": name, "n": n, "statements": f} for name, n, _, f, _ in failed]}))
    else:
        for name, n, _, fails, _ in failed:
            for f in fails:
                print(f"FAIL {name} (n={n}) {f['name']}: "
                      f"{json.dumps(f.get('counterexample'), ensure_ascii=False)}")
        total = sum(r[4] for r in results)
        print(f"checked {len(results)} semigroup(s), {total} statement evaluations, "
              f"{len(failed)} with failures")
    return EXIT_PROPERTY if failed else EXIT_OK


# --- ideals -------------------------------------------------------------------

def cmd_ideals(args) -> int:
    S = gather_inputs(args)[0][1]
    if args.side == "two":
        found = [X.to_list() for X in all_ideals(S)]
    else:
        gen = enumerate_left_ideals if args.side == "left" else enumerate_right_ideals
        found = sorted((X.to_list() for X in gen(S)), key=lambda x: (len(x), x))
    if args.json:
        print(json.dumps(found))
    else:
        for x in found:
            print(json.dumps(x))
    return EXIT_OK


# --- chains -------------------------------------------------------------------

def _read_chain(arg: str) -> chains.ChainSemigroup:
    if arg in chains.PRESETS:
        return chains.PRESETS[arg]
    p = Path(arg)
    if p.exists():
        return chains.parse_chain_spec(p.read_text(encoding="utf-8"))
    return chains.parse_chain_spec(arg)


def cmd_chains(args) -> int:
    C = _read_chain(args.spec)
    afin = chains.symbolic_a_fin(C)
    aw = chains.symbolic_a_w(C)
    rep = {
        "schema": SCHEMA,
        "chain": C.to_text(),
        "A_s": chains.symbolic_a_s(C).describe(),
        "A_fin": afin.describe(),
        "A": aw.describe(),
        "E_lin": chains.symbolic_e_lin(C).describe(),
        "P(A_fin)": chains.symbolic_primitives(C, "AFIN").describe(),
        "P(A)": chains.symbolic_primitives(C, "AW").describe(),
    }
    code = EXIT_OK
    if args.truncate is not None or args.cross_check:
        k = args.truncate if args.truncate is not None else 3
        T = chains.truncate(C, k)
        rep["truncation"] = {"k": k, "n": T.n, "labels": list(T.labels)}
        if args.cross_check:
            cc = chains.cross_check(C, k)
            rep["cross_check"] = cc.to_json()["items"]
            if not cc.ok:
                code = EXIT_PROPERTY
    if args.json:
        print(_dump(rep))
    else:
        print(rep["chain"])
        for key in ("A_s", "A_fin", "A", "E_lin", "P(A_fin)", "P(A)"):
            print(f"{key} = {rep[key]}")
        if "truncation" in rep:
            t = rep["truncation"]
            print(f"truncation k={t['k']}: {t['n']} elements: " + " ".join(t["labels"]))
        for it in rep.get("cross_check", []):
            extra = f"  symbolic {it['symbolic']}  finite {{{', '.join(it['finite'])}}}" if it["symbolic"] else ""
            print(f"  {it['status']:<20} {it['name']}{extra}")
    return code


# --- setopt -------------------------------------------------------------------

def _verify_thm_instance(inst: setopt.Instance) -> list[bool]:
    out = []
    for A in inst.elements:
        normals = set(setopt.dual_generators(inst.C))
        if A.kind is setopt.Kind.POLY:
            normals |= {y for y in setopt.facet_normals(A) if inst.C.in_dual(y)}
        for y in sorted(normals):
            yv = setopt.vec(*y)
            z = tuple(c / setopt.dot(yv, yv) for c in yv)
            out.append(setopt.halfspace_oplus(A, yv, z, inst.C).verdict)
    return out


def _verify_thm_random(count: int, seed: int) -> list[bool]:
    rng = np.random.default_rng(np.uint64(seed))
    out = []
    for _ in range(count):
        C = setopt.random_cone(rng)
        A = setopt.random_poly(rng, C)
        y = setopt.random_dual_normal(rng, C)
        out.append(setopt.halfspace_oplus(A, y, setopt.random_z(rng, y), C).verdict)
    return out


def _verify_duality_random(count: int, seed: int) -> list[bool]:
    rng = np.random.default_rng(np.uint64(seed))
    out = []
    while len(out) < count:
        C = setopt.random_cone(rng)
        A = setopt.random_poly(rng, C, extra_ray_prob=0.0)
        out.append(setopt.duality_reconstruct(A).verdict)
    return out


def cmd_setopt(args) -> int:
    inst = None
    if args.instance:
        inst = setopt.load_instance(Path(args.instance).read_text(encoding="utf-8"))
    elif args.random is None and not args.materialize:
        inst = setopt.five_cone_instance()
    rep: dict = {"schema": SCHEMA}
    if args.random is not None:
        rep["seed"] = args.seed
        rep["count"] = args.random
    ok = True
    for what in args.verify or []:
        if what == "thm":
            v = _verify_thm_random(args.random, args.seed) if args.random else _verify_thm_instance(inst)
        elif what == "duality":
            if args.random:
                v = _verify_duality_random(args.random, args.seed)
            else:
                v = [setopt.duality_reconstruct(A).verdict for A in inst.elements if A.kind is setopt.Kind.POLY]
        else:
            C = inst.C if inst else setopt.POSITIVE_QUADRANT
            y = setopt.vec(*setopt.dual_generators(C)[0])
            z = tuple(c / setopt.dot(y, y) for c in y)
            verdict = setopt.translate_group_check(y, z, range(-2, 3), C)
            v = [verdict.ok]
        rep[what] = {"checked": len(v), "passed": sum(v), "verdict": all(v)}
        ok &= all(v)
    if args.materialize:
        if inst is None:
            inst = setopt.five_cone_instance()
        M = inst.materialize()
        out = Path(args.materialize)
        out.write_text(to_json(M.semigroup) if out.suffix == ".json" else to_text(M.semigroup), encoding="utf-8")
        rep["materialized"] = {"path": str(out), "n": M.semigroup.n, "labels": list(M.semigroup.labels)}
    if args.json:
        print(_dump(rep))
    else:
        if "seed" in rep:
            print(f"random instances: {rep['count']} (seed {rep['seed']})")
        for what in args.verify or []:
            r = rep[what]
            print(f"{what}: {r['passed']}/{r['checked']} true -> {'PASS' if r['verdict'] else 'FAIL'}")
        if "materialized" in rep:
            m = rep["materialized"]
            print(f"wrote {m['n']}-element table to {m['path']}: " + " ".join(m["labels"]))
    return EXIT_OK if ok else EXIT_PROPERTY


# --- gen ----------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.chain:
        S = chains.truncate(_read_chain(args.chain), args.k)
    elif args.random_spec:
        specs = parse_random(args.random_spec)
        S = random_transformation_semigroup(*specs[0][1:])
    elif args.family_spec:
        S = generate_family(args.family_spec)
    else:
        raise ValueError("gen needs a family, --random or --chain")
    text = to_json(S) if args.format == "json" else to_text(S)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser -------------------------------------------------------------------

def _add_sources(p: argparse.ArgumentParser, multi: bool = True) -> None:
    p.add_argument("paths", nargs="*" if multi else "?", default=[] if multi else None,
                   help="table file(s) in text or JSON format")
    p.add_argument("--family", action="append", help="generator family, e.g. min_chain:5")
    p.add_argument("--random", action="append", metavar="SPEC",
                   help="random transformation semigroup trans:DEG:NGEN:seed=S[:count=K]")
    p.add_argument("--enumerate", type=int, metavar="N", help="every associative table of order N (N <= 4)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="absorb-lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="Green classes, quasi-absorbing sets, ideal census, theorem suite")
    _add_sources(p, multi=False)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-ideals", action="store_true", help="skip the ideal census")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="run the theorem suite on tables, families, corpora")
    _add_sources(p)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ideals", help="list ideals as sorted index lists")
    _add_sources(p, multi=False)
    p.add_argument("--side", choices=("two", "left", "right"), default="two")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("chains", help="symbolic chain semigroups")
    p.add_argument("spec", help="spec file, inline spec, or preset (" + ", ".join(chains.PRESETS) + ")")
    p.add_argument("--truncate", type=int, metavar="K")
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("setopt", help="planar polyhedra under closed Minkowski addition")
    p.add_argument("instance", nargs="?", help="instance JSON (default: the five-cone example)")
    p.add_argument("--verify", action="append", choices=("thm", "duality", "group"))
    p.add_argument("--random", type=int, metavar="N", help="verify on N seeded random instances instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--materialize", metavar="OUT", help="write the instance's Cayley table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_setopt)

    p = sub.add_parser("gen", help="write a generated table")
    p.add_argument("family_spec", nargs="?", metavar="FAMILY")
    p.add_argument("--random", dest="random_spec", metavar="SPEC")
    p.add_argument("--chain", metavar="SPEC", help="truncate a chain spec (use with -k)")
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "paths", None) is None:
        args.paths = []
    elif isinstance(args.paths, str):
        args.paths = [args.paths]
    try:
        return args.func(args)
    except (AbsorbLabError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
