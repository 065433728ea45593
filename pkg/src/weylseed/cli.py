"""Command-line front end with deterministic JSON input and output.

Exit codes: 0 on success, 2 on input validation problems, 3 on violated
engine contracts (failed exactness or consistency assertions).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from . import acceptance
from .cartan import CartanMatrix, QuiverOrientation, ReducedWord
from .errors import EngineError, ValidationError, WeylseedError
from .homdata import (
    hom_tables,
    initial_delta_labels,
    initial_dimvec_labels,
    mutate_delta_dimvec,
    mutate_dimvec,
)
from .intervals import (
    IntervalLabel,
    PBWExpander,
    identity_step,
    mu_i_plan,
    run_mu_i,
    verify_identity,
)
from .laurent import LaurentPoly
from .minors import cross_validate, minor_spec_for_Vk
from .quiver import (
    Seed,
    SeedRegistry,
    acyclic_double,
    b_matrix,
    coefficient_free_matrix,
    denominator_vector,
    gamma_i,
    y_dagger,
)
from .words import g_V, phi_eval


def _dump(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _load_doc(args) -> dict:
    if args.inline is not None:
        return json.loads(args.inline)
    if args.input is None or args.input == "-":
        return json.load(sys.stdin)
    with open(args.input, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _word_from_doc(doc: dict) -> ReducedWord:
    try:
        cartan = CartanMatrix.from_edges(doc["rank"], doc.get("edges", []))
        return ReducedWord(cartan, doc["word"])
    except KeyError as exc:
        raise ValidationError(f"missing input field {exc}") from exc


def _cluster_json(seed: Seed, mode: str) -> list:
    cluster = seed.specialize_frozen() if mode == "specialized" else seed.cluster
    return [x.to_json() for x in cluster]


def cmd_gamma(args) -> dict:
    word = _word_from_doc(_load_doc(args))
    quiver = gamma_i(word)
    return {"quiver": quiver.to_json(), "b_matrix": b_matrix(quiver).to_json()}


def cmd_mutate(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    seed = Seed.from_word(word).mutate_path(doc.get("path", []))
    return {
        "matrix": seed.matrix.to_json(),
        "cluster": _cluster_json(seed, args.mode),
        "provenance": list(seed.provenance),
        "denominators": [
            list(denominator_vector(seed, pos)) for pos in seed.matrix.mutable
        ],
    }


def cmd_walk(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    rng = random.Random(args.seed)
    seed = Seed.from_word(word)
    registry = SeedRegistry()
    registry.insert_if_absent(seed)
    mutable = seed.matrix.mutable
    last = None
    for _ in range(args.depth):
        choices = [k for k in mutable if k != last]
        k = rng.choice(choices)
        seed = seed.mutate(k)
        registry.insert_if_absent(seed)
        last = k
    return {
        "steps": args.depth,
        "rng_seed": args.seed,
        "distinct_seeds": len(registry.seen),
        "denominator_collisions": sorted(
            [list(c) for c in registry.collisions]
        ),
        "final_provenance": list(seed.provenance),
    }


def cmd_dimvec(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    tables = hom_tables(word)
    matrix = b_matrix(gamma_i(word))
    labels = initial_dimvec_labels(tables)
    picks = []
    for k in doc.get("path", []):
        move = mutate_dimvec(matrix, labels, k)
        matrix, labels = move.matrix, move.labels
        picks.append("in" if move.picked_in_side else "out")
    return {
        "tables": tables.to_json(),
        "labels": [list(v) for v in labels],
        "sides": picks,
    }


def cmd_delta_dimvec(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    tables = hom_tables(word)
    matrix = b_matrix(gamma_i(word))
    labels = initial_delta_labels(word)
    picks = []
    for k in doc.get("path", []):
        move = mutate_delta_dimvec(matrix, labels, k, tables.d_delta)
        matrix, labels = move.matrix, move.labels
        picks.append("in" if move.picked_in_side else "out")
    return {
        "d_delta": list(tables.d_delta),
        "labels": [list(v) for v in labels],
        "sides": picks,
    }


def cmd_mu_i(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    plan = mu_i_plan(word)
    out = {"plan": plan.to_json()}
    if not args.plan_only:
        report = run_mu_i(word, with_seed=True, max_seed_steps=args.depth)
        out["report"] = {
            "steps_checked": report.steps_checked,
            "final_labels": [[lab.b, lab.a] for lab in report.final_labels],
            "final_labels_ok": report.final_labels_expected(word),
            "chains_reversed": report.final_chains_reversed(word),
        }
    return out


def cmd_identities(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    pairs = doc.get("pairs")
    if pairs is None:
        plan = mu_i_plan(word)
        pairs = [[step.group, step.before.b] for step in plan.steps]
    cutoff = max(identity_step(word, k, s) for k, s in pairs)
    values = run_mu_i(
        word, with_seed=True, check_identities=False, max_seed_steps=cutoff
    ).label_values
    return {"identities": [verify_identity(word, k, s, values) for k, s in pairs]}


def cmd_pbw(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    expander = PBWExpander(word)
    targets = doc.get("targets")
    results = []
    if targets is None:
        targets = [["V", k] for k in range(1, word.r + 1)]
    for target in targets:
        kind = target[0]
        if kind == "V":
            poly = expander.expand_initial(target[1])
        elif kind == "M":
            poly = expander.expand(IntervalLabel(target[1], target[2]))
        elif kind == "laurent":
            poly = expander.expand_laurent(
                LaurentPoly.from_json(target[1])
            )
        else:
            raise ValidationError(f"unknown expansion target {target!r}")
        results.append({"target": target, "poly": poly.to_json()})
    return {"expansions": results}


def cmd_euler_gen(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    ks = doc.get("positions", list(range(1, word.r + 1)))
    out = []
    for k in ks:
        g = g_V(word, k)
        out.append(
            {"k": k, "words": g.word_count(), "sum": g.to_json()}
        )
    return {"generating_functions": out}


def cmd_phi_eval(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    pattern = doc.get("pattern", list(word.printed))
    names = doc.get(
        "vars", [f"t{q}" for q in range(len(pattern), 0, -1)]
    )
    out = []
    for k in doc.get("positions", list(range(1, word.r + 1))):
        val = phi_eval(g_V(word, k), pattern, names)
        out.append({"k": k, "value": val.to_json()})
    return {"pattern": pattern, "values": out}


def cmd_minor_check(args) -> dict:
    doc = _load_doc(args)
    word = _word_from_doc(doc)
    out = []
    for k in range(1, word.r + 1):
        rows, cols = minor_spec_for_Vk(word, k)
        val = cross_validate(word, k)
        out.append(
            {
                "k": k,
                "rows": list(rows),
                "cols": list(cols),
                "value": val.to_json(),
                "ok": True,
            }
        )
    return {"checks": out}


def cmd_acyclic(args) -> dict:
    doc = _load_doc(args)
    try:
        orientation = QuiverOrientation.from_arrows(doc["rank"], doc["arrows"])
    except KeyError as exc:
        raise ValidationError(f"missing input field {exc}") from exc
    matrix = coefficient_free_matrix(orientation)
    initial = Seed.initial(matrix)
    dagger = y_dagger(initial)
    result = {
        "matrix_returns": dagger.matrix == matrix,
        "disjoint": not (set(initial.cluster) & set(dagger.cluster)),
        "dagger_cluster": [x.to_json() for x in dagger.cluster],
    }
    try:
        word, _ = acyclic_double(orientation)
        result["double_word"] = list(word.printed)
    except WeylseedError as exc:
        result["double_word"] = None
        result["caveat"] = str(exc)
    return result


def cmd_selftest(args) -> dict:
    summary = acceptance.quick_selftest(seed=args.seed)
    if not all(summary.values()):
        raise EngineError(f"selftest failed: {summary}")
    return {"selftest": summary}


COMMANDS = {
    "gamma": cmd_gamma,
    "mutate": cmd_mutate,
    "walk": cmd_walk,
    "dimvec": cmd_dimvec,
    "delta-dimvec": cmd_delta_dimvec,
    "mu-i": cmd_mu_i,
    "identities": cmd_identities,
    "pbw": cmd_pbw,
    "euler-gen": cmd_euler_gen,
    "phi-eval": cmd_phi_eval,
    "minor-check": cmd_minor_check,
    "acyclic": cmd_acyclic,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylseed",
        description="exact cluster-seed engine over Weyl group words",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="input JSON document (default stdin)")
        p.add_argument("--inline", help="inline JSON document")
        p.add_argument("--output", help="output path (default stdout)")
        p.add_argument(
            "--mode",
            choices=["frozen", "invertible", "specialized"],
            default="frozen",
            help="coefficient handling for cluster output",
        )
        p.add_argument("--depth", type=int, default=None, help="walk or seed depth bound")
        p.add_argument("--seed", type=int, default=20240801, help="RNG seed")
        p.add_argument(
            "--plan-only",
            action="store_true",
            help="plan combinatorics without symbolic execution",
        )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "walk" and args.depth is None:
        args.depth = 6
    try:
        result = COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        diag = {"error": type(exc).__name__, "detail": str(exc)}
        print(_dump(diag), file=sys.stderr, end="")
        return 3
    text = _dump(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
