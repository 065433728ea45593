#!/usr/bin/env python3
"""Run the chain-reversal mutation pass on a word and report what happened.

Shows the grouped plan, the per-vertex interval labels at the end, and the
exchange identities produced along the way (verified in the Laurent ring up
to an optional symbolic step cutoff).
"""
import argparse
import json

from weylseed.cartan import CartanMatrix, ReducedWord
from weylseed.intervals import mu_i_plan, run_mu_i, verify_identity


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--doc",
        default='{"rank": 3, "edges": [[1,2,1],[2,3,1]], "word": [2,3,1,2,3,1]}',
        help="JSON document with rank, edges, word",
    )
    parser.add_argument(
        "--cutoff",
        type=int,
        default=None,
        help="verify identities symbolically only up to this plan step",
    )
    args = parser.parse_args()

    doc = json.loads(args.doc)
    cartan = CartanMatrix.from_edges(doc["rank"], doc["edges"])
    word = ReducedWord(cartan, doc["word"])
    plan = mu_i_plan(word)
    print(f"word {list(word.printed)}: {plan.length} mutations")
    for k, group in enumerate(plan.groups, start=1):
        label = " ".join(f"mu_{v}" for v in reversed(group)) or "id"
        print(f"  pass {k}: ({label})")
    report = run_mu_i(word, max_seed_steps=args.cutoff)
    print("final labels:", [f"M[{l.b},{l.a}]" for l in report.final_labels])
    print("labels as predicted:", report.final_labels_expected(word))
    print("chain arrows reversed:", report.final_chains_reversed(word))
    for step in plan.steps:
        if args.cutoff is not None and step.index > args.cutoff:
            break
        out = verify_identity(word, step.group, step.before.b, report.label_values)
        print(f"  step {step.index}: exchange at {step.before} ok={out['ok']}")


if __name__ == "__main__":
    main()
