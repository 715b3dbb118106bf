"""Machine verification runs and their reports.

run_suite executes the full check plan for each requested target -- the
construction audit against the frozen manifest, exact Jacobi, stabiliser
dimension and toral structure, kernel/equivariance of every family member,
entry-specific extras, independence, degree audits, lift invariance,
Poisson commutativity, even Kirillov ranks, the index consistency identity,
b(q) bookkeeping, and comparisons against the printed table rows.

Reports are deterministic for a fixed seed and serialise to JSON or to the
text layout shown below.  The same engine backs the `verify` command line:

    verify run --entry ex5.2 --seed 7 --format text
    verify run                     # everything, all tables
    verify list / verify show ID
"""

import json

from semicov.verify import RunConfig, run_suite, to_json, to_text


def main() -> None:
    cfg = RunConfig(entries=("ex5.2", "ex6.3/i", "table2/8"), seed=7,
                    negative_controls=True)
    report = run_suite(cfg)

    print(to_text(report))
    print("any failures:", report.failed)

    payload = json.loads(to_json(report))
    print("JSON config:", payload["config"])
    first = payload["entries"][0]
    print("first target:", first["id"], "with", len(first["checks"]), "check rows")

    again = to_json(run_suite(cfg))
    print("byte-identical on rerun:", again == to_json(report))


if __name__ == "__main__":
    main()
