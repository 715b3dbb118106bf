"""Tour of the construction catalog.

Every entry packages: an algebra, a module, an explicit covariant family,
frozen expected numbers (dim V, generic stabiliser dimension l, degree q of
the quotient generator count, the covariant degrees, the degree-sum audit),
plus entry-specific extra checks, negative controls, and witnesses.  The
degree bookkeeping q + sum(deg_i + 1) = dim V + l holds on every entry
whose audit closes with equality.
"""

from semicov.catalog import all_entries, build_construction, get_entry


def main() -> None:
    print("%-10s %-7s %5s %3s %4s  %-14s %s"
          % ("entry", "params", "dimV", "l", "q", "degrees", "audit"))
    print("-" * 66)
    for entry in all_entries():
        cons = build_construction(entry, {})
        exp = cons.expected
        params = ",".join("%s=%s" % kv for kv in sorted(cons.params.items())) or "-"
        print("%-10s %-7s %5d %3d %4d  %-14s %s"
              % (entry.id, params, exp.dim_v, exp.rank, exp.quotient_degree,
                 ",".join(str(d) for d in exp.degrees), exp.audit_verdict))

    print()
    print("== what one entry carries ==")
    entry = get_entry("ex6.3/iii")
    cons = build_construction(entry, {})
    print("id:        ", cons.entry_id)
    print("title:     ", entry.title)
    print("algebra:   ", cons.algebra.name, "dim", cons.algebra.dim)
    print("module:    ", "dim_v", cons.module.dim_v)
    print("family:    ", [(f.name, f.degree) for f in cons.family])
    print("extras:    ", [e.name for e in cons.extras])
    print("controls:  ", [c.name for c in cons.controls])
    print("bookkeeping: q + sum(deg+1) = %d + %d = %d = dim V + l"
          % (cons.expected.quotient_degree,
             sum(d + 1 for d in cons.expected.degrees),
             cons.expected.dim_v + cons.expected.rank))


if __name__ == "__main__":
    main()
