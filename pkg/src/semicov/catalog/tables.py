"""Catalog tables: printed rows, cross-links to entries, and module checks.

Each row stores its printed columns verbatim as data.  Rows referring to an
executable entry carry a link with the pinned parameters and the numeric
values the row prints for them; rows whose module (but not family) is in
scope carry a module builder so the dimensions, the toral stabiliser and
the quotient estimate can be validated directly.  The remaining rows are
metadata only.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..lie import (
    LieAlgebra,
    Representation,
    defining,
    direct_sum,
    dual,
    ext_power,
    lift_factor,
    product,
    sl,
    so,
    sp,
    sym_power,
    subrepresentation,
    tensor,
)
from ..linalg import Matrix
from .support import matrix_pair_module

__all__ = [
    "TableRow",
    "EntryLink",
    "ModuleSpec",
    "TABLE_COLUMNS",
    "TABLE_CAPTIONS",
    "all_rows",
    "get_row",
    "rows_for_entry",
]


@dataclass(frozen=True)
class EntryLink:
    """Printed values of a row at pinned parameters of a catalog entry."""

    entry_id: str
    pinned: dict | None  # None: evaluate at whatever parameters the entry ran with
    minimum: dict = field(default_factory=dict)
    values: Callable[[dict], dict] | None = None  # params -> {l, dim_v, ...}


@dataclass(frozen=True)
class ModuleSpec:
    """Bare-module instantiation for rows without an executable family."""

    build: Callable[[dict], Representation]
    default_params: dict
    expected: Callable[[dict], dict]  # params -> {dim_v, gs, quotient_dim?}


@dataclass(frozen=True)
class TableRow:
    id: str
    table: int
    printed: tuple[tuple[str, str], ...]
    links: tuple[EntryLink, ...] = ()
    module_spec: ModuleSpec | None = None
    note: str = ""


TABLE_COLUMNS = {
    1: ("group", "module", "dim_v", "dim_v_quotient", "q", "fa", "eq"),
    2: ("group", "module", "h", "theta", "ref"),
    3: ("group", "module", "h", "grading", "ref"),
    4: ("group", "module", "h", "range", "fa"),
}

TABLE_CAPTIONS = {
    1: "modules with a one-dimensional toral generic stabiliser",
    2: "modules from order-k automorphisms; h is the generic stabiliser",
    3: "modules from Z-gradings; h is the generic stabiliser",
    4: "further modules with toral generic stabilisers",
}


# -- module builders ----------------------------------------------------------


def _left_right_pair(galg: LieAlgebra, rows: int, cols: int) -> Representation:
    r0, r1 = galg.factors[0].algebra.matrix_size, galg.factors[1].algebra.matrix_size

    def fields(s: Matrix, mats: list[Matrix]) -> list[Matrix]:
        M = mats[0]
        s1 = s.submatrix(range(r0), range(r0))
        s2 = s.submatrix(range(r0, r0 + r1), range(r0, r0 + r1))
        return [s1 * M - M * s2]

    return matrix_pair_module(galg, [(rows, cols)], fields, label="%dx%d" % (rows, cols)).rep


def _so_pair_module(params: dict) -> Representation:
    n = params["n"]
    return _left_right_pair(product(so(n + 2), so(n)), n + 2, n)


def _two_factor_pairs_module(params: dict) -> Representation:
    n = params["n"]
    galg = product(sl(n), sl(n))

    def fields(s: Matrix, mats: list[Matrix]) -> list[Matrix]:
        s1 = s.submatrix(range(n), range(n))
        s2 = s.submatrix(range(n, 2 * n), range(n, 2 * n))
        return [s1 * m - m * s2 for m in mats]

    return matrix_pair_module(galg, [(n, n), (n, n)], fields, label="pairs(%d)" % n).rep


def _sl6_ext2() -> Representation:
    return ext_power(defining(sl(6)), 2)


def _sl6_two_ext2_plus_dual(params: dict) -> Representation:
    r = _sl6_ext2()
    return direct_sum(r, r, dual(r))


def _sl6_three_ext2(params: dict) -> Representation:
    r = _sl6_ext2()
    return direct_sum(r, r, r)


def _sl6_sl3_module(params: dict) -> Representation:
    galg = product(sl(6), sl(3))
    r0 = lift_factor(galg, 0, ext_power(defining(galg.factors[0].algebra), 2))
    r1 = lift_factor(galg, 1, defining(galg.factors[1].algebra))
    return tensor(r0, r1)


def _sl6_sl2_module(params: dict) -> Representation:
    galg = product(sl(6), sl(2))
    r0 = lift_factor(galg, 0, ext_power(defining(galg.factors[0].algebra), 2))
    r1 = lift_factor(galg, 1, sym_power(defining(galg.factors[1].algebra), 2))
    return tensor(r0, r1)


def _sp6_phi2(g6: LieAlgebra | None = None) -> Representation:
    """The 14-dimensional summand of the second exterior power of Sp_6."""
    r = ext_power(defining(g6 if g6 is not None else sp(6)), 2)
    pairs = list(itertools.combinations(range(6), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    form_pairs = [(0, 3), (1, 4), (2, 5)]  # pairs with J(e_i, e_j) = 1
    vectors = []
    for p in pairs:
        if p not in form_pairs:
            v = [Fraction(0)] * len(pairs)
            v[idx[p]] = Fraction(1)
            vectors.append(v)
    for a, b in ((0, 1), (1, 2)):
        v = [Fraction(0)] * len(pairs)
        v[idx[form_pairs[a]]] = Fraction(1)
        v[idx[form_pairs[b]]] = Fraction(-1)
        vectors.append(v)
    return subrepresentation(r, vectors, label="phi2(sp6)")


def _sp6_two_phi2(params: dict) -> Representation:
    r = _sp6_phi2()
    return direct_sum(r, r)


def _sp6_sl2_module(params: dict) -> Representation:
    galg = product(sp(6), sl(2))
    r0 = lift_factor(galg, 0, _sp6_phi2(galg.factors[0].algebra))
    r1 = lift_factor(galg, 1, defining(galg.factors[1].algebra))
    return tensor(r0, r1)


def _sl4_sl2_module(params: dict) -> Representation:
    galg = product(sl(4), sl(2))
    r0 = lift_factor(galg, 0, ext_power(defining(galg.factors[0].algebra), 2))
    r1 = lift_factor(galg, 1, sym_power(defining(galg.factors[1].algebra), 3))
    return tensor(r0, r1)


# -- the rows -----------------------------------------------------------------


def _t1(row, group, module, dim_v, dvq, qq, fa, eq, **kw) -> TableRow:
    return TableRow(
        id="table1/%s" % row,
        table=1,
        printed=(
            ("group", group),
            ("module", module),
            ("dim_v", dim_v),
            ("dim_v_quotient", dvq),
            ("q", qq),
            ("fa", fa),
            ("eq", eq),
        ),
        **kw,
    )


def _t2(row, group, module, h, theta, ref, **kw) -> TableRow:
    return TableRow(
        id="table2/%s" % row,
        table=2,
        printed=(("group", group), ("module", module), ("h", h), ("theta", theta), ("ref", ref)),
        **kw,
    )


def _t3(row, group, module, h, grading, ref, **kw) -> TableRow:
    return TableRow(
        id="table3/%s" % row,
        table=3,
        printed=(("group", group), ("module", module), ("h", h), ("grading", grading), ("ref", ref)),
        **kw,
    )


def _t4(row, group, module, h, rng, fa, **kw) -> TableRow:
    return TableRow(
        id="table4/%s" % row,
        table=4,
        printed=(("group", group), ("module", module), ("h", h), ("range", rng), ("fa", fa)),
        **kw,
    )


_ROWS: list[TableRow] = [
    # Table 1
    _t1(
        "1a", "SO_{n+2} x SO_n", "phi1 phi1'", "n(n+2)", "n", "n(n+1)", "yes", "yes",
        module_spec=ModuleSpec(
            build=_so_pair_module,
            default_params={"n": 3},
            expected=lambda p: {
                "dim_v": p["n"] * (p["n"] + 2),
                "gs": 1,
                "quotient_dim": p["n"],
            },
        ),
    ),
    _t1(
        "1b", "SO_{n+2}", "n phi1", "n(n+2)", "n(n+1)/2", "n(n+1)", "yes", "yes, if n <= 3",
        links=(
            EntryLink(
                entry_id="ex6.4",
                pinned=None,
                values=lambda p: {
                    "l": 1,
                    "dim_v": p["n"] * (p["n"] + 2),
                    "quotient_dim": p["n"] * (p["n"] + 1) // 2,
                    "q": p["n"] * (p["n"] + 1),
                },
            ),
        ),
    ),
    _t1(
        "2", "SL_6", "2phi2 + phi2*", "45", "11", "36", "yes", "no",
        module_spec=ModuleSpec(
            build=_sl6_two_ext2_plus_dual,
            default_params={},
            expected=lambda p: {"dim_v": 45, "gs": 1, "quotient_dim": 11},
        ),
    ),
    _t1(
        "3a", "SL_6 x SL_3", "phi2 phi1'", "45", "3", "36", "yes", "yes",
        module_spec=ModuleSpec(
            build=_sl6_sl3_module,
            default_params={},
            expected=lambda p: {"dim_v": 45, "gs": 1, "quotient_dim": 3},
        ),
    ),
    _t1(
        "3b", "SL_6 x SL_2", "phi2 phi'^2", "45", "8", "36", "no", "no",
        module_spec=ModuleSpec(
            build=_sl6_sl2_module,
            default_params={},
            expected=lambda p: {"dim_v": 45, "gs": 1, "quotient_dim": 8},
        ),
    ),
    _t1(
        "3c", "SL_6", "3phi2", "45", "11", "36", "yes", "no",
        module_spec=ModuleSpec(
            build=_sl6_three_ext2,
            default_params={},
            expected=lambda p: {"dim_v": 45, "gs": 1, "quotient_dim": 11},
        ),
    ),
    _t1(
        "4a", "Sp_6 x SL_2", "phi2 phi'", "28", "5", "22", "no", "no",
        module_spec=ModuleSpec(
            build=_sp6_sl2_module,
            default_params={},
            expected=lambda p: {"dim_v": 28, "gs": 1, "quotient_dim": 5},
        ),
    ),
    _t1(
        "4b", "Sp_6", "2phi2", "28", "8", "22", "yes", "yes",
        module_spec=ModuleSpec(
            build=_sp6_two_phi2,
            default_params={},
            expected=lambda p: {"dim_v": 28, "gs": 1, "quotient_dim": 8},
        ),
    ),
    _t1(
        "5", "SL_4 x SL_2", "phi2 phi'^3", "24", "7", "20", "no", "no",
        module_spec=ModuleSpec(
            build=_sl4_sl2_module,
            default_params={},
            expected=lambda p: {"dim_v": 24, "gs": 1, "quotient_dim": 7},
        ),
    ),
    # Table 2
    _t2(
        "1", "SO_2m x Sp_2m", "phi1 phi1'", "t_m", "(A^(2)_{4m-1}, 4)", "ex6.3/i",
        links=(EntryLink("ex6.3/i", pinned=None, values=lambda p: {"l": p["m"]}),),
    ),
    _t2(
        "2", "SO_2m+1 x Sp_2m", "phi1 phi1'", "t_m", "(A^(2)_{4m}, 4)", "ex6.3/ii",
        links=(EntryLink("ex6.3/ii", pinned=None, values=lambda p: {"l": p["m"]}),),
    ),
    _t2(
        "3", "SO_2m+2 x Sp_2m", "phi1 phi1'", "t_{m+1}", "(A^(2)_{4m+1}, 4)", "ex6.3/iii",
        links=(EntryLink("ex6.3/iii", pinned=None, values=lambda p: {"l": p["m"] + 1}),),
    ),
    _t2(
        "4", "(SL_n)^k x T_{k-1}", "sum_i phi1^(i) phi_{n-1}^(i+1)", "t_{n-1}", "(A_{kn-1}, k)", "ex5.3",
        links=(EntryLink("ex5.3", pinned=None, values=lambda p: {"l": p["n"] - 1}),),
    ),
    _t2(
        "5", "SL_4 x SL_4 x SL_2", "phi1 phi1' phi''", "t_3", "(E_7, 4)", "ex5.1",
        links=(EntryLink("ex5.1", pinned={"n": 4}, values=lambda p: {"l": 3, "dim_v": 32}),),
    ),
    _t2("6", "SL_6 x SL_3", "phi2 phi1'", "t_1", "(E_7, 3)", "-", note="metadata only"),
    _t2("6a", "SL_6", "3phi2", "t_1", "-", "-", note="metadata only"),
    _t2("7", "SL_6 x SL_2", "phi3 phi'", "t_2", "(E_6, 2)", "-", note="metadata only"),
    _t2("7a", "SL_6", "2phi3", "t_2", "-", "-", note="metadata only"),
    _t2(
        "8", "SO_{n+2} x SO_n", "phi1 phi1'", "t_1", "(D_{n+1}, 2)", "-",
        module_spec=ModuleSpec(
            build=_so_pair_module,
            default_params={"n": 3},
            expected=lambda p: {"dim_v": p["n"] * (p["n"] + 2), "gs": 1},
        ),
    ),
    _t2(
        "8a", "SO_{n+2}", "n phi1", "t_1", "-", "ex6.4",
        links=(EntryLink("ex6.4", pinned=None, values=lambda p: {"l": 1}),),
    ),
    # Table 3
    _t3(
        "1", "SL_2 x SL_2 x SL_2", "phi phi' phi''", "t_2", "(D_4, alpha_2)", "ex5.2",
        links=(EntryLink("ex5.2", pinned=None, values=lambda p: {"l": 2, "dim_v": 8}),),
    ),
    _t3(
        "2", "SL_3 x SL_3 x SL_2", "phi1 phi1' phi''", "t_2", "(E_6, alpha_3)", "ex5.1",
        links=(EntryLink("ex5.1", pinned={"n": 3}, values=lambda p: {"l": 2, "dim_v": 18}),),
    ),
    # Table 4
    _t4(
        "1", "SL_n", "phi1^2 + phi2*", "t_{[n/2]}", "n >= 4", "yes",
        links=(
            EntryLink(
                "ex6.1",
                pinned=None,
                minimum={"n": 4},
                values=lambda p: {"l": p["n"] // 2, "dim_v": p["n"] ** 2},
            ),
        ),
    ),
    _t4(
        "2", "SL_n", "phi1^2 + phi2", "t_{[n/2]}", "n >= 4", "yes",
        links=(
            EntryLink(
                "ex6.2",
                pinned=None,
                minimum={"n": 4},
                values=lambda p: {"l": p["n"] // 2, "dim_v": p["n"] ** 2},
            ),
        ),
    ),
    _t4(
        "3", "SL_n x SL_n x SL_2", "phi1 phi1' phi''", "t_{n-1}", "n >= 5", "no",
        links=(
            EntryLink(
                "ex5.1",
                pinned=None,
                minimum={"n": 5},
                values=lambda p: {"l": p["n"] - 1, "dim_v": 2 * p["n"] ** 2},
            ),
        ),
    ),
    _t4(
        "3a", "SL_n x SL_n", "phi1 phi1' + phi1 phi1'", "t_{n-1}", "n >= 3", "yes",
        links=(
            EntryLink(
                "ex5.1",
                pinned=None,
                minimum={"n": 3},
                values=lambda p: {"l": p["n"] - 1, "dim_v": 2 * p["n"] ** 2},
            ),
        ),
        module_spec=ModuleSpec(
            build=_two_factor_pairs_module,
            default_params={"n": 3},
            expected=lambda p: {"dim_v": 2 * p["n"] ** 2, "gs": p["n"] - 1},
        ),
        note="same pairs as the linked entry, without the mixing sl_2",
    ),
    _t4("4", "SL_8", "phi3 + phi7", "t_2", "-", "yes", note="metadata only"),
    _t4("5", "SL_8", "phi3 + phi1", "t_2", "-", "yes", note="metadata only"),
    _t4("6", "Sp_4 x SO_7", "phi1 phi3'", "t_2", "-", "yes", note="metadata only"),
]

_BY_ID = {r.id: r for r in _ROWS}


def all_rows() -> list[TableRow]:
    return list(_ROWS)


def get_row(row_id: str) -> TableRow:
    try:
        return _BY_ID[row_id]
    except KeyError:
        raise KeyError("unknown table row %r" % row_id) from None


def rows_for_entry(entry_id: str) -> list[tuple[TableRow, EntryLink]]:
    out = []
    for r in _ROWS:
        for link in r.links:
            if link.entry_id == entry_id:
                out.append((r, link))
    return out
