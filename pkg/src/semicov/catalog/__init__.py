"""Catalog of verified constructions and their printed table rows."""

from .entries import (
    CatalogEntry,
    ParameterError,
    ParamSpec,
    UnknownEntryError,
    all_entries,
    build_construction,
    get_entry,
    resolve_id,
)
from .families import (
    CheckContext,
    Construction,
    Control,
    Expected,
    ExtraCheck,
    adjoint_construction,
    cubic_construction,
    quiver_construction,
    quiver_cycle_matrix,
    quiver_witness_plane,
    so_copies_construction,
    sp_so_construction,
    sym_skew_construction,
    sym_skewdual_construction,
    tri_sl_construction,
)
from .manifest import ManifestLine, find_line, load_manifest
from .support import (
    MatrixPairModule,
    SymSkewPairModule,
    embed_blocks,
    matrix_pair_module,
    minor_skew_by_columns,
    minor_skew_by_rows,
    module_from_fields,
    quotient_dim_estimate,
    sym_skew_pair_module,
    traceless_part,
    unvec,
)
from .tables import (
    TABLE_CAPTIONS,
    TABLE_COLUMNS,
    EntryLink,
    ModuleSpec,
    TableRow,
    all_rows,
    get_row,
    rows_for_entry,
)

__all__ = [
    "CatalogEntry",
    "ParamSpec",
    "ParameterError",
    "UnknownEntryError",
    "all_entries",
    "get_entry",
    "resolve_id",
    "build_construction",
    "CheckContext",
    "Construction",
    "Control",
    "Expected",
    "ExtraCheck",
    "adjoint_construction",
    "cubic_construction",
    "quiver_construction",
    "quiver_cycle_matrix",
    "quiver_witness_plane",
    "so_copies_construction",
    "sp_so_construction",
    "sym_skew_construction",
    "sym_skewdual_construction",
    "tri_sl_construction",
    "ManifestLine",
    "find_line",
    "load_manifest",
    "MatrixPairModule",
    "SymSkewPairModule",
    "embed_blocks",
    "matrix_pair_module",
    "minor_skew_by_columns",
    "minor_skew_by_rows",
    "module_from_fields",
    "quotient_dim_estimate",
    "sym_skew_pair_module",
    "traceless_part",
    "unvec",
    "TABLE_CAPTIONS",
    "TABLE_COLUMNS",
    "EntryLink",
    "ModuleSpec",
    "TableRow",
    "all_rows",
    "get_row",
    "rows_for_entry",
]
