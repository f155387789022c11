"""B2SR bit-block sparse matrices, bit-packed semiring kernels and graph algorithms."""

from pathlib import Path

from ._core import (
    AlgoResult,
    B2srMatrix,
    CsrMatrix,
    DivisionByZeroError,
    Error,
    FormatError,
    InconsistencyError,
    IoError,
    ParameterError,
    ParseError,
    bfs,
    bmm_bin_bin_sum,
    bmv_bin_bin_bin,
    bmv_bin_bin_full,
    bmv_bin_full_full,
    cli,
    connected_components,
    csr_storage_bytes,
    lower_triangle,
    nonzero_density,
    pagerank,
    parse_matrix_market,
    read_matrix_market,
    sample_profile,
    sssp,
    triangle_count,
    write_matrix_market,
)

TILE_DIMS = (4, 8, 16, 32)

# The wheel ships the report schema next to the extension.
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")
if not SCHEMA_PATH.exists():
    from ._core import schema_path as _schema_path

    SCHEMA_PATH = Path(_schema_path())

__all__ = [name for name in dir() if not name.startswith("_")]
