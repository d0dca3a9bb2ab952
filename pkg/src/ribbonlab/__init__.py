"""Exact enumeration, entropy, and bounds for n-ribbon tilings of lattice regions."""

from .bounds import (
    BoundReport,
    balanced_split,
    binomial_bound,
    bound_report,
    corpus_entropy_report,
    level_product_bound,
    per_tile_entropy,
    power_bound,
)
from .counting import (
    CountResult,
    MemoCapacityError,
    advance_frontier,
    count_dfs,
    count_frontier_dp,
    enumerate_tilings,
    initial_state,
    is_tileable,
)
from .oracle import oracle_count, oracle_enumerate
from .region import (
    Cell,
    LevelProfile,
    Region,
    RegionFormatError,
    boundary_squares,
    gen_aztec,
    gen_random_tileable,
    gen_rectangle,
    level,
    level_profile,
    order_key,
    parse_region,
    rotate180,
    serialize_region,
)
from .render import render_svg
from .runs import (
    FrontierState,
    Run,
    RunDecomposition,
    RunForm,
    classify_run,
    decompose_runs,
    end_squares,
)
from .tiling import (
    Ribbon,
    RootDecodeError,
    RootSet,
    TauProfile,
    Tiling,
    TilingFormatError,
    compute_tau,
    decode_roots,
    encode_roots,
    parse_tiling,
    serialize_roots,
    serialize_tiling,
    validate_tiling,
)

__version__ = "0.1.0"
