"""Combinatorial invariants of tunnel number one knot tunnels."""
from .bridge import (
    SeedPair,
    bridge_set,
    bridge_set_pairs,
    fibonacci_coefficients,
    fibonacci_number,
    fibonacci_trace,
    fibonacci_value,
    max_bridge,
    max_bridge_overall,
    min_bridge,
    semisimple_range,
    torus_min_bridge,
)
from .errors import (
    CapExceededError,
    InfeasibleError,
    InvalidSeedError,
    NotCoprimeError,
    NotRegularError,
    OutOfRangeError,
    ParseError,
    TrivialKnotError,
    TunnelAtlasError,
)
from .oracle import (
    QuadraticInteger,
    SearchReport,
    closed_form_check,
    enumerate_words,
    max_bridge_search,
    min_bridge_search,
)
from .torus import (
    TorusTunnelTable,
    cf_eval,
    cf_expand,
    invariant_table,
    letter_sequence,
    normalize_cf,
    normalize_torus_params,
    torus_depth,
    torus_depth_shortcut,
)
from .words import (
    PRIMITIVE_DEPTH,
    BinaryWord,
    CablingProfile,
    StepSequence,
    binary_to_steps,
    depth_of_steps,
    depth_of_word,
    parse_binary,
    parse_path,
    parse_steps,
    profile,
    semisimple_count,
    steps_to_binary,
)

__version__ = "0.1.0"
