"""Surface-code data bus: GHZ-chain parity checks and resource trade-offs."""

from .pauli import PauliString, format_generators, parse_generators
from .tableau import StabilizerTableau, canonical_form, group_equals, new_tableau
from .patches import PatchSpec, planar_patch, with_logical_x
from .bus import (
    Attachment,
    BusSpec,
    NoiseModel,
    Segment,
    attach_transversal,
    build_ghz_circuit,
    joint_parity,
    oracle_parity,
    parity_error_stats,
    plan_bus,
    run_circuit,
)
from .verify import decode_defects, repetition_failure_rate, verify_ghz
from .layout import (
    LayoutModel,
    nisq_counts,
    qc_with_bus,
    qc_without_bus,
    rotated_bus_path,
    worstcase_total,
)
from .tradeoff import (
    ComputationProfile,
    ErrorModel,
    TradeoffReport,
    counterexample,
    estimate,
    logical_error_rate,
    required_distance,
    safety_factor,
    solve_bus_distance,
    sweep,
    total_failure,
)
from .presets import Preset, all_presets, find_preset, table_presets

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
