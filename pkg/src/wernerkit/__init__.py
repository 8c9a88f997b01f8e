"""Chord-diagram bases and polygon states for Werner-invariant qubit operators."""

from .bitstrings import (
    BitString,
    aperiodic_strings,
    count_aperiodic,
    count_aperiodic_mobius,
    count_aperiodic_with_00,
    count_periodic,
    count_periodic_with_00,
)
from .chord_diagrams import (
    ChordDiagram,
    enumerate_noncrossing,
    format_diagram,
    lex_compare,
    parse_diagram,
    pizza_diagram,
    representative_set,
)
from .exactmat import ScaledGaussianOperator
from .separability import (
    ReductionEntry,
    TwoQubitWernerForm,
    is_separable_pair,
    partial_trace,
    rho0000_exact,
    rho0000_lower_bound,
    table2,
    two_qubit_werner_form,
)
from .states import (
    InvarianceReport,
    ScaledIntState,
    check_pure_werner,
    cyclic_state,
    diagram_state,
    pizza_state,
    polygon_density,
)
from .werner_ops import (
    CommutantSpan,
    Decomposition,
    WernerBasis,
    a_operator,
    check_mixed_werner,
    commutant_oracle,
    decompose,
    haar_random_unitary,
    hermitian_basis,
    m_map,
    pizza_operator,
    transpose_rotation_check,
    twirl_check,
)

__version__ = "0.1.0"

__all__ = [
    "BitString",
    "ChordDiagram",
    "CommutantSpan",
    "Decomposition",
    "InvarianceReport",
    "ReductionEntry",
    "ScaledGaussianOperator",
    "ScaledIntState",
    "TwoQubitWernerForm",
    "WernerBasis",
    "a_operator",
    "aperiodic_strings",
    "check_mixed_werner",
    "check_pure_werner",
    "commutant_oracle",
    "count_aperiodic",
    "count_aperiodic_mobius",
    "count_aperiodic_with_00",
    "count_periodic",
    "count_periodic_with_00",
    "cyclic_state",
    "decompose",
    "diagram_state",
    "enumerate_noncrossing",
    "format_diagram",
    "haar_random_unitary",
    "hermitian_basis",
    "is_separable_pair",
    "lex_compare",
    "m_map",
    "parse_diagram",
    "partial_trace",
    "pizza_diagram",
    "pizza_operator",
    "pizza_state",
    "polygon_density",
    "representative_set",
    "rho0000_exact",
    "rho0000_lower_bound",
    "table2",
    "transpose_rotation_check",
    "twirl_check",
    "two_qubit_werner_form",
]
