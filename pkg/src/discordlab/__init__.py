"""Two-qubit quantum-correlation laboratory.

Computes geometric quantum discord under the Hilbert-Schmidt norm (d2)
and the trace norm (d1), plus entanglement negativity, for two-qubit
states, and follows these measures while one atom undergoes spontaneous
emission.  Closed forms cover the X-state class; deterministic
brute-force oracles over the measurement manifold back every closed
form independently.
"""

from .dynamics import (
    EmissionChannel,
    InvalidTime,
    StepTooLarge,
    apply_channel,
    asymptotic_state,
    integrate,
    lindblad_rhs,
)
from .families import (
    FamilyParams,
    NoSignChange,
    ParamOutOfRange,
    RegimeReport,
    TimeSeries,
    W_CRITICAL_D2,
    d1_timeseries_A,
    d1_timeseries_B,
    d2_timeseries_A,
    d2_timeseries_B,
    find_critical_w,
    make_state,
    regime,
    s_max,
)
from .linalg import (
    NoConvergence,
    NonHermitianInput,
    SizeMismatch,
    hermitian_eigenvalues,
    hs_norm_sq,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import (
    XCoefficients,
    d1_closed_x,
    d1_oracle,
    d1_x_with_method,
    d2_closed,
    d2_oracle,
    is_degenerate_x,
    measure_map,
    measurement_axis,
    negativity,
)
from .states import (
    BlochDecomposition,
    NotHermitian,
    NotPositive,
    NotXShaped,
    StateError,
    StateFileError,
    TraceNotOne,
    XState,
    bloch,
    from_bloch,
    from_x_state,
    read_state_file,
    sample_random_state,
    to_x_state,
    validate,
    write_state_file,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
