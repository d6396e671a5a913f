"""Heat transport through a two-mode Hopfield light-matter junction."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConfigError,
    ConvergenceError,
    DegenerateError,
    DomainError,
    HopfieldError,
    NumericalError,
    ResourceError,
    StepSizeError,
)
from .params import BathSpec, SpectralDensity, SystemParams  # noqa: E402
from .hopfield import (  # noqa: E402
    BogoliubovCoefficients,
    PolaritonSpectrum,
    bogoliubov_coefficients,
    diamagnetic_term,
    eigenenergy,
    mixing_angle,
    polariton_frequencies,
    spectrum,
)
from .dissipation import (  # noqa: E402
    DecayRates,
    RateSet,
    bose_einstein,
    decay_rates,
    gme_rates,
    polariton_populations,
    purcell_dsc_asymptote,
    purcell_weak_asymptote,
)
from .transport import (  # noqa: E402
    TransmissionLine,
    TransportReport,
    heat_current_gme,
    heat_current_lme,
    heat_current_time_dependent,
    second_law_audit,
    transmission_lines,
)
from .virtual import (  # noqa: E402
    VirtualPhotonReport,
    asymptote_dsc,
    asymptote_intermediate,
    asymptote_weak,
    virtual_photons_ground,
    virtual_photons_thermal,
)
