"""Standard set-valued Young tableaux: generation, counting and bijections."""

from .core import (
    Density,
    SetValuedTableau,
    Shape,
    ValidationReport,
    Violation,
    check_density,
    check_shape,
    density_of,
    is_standard,
    reverse_density,
    schutzenberger,
    total_mass,
    validate,
)
from .enumeration import (
    TwoRowDensity,
    binomial,
    count_closed_form,
    count_shift_recursion,
    enumerate_dominated_tuples,
)
from .generate import count_by_generation, count_by_placement, generate_all
from .numbers import build_density, catalan_k, raney, raney_by_convolution, rational_catalan

__version__ = "0.1.0"
