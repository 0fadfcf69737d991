"""q-deformed binomial coefficients of words and q-Parikh matrices."""
from .errors import *  # noqa: F401,F403
from .words import (
    Letter, Word, LeftInfiniteWord, Morphism, letter, parse_word, reverse_word, word_power,
    make_stream, parse_stream, occurrences, binomial, canonical_word,
)
from .polynomials import (
    IntPoly, TruncatedSeries, FactoredRational, PolyMatrix, Recurrence, IntRecurrence,
    reciprocal, series_expand, unitriangular_inverse, hadamard, antitranspose, minor_det,
)
from .qbinomial import qbinom, qbinom_oracle, qbinom_reversed, morphic_qbinom
from .parikh import (
    atomic_matrix, parikh_matrix, parikh_matrix_closed, canonical_matrix, egecioglu_matrix,
    parikh_inverse_closed, parikh_inverse_reversal, reverse_duality_check,
    cancellation_identity, cauchy_minor, cauchy_dual,
)
from .series import (
    ClosedForm, series_coefficients, periodic_closed_form, pow_matrix, closed_form_eval,
    recurrence_polynomial, recurrence_integer, coefficient_recurrence, vanishing_residues,
    growth_fit, limit_rational,
)
from .morphism_reduction import (
    sigma_z, zc_matrices, check_canonical_reduction, extra_property_check,
)

__version__ = "0.1.0"
