"""Exception hierarchy shared by all ramify modules.

Errors fall into three families, mirrored by the CLI exit codes:
bad input (``InputError``, exit 2), a computation that cannot proceed
(``ComputationError``, exit 1), and disagreement between two supposedly
equivalent computation routes (``CrossCheckMismatch``, exit 3).  Every
class carries a stable ``code`` string for machine-readable reports.
"""


class RamifyError(Exception):
    code = "ramify.error"


class InputError(RamifyError):
    """The caller supplied data violating a documented precondition."""

    code = "ramify.input"


class ComputationError(RamifyError):
    code = "ramify.computation"


class CrossCheckMismatch(RamifyError):
    """Independent routes to the same quantity disagreed (a bug, never expected)."""

    code = "ramify.cross_check_mismatch"


# -- algebra ----------------------------------------------------------------

class DivisionByZeroToPrecision(ComputationError):
    """The divisor vanishes within its known precision."""

    code = "algebra.division_by_zero_to_precision"


class InsufficientPrecision(ComputationError):
    """The requested quantity is not determined at the current precision.

    Callers retry the whole pipeline at doubled precision; the CLI does
    this automatically up to the configured cap.
    """

    code = "algebra.insufficient_precision"


# -- local_field ------------------------------------------------------------

class RootsOfUnityMissing(InputError):
    code = "local_field.roots_of_unity_missing"


class WildDegree(InputError):
    code = "local_field.wild_degree"


class WildPoleOrder(InputError):
    code = "local_field.wild_pole_order"


class SubfieldMissing(InputError):
    code = "local_field.subfield_missing"


# -- ramification -----------------------------------------------------------

class InvalidFiltration(InputError):
    code = "ramification.invalid_filtration"


class NonIntegralQuotient(InputError):
    code = "ramification.non_integral_quotient"


class HasseArfViolation(ComputationError):
    code = "ramification.hasse_arf_violation"


# -- groups / characters ----------------------------------------------------

class GroupMismatch(InputError):
    code = "groups.group_mismatch"


class NotAHomomorphism(InputError):
    code = "groups.not_a_homomorphism"


class OrderBoundExceeded(InputError):
    code = "characters.order_bound_exceeded"


class NonIntegerDimension(ComputationError):
    code = "characters.non_integer_dimension"


# -- swan -------------------------------------------------------------------

class ArtinNotCharacter(ComputationError):
    code = "swan.artin_not_character"


class SwanNotCharacter(ComputationError):
    code = "swan.swan_not_character"


# -- curves -----------------------------------------------------------------

class InconsistentCover(InputError):
    code = "curves.inconsistent_cover"


class IdentityNotProper(InputError):
    code = "curves.identity_not_proper"


class SupportMismatch(InputError):
    code = "curves.support_mismatch"


# -- cli --------------------------------------------------------------------

class SpecFileError(InputError):
    code = "cli.spec_file"
