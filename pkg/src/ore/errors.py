"""Exception types shared across the library.

Theorem-level outcomes (a missing p-th root during right division, a
witness search coming up empty) are returned as values, not raised; the
classes here cover genuine contract violations.
"""


class OreError(Exception):
    """Base class for all library errors."""


class DescriptorMismatch(OreError):
    """Operands belong to different field kernels."""


class DivisionByZero(OreError, ZeroDivisionError):
    """Division by the zero element of a field."""


class InfiniteField(OreError):
    """Enumeration requested for a kernel with infinitely many elements."""


class NotASubgroup(OreError):
    """Element set is not closed under the group operations.

    Carries a witness: ('add', w1, w2), ('neg', w) or ('zero',).
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not an additive subgroup: {witness}")


class DivisionByZeroPolynomial(OreError):
    """Division by the zero polynomial."""


class ZeroInput(OreError):
    """Zero operand where a nonzero one is required (gcrd/lclm)."""


class PerfectFieldMisuse(OreError):
    """Right-Ore witness search invoked where no obstruction can exist."""


class NonzeroTrace(OreError):
    """Additive Hilbert 90 requires a trace-zero input."""


class NotAFactor(OreError):
    """Claimed polynomial factor does not divide."""


class DegreeDivisibleByP(OreError):
    """Root-recovery trick needs a factor degree prime to p."""


class UnfactoredDenominator(OreError):
    """Denominator has an irreducible factor above the place bound."""


class BelowPrecision(OreError):
    """Requested quantity is not determined by the known coefficients."""


class PrecisionExhausted(OreError):
    """A leading term or principal part cannot be determined."""


class PreconditionValuation(OreError):
    """Input valuation violates a solver precondition."""


class DivisibleValue(OreError):
    """Valuation divisible by p where a prime-to-p value is required."""


class BudgetExceeded(OreError):
    """Exhaustive search would exceed the configured budget."""
