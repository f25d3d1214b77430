from fractions import Fraction

# Matrix dimension of a three-qubit density operator
STATE_DIMENSION = 8

# Basis ordering: |abc> maps to index 4a + 2b + c, qubit A is the most significant bit
QUBIT_BIT_MASKS = {
    "A": 0b100,
    "B": 0b010,
    "C": 0b001,
}

# Canonical SPA weight p = 4/5 and the resulting separability threshold p / 8 = 1 / 10
CANONICAL_SPA_PARAMETER = float(Fraction(4, 5))
SEPARABILITY_THRESHOLD = float(Fraction(1, 10))

# Lowest weight for which the canonical threshold argument is valid, p = 1 is fully depolarizing
MIN_CLASSIFICATION_SPA_PARAMETER = CANONICAL_SPA_PARAMETER

# Boundary between the W-class and GHZ-class regions of the rho_2 family on the line
# q2 = (1 - q1) / n. This is a reported value from the convex-roof literature, it is not computed here.
RHO2_REPORTED_TANGLE_BOUNDARY = 0.6269

CUT_NAMES = {
    "A": "A-BC",
    "B": "B-AC",
    "C": "C-AB",
}

NECESSARY_CONDITION_CAVEAT = (
    "The 1/10 test is a necessary condition for separability across each cut. Passing it cannot exclude "
    "PPT (bound) entanglement, so separable and biseparable verdicts are necessary-condition based."
)
