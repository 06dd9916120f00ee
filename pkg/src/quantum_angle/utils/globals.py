import math


class Globals:
    # Unit-norm tolerance for StateVector construction.
    NORM_TOL: float = 1e-9
    # Relaxed tolerance for states read from files; those get renormalized.
    FILE_NORM_TOL: float = 1e-6
    # |<a|b>| may overshoot 1 by roundoff; clamped before arccos.
    CLAMP_TOL: float = 1e-12
    # Relative to max(1, ||A||_max).
    HERMITIAN_TOL: float = 1e-10
    RECONSTRUCTION_TOL: float = 1e-8
    # Entries below this are treated as zero when fixing phases.
    ZERO_TOL: float = 1e-14

    # Two states differ substantially when their angle is at least one radian.
    SUBSTANTIAL_ANGLE: float = 1.0
    RIGHT_ANGLE: float = math.pi / 2

    # Bisection tolerance of minimal_substantial_shift.
    SHIFT_XTOL: float = 1e-12
    # Allowance for bound verdicts built from a located shift.
    VERDICT_TOL: float = 1e-9

    # Tensor-product guards: total state size, and dense-matrix oracle size.
    MAX_TENSOR_DIM: int = 2**20
    MAX_DENSE_DIM: int = 4096


GLOBALS = Globals()
