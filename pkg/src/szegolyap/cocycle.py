"""Szego cocycle matrices, conjugation, and renormalized orbit products.

The one-step matrix at spectral parameter z on the unit circle and
coefficient value f in D is

    A = (1 - |f|^2)^(-1/2) [[z, -conj(f)], [-f z, 1]],

an element of U(1,1) with det A = z.  Orbit products are accumulated with
per-step renormalization: the running matrix is kept at unit operator norm
and the stripped scale factors are summed in log form, so products of any
length never overflow.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .dynamics import PhasePoint, Rotation, ExpGenerator, orbit_theta
from .mat2 import IDENTITY, SWAP, mat2, op_norm

# Test-only hook: when True, the sign of |f|^2 inside the normalizing
# prefactor is flipped, corrupting every cocycle matrix.  Exists so the
# verification harness can demonstrate that it detects a broken kernel.
_KERNEL_SIGN_FLIP = False


class DegenerateCoefficientError(ArithmeticError):
    """A coefficient sits too close to the unit circle for double precision."""


class NumericalBlowupError(ArithmeticError):
    """An orbit product produced non-finite entries."""


@dataclass(frozen=True)
class SpectralParameter:
    """A point z of the unit circle together with its square root.

    The square root uses the principal branch (argument in (-pi, pi]).
    Any fixed branch works, because z^(1/2) only ever enters through
    unitary conjugation; a single instance carries one branch consistently
    through a computation.
    """

    z: complex
    sqrt_z: complex

    def __post_init__(self):
        if abs(abs(self.z) - 1.0) > 1e-14:
            raise ValueError(f"|z| must be 1, got |z| = {abs(self.z)}")
        if abs(self.sqrt_z**2 - self.z) > 1e-14:
            raise ValueError("sqrt_z is not a square root of z")

    @classmethod
    def from_z(cls, z: complex) -> "SpectralParameter":
        return cls(complex(z), cmath.sqrt(complex(z)))

    @classmethod
    def from_turn(cls, t: float) -> "SpectralParameter":
        """z = e^(2 pi i t) for t in [0, 1)."""
        return cls.from_z(cmath.exp(2j * math.pi * t))


def szego_matrices(f, z):
    """Stack of one-step cocycle matrices; ``f`` and ``z`` broadcast."""
    f, z = np.broadcast_arrays(
        np.asarray(f, dtype=complex), np.asarray(z, dtype=complex)
    )
    # 1 - |f|^2 in extended precision: the plain double-precision form
    # cancels catastrophically as |f| -> 1 and would pollute the prefactor.
    re = f.real.astype(np.longdouble)
    im = f.imag.astype(np.longdouble)
    m2 = re * re + im * im
    if _KERNEL_SIGN_FLIP:
        m2 = -m2
    rem = (1.0 - m2).astype(np.float64)
    if np.any(rem <= 0.0):
        raise DegenerateCoefficientError(
            "1 - |f|^2 underflowed to <= 0; coefficient too close to the unit circle"
        )
    c = rem**-0.5
    out = np.empty(f.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c * z
    out[..., 0, 1] = -c * np.conj(f)
    out[..., 1, 0] = -c * f * z
    out[..., 1, 1] = c
    return out


def szego_matrix(f_val: complex, s: SpectralParameter):
    """Single one-step matrix A^z for coefficient value ``f_val``."""
    if abs(f_val) >= 1.0:
        raise DegenerateCoefficientError(f"|f| = {abs(f_val)} is not < 1")
    return szego_matrices(f_val, s.z)


def conjugator(p: PhasePoint, s: SpectralParameter):
    """C^z(theta, j): the swap for j = 0, diag(z^(1/2), z^(-1/2)) for j = 1.

    Depends on p only through its parity; always unitary.
    """
    if p.j == 0:
        return SWAP.copy()
    return mat2(s.sqrt_z, 0.0, 0.0, 1.0 / s.sqrt_z)


def conjugated_step(p: PhasePoint, s: SpectralParameter, g: ExpGenerator):
    """Closed form of C^z(theta,j) A^z(theta,j) C^z(theta,j-1)^(-1).

    Valid for the simple-exponential family only; j - 1 is parity
    arithmetic (mod 2).
    """
    if not isinstance(g, ExpGenerator):
        raise TypeError("conjugated_step is defined for the exponential family only")
    mod = g.modulus
    phase = cmath.exp(2j * math.pi * g.k * p.theta)
    zj = s.z if p.j == 1 else 1.0
    zmj = 1.0 / s.z if p.j == 1 else 1.0
    return (s.sqrt_z / g.epsilon) * mat2(
        -mod * phase, zj, zmj, -mod * phase.conjugate()
    )


@dataclass
class ProductAccumulator:
    """Renormalized running product with its accumulated log scale.

    ``current`` is kept at unit operator norm; ``log_norm`` holds the sum
    of the logs of the stripped per-step scales, so the total log norm of
    the unnormalized product is ``log_norm + log(op_norm(current))``.
    """

    current: np.ndarray = field(default_factory=lambda: IDENTITY.copy())
    log_norm: float = 0.0
    steps: int = 0

    @property
    def total_log_norm(self) -> float:
        return self.log_norm + math.log(float(op_norm(self.current)))


def accumulate(acc: ProductAccumulator, m) -> ProductAccumulator:
    """Multiply ``m`` on the left of the running product and restrip the scale."""
    with np.errstate(invalid="ignore", over="ignore"):
        prod = np.asarray(m, dtype=complex) @ acc.current
    if not np.all(np.isfinite(prod)):
        raise NumericalBlowupError("non-finite entries in orbit product")
    scale = float(op_norm(prod))
    acc.current = prod / scale
    acc.log_norm += math.log(scale)
    acc.steps += 1
    return acc


def orbit_product(
    p0: PhasePoint, r: Rotation, g, s: SpectralParameter, n: int
) -> ProductAccumulator:
    """Renormalized product A^z(T^(n-1) p0) ... A^z(p0), newest on the left."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    acc = ProductAccumulator()
    for m in range(n):
        p = PhasePoint(orbit_theta(p0, r, m), (p0.j + m) % 2)
        accumulate(acc, szego_matrix(g.evaluate(p), s))
    return acc


def _product_log_norms(step_values, zs, n, checkpoints=None):
    """Batched renormalized product engine.

    ``step_values(m)`` yields the coefficient values for step m,
    broadcastable against ``zs``.  Returns ``(log_norms, recorded)`` where
    ``recorded[m]`` is a copy of the log norms after m steps for each m in
    ``checkpoints``.  Because the running product is renormalized to unit
    operator norm, the accumulated log IS the log norm of the product.
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    nb = zs.shape[0]
    cur = np.broadcast_to(IDENTITY, (nb, 2, 2)).copy()
    logn = np.zeros(nb)
    wanted = set(checkpoints) if checkpoints is not None else set()
    recorded = {}
    for m in range(n):
        f = np.broadcast_to(np.asarray(step_values(m), dtype=complex), (nb,))
        cur = szego_matrices(f, zs) @ cur
        if not np.all(np.isfinite(cur)):
            raise NumericalBlowupError(f"non-finite entries at step {m + 1}")
        nrm = op_norm(cur)
        cur /= nrm[:, None, None]
        logn += np.log(nrm)
        if (m + 1) in wanted:
            recorded[m + 1] = logn.copy()
    return logn, recorded


def orbit_log_norms(p0: PhasePoint, r: Rotation, g, zs, n: int):
    """log ||A^z_n(p0)|| for several spectral parameters, one shared orbit."""

    def values(m):
        return g.evaluate(PhasePoint(orbit_theta(p0, r, m), (p0.j + m) % 2))

    logn, _ = _product_log_norms(values, zs, n)
    return logn


def grid_log_norms(theta0s, j0, r: Rotation, g, zs, n: int, checkpoints=None):
    """log ||A^z_n(theta, j0)|| for a vector of starting angles.

    ``zs`` may be a scalar (shared spectral parameter) or a vector paired
    with ``theta0s``.
    """
    theta0s = np.asarray(theta0s, dtype=float)

    def values(m):
        return g.evaluate_grid((theta0s + m * r.alpha) % 1.0, (j0 + m) % 2)

    zarr = np.broadcast_to(np.asarray(zs, dtype=complex), theta0s.shape)
    return _product_log_norms(values, zarr, n, checkpoints=checkpoints)
