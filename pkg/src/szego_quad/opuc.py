"""Monic orthogonal polynomials on the unit circle via the Szego recurrence.

The whole package is driven by the recurrence

    Phi_0 = 1,    Phi_{n+1}(z) = z Phi_n(z) + a_{n+1} Phi_n*(z),

where a_n = Phi_n(0) are the Schur parameters (all strictly inside the unit
disk) and the star denotes the conjugate-reversed polynomial of declared
degree n.  Squared norms follow as e_0 = 1, e_n = prod_k (1 - |a_k|^2), and
the reproducing kernel of degree n is K_n(z, y) = sum_k Phi_k(z)
conj(Phi_k(y)) / e_k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NearDiagonal, OffCircle, SchurOutOfDisk
from .poly import ComplexPolynomial

SCHUR_GUARD = 1.0 - 1e-12
CIRCLE_TOL = 1e-12
DIAGONAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SchurSequence:
    """Schur (reflection) coefficients a_1, a_2, ... with every |a_n| < 1."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        mags = np.abs(c)
        bad = mags > SCHUR_GUARD
        if bad.any():
            n_bad = int(np.argmax(bad)) + 1
            raise SchurOutOfDisk(
                f"|a_{n_bad}| = {mags[n_bad - 1]:.17g} is not strictly inside the unit disk",
                n=n_bad,
                magnitude=float(mags[n_bad - 1]),
            )
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros(n, dtype=complex))

    @property
    def max_order(self):
        return len(self.coefficients)

    def a(self, n):
        """n-th coefficient, 1-based."""
        if not 1 <= n <= self.max_order:
            raise IndexError(f"coefficient index {n} outside 1..{self.max_order}")
        return complex(self.coefficients[n - 1])


@dataclass(frozen=True, eq=False)
class OpucTable:
    """Monic polynomials Phi_0..Phi_order, their reversals, and norms e_n."""

    schur: SchurSequence
    phi: tuple
    phi_star: tuple
    e: np.ndarray
    order: int


def build_opuc(schur: SchurSequence, n_max: int) -> OpucTable:
    """Run the Szego recurrence up to degree n_max.

    The reversed polynomials are recomputed from the fresh Phi_{n+1} by exact
    coefficient reversal, which keeps the pair bit-for-bit consistent.  The
    leading coefficient of every Phi_n is exactly 1.0 because the reversal
    contributes nothing at top degree.
    """
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > schur.max_order:
        raise ValueError(
            f"n_max = {n_max} exceeds the {schur.max_order} available Schur coefficients"
        )
    one = ComplexPolynomial([1.0])
    phi = [one]
    star = [one]
    e = np.ones(n_max + 1)
    for n in range(n_max):
        a = schur.a(n + 1)
        nxt = phi[n].shifted(1) + a * star[n]
        phi.append(nxt)
        star.append(nxt.conj_reverse(n + 1))
        e[n + 1] = e[n] * (1.0 - abs(a) ** 2)
    e.flags.writeable = False
    return OpucTable(schur=schur, phi=tuple(phi), phi_star=tuple(star), e=e, order=n_max)


def reverse(p: ComplexPolynomial, declared_degree=None) -> ComplexPolynomial:
    """Conjugate-reversed polynomial of declared degree (defaults to deg p)."""
    return p.conj_reverse(declared_degree)


def second_kind(schur: SchurSequence, n_max: int) -> list[ComplexPolynomial]:
    """Second-kind family Omega_0..Omega_{n_max}.

    Convention fixed here: Omega_0 = 1 and the recurrence runs with the Schur
    coefficients sign-flipped, Omega_{n+1} = z Omega_n - a_{n+1} Omega_n*.
    This normalization is pinned down by the identity

        Omega_n*(z) Phi_n(z) + Omega_n(z) Phi_n*(z) = 2 e_n z^n,

    which downstream code (second-kind semi-orthogonal functions, sign
    probes) relies on.
    """
    n_max = int(n_max)
    if n_max > schur.max_order:
        raise ValueError(
            f"n_max = {n_max} exceeds the {schur.max_order} available Schur coefficients"
        )
    omega = [ComplexPolynomial([1.0])]
    star = [ComplexPolynomial([1.0])]
    for n in range(n_max):
        a = schur.a(n + 1)
        nxt = omega[n].shifted(1) + (-a) * star[n]
        omega.append(nxt)
        star.append(nxt.conj_reverse(n + 1))
    return omega


def _check_on_circle(z):
    if np.any(np.abs(np.abs(z) - 1.0) > CIRCLE_TOL):
        worst = float(np.max(np.abs(np.abs(z) - 1.0)))
        raise OffCircle(f"point off the unit circle by {worst:.3e}", deviation=worst)


def kernel_diag(table: OpucTable, n: int, z):
    """K_n(z, z) for z on the unit circle, by the defining sum.

    Always >= 1 since the degree-zero term contributes 1.  Accepts scalar or
    array z and returns matching shape.
    """
    if n > table.order:
        raise ValueError(f"kernel degree {n} exceeds table order {table.order}")
    zs = np.asarray(z, dtype=complex)
    _check_on_circle(zs)
    acc = np.zeros(zs.shape, dtype=float)
    for k in range(n + 1):
        acc += np.abs(table.phi[k](zs)) ** 2 / table.e[k]
    return float(acc) if zs.ndim == 0 else acc


def kernel_eval(table: OpucTable, n: int, z, y):
    """K_n(z, y) through the Christoffel-Darboux formula.

    Requires the table to hold degree n+1 and the pair to be safely off the
    diagonal: |1 - conj(y) z| must exceed 1e-8, otherwise the cancellation in
    the quotient loses too much accuracy and NearDiagonal is raised.  The
    diagonal itself has the dedicated kernel_diag path.
    """
    if n + 1 > table.order:
        raise ValueError(f"kernel degree {n} needs table order {n + 1}")
    z = complex(z)
    y = complex(y)
    denom = 1.0 - np.conj(y) * z
    if abs(denom) <= DIAGONAL_TOL:
        raise NearDiagonal(
            f"|1 - conj(y) z| = {abs(denom):.3e} is inside the guarded band",
            separation=abs(denom),
        )
    p = table.phi[n + 1]
    q = table.phi_star[n + 1]
    num = q(z) * np.conj(q(y)) - p(z) * np.conj(p(y))
    return complex(num / (table.e[n + 1] * denom))


def kernel_polynomial(table: OpucTable, n: int, y) -> ComplexPolynomial:
    """K_n(., y) as a degree-n polynomial in the first argument."""
    if n > table.order:
        raise ValueError(f"kernel degree {n} exceeds table order {table.order}")
    c = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        c[: k + 1] += (np.conj(table.phi[k](y)) / table.e[k]) * table.phi[k].coeffs
    return ComplexPolynomial(c)
