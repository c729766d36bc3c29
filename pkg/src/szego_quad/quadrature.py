"""Invariant para-orthogonal polynomials, their circle zeros, and Szego rules.

A polynomial P = alpha Phi_n + beta Phi_n* with |alpha| = |beta| != 0 is
invariant: P* = kappa P for the unimodular kappa = conj(beta)/alpha.  Its n
zeros are simple and lie on the unit circle, and the n-point rule with nodes
at those zeros and weights 1/K_{n-1}(z_k, z_k) integrates every Laurent
polynomial of degree window [-(n-1), n-1] exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circle import TWO_PI, fold_angle
from .errors import ModulusMismatch, ZeroCountMismatch
from .measures import MomentTable, measure_integral
from .opuc import OpucTable, kernel_diag
from .poly import ComplexPolynomial

ANGLE_TOL = 2e-14
_BASE_SNAP = 1e-9
_FIRST_GRID = 16
_MAX_GRID = 1024


@dataclass(frozen=True, eq=False)
class InvariantPop:
    """Para-orthogonal combination alpha Phi_n + beta Phi_n* with its kappa."""

    poly: ComplexPolynomial
    order: int
    alpha: complex
    beta: complex
    kappa: complex


def make_pop(table: OpucTable, n: int, alpha, beta) -> InvariantPop:
    """Form the invariant combination; moduli of alpha and beta must agree."""
    n = int(n)
    if n > table.order:
        raise ValueError(f"degree {n} exceeds table order {table.order}")
    alpha = complex(alpha)
    beta = complex(beta)
    scale = max(abs(alpha), abs(beta))
    if scale == 0.0:
        raise ModulusMismatch("alpha and beta must be nonzero")
    if abs(abs(alpha) - abs(beta)) > 1e-12 * scale:
        raise ModulusMismatch(
            f"|alpha| = {abs(alpha):.17g} and |beta| = {abs(beta):.17g} differ",
            alpha=abs(alpha),
            beta=abs(beta),
        )
    poly = alpha * table.phi[n] + beta * table.phi_star[n]
    kappa = complex(np.conj(beta) / alpha)
    # construction guarantees invariance; a violation here means broken inputs
    resid = poly.conj_reverse(n) - kappa * poly
    if float(np.max(np.abs(resid.coeffs))) > 1e-10 * max(1.0, float(np.max(np.abs(poly.coeffs)))):
        raise ModulusMismatch("invariance residual too large for the given pair")
    return InvariantPop(poly=poly, order=n, alpha=alpha, beta=beta, kappa=kappa)


def _bisect(fn, lo, hi, flo, tol):
    lo = lo.astype(float).copy()
    hi = hi.astype(float).copy()
    flo = np.asarray(flo, dtype=float).copy()
    while float(np.max(hi - lo)) > tol:
        mid = 0.5 * (lo + hi)
        fm = np.asarray(fn(mid), dtype=float)
        hit = fm == 0.0
        left = flo * fm < 0.0
        new_lo = np.where(left, lo, mid)
        new_hi = np.where(left, mid, hi)
        new_flo = np.where(left, flo, fm)
        lo = np.where(hit, mid, new_lo)
        hi = np.where(hit, mid, new_hi)
        flo = np.where(hit, fm, new_flo)
    return 0.5 * (lo + hi)


def circle_zero_angles(value_fn, count, omega0=0.0, *, angle_tol=ANGLE_TOL):
    """Locate the zeros of a real-valued circle function in [omega0, omega0 + 2 pi).

    value_fn must accept an ndarray of angles and return real values, and must
    remain valid slightly past the window (the wrap-around interval is
    bracketed by direct evaluation at omega0 + 2 pi offsets).  Exactly `count`
    simple zeros are expected; the midpoint-offset scan grid is doubled until
    all of them are isolated by sign changes, and ZeroCountMismatch is raised
    if 1024 * count samples still disagree.

    Returned angles are sorted, bisected to an angular tolerance of 2e-14
    (sign products and kernel weights downstream amplify zero error by the
    numerator's derivative, so the solve must land well under 1e-12), and a
    root within 1e-9 of the upper window edge is folded onto omega0 (the two
    describe the same circle point).
    """
    count = int(count)
    if count == 0:
        return np.empty(0, dtype=float)
    m = _FIRST_GRID * count
    while True:
        theta = omega0 + (np.arange(m) + 0.5) * (TWO_PI / m)
        h = np.asarray(value_fn(theta), dtype=float)
        exact = h == 0.0
        if exact.any():
            # nudge samples off exact zeros so they land inside a bracket
            theta = theta.copy()
            theta[exact] += (TWO_PI / m) * 1e-9
            h = h.copy()
            h[exact] = np.asarray(value_fn(theta[exact]), dtype=float)
        th_all = np.append(theta, theta[0] + TWO_PI)
        h_all = np.append(h, np.asarray(value_fn(np.array([theta[0] + TWO_PI])), dtype=float))
        flips = (h_all[:-1] * h_all[1:]) < 0.0
        found = int(flips.sum())
        if found == count:
            lo = th_all[:-1][flips]
            hi = th_all[1:][flips]
            roots = _bisect(value_fn, lo, hi, h_all[:-1][flips], angle_tol)
            roots = np.where(roots >= omega0 + TWO_PI, roots - TWO_PI, roots)
            roots = np.where((omega0 + TWO_PI) - roots < _BASE_SNAP, omega0, roots)
            roots.sort()
            return roots
        if m >= _MAX_GRID * count:
            raise ZeroCountMismatch(
                f"isolated {found} sign changes on {m} samples, expected {count}",
                expected=count,
                found=found,
                samples=m,
            )
        m *= 2


def pop_zeros(pop: InvariantPop, omega0=0.0) -> np.ndarray:
    """Angles of the n simple circle zeros of an invariant polynomial.

    Multiplying P(e^{i theta}) by e^{-i(n theta / 2 + phase0)} with phase0 =
    -arg(kappa)/2 produces a real-valued function of theta with the same
    zeros, which is then tracked by sign changes and bisection.
    """
    n = pop.order
    phase0 = -0.5 * float(np.angle(pop.kappa))
    poly = pop.poly

    def real_form(theta):
        theta = np.asarray(theta, dtype=float)
        return np.real(np.exp(-1j * (0.5 * n * theta + phase0)) * poly.at_angle(theta))

    return circle_zero_angles(real_form, n, omega0)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes exp(i theta_k) and positive weights summing to one."""

    order: int
    node_angles: np.ndarray
    weights: np.ndarray
    omega0: float
    source: str
    exactness_residual: float | None = None

    @property
    def nodes(self):
        return np.exp(1j * self.node_angles)

    def apply_theta(self, fn) -> float:
        """Apply the rule to a real function of the angle."""
        return float(np.dot(self.weights, np.asarray(fn(self.node_angles), dtype=float)))

    def apply_power(self, k) -> complex:
        """Rule value on z^k."""
        return complex(np.dot(self.weights, np.exp(1j * k * self.node_angles)))


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """The rule viewed as an atomic measure."""

    atoms: tuple[tuple[float, float], ...]
    order: int


def _exactness_residual(m: MomentTable, angles, weights, order):
    ks = np.arange(-(order - 1), order)
    vals = np.exp(1j * np.outer(ks, angles)) @ weights
    ref = np.array([m.get(int(k)) for k in ks])
    return float(np.max(np.abs(vals - ref)))


def make_rule(table: OpucTable, m: MomentTable, pop: InvariantPop, omega0=0.0) -> QuadratureRule:
    """Szego rule on the zeros of an invariant polynomial, kernel weights.

    Weights are H_k = 1 / K_{n-1}(z_k, z_k), evaluated by the definitional
    kernel sum; the measured exactness defect over the Laurent window
    |k| <= n - 1 is stamped on the rule for inspection.
    """
    angles = pop_zeros(pop, omega0)
    weights = 1.0 / kernel_diag(table, pop.order - 1, np.exp(1j * angles))
    resid = _exactness_residual(m, angles, weights, pop.order)
    src = f"pop(n={pop.order}, alpha={pop.alpha:.6g}, beta={pop.beta:.6g})"
    return QuadratureRule(
        order=pop.order,
        node_angles=angles,
        weights=weights,
        omega0=float(omega0),
        source=src,
        exactness_residual=resid,
    )


def rule_from_sof(table: OpucTable, m: MomentTable, inst, omega0=None) -> QuadratureRule:
    """Quadrature rule generated by a semi-orthogonal function's zero set.

    For the odd members of the alternating sequence the anchor is the one
    extra node (the instance carries one fewer zero than its order).
    """
    omega0 = float(inst.omega0 if omega0 is None else omega0)
    angles = fold_angle(np.asarray(inst.zeros, dtype=float), omega0)
    order = int(inst.index)
    if order == len(angles) + 1:
        angles = np.append(angles, fold_angle(inst.anchor_angle, omega0))
    elif order != len(angles):
        raise ValueError(f"instance with {len(angles)} zeros cannot drive an order-{order} rule")
    angles = np.sort(angles)
    weights = 1.0 / kernel_diag(table, order - 1, np.exp(1j * angles))
    resid = _exactness_residual(m, angles, weights, order)
    return QuadratureRule(
        order=order,
        node_angles=angles,
        weights=weights,
        omega0=omega0,
        source=f"sof({inst.label})" if getattr(inst, "label", "") else "sof",
        exactness_residual=resid,
    )


def weights_via_integral(rule: QuadratureRule, m: MomentTable, p: int) -> np.ndarray:
    """Weights recomputed as moments of the Lagrange-type Laurent basis.

    With P the monic node polynomial and Q_k = P / (z - z_k), the weight at
    z_k equals z_k^p / P'(z_k) times sum_j Q_k[j] c_{j-p}, for any integer
    0 <= p <= n - 1; the value is independent of p, which makes the choice a
    useful cross-check against the kernel route.
    """
    n = rule.order
    p = int(p)
    if not 0 <= p <= n - 1:
        raise ValueError(f"shift p = {p} outside 0..{n - 1}")
    z = rule.nodes
    node_poly = ComplexPolynomial.from_roots(z)
    deriv = node_poly.derivative()
    mom = m.window(-p, n - 1 - p)
    out = np.empty(n, dtype=float)
    for k in range(n):
        quot, _ = node_poly.deflate(z[k])
        val = np.dot(quot.padded(n), mom)
        out[k] = float(np.real(z[k] ** p * val / deriv(z[k])))
    return out


def discrete_measure(rule: QuadratureRule) -> DiscreteMeasure:
    atoms = tuple((float(t), float(w)) for t, w in zip(rule.node_angles, rule.weights))
    return DiscreteMeasure(atoms=atoms, order=rule.order)


TEST_FUNCTIONS = {
    "one": lambda theta: np.ones_like(np.asarray(theta, dtype=float)),
    "z_plus_zinv": lambda theta: 2.0 * np.cos(theta),
    "abs_sin_half": lambda theta: np.abs(np.sin(0.5 * np.asarray(theta, dtype=float))),
}


def resolve_test_function(fn):
    if callable(fn):
        return fn
    try:
        return TEST_FUNCTIONS[fn]
    except KeyError:
        known = ", ".join(sorted(TEST_FUNCTIONS))
        raise ValueError(f"unknown test function '{fn}'; known names: {known}") from None


def weak_convergence_probe(spec, rules, test_fn) -> np.ndarray:
    """|rule applied to F minus the measure integral of F| for each rule.

    F is a built-in name from TEST_FUNCTIONS or any continuous real function
    of the angle whose reference integral the panel quadrature can resolve.
    """
    fn = resolve_test_function(test_fn)
    ref = measure_integral(spec, fn)
    return np.array([abs(rule.apply_theta(fn) - ref) for rule in rules])
