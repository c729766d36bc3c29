"""Semi-orthogonal functions on the circle and their zero interlacing.

For an anchor w on the unit circle and a coefficient alpha_n != 0, the
function

    f_n(theta) = N_n(e^{i theta}) e^{-i n theta / 2},
    N_n = -i (conj(alpha_n) Phi_n - alpha_n Phi_n*),

is real valued: N_n is exactly 1-invariant (N* = N), so the half-power
phase folds it onto the real line.  The two distinguished families are

    first kind   alpha_n = w^{-n/2} Phi_n(w)      (w is a common zero),
    second kind  alpha_n = -i w^{-n/2} Omega_n(w) (value 2 e_n at w),

and the general member uses alpha_n = w^{-m/2} (A(w) Phi_n(w) + B(w)
Omega_n(w)) with m = n + k for polynomial coefficients A, B satisfying the
reversal symmetries A*(k) = A and B*(k) = -B.  Half powers are always
realized as exp(i m theta / 2) on angles folded into the working window, so
both sides of every identity use the same branch.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .circle import TWO_PI, circular_distance, fold_angle, half_power
from .errors import DegenerateAnchor, OffCircle, PhaseLeak, ZeroCoefficient
from .measures import christoffel_modify
from .opuc import CIRCLE_TOL, OpucTable, second_kind
from .poly import ComplexPolynomial
from .quadrature import circle_zero_angles

_ANCHOR_TOL = 1e-9


def _canonical_anchor(w, omega0):
    """Fold the anchor onto the circle and the window; returns (w, angle)."""
    w = complex(w)
    if abs(abs(w) - 1.0) > CIRCLE_TOL:
        raise OffCircle(f"anchor off the unit circle: |w| = {abs(w):.17g}")
    angle = fold_angle(float(np.angle(w)), omega0)
    return np.exp(1j * angle), angle


@dataclass(frozen=True, eq=False)
class RealCircleFunction:
    """Real-valued realization N(e^{i theta}) exp(-i * half_exponent * theta / 2)."""

    numerator: ComplexPolynomial
    half_exponent: int
    label: str = ""

    def complex_values(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.numerator.at_angle(theta) * half_power(theta, -self.half_exponent)

    def __call__(self, theta):
        vals = self.complex_values(theta)
        return float(np.real(vals)) if np.ndim(theta) == 0 else np.real(vals)

    def imag_leak(self, theta):
        """Largest relative imaginary residue over the sample angles."""
        vals = self.complex_values(theta)
        scale = max(float(np.max(np.abs(vals))), 1e-300)
        return float(np.max(np.abs(np.imag(vals)))) / scale


@dataclass(frozen=True, eq=False)
class SofFamilySpec:
    """Declarative description of one semi-orthogonal family."""

    w: complex
    omega0: float = 0.0
    mode: str = "f1"
    a1: float = 1.0
    a2: float = 0.0
    A: ComplexPolynomial | None = None
    B: ComplexPolynomial | None = None
    k: int = 0

    @classmethod
    def f1(cls, w, omega0=0.0):
        return cls(w=complex(w), omega0=float(omega0), mode="f1")

    @classmethod
    def f2(cls, w, omega0=0.0):
        return cls(w=complex(w), omega0=float(omega0), mode="f2")

    @classmethod
    def combo(cls, a1, a2, w, omega0=0.0):
        a1 = float(a1)
        a2 = float(a2)
        if a1 == 0.0 and a2 == 0.0:
            raise ValueError("combo coefficients must not both vanish")
        return cls(w=complex(w), omega0=float(omega0), mode="combo", a1=a1, a2=a2)

    @classmethod
    def polyseq(cls, A: ComplexPolynomial, B: ComplexPolynomial, k: int, w, omega0=0.0):
        k = int(k)
        if max(A.degree, B.degree) > k:
            raise ValueError("coefficient degrees must not exceed the symmetry degree k")
        scale = max(1.0, float(np.max(np.abs(A.coeffs))), float(np.max(np.abs(B.coeffs))))
        res_a = A.conj_reverse(k) - A
        res_b = B.conj_reverse(k) + B
        worst = max(float(np.max(np.abs(res_a.coeffs))), float(np.max(np.abs(res_b.coeffs))))
        if worst > 1e-10 * scale:
            raise ValueError(
                "coefficient symmetry violated: need A*(k) = A and B*(k) = -B "
                f"(residual {worst:.3e})"
            )
        return cls(w=complex(w), omega0=float(omega0), mode="polyseq", A=A, B=B, k=k)

    @property
    def anchor_angle(self):
        return fold_angle(float(np.angle(complex(self.w))), self.omega0)


@dataclass(frozen=True, eq=False)
class SofInstance:
    """One member of a semi-orthogonal family, with its located zeros.

    n is the numerator degree (the realization phase is e^{-i n theta / 2});
    index is the position in the generating sequence and equals n except for
    the odd members of the alternating anchor sequence, which carry one
    fewer zero than their index.
    """

    n: int
    index: int
    numerator: ComplexPolynomial
    alpha: complex | None
    w: complex
    anchor_angle: float
    omega0: float
    zeros: np.ndarray
    label: str = ""

    def realization(self) -> RealCircleFunction:
        return RealCircleFunction(self.numerator, self.n, self.label)

    def value_complex(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.numerator.at_angle(theta) * half_power(theta, -self.n)

    def value(self, theta):
        vals = self.value_complex(theta)
        return float(np.real(vals)) if np.ndim(theta) == 0 else np.real(vals)

    def as_pop_pair(self):
        """(alpha, beta) such that numerator = alpha Phi_n + beta Phi_n*."""
        if self.alpha is None:
            raise ValueError("this instance was not built from a single coefficient alpha")
        return -1j * np.conj(self.alpha), 1j * self.alpha


def _instance_from_alpha(table, n, alpha, w, anchor_angle, omega0, label, index=None):
    numerator = (-1j * np.conj(alpha)) * table.phi[n] + (1j * alpha) * table.phi_star[n]

    def real_form(theta):
        theta = np.asarray(theta, dtype=float)
        return np.real(numerator.at_angle(theta) * half_power(theta, -n))

    zeros = circle_zero_angles(real_form, n, omega0)
    return SofInstance(
        n=n,
        index=n if index is None else int(index),
        numerator=numerator,
        alpha=complex(alpha),
        w=w,
        anchor_angle=anchor_angle,
        omega0=float(omega0),
        zeros=zeros,
        label=label,
    )


def sof_f1(table: OpucTable, n: int, w, omega0=0.0) -> SofInstance:
    """First-kind member of degree n; the anchor w is always among its zeros."""
    n = int(n)
    if not 1 <= n <= table.order:
        raise ValueError(f"degree {n} outside 1..{table.order}")
    w, angle = _canonical_anchor(w, omega0)
    phi_w = table.phi[n](w)
    if abs(phi_w) < 1e-13 * max(1.0, float(np.max(np.abs(table.phi[n].coeffs)))):
        # cannot happen for Schur parameters inside the disk; guards bad tables
        raise DegenerateAnchor(f"Phi_{n} vanishes at the anchor", n=n, anchor=angle)
    alpha = half_power(angle, -n) * phi_w
    inst = _instance_from_alpha(table, n, alpha, w, angle, omega0, label=f"f1(n={n})")
    # the anchor is an exact zero of this form; pin the computed one to it
    zeros = np.array(inst.zeros)
    near = circular_distance(zeros, angle) <= _ANCHOR_TOL
    if np.any(near):
        zeros[near] = fold_angle(angle, omega0)
        inst = replace(inst, zeros=np.sort(zeros))
    return inst


def sof_f2(table: OpucTable, omegas, n: int, w, omega0=0.0) -> SofInstance:
    """Second-kind member of degree n; takes the value 2 e_n at the anchor."""
    n = int(n)
    if not 1 <= n <= table.order:
        raise ValueError(f"degree {n} outside 1..{table.order}")
    if len(omegas) <= n:
        raise ValueError("second-kind table too short")
    w, angle = _canonical_anchor(w, omega0)
    omega_w = omegas[n](w)
    if abs(omega_w) < 1e-13:
        raise DegenerateAnchor(f"Omega_{n} vanishes at the anchor", n=n, anchor=angle)
    alpha = -1j * half_power(angle, -n) * omega_w
    return _instance_from_alpha(table, n, alpha, w, angle, omega0, label=f"f2(n={n})")


def sof_combo(table: OpucTable, spec: SofFamilySpec, n: int, omegas=None) -> SofInstance:
    """Member of the declared family at degree n.

    combo means a1 * (first kind) + a2 * (second kind) with real constants;
    polyseq uses the polynomial coefficients A, B with m = n + k.  The
    coefficient alpha_n must not vanish, otherwise the member degenerates.
    """
    n = int(n)
    if not 1 <= n <= table.order:
        raise ValueError(f"degree {n} outside 1..{table.order}")
    if spec.mode == "f1":
        return sof_f1(table, n, spec.w, spec.omega0)
    if omegas is None:
        omegas = second_kind(table.schur, n)
    if spec.mode == "f2":
        return sof_f2(table, omegas, n, spec.w, spec.omega0)
    w, angle = _canonical_anchor(spec.w, spec.omega0)
    phi_w = table.phi[n](w)
    omega_w = omegas[n](w)
    if spec.mode == "combo":
        value = spec.a1 * phi_w + (-1j * spec.a2) * omega_w
        scale = abs(spec.a1 * phi_w) + abs(spec.a2 * omega_w)
        m = n
        label = f"combo(a1={spec.a1:g}, a2={spec.a2:g}, n={n})"
    elif spec.mode == "polyseq":
        value = spec.A(w) * phi_w + spec.B(w) * omega_w
        scale = abs(spec.A(w) * phi_w) + abs(spec.B(w) * omega_w)
        m = n + spec.k
        label = f"polyseq(k={spec.k}, n={n})"
    else:
        raise ValueError(f"unknown family mode '{spec.mode}'")
    if abs(value) <= 1e-12 * max(scale, 1e-300):
        raise ZeroCoefficient(
            f"family coefficient vanishes at degree {n}", n=n, magnitude=abs(value)
        )
    alpha = half_power(angle, -m) * value
    inst = _instance_from_alpha(table, n, alpha, w, angle, spec.omega0, label=label)
    anchored = spec.a2 == 0 if spec.mode == "combo" else spec.B(w) == 0
    if anchored:
        # second-kind part absent, so the anchor is an exact zero; pin it
        zeros = np.array(inst.zeros)
        near = circular_distance(zeros, angle) <= _ANCHOR_TOL
        if np.any(near):
            zeros[near] = fold_angle(angle, spec.omega0)
            inst = replace(inst, zeros=np.sort(zeros))
    return inst


def f_sequence(table: OpucTable, w_seq, count: int, omega0=0.0) -> list[SofInstance]:
    """Alternating anchor sequence F_1..F_count.

    Even indices are first-kind members of the base measure; odd index
    2k + 1 is built on the modified measure |z - w|^2 d(mu): its numerator is
    w^{-k} (Phi_2k*(w) z psi_{2k-1}(z) + Phi_2k(w) psi_{2k-1}*(z)), a
    1-invariant polynomial of degree 2k whose zeros avoid the anchor; the
    anchor re-enters as the extra quadrature node.  F_1 is the constant 1
    with no zeros.
    """
    count = int(count)
    if count < 1:
        raise ValueError("count must be at least 1")
    ws = list(w_seq) if np.ndim(w_seq) > 0 or isinstance(w_seq, (list, tuple)) else [w_seq] * count
    if len(ws) == 1:
        ws = ws * count
    if len(ws) < count:
        raise ValueError(f"need {count} anchors, got {len(ws)}")
    if table.order < count:
        raise ValueError(f"table order {table.order} below sequence length {count}")
    out = []
    for idx in range(1, count + 1):
        w, angle = _canonical_anchor(ws[idx - 1], omega0)
        if idx == 1:
            out.append(
                SofInstance(
                    n=0,
                    index=1,
                    numerator=ComplexPolynomial([1.0]),
                    alpha=None,
                    w=w,
                    anchor_angle=angle,
                    omega0=float(omega0),
                    zeros=np.empty(0, dtype=float),
                    label="F_1",
                )
            )
            continue
        if idx % 2 == 0:
            inst = sof_f1(table, idx, w, omega0)
            out.append(replace(inst, label=f"F_{idx}"))
            continue
        k = idx // 2
        psi = christoffel_modify(table, w, 2 * k - 1)[2 * k - 1]
        psi_star = psi.conj_reverse(2 * k - 1)
        m_poly = table.phi_star[2 * k](w) * psi.shifted(1) + table.phi[2 * k](w) * psi_star
        numerator = complex(half_power(angle, -2 * k)) * m_poly

        def real_form(theta, _num=numerator, _k=k):
            theta = np.asarray(theta, dtype=float)
            return np.real(_num.at_angle(theta) * np.exp(-1j * _k * theta))

        zeros = circle_zero_angles(real_form, 2 * k, omega0)
        out.append(
            SofInstance(
                n=2 * k,
                index=idx,
                numerator=numerator,
                alpha=None,
                w=w,
                anchor_angle=angle,
                omega0=float(omega0),
                zeros=zeros,
                label=f"F_{idx}",
            )
        )
    return out


@dataclass(frozen=True)
class InterlaceResult:
    ok: bool
    witness: str | None = None

    def __bool__(self):
        return self.ok


def interlace_check(a, b, omega0=0.0, exclude_anchor=None) -> InterlaceResult:
    """Strict alternation of two zero sets along the window [omega0, omega0 + 2 pi).

    Both lists are folded into the window and sorted; an anchor angle given
    via exclude_anchor is removed from both sides first (within 1e-9).  The
    counts may be equal or differ by one; the merged sequence must strictly
    alternate between the two sources.  On failure the witness pins the
    first offending adjacent pair.
    """
    fa = np.sort(fold_angle(np.asarray(a, dtype=float), omega0)) if len(a) else np.empty(0)
    fb = np.sort(fold_angle(np.asarray(b, dtype=float), omega0)) if len(b) else np.empty(0)
    if exclude_anchor is not None:
        anchor = fold_angle(float(exclude_anchor), omega0)
        fa = fa[circular_distance(fa, anchor) > _ANCHOR_TOL]
        fb = fb[circular_distance(fb, anchor) > _ANCHOR_TOL]
    na, nb = len(fa), len(fb)
    if abs(na - nb) > 1:
        return InterlaceResult(False, f"zero counts {na} and {nb} differ by more than one")
    if na + nb < 2:
        return InterlaceResult(True, None)
    angles = np.concatenate((fa, fb))
    labels = np.concatenate((np.zeros(na, dtype=int), np.ones(nb, dtype=int)))
    order = np.argsort(angles, kind="stable")
    angles = angles[order]
    labels = labels[order]
    for i in range(len(angles) - 1):
        if abs(angles[i + 1] - angles[i]) < 1e-12:
            return InterlaceResult(
                False, f"coincident zeros near theta = {angles[i]:.12g}"
            )
        if labels[i + 1] == labels[i]:
            side = "first" if labels[i] == 0 else "second"
            return InterlaceResult(
                False,
                f"two consecutive zeros of the {side} set at theta = "
                f"{angles[i]:.12g} and {angles[i + 1]:.12g}",
            )
    return InterlaceResult(True, None)


def sturm_sign_probe(f_next: SofInstance, f_cur: SofInstance) -> np.ndarray:
    """Products i zeta f_next'(zeta) f_cur(zeta) over the zeros of f_next.

    Zeros shared with f_cur (within 1e-9) are skipped; at such points the
    product is identically zero and carries no sign information.  The
    products of two members of one family are real; if the assembled phases
    leak more than a 1e-7 relative imaginary part, PhaseLeak is raised
    (mixing instances built in different windows is the usual cause).
    """
    if abs(f_next.omega0 - f_cur.omega0) > 1e-12:
        raise ValueError("instances were built in different windows")
    zeros = np.asarray(f_next.zeros, dtype=float)
    if len(f_cur.zeros):
        dist = circular_distance(zeros[:, None], np.asarray(f_cur.zeros)[None, :])
        zeros = zeros[dist.min(axis=1) > _ANCHOR_TOL]
    if len(zeros) == 0:
        return np.empty(0, dtype=float)
    z = np.exp(1j * zeros)
    dnum = f_next.numerator.derivative()
    prod = (
        1j
        * z
        * dnum(z)
        * half_power(zeros, -f_next.n)
        * f_cur.numerator(z)
        * half_power(zeros, -f_cur.n)
    )
    scale = np.maximum(np.abs(prod), 1e-300)
    leak = float(np.max(np.abs(np.imag(prod)) / scale))
    if leak > 1e-7:
        raise PhaseLeak(f"imaginary residue {leak:.3e} in sign products", leak=leak)
    return np.real(prod)
