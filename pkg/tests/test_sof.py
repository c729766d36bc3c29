"""Semi-orthogonal functions: construction, zeros, interlacing, sign probes."""

from dataclasses import replace

import numpy as np
import pytest

from szego_quad import (
    ComplexPolynomial,
    DegenerateAnchor,
    PhaseLeak,
    SchurSequence,
    SofFamilySpec,
    ZeroCoefficient,
    build_opuc,
    christoffel_moments,
    f_sequence,
    inner_product,
    interlace_check,
    kernel_diag,
    moments_from_schur,
    second_kind,
    sof_combo,
    sof_f1,
    sof_f2,
    sturm_sign_probe,
)
from szego_quad.poly import LaurentPolynomial

from conftest import random_schur

CUBE = [0.0, 2 * np.pi / 3, 4 * np.pi / 3]


def lebesgue_table(n=6):
    return build_opuc(SchurSequence.zeros(n), n)


def random_polyseq(rng, k, w, omega0=0.0):
    # symmetrize random coefficients: p + p*(k) is self-inversive,
    # q - q*(k) is anti-self-inversive
    while True:
        p = ComplexPolynomial(rng.standard_normal(k + 1) + 1j * rng.standard_normal(k + 1))
        q = ComplexPolynomial(rng.standard_normal(k + 1) + 1j * rng.standard_normal(k + 1))
        A = p + p.conj_reverse(k)
        B = q - q.conj_reverse(k)
        if np.max(np.abs(A.coeffs)) > 1e-6 and abs(B(complex(w))) > 1e-6:
            return SofFamilySpec.polyseq(A, B, k, w, omega0)


# ---------------------------------------------------------------------------
# first and second kind


def test_f1_cube_roots():
    inst = sof_f1(lebesgue_table(), 3, 1.0)
    assert np.allclose(inst.zeros, CUBE, atol=1e-11)
    assert 0.0 in inst.zeros
    assert inst.n == inst.index == 3


def test_f1_rotated_anchor():
    inst = sof_f1(lebesgue_table(), 2, 1j)
    assert np.allclose(inst.zeros, [np.pi / 2, 3 * np.pi / 2], atol=1e-11)
    assert np.pi / 2 in inst.zeros


def test_f1_nontrivial_table():
    table = build_opuc(SchurSequence([0.5, -1 / 3]), 2)
    inst = sof_f1(table, 2, 1.0)
    assert len(inst.zeros) == 2
    assert 0.0 in inst.zeros
    assert np.allclose(inst.zeros, [0.0, np.pi], atol=1e-11)


def test_f1_anchor_pinned_in_shifted_window():
    inst = sof_f1(lebesgue_table(), 3, 1.0, omega0=-np.pi)
    assert 0.0 in inst.zeros


def test_f1_realization_is_real(rng):
    table = build_opuc(random_schur(rng, 5), 5)
    inst = sof_f1(table, 5, np.exp(0.4j))
    theta = 2 * np.pi * rng.random(64)
    assert inst.realization().imag_leak(theta) < 1e-12
    vals = inst.value(inst.zeros)
    assert np.max(np.abs(vals)) < 1e-9


def test_f1_degenerate_anchor_guard():
    table = lebesgue_table(3)
    bad_phi = list(table.phi)
    bad_phi[2] = ComplexPolynomial([-1.0, 0.0, 1.0])
    tampered = replace(table, phi=tuple(bad_phi))
    with pytest.raises(DegenerateAnchor) as exc:
        sof_f1(tampered, 2, 1.0)
    assert exc.value.detail["n"] == 2


def test_f2_square_roots_and_anchor_value():
    table = lebesgue_table()
    omegas = second_kind(SchurSequence.zeros(6), 6)
    inst = sof_f2(table, omegas, 2, 1.0)
    assert np.allclose(inst.zeros, [np.pi / 2, 3 * np.pi / 2], atol=1e-11)
    assert abs(inst.value(0.0) - 2.0) < 1e-10


def test_f2_cube_case():
    table = lebesgue_table()
    omegas = second_kind(SchurSequence.zeros(6), 6)
    inst = sof_f2(table, omegas, 3, 1.0)
    assert np.allclose(inst.zeros, [np.pi / 3, np.pi, 5 * np.pi / 3], atol=1e-11)


def test_f2_anchor_value_single_coefficient():
    schur = SchurSequence([0.5])
    table = build_opuc(schur, 1)
    inst = sof_f2(table, second_kind(schur, 1), 1, 1.0)
    assert abs(inst.value(0.0) - 1.5) < 1e-12


def test_f2_anchor_value_random(rng):
    # value at the anchor is twice the squared norm, never zero
    schur = random_schur(rng, 7)
    table = build_opuc(schur, 7)
    omegas = second_kind(schur, 7)
    for n in (1, 4, 7):
        w = np.exp(1j * 2 * np.pi * rng.random())
        inst = sof_f2(table, omegas, n, w)
        assert abs(inst.value(float(np.angle(w)) % (2 * np.pi)) - 2 * table.e[n]) < 1e-10


# ---------------------------------------------------------------------------
# combinations


def test_combo_reduces_to_pure_kinds():
    table = lebesgue_table()
    omegas = second_kind(SchurSequence.zeros(6), 6)
    first = sof_combo(table, SofFamilySpec.combo(1.0, 0.0, 1.0), 3, omegas)
    assert np.allclose(first.zeros, sof_f1(table, 3, 1.0).zeros, atol=1e-11)
    second = sof_combo(table, SofFamilySpec.combo(0.0, 1.0, 1.0), 3, omegas)
    assert np.allclose(second.zeros, sof_f2(table, omegas, 3, 1.0).zeros, atol=1e-11)


def test_combo_mixed_interlaces_parents():
    table = lebesgue_table()
    omegas = second_kind(SchurSequence.zeros(6), 6)
    inst = sof_combo(table, SofFamilySpec.combo(1.0, 1.0, 1.0), 2, omegas)
    assert np.allclose(inst.zeros, [3 * np.pi / 4, 7 * np.pi / 4], atol=1e-11)
    f1z = sof_f1(table, 2, 1.0).zeros
    f2z = sof_f2(table, omegas, 2, 1.0).zeros
    assert interlace_check(inst.zeros, f1z).ok
    assert interlace_check(inst.zeros, f2z).ok


def test_combo_coefficients_must_not_both_vanish():
    with pytest.raises(ValueError):
        SofFamilySpec.combo(0.0, 0.0, 1.0)


def test_combo_anchored_zero_pinned():
    table = build_opuc(SchurSequence([0.3, 0.1]), 2)
    omegas = second_kind(SchurSequence([0.3, 0.1]), 2)
    inst = sof_combo(table, SofFamilySpec.combo(2.0, 0.0, 1j), 2, omegas)
    assert np.pi / 2 in inst.zeros


def test_polyseq_symmetry_validation():
    B = ComplexPolynomial([-1.0, 1.0])
    with pytest.raises(ValueError, match="symmetry"):
        SofFamilySpec.polyseq(ComplexPolynomial([1.0, 2.0]), B, 1, 1.0)
    with pytest.raises(ValueError, match="symmetry"):
        SofFamilySpec.polyseq(ComplexPolynomial([1.0, 1.0]), ComplexPolynomial([1.0, 1.0]), 1, 1.0)
    with pytest.raises(ValueError, match="degree"):
        SofFamilySpec.polyseq(ComplexPolynomial([1.0, 0, 1.0]), B, 1, 1.0)


def test_polyseq_zero_coefficient():
    # both coefficient polynomials vanish at the anchor
    A = ComplexPolynomial([1j, -1j])
    B = ComplexPolynomial([-1.0, 1.0])
    spec = SofFamilySpec.polyseq(A, B, 1, 1.0)
    with pytest.raises(ZeroCoefficient) as exc:
        sof_combo(lebesgue_table(), spec, 2)
    assert exc.value.detail["n"] == 2


# ---------------------------------------------------------------------------
# numerator structure


def test_numerator_is_one_invariant(rng):
    schur = random_schur(rng, 6)
    table = build_opuc(schur, 6)
    omegas = second_kind(schur, 6)
    w = np.exp(1.3j)
    for inst in (
        sof_f1(table, 5, w),
        sof_f2(table, omegas, 5, w),
        sof_combo(table, SofFamilySpec.combo(0.7, -1.2, w), 5, omegas),
    ):
        n = inst.n
        resid = (inst.numerator.conj_reverse(n) - inst.numerator).padded(n + 1)
        assert np.max(np.abs(resid)) < 1e-12 * np.max(np.abs(inst.numerator.coeffs))


def test_numerator_para_orthogonality(rng):
    # <N, z^k> vanishes strictly inside 0..n, never at the endpoints
    schur = random_schur(rng, 6)
    table = build_opuc(schur, 6)
    m = moments_from_schur(schur, 6)
    n = 5
    inst = sof_f1(table, n, np.exp(0.9j))
    num = LaurentPolynomial(inst.numerator.coeffs, 0)
    for k in range(n + 1):
        mono = LaurentPolynomial(np.array([1.0 + 0j]), k)
        val = abs(inner_product(m, num, mono))
        if 0 < k < n:
            assert val < 1e-10
        else:
            assert val > 1e-6


def test_as_pop_pair_reconstructs_numerator(rng):
    schur = random_schur(rng, 4)
    table = build_opuc(schur, 4)
    inst = sof_f1(table, 4, np.exp(0.2j))
    alpha, beta = inst.as_pop_pair()
    rebuilt = alpha * table.phi[4] + beta * table.phi_star[4]
    assert np.allclose(rebuilt.padded(5), inst.numerator.padded(5), atol=1e-13)


def test_coefficient_recurrence_identities(rng):
    # alpha_n = beta_n + a_n conj(beta_n) with
    # beta_n = (e_{n-1}/e_n)(alpha_n - a_n conj(alpha_n)), and the numerator
    # drops to degree n-1 data through the same beta_n
    schur = random_schur(rng, 6)
    table = build_opuc(schur, 6)
    for n in (2, 4, 6):
        inst = sof_f1(table, n, np.exp(1j * 2 * np.pi * rng.random()))
        alpha = inst.alpha
        a_n = schur.a(n)
        beta = (table.e[n - 1] / table.e[n]) * (alpha - a_n * np.conj(alpha))
        assert abs(alpha - (beta + a_n * np.conj(beta))) < 1e-10
        lowered = (
            (table.e[n] / table.e[n - 1])
            * (-1j)
            * (np.conj(beta) * table.phi[n - 1].shifted(1) - beta * table.phi_star[n - 1])
        )
        assert np.allclose(lowered.padded(n + 1), inst.numerator.padded(n + 1), atol=1e-12)


# ---------------------------------------------------------------------------
# alternating sequence


def test_f_sequence_lebesgue_members():
    seq = f_sequence(lebesgue_table(), [1.0] * 5, 5)
    assert [inst.label for inst in seq] == ["F_1", "F_2", "F_3", "F_4", "F_5"]
    assert seq[0].zeros.size == 0
    assert np.allclose(seq[0].numerator.coeffs, [1.0])
    assert np.allclose(seq[1].zeros, [0.0, np.pi], atol=1e-11)
    assert np.allclose(seq[2].zeros, [2 * np.pi / 3, 4 * np.pi / 3], atol=1e-11)
    assert np.allclose(seq[3].zeros, [0, np.pi / 2, np.pi, 3 * np.pi / 2], atol=1e-11)


def test_f_sequence_scalar_anchor_broadcasts():
    a = f_sequence(lebesgue_table(), 1.0, 4)
    b = f_sequence(lebesgue_table(), [1.0] * 4, 4)
    for x, y in zip(a, b):
        assert np.allclose(x.zeros, y.zeros, atol=1e-12)


def test_f_sequence_odd_members_recover_first_kind(rng):
    # zeros of F_{2k+1} plus the anchor match f1 at the same order
    schur = random_schur(rng, 6, cap=0.5)
    table = build_opuc(schur, 6)
    w = np.exp(0.7j)
    seq = f_sequence(table, [w] * 5, 5)
    for idx in (3, 5):
        inst = seq[idx - 1]
        assert inst.index == idx
        assert len(inst.zeros) == idx - 1
        aug = np.sort(np.append(inst.zeros, inst.anchor_angle))
        ref = np.sort(sof_f1(table, idx, w).zeros)
        assert np.allclose(aug, ref, atol=1e-9)


def test_f_sequence_odd_numerator_orthogonal_for_modified_measure(rng):
    schur = random_schur(rng, 6, cap=0.5)
    table = build_opuc(schur, 6)
    w = np.exp(0.7j)
    seq = f_sequence(table, [w] * 5, 5)
    inst = seq[4]
    modified = christoffel_moments(moments_from_schur(schur, 6), w)
    num = LaurentPolynomial(inst.numerator.coeffs, 0)
    for k in range(1, inst.n):
        mono = LaurentPolynomial(np.array([1.0 + 0j]), k)
        assert abs(inner_product(modified, num, mono)) < 1e-9


def test_f_sequence_guards():
    with pytest.raises(ValueError):
        f_sequence(lebesgue_table(), [1.0], 0)
    with pytest.raises(ValueError):
        f_sequence(lebesgue_table(3), [1.0] * 5, 5)
    with pytest.raises(ValueError):
        f_sequence(lebesgue_table(), [1.0, 1.0], 4)


# ---------------------------------------------------------------------------
# interlacing


def test_interlace_accepts_offset_pairs():
    assert interlace_check([np.pi], [2 * np.pi / 3, 4 * np.pi / 3]).ok
    assert interlace_check([np.pi / 2, 3 * np.pi / 2], [0.0, np.pi]).ok


def test_interlace_rejects_with_witness():
    result = interlace_check([1.0, 1.1], [1.05, 2.0, 3.0])
    assert not result.ok
    assert "consecutive" in result.witness
    counts = interlace_check([1.0], [2.0, 3.0, 4.0])
    assert not counts.ok
    assert "counts" in counts.witness
    coincident = interlace_check([1.0, 2.0], [1.0, 3.0])
    assert not coincident.ok
    assert "coincident" in coincident.witness


def test_interlace_trivial_and_anchor_removal():
    assert interlace_check([], []).ok
    assert interlace_check([1.0], [2.0]).ok
    # consecutive first-kind members share only the anchor
    f2z = sof_f1(lebesgue_table(), 2, 1.0).zeros
    f3z = sof_f1(lebesgue_table(), 3, 1.0).zeros
    assert not interlace_check(f3z, f2z).ok
    assert interlace_check(f3z, f2z, exclude_anchor=0.0).ok


def test_consecutive_polyseq_members_interlace(rng):
    # the window must be anchored at arg(w): the Sturm factor
    # sin((omega0 - theta)/2) keeps one sign only there
    for _ in range(6):
        n_top = int(rng.integers(4, 9))
        schur = random_schur(rng, n_top, cap=0.55)
        table = build_opuc(schur, n_top)
        omegas = second_kind(schur, n_top)
        angle = float(2 * np.pi * rng.random())
        spec = random_polyseq(rng, 2, np.exp(1j * angle), omega0=angle)
        insts = [sof_combo(table, spec, n, omegas) for n in range(1, n_top + 1)]
        for cur, nxt in zip(insts, insts[1:]):
            result = interlace_check(nxt.zeros, cur.zeros, angle)
            assert result.ok, result.witness


def test_anchor_dichotomy(rng):
    # vanishing second-kind part pins the anchor; a nonvanishing one
    # repels it
    schur = random_schur(rng, 6, cap=0.5)
    table = build_opuc(schur, 6)
    omegas = second_kind(schur, 6)
    w = np.exp(0.9j)
    angle = 0.9
    spec = random_polyseq(rng, 2, w)
    for n in range(2, 7):
        pinned = sof_f1(table, n, w)
        assert np.min(np.abs(pinned.zeros - angle)) < 1e-12
        repelled = sof_combo(table, spec, n, omegas)
        assert np.min(np.abs(repelled.zeros - angle)) > 1e-6


def test_proportional_pairs_share_zeros_nondegenerate_pairs_interlace(rng):
    schur = random_schur(rng, 5)
    table = build_opuc(schur, 5)
    omegas = second_kind(schur, 5)
    g = sof_combo(table, SofFamilySpec.combo(1.0, 2.0, 1.0), 5, omegas)
    h = sof_combo(table, SofFamilySpec.combo(3.0, 1.0, 1.0), 5, omegas)
    assert interlace_check(g.zeros, h.zeros).ok
    scaled = sof_combo(table, SofFamilySpec.combo(2.0, 4.0, 1.0), 5, omegas)
    assert np.allclose(g.zeros, scaled.zeros, atol=1e-11)


# ---------------------------------------------------------------------------
# sign probes


def test_sturm_probe_consecutive_first_kind_constant_sign():
    table = lebesgue_table()
    probes = sturm_sign_probe(sof_f1(table, 3, 1.0), sof_f1(table, 2, 1.0))
    assert len(probes) == 2
    assert np.all(probes < 0) or np.all(probes > 0)


def test_sturm_probe_matches_kernel_diagonal(rng):
    # pairing first against second kind gives 2 e_n^2 K_{n-1} at each zero
    for schur in (SchurSequence.zeros(6), random_schur(rng, 6)):
        table = build_opuc(schur, 6)
        omegas = second_kind(schur, 6)
        w = np.exp(1j * 2 * np.pi * rng.random())
        for n in (2, 4, 6):
            f1 = sof_f1(table, n, w)
            f2 = sof_f2(table, omegas, n, w)
            probes = sturm_sign_probe(f1, f2)
            want = 2 * table.e[n] ** 2 * kernel_diag(table, n - 1, np.exp(1j * f1.zeros))
            assert np.all(probes > 0)
            assert np.max(np.abs(probes - want) / want) < 1e-8


def test_sturm_probe_window_mismatch():
    table = lebesgue_table()
    a = sof_f1(table, 3, 1.0)
    b = sof_f1(table, 2, 1.0, omega0=-np.pi)
    with pytest.raises(ValueError):
        sturm_sign_probe(a, b)


def test_sturm_probe_phase_leak():
    table = lebesgue_table()
    cur = sof_f1(table, 2, 1.0)
    tampered = replace(sof_f1(table, 3, 1.0), numerator=1j * sof_f1(table, 3, 1.0).numerator)
    with pytest.raises(PhaseLeak) as exc:
        sturm_sign_probe(tampered, cur)
    assert exc.value.detail["leak"] > 1e-7
