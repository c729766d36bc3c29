"""Shared fixtures and independent oracles.

The Gram-Schmidt oracle below rebuilds monic orthogonal polynomials by
classical projection against the moment inner product, so recurrence-based
results can be checked against something that never touches the package's
own update formulas.
"""

import numpy as np
import pytest

from szego_quad import SchurSequence


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)


def random_schur(rng, n, cap=0.6):
    """Admissible Schur sequence with moduli bounded away from the circle."""
    mags = cap * rng.random(n)
    phases = 2 * np.pi * rng.random(n)
    return SchurSequence(mags * np.exp(1j * phases))


def poly_inner(p, q, cget):
    """<p, q> = sum_jk p_j conj(q_k) c_{j-k} for coefficient vectors."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    total = 0.0 + 0.0j
    for j, pj in enumerate(p):
        for k, qk in enumerate(q):
            total += pj * np.conj(qk) * cget(j - k)
    return total


def gram_schmidt_monic(cget, n_max):
    """Monic orthogonal polynomials and norms by classical Gram-Schmidt.

    cget maps an integer k to the moment c_k (negative k allowed).  Returns
    (coefficient vectors, e_n list).  Independent of the package recurrences.
    """
    basis = []
    norms = []
    for d in range(n_max + 1):
        v = np.zeros(d + 1, dtype=complex)
        v[d] = 1.0
        for k in range(d):
            g = poly_inner(v, basis[k], cget) / norms[k]
            v[: k + 1] -= g * basis[k]
        e = poly_inner(v, v, cget).real
        basis.append(v)
        norms.append(e)
    return basis, norms


def lebesgue_cget(k):
    return 1.0 if k == 0 else 0.0
