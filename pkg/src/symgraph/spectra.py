"""Eigenvalues of symmetric matrices and spectral checks for graph powers.

The eigensolver is a self-contained cyclic Jacobi iteration: at desk scale
(N up to about a thousand) it is simple, symmetric-exact, and its convergence
is easy to certify, which beats pulling in a LAPACK dependency for this
artifact.  Alongside it live the spectral predictors for powers: the product
multiset, the complete homogeneous trace formula, and the determinant power
law, plus an exact fraction-free determinant used as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple

import numpy as np

from .combinatorics import multiset_count
from .power import SizeBudgetError, _max_dim

DEFAULT_TOL = 1e-8

# Jacobi stopping rule: off-diagonal Frobenius mass relative to the whole
_JACOBI_OFF_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    """The sweep limit was reached before the off-diagonal mass vanished."""


@dataclass(frozen=True)
class Spectrum:
    """A multiset of real eigenvalues, stored sorted ascending."""

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))
        if self.tol < 0:
            raise ValueError(f"tolerance must be nonnegative, got {self.tol}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def trace(self) -> float:
        return float(sum(self.values))

    def matches(self, other: "Spectrum") -> bool:
        return spectra_match(self, other)


class SignLogDet(NamedTuple):
    """A determinant as (sign, log of absolute value); sign 0 means zero."""

    sign: int
    logabs: float

    @property
    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.logabs)

    def close_to(self, other: "SignLogDet", rel_tol: float = 1e-6) -> bool:
        if self.sign != other.sign:
            return False
        if self.sign == 0:
            return True
        return math.isclose(self.logabs, other.logabs, rel_tol=rel_tol, abs_tol=rel_tol)


def eigenvalues_symmetric(matrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues of a dense symmetric matrix via cyclic Jacobi rotations.

    The input must be symmetric entrywise to about 1e-12 (relative to its
    largest entry).  Iteration stops once the off-diagonal Frobenius norm
    drops below 1e-12 times the full Frobenius norm; failure to get there in
    100 sweeps raises :class:`JacobiConvergenceError` rather than returning
    garbage.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > _max_dim():
        raise SizeBudgetError(f"matrix dimension {n} exceeds the budget {_max_dim()}")
    scale = max(1.0, float(np.abs(a).max()))
    asym = float(np.abs(a - a.T).max())
    if asym > 1e-12 * scale:
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {asym:.3e}")
    a = (a + a.T) / 2.0
    if n == 1:
        return Spectrum((float(a[0, 0]),), tol)

    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return Spectrum((0.0,) * n, tol)
    target = _JACOBI_OFF_TOL * norm

    for _ in range(_JACOBI_MAX_SWEEPS):
        # sum the off-diagonal squares directly; the norm-difference form
        # ||A||^2 - ||diag||^2 bottoms out at ||A||*sqrt(eps) from cancellation
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= target:
            return Spectrum(tuple(np.sort(np.diag(a)).tolist()), tol)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise JacobiConvergenceError(
        f"off-diagonal norm did not reach {target:.3e} within {_JACOBI_MAX_SWEEPS} sweeps"
    )


def predicted_power_spectrum(spectrum: Spectrum, k: int) -> Spectrum:
    """Eigenvalues a power must have: all k-fold nondecreasing products.

    The result has multiset_count(n, k) entries for an n-point spectrum.
    """
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    values = []
    for combo in combinations_with_replacement(spectrum.values, k):
        prod = 1.0
        for x in combo:
            prod *= x
        values.append(prod)
    assert len(values) == multiset_count(len(spectrum.values), k)
    return Spectrum(tuple(values), spectrum.tol)


def trace_formula(spectrum: Spectrum, k: int) -> float:
    """Trace of the k-th power: the degree-k complete homogeneous polynomial.

    Evaluated by the Newton-style recurrence h_k = (1/k) * sum_j p_j h_{k-j}
    with power sums p_j of the input spectrum, which avoids enumerating the
    multiset_count(n, k) products.
    """
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    p = [0.0] * (k + 1)
    for j in range(1, k + 1):
        p[j] = float(sum(v**j for v in spectrum.values))
    h = [1.0] + [0.0] * k
    for m in range(1, k + 1):
        h[m] = sum(p[j] * h[m - j] for j in range(1, m + 1)) / m
    return h[k]


def det_formula(det_a: float, n: int, k: int) -> SignLogDet:
    """Determinant of the k-th power: det(A) raised to binomial(n+k-1, n).

    Returned in sign/log-magnitude form since the exponent is huge already
    for modest n and k.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    e = math.comb(n + k - 1, n)
    if det_a == 0:
        return SignLogDet(0, float("-inf"))
    sign = 1 if det_a > 0 else -1
    return SignLogDet(sign**e if sign < 0 else 1, e * math.log(abs(det_a)))


def sign_log_det(spectrum: Spectrum, zero_tol: float = 0.0) -> SignLogDet:
    """Determinant of the matrix behind a spectrum, as sign and log-magnitude."""
    sign = 1
    logabs = 0.0
    for v in spectrum.values:
        if abs(v) <= zero_tol:
            return SignLogDet(0, float("-inf"))
        if v < 0:
            sign = -sign
        logabs += math.log(abs(v))
    return SignLogDet(sign, logabs)


def spectra_match(a: Spectrum, b: Spectrum) -> bool:
    """Multiset equality after sorting, at the looser of the two tolerances.

    Entries x, y match when |x - y| <= tol * max(1, |x|, |y|); the max(1, .)
    floor keeps tiny eigenvalues from demanding absurd relative accuracy.
    """
    if len(a) != len(b):
        return False
    tol = max(a.tol, b.tol)
    return all(abs(x - y) <= tol * max(1.0, abs(x), abs(y)) for x, y in zip(a.values, b.values))


def exact_determinant(matrix: Iterable[Iterable]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Accepts ints and Fractions; serves as the independent oracle for the
    determinant power law on rational inputs.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = Fraction(1)
    for c in range(n - 1):
        if m[c][c] == 0:
            pivot = next((r for r in range(c + 1, n) if m[r][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev
            m[r][c] = Fraction(0)
        prev = m[c][c]
    return sign * m[n - 1][n - 1]
