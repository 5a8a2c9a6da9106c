"""Multi-matrix algebras with faithful states and the delta-form test.

A state on M_k1 (+) ... (+) M_kn is given by blockwise density matrices with
total trace one.  The GNS inner product <a, b> = state(a* b) turns the
algebra into a Hilbert space; the multiplication map mu then has an adjoint
mu*, and the state is a delta-form exactly when mu mu* is a scalar.  All
arithmetic is over complex numbers with rational real and imaginary parts, so
"scalar" versus "not scalar" is an exact distinction; delta itself is
reported through the rational delta^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dims import DimVector


class NonFaithfulStateError(ValueError):
    """The density has a kernel, so the GNS inner product is degenerate."""


class StateFormatError(ValueError):
    """Density data does not describe a state."""


# ---------------------------------------------------------------------------
# Complex numbers with rational coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexRational:
    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "ComplexRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, other):
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        n2 = other.re * other.re + other.im * other.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero")
        return ComplexRational(
            (self.re * other.re + self.im * other.im) / n2,
            (self.im * other.re - self.re * other.im) / n2,
        )

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else ''}{self.im}i"


QC_ZERO = ComplexRational(Fraction(0), Fraction(0))
QC_ONE = ComplexRational(Fraction(1), Fraction(0))


def qc(value, im=0) -> ComplexRational:
    if isinstance(value, ComplexRational):
        return value
    return ComplexRational(Fraction(value), Fraction(im))


QCMatrix = list  # list[list[ComplexRational]]


def qc_identity(n: int) -> QCMatrix:
    return [[QC_ONE if i == j else QC_ZERO for j in range(n)] for i in range(n)]


def qc_zero_matrix(rows: int, cols: int) -> QCMatrix:
    return [[QC_ZERO for _ in range(cols)] for _ in range(rows)]


def qc_matmul(a: QCMatrix, b: QCMatrix) -> QCMatrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = qc_zero_matrix(rows, cols)
    for i in range(rows):
        ai = a[i]
        for kk in range(inner):
            x = ai[kk]
            if x.is_zero():
                continue
            bk = b[kk]
            oi = out[i]
            for j in range(cols):
                oi[j] = oi[j] + x * bk[j]
    return out


def qc_conj_transpose(a: QCMatrix) -> QCMatrix:
    rows = len(a)
    cols = len(a[0]) if a else 0
    return [[a[i][j].conjugate() for i in range(rows)] for j in range(cols)]


def qc_is_hermitian(a: QCMatrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i].conjugate() for i in range(n) for j in range(n))


def qc_inverse(a: QCMatrix) -> QCMatrix:
    n = len(a)
    work = [row[:] + ident[:] for row, ident in zip(a, qc_identity(n))]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not work[i][c].is_zero():
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = QC_ONE / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return [row[n:] for row in work]


def qc_char_coefficients(a: QCMatrix) -> list[Fraction]:
    """Elementary symmetric functions of the spectrum (Faddeev-LeVerrier).

    For a Hermitian matrix these are real; entries are returned as Fractions
    and a StateFormatError is raised if an imaginary part sneaks in.
    """
    n = len(a)
    elementary: list[Fraction] = []
    m = qc_identity(n)
    sign = 1
    for kk in range(1, n + 1):
        m = qc_matmul(a, m)
        tr = QC_ZERO
        for i in range(n):
            tr = tr + m[i][i]
        c = ComplexRational(-tr.re / kk, -tr.im / kk)
        if not c.is_real():
            raise StateFormatError("characteristic coefficients are not real")
        sign = -sign
        elementary.append(sign * c.re)
        if kk < n:
            for i in range(n):
                m[i][i] = m[i][i] + c
    return elementary


def qc_is_positive_definite(a: QCMatrix) -> bool:
    return qc_is_hermitian(a) and all(c > 0 for c in qc_char_coefficients(a))


def qc_is_positive_semidefinite(a: QCMatrix) -> bool:
    return qc_is_hermitian(a) and all(c >= 0 for c in qc_char_coefficients(a))


# ---------------------------------------------------------------------------
# Algebras and states
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinDimAlgebra:
    """M_k1 (+) ... (+) M_kn with the matrix-unit basis."""

    block_sizes: DimVector

    @classmethod
    def of(cls, *sizes: int) -> "FinDimAlgebra":
        return cls(DimVector(tuple(sizes)))

    @property
    def dim(self) -> int:
        return self.block_sizes.algebra_dim

    def basis_labels(self) -> list[tuple[int, int, int]]:
        """(block, row, col) for each matrix unit, block-major."""
        out = []
        for b, size in enumerate(self.block_sizes):
            for r in range(size):
                for c in range(size):
                    out.append((b, r, c))
        return out


class AlgState:
    """Blockwise density matrices Q_i; the state is a |-> sum tr(Q_i a_i).

    Densities must be Hermitian positive semidefinite with total trace one.
    The state is faithful exactly when every block is positive definite.
    """

    def __init__(self, algebra: FinDimAlgebra, density: Sequence[QCMatrix]):
        if len(density) != algebra.block_sizes.n:
            raise StateFormatError("one density block per matrix block required")
        blocks = []
        total = Fraction(0)
        for size, q in zip(algebra.block_sizes, density):
            q = [[qc(x) if not isinstance(x, ComplexRational) else x for x in row] for row in q]
            if len(q) != size or any(len(row) != size for row in q):
                raise StateFormatError(f"density block must be {size}x{size}")
            if not qc_is_hermitian(q):
                raise StateFormatError("density block is not Hermitian")
            if not qc_is_positive_semidefinite(q):
                raise StateFormatError("density block is not positive semidefinite")
            for i in range(size):
                total += q[i][i].re
            blocks.append(q)
        if total != 1:
            raise StateFormatError(f"total trace is {total}, expected 1")
        self.algebra = algebra
        self.density = blocks
        self.faithful = all(qc_is_positive_definite(q) for q in blocks)

    @classmethod
    def commutative(cls, weights: Sequence) -> "AlgState":
        """State on C^n from a weight vector."""
        w = [Fraction(x) for x in weights]
        alg = FinDimAlgebra.of(*([1] * len(w)))
        return cls(alg, [[[qc(x)]] for x in w])

    @classmethod
    def uniform_trace(cls, n: int) -> "AlgState":
        """Uniform probability weights on C^n."""
        return cls.commutative([Fraction(1, n)] * n)

    @classmethod
    def trace_state(cls, algebra: FinDimAlgebra) -> "AlgState":
        """The tracial state Tr / Tr(1); on M_k this is the normalized trace."""
        total = sum(algebra.block_sizes)
        density = []
        for size in algebra.block_sizes:
            density.append(
                [
                    [qc(Fraction(1, total)) if i == j else QC_ZERO for j in range(size)]
                    for i in range(size)
                ]
            )
        return cls(algebra, density)


# ---------------------------------------------------------------------------
# GNS data and the delta-form test
# ---------------------------------------------------------------------------

def _require_faithful(state: AlgState) -> None:
    if not state.faithful:
        raise NonFaithfulStateError(
            "state is not faithful: some density block is singular"
        )


def gns_gram(algebra: FinDimAlgebra, state: AlgState) -> QCMatrix:
    """Gram matrix <e_ab, e_cd> = state(e_ab* e_cd) on the matrix-unit basis.

    Positive definite whenever the state is faithful; exact rational(-complex)
    entries for rational density data.
    """
    if state.algebra.block_sizes != algebra.block_sizes:
        raise StateFormatError("state does not live on this algebra")
    _require_faithful(state)
    labels = algebra.basis_labels()
    dim = len(labels)
    gram = qc_zero_matrix(dim, dim)
    for x, (bx, a, b) in enumerate(labels):
        for y, (by, c, d) in enumerate(labels):
            if bx == by and a == c:
                # e_ab* e_cd = e_ba e_cd = delta_ac e_bd, and state(e_bd) = Q[d][b]
                gram[x][y] = state.density[bx][d][b]
    return gram


def _basis_index_maps(algebra: FinDimAlgebra):
    labels = algebra.basis_labels()
    index = {lab: i for i, lab in enumerate(labels)}
    return labels, index


def mu_mu_star(algebra: FinDimAlgebra, state: AlgState) -> QCMatrix:
    """Matrix of mu mu* on the matrix-unit basis of the GNS space.

    mu is the multiplication map on the GNS space of the algebra tensored
    with itself; its adjoint is taken with respect to the product state.  The
    result is self-adjoint and positive for the GNS inner product, and the
    scalar-or-not question is basis independent.
    """
    _require_faithful(state)
    labels, index = _basis_index_maps(algebra)
    dim = len(labels)
    gram = gns_gram(algebra, state)
    gram_inv = qc_inverse(gram)
    gram_inv_t = [[gram_inv[j][i] for j in range(dim)] for i in range(dim)]

    # product of basis units: e_ab e_cd = delta_bc e_ad within a block
    def prod(u: int, v: int) -> int | None:
        bu, a, b = labels[u]
        bv, c, d = labels[v]
        if bu != bv or b != c:
            return None
        return index[(bu, a, d)]

    out = qc_zero_matrix(dim, dim)
    for x in range(dim):
        gcol = [gram[y][x] for y in range(dim)]
        # Y[u][v] = (mu^H G e_x) at coordinate (u, v); mu has 0/1 entries
        y_mat = qc_zero_matrix(dim, dim)
        for u in range(dim):
            for v in range(dim):
                p = prod(u, v)
                if p is not None:
                    y_mat[u][v] = gcol[p]
        # apply the inverse product Gram: Z = G^-1 Y (G^-1)^T
        z = qc_matmul(qc_matmul(gram_inv, y_mat), gram_inv_t)
        # push forward along mu
        for u in range(dim):
            for v in range(dim):
                p = prod(u, v)
                if p is not None and not z[u][v].is_zero():
                    out[p][x] = out[p][x] + z[u][v]
    return out


@dataclass(frozen=True)
class DeltaFormResult:
    is_delta_form: bool
    delta_squared: Fraction | None
    witness: tuple[tuple[int, int, int], ComplexRational, ComplexRational] | None

    @property
    def delta(self) -> float | None:
        if self.delta_squared is None:
            return None
        return math.sqrt(float(self.delta_squared))

    def delta_exact(self) -> Fraction | None:
        """delta as an exact rational when delta^2 is a perfect square."""
        if self.delta_squared is None:
            return None
        p, q = self.delta_squared.numerator, self.delta_squared.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return Fraction(rp, rq)
        return None


def is_delta_form(algebra: FinDimAlgebra, state: AlgState) -> DeltaFormResult:
    """Decide whether the state is a delta-form: mu mu* = delta^2 id.

    On success the exact rational delta^2 is returned; otherwise the witness
    records a basis label where scalarity fails, with the observed and
    expected diagonal values.
    """
    p = mu_mu_star(algebra, state)
    labels = algebra.basis_labels()
    dim = len(labels)
    lam = p[0][0]
    for x in range(dim):
        for y in range(dim):
            expected = lam if x == y else QC_ZERO
            if p[x][y] != expected:
                return DeltaFormResult(False, None, (labels[y], p[x][y], expected))
    if not lam.is_real() or lam.re <= 0:
        raise StateFormatError(f"mu mu* scalar {lam} is not a positive rational")
    return DeltaFormResult(True, lam.re, None)
