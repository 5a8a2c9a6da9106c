"""The length-one resolution attached to a multi-matrix algebra.

For block sizes k = (k_1, ..., k_n) the complex has modules of rank n + 1 on
both sides.  Testing against the trivial object ("C") or the algebra itself
("A") induces two matrices over Z[t] together with an evaluation map onto
Z or Z^n.  After trivializing the half-integral module on its generator
t^(1/2), all entries are plain integral polynomials; the "t" entries arise
from the contraction t^(1/2) * t^(1/2) = t.

The t-action on the evaluation target is never assumed: it is derived as the
unique solution of the zero-composition constraint d0 (o) d1 = 0, and the
closed forms (sum of k_i^2, respectively k k^T) are checked in the test
suite, not baked in here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dims import DimVector
from .exact_linalg import IntMatrix, LatticeBasis, invariant_factors, kernel_basis
from .repring import HALF_INTEGRAL, INTEGRAL

TEST_TRIVIAL = "C"
TEST_ALGEBRA = "A"
TEST_OBJECTS = (TEST_TRIVIAL, TEST_ALGEBRA)

DEFAULT_DEGREE_BOUND = 12


class InconsistentComplexError(ValueError):
    """No t-action makes the composite zero: the construction is broken."""


@dataclass(frozen=True)
class ModuleMatrix:
    """Matrix of a map between direct sums of rank-one free modules.

    ``entries[i][j]`` is the coefficient tuple (low degree first) of the
    trivialized polynomial entry; parities record which summands are the
    half-integral module so compositions can account for the extra t.
    """

    row_parities: tuple[str, ...]
    col_parities: tuple[str, ...]
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.row_parities):
            raise ValueError("row count does not match row parities")
        for row in self.entries:
            if len(row) != len(self.col_parities):
                raise ValueError("column count does not match column parities")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_parities), len(self.col_parities)

    def entry(self, i: int, j: int) -> tuple[int, ...]:
        return self.entries[i][j]

    def max_entry_degree(self) -> int:
        deg = 0
        for row in self.entries:
            for p in row:
                if len(p) > deg + 1:
                    deg = len(p) - 1
        return deg


@dataclass(frozen=True)
class EvaluationMap:
    """Evaluation of the target-side module onto Z^target_rank.

    ``slot_images`` sends the degree-zero generator of each summand to an
    integer vector; the basis element of degree m in a summand maps to
    t_action^m applied to that image.
    """

    target_rank: int
    slot_images: tuple[tuple[int, ...], ...]
    slot_parities: tuple[str, ...]
    t_action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = self.target_rank
        if len(self.t_action) != r or any(len(row) != r for row in self.t_action):
            raise ValueError("t_action must be a square matrix of the target rank")
        for img in self.slot_images:
            if len(img) != r:
                raise ValueError("slot image has wrong length")

    def t_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.t_action)

    def t_power_images(self, slot: int, max_degree: int) -> list[tuple[int, ...]]:
        """Images of the slot's basis elements of degree 0..max_degree."""
        out = [tuple(self.slot_images[slot])]
        t = self.t_action
        r = self.target_rank
        for _ in range(max_degree):
            prev = out[-1]
            out.append(
                tuple(sum(t[i][j] * prev[j] for j in range(r)) for i in range(r))
            )
        return out

    def evaluate(self, polys: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
        """Apply to a vector of trivialized polynomials, one per slot."""
        if len(polys) != len(self.slot_images):
            raise ValueError("one polynomial per slot required")
        acc = [0] * self.target_rank
        for slot, poly in enumerate(polys):
            if not poly:
                continue
            powers = self.t_power_images(slot, len(poly) - 1)
            for m, c in enumerate(poly):
                if c:
                    img = powers[m]
                    for i in range(self.target_rank):
                        acc[i] += c * img[i]
        return tuple(acc)


@dataclass(frozen=True)
class ExactnessReport:
    """Certificate for the truncated complex at a given degree bound."""

    dims: DimVector
    test_object: str
    degree_bound: int
    d1_injective: bool
    kernel_covered: bool
    d0_surjective: bool
    warnings: tuple[str, ...]

    @property
    def certified_degree(self) -> int:
        return self.degree_bound - 1

    @property
    def exact(self) -> bool:
        return self.d1_injective and self.kernel_covered and self.d0_surjective


def _check_test_object(test_object: str) -> None:
    if test_object not in TEST_OBJECTS:
        raise ValueError(f"test object must be one of {TEST_OBJECTS}, got {test_object!r}")


def _d1_matrix(k: DimVector, test_object: str) -> ModuleMatrix:
    n = k.n
    t_poly = (0, 1)
    one = (1,)
    zero = ()
    rows = []
    if test_object == TEST_TRIVIAL:
        # sources are n trivial summands and the algebra; the corner t is the
        # contraction of two half-integral generators
        for i in range(n):
            rows.append(tuple(one if i == j else zero for j in range(n)) + ((-k[i],),))
        rows.append(tuple((-k[j],) for j in range(n)) + (t_poly,))
        row_par = (HALF_INTEGRAL,) * n + (INTEGRAL,)
        col_par = (INTEGRAL,) * n + (HALF_INTEGRAL,)
    else:
        for i in range(n):
            rows.append(tuple(t_poly if i == j else zero for j in range(n)) + ((-k[i],),))
        rows.append(tuple((-k[j],) for j in range(n)) + (one,))
        row_par = (INTEGRAL,) * n + (HALF_INTEGRAL,)
        col_par = (HALF_INTEGRAL,) * n + (INTEGRAL,)
    return ModuleMatrix(row_par, col_par, tuple(rows))


def _slot_images(k: DimVector, test_object: str) -> tuple[tuple[tuple[int, ...], ...], int]:
    n = k.n
    if test_object == TEST_TRIVIAL:
        images = tuple((k[j],) for j in range(n)) + ((1,),)
        return images, 1
    images = tuple(
        tuple(1 if i == j else 0 for i in range(n)) for j in range(n)
    ) + (tuple(k),)
    return images, n


def _solve_unique_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a linear system that must have exactly one solution."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if m[i][ncols]:
            raise InconsistentComplexError("zero-composition constraints are inconsistent")
    if len(pivots) != ncols:
        raise InconsistentComplexError("t-action is not determined by the constraints")
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return sol


def derive_t_action(k: DimVector, test_object: str):
    """The unique t-action on the evaluation target making d0 o d1 = 0.

    Returns an integer scalar for the trivial test object and an IntMatrix
    for the algebra test object.  Raises InconsistentComplexError when the
    constraints have no (or no unique) solution.
    """
    _check_test_object(test_object)
    d1 = _d1_matrix(k, test_object)
    images, r = _slot_images(k, test_object)
    nrows, ncols = d1.shape
    sys_rows: list[list[Fraction]] = []
    sys_rhs: list[Fraction] = []
    for s in range(ncols):
        a = [0] * r
        b = [0] * r
        for slot in range(nrows):
            poly = d1.entry(slot, s)
            img = images[slot]
            if len(poly) >= 1 and poly[0]:
                for i in range(r):
                    a[i] += poly[0] * img[i]
            if len(poly) >= 2 and poly[1]:
                for i in range(r):
                    b[i] += poly[1] * img[i]
            if len(poly) > 2:
                raise InconsistentComplexError("matrix entries must have degree <= 1")
        if any(b) or any(a):
            # a + T b = 0, one equation per target coordinate
            for i in range(r):
                row = [Fraction(0)] * (r * r)
                for j in range(r):
                    row[i * r + j] = Fraction(b[j])
                sys_rows.append(row)
                sys_rhs.append(Fraction(-a[i]))
    sol = _solve_unique_rational(sys_rows, sys_rhs)
    entries = []
    for x in sol:
        if x.denominator != 1:
            raise InconsistentComplexError(f"t-action entry {x} is not an integer")
        entries.append(int(x))
    matrix = [entries[i * r : (i + 1) * r] for i in range(r)]
    if test_object == TEST_TRIVIAL:
        return matrix[0][0]
    return IntMatrix.from_rows(matrix)


def build_complex(k: DimVector, test_object: str) -> tuple[ModuleMatrix, EvaluationMap]:
    """Construct d1 and the evaluation map d0, with the t-action derived
    from the zero-composition constraint and re-verified exactly."""
    _check_test_object(test_object)
    d1 = _d1_matrix(k, test_object)
    images, r = _slot_images(k, test_object)
    action = derive_t_action(k, test_object)
    if isinstance(action, int):
        t_rows: tuple[tuple[int, ...], ...] = ((action,),)
    else:
        t_rows = tuple(tuple(row) for row in action.to_lists())
    ev = EvaluationMap(
        target_rank=r,
        slot_images=images,
        slot_parities=d1.row_parities,
        t_action=t_rows,
    )
    nrows, ncols = d1.shape
    for s in range(ncols):
        column = [d1.entry(slot, s) for slot in range(nrows)]
        if any(ev.evaluate(column)):
            raise InconsistentComplexError(
                f"composite d0 o d1 is nonzero on source slot {s}"
            )
    return d1, ev


# ---------------------------------------------------------------------------
# Exactness certification on degree truncations
# ---------------------------------------------------------------------------

def _truncated_d1_columns(d1: ModuleMatrix, degree: int) -> list[list[int]]:
    """Columns of the truncated map, as dense integer vectors.

    Source coordinates run over degrees 0..degree, target coordinates over
    degrees 0..degree+1; index order is degree-major.
    """
    nrows, ncols = d1.shape
    tgt_len = (degree + 2) * nrows
    cols = []
    for m in range(degree + 1):
        for s in range(ncols):
            vec = [0] * tgt_len
            for slot in range(nrows):
                poly = d1.entry(slot, s)
                for q, c in enumerate(poly):
                    if c:
                        vec[(m + q) * nrows + slot] += c
            cols.append(vec)
    return cols


def _truncated_d0(ev: EvaluationMap, degree: int) -> IntMatrix:
    """Matrix of the evaluation on degrees 0..degree, degree-major columns."""
    nslots = len(ev.slot_images)
    powers = [ev.t_power_images(s, degree) for s in range(nslots)]
    rows = []
    for i in range(ev.target_rank):
        row = []
        for m in range(degree + 1):
            for s in range(nslots):
                row.append(powers[s][m][i])
        rows.append(row)
    return IntMatrix.from_rows(rows)


def check_exactness(
    k: DimVector, test_object: str, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> ExactnessReport:
    """Certify exactness of the induced complex up to a degree bound.

    Over the truncation to polynomial degree <= degree_bound this checks that
    (a) d1 has trivial kernel, (b) every kernel element of d0 of degree
    <= degree_bound - 1 is the image of an element of degree <= degree_bound
    under d1, and (c) d0 maps onto the full target lattice.  The maps raise
    degree by at most one, so the one-degree buffer suffices for (b).
    """
    _check_test_object(test_object)
    if degree_bound < 2:
        raise ValueError(f"degree bound must be at least 2, got {degree_bound}")
    d1, ev = build_complex(k, test_object)
    nslots = len(ev.slot_images)

    d1_cols = _truncated_d1_columns(d1, degree_bound)
    image = LatticeBasis.from_rows(d1_cols, (degree_bound + 2) * nslots)
    injective = image.rank == len(d1_cols)

    d0_small = _truncated_d0(ev, degree_bound - 1)
    kernel = kernel_basis(d0_small)
    tgt_len = (degree_bound + 2) * nslots
    covered = True
    for vec in kernel:
        padded = list(vec) + [0] * (tgt_len - len(vec))
        if not image.contains(padded):
            covered = False
            break

    d0_full = _truncated_d0(ev, degree_bound)
    factors = invariant_factors(d0_full)
    surjective = (
        sum(1 for d in factors if d != 0) == ev.target_rank
        and all(d == 1 for d in factors[: ev.target_rank])
    )

    warnings = ()
    w = k.scope_warning()
    if w:
        warnings = (w,)
    return ExactnessReport(
        dims=k,
        test_object=test_object,
        degree_bound=degree_bound,
        d1_injective=injective,
        kernel_covered=covered,
        d0_surjective=surjective,
        warnings=warnings,
    )
