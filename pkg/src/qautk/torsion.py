"""Group-graded algebras, 2-cocycles, and twisted group algebras.

A finite dimensional algebra graded by a discrete group with one-dimensional
ergodic components is, after normalizing the homogeneous basis to unitaries,
a twisted group algebra of its support subgroup: the defect of the product
against the group law is a normalized U(1)-valued 2-cocycle.  This module
builds twisted group algebras from cocycle data, recovers (subgroup, cocycle)
pairs from graded algebras, and computes Wedderburn block sizes, using exact
cyclotomic arithmetic for everything except the final spectral clustering.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .cyclotomic import Cyclotomic


class GroupTableError(ValueError):
    """A Cayley table that is not a group law."""


class CocycleError(ValueError):
    """A table violating the 2-cocycle identity or normalization."""


class GradedAlgebraError(ValueError):
    """Structure constants violating grading, involution, or associativity."""


class NonErgodicError(ValueError):
    """The identity-graded component is not one-dimensional."""


class TorsionExtractionError(ValueError):
    """The graded algebra does not satisfy the extraction hypotheses."""


class NonSemisimpleError(ValueError):
    """Degenerate trace form; carries a radical witness."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


class BlockDecompositionError(ValueError):
    """Spectral clustering and the exact center dimension disagree."""


# ---------------------------------------------------------------------------
# Finite groups by Cayley table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """A finite group presented by its full multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.  The
    group axioms are checked on construction.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise GroupTableError("empty group table")
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupTableError("table is not square over element indices")
        if not (0 <= self.identity < n):
            raise GroupTableError("identity index out of range")
        e = self.identity
        for i in range(n):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise GroupTableError(f"element {e} is not an identity")
        for i in range(n):
            if e not in self.table[i]:
                raise GroupTableError(f"element {i} has no inverse")
        for i in range(n):
            for j in range(n):
                tij = self.table[i][j]
                for kk in range(n):
                    if self.table[tij][kk] != self.table[i][self.table[j][kk]]:
                        raise GroupTableError(
                            f"associativity fails at ({i}, {j}, {kk})"
                        )
        if self.labels and len(self.labels) != n:
            raise GroupTableError("one label per element required")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else f"g{a}"

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def centralizer(self, s: int) -> list[int]:
        return [g for g in range(self.order) if self.mul(g, s) == self.mul(s, g)]

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen = set()
        classes = []
        for s in range(self.order):
            if s in seen:
                continue
            orbit = {self.mul(self.mul(g, s), self.inv(g)) for g in range(self.order)}
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return classes

    # -- constructors ---------------------------------------------------------

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return cls(table, 0, tuple(f"r{i}" for i in range(n)))

    @classmethod
    def direct_product(cls, g: "FiniteGroup", h: "FiniteGroup") -> "FiniteGroup":
        ng, nh = g.order, h.order

        def enc(a: int, b: int) -> int:
            return a * nh + b

        table = tuple(
            tuple(
                enc(g.mul(a1, a2), h.mul(b1, b2))
                for a2 in range(ng)
                for b2 in range(nh)
            )
            for a1 in range(ng)
            for b1 in range(nh)
        )
        labels = tuple(
            f"({g.label(a)},{h.label(b)})" for a in range(ng) for b in range(nh)
        )
        return cls(table, enc(g.identity, h.identity), labels)

    @classmethod
    def klein_four(cls) -> "FiniteGroup":
        c2 = cls.cyclic(2)
        return cls.direct_product(c2, c2)

    @classmethod
    def dihedral(cls, n: int) -> "FiniteGroup":
        """Symmetries of the n-gon, order 2n; element (r, f) = rotation^r flip^f."""
        if n < 1:
            raise GroupTableError("dihedral parameter must be positive")
        size = 2 * n

        def enc(r: int, f: int) -> int:
            return r % n + n * (f % 2)

        def mul(x: int, y: int) -> int:
            r1, f1 = x % n, x // n
            r2, f2 = y % n, y // n
            if f1 == 0:
                return enc(r1 + r2, f2)
            return enc(r1 - r2, f1 + f2)

        table = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
        return cls(table, 0)

    @classmethod
    def quaternion(cls) -> "FiniteGroup":
        """Q8 = {+-1, +-i, +-j, +-k} with indices (unit, sign)."""
        # elements 0..7: 1, i, j, k, -1, -i, -j, -k
        base = {
            (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
            (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
            (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
            (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
        }

        def mul(x: int, y: int) -> int:
            ux, sx = x % 4, x // 4
            uy, sy = y % 4, y // 4
            uz, extra = base[(ux, uy)]
            return uz + 4 * ((sx + sy + extra) % 2)

        table = tuple(tuple(mul(x, y) for y in range(8)) for x in range(8))
        labels = ("1", "i", "j", "k", "-1", "-i", "-j", "-k")
        return cls(table, 0, labels)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}

        def compose(p, q):
            # apply q first, then p
            return tuple(p[q[i]] for i in range(n))

        table = tuple(
            tuple(index[compose(p, q)] for q in perms) for p in perms
        )
        labels = tuple("".join(str(x) for x in p) for p in perms)
        return cls(table, index[tuple(range(n))], labels)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "order": self.order,
            "identity": self.identity,
            "table": [list(row) for row in self.table],
        }
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "FiniteGroup":
        try:
            table = tuple(tuple(int(x) for x in row) for row in data["table"])
            identity = int(data.get("identity", 0))
            labels = tuple(str(x) for x in data.get("labels", ()))
        except (KeyError, TypeError, ValueError) as exc:
            raise GroupTableError(f"malformed group data: {exc}") from None
        return cls(table, identity, labels)


# ---------------------------------------------------------------------------
# Normalized 2-cocycles with root-of-unity values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cocycle:
    """omega(s, t) = zeta_root_order ** table[s][t], normalized at the identity.

    The cocycle identity omega(s,t) omega(st,u) = omega(t,u) omega(s,tu) is
    checked on construction as exponent arithmetic.
    """

    group: FiniteGroup
    root_order: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.group.order
        m = self.root_order
        if m < 1:
            raise CocycleError("root order must be positive")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise CocycleError("cocycle table must be order x order")
        for row in self.table:
            for x in row:
                if not (0 <= x < m):
                    raise CocycleError(f"exponent {x} out of range for root order {m}")
        e = self.group.identity
        for s in range(n):
            if self.table[e][s] or self.table[s][e]:
                raise CocycleError("cocycle is not normalized at the identity")
        g = self.group
        for s in range(n):
            for t in range(n):
                st = g.mul(s, t)
                for u in range(n):
                    lhs = (self.table[s][t] + self.table[st][u]) % m
                    rhs = (self.table[t][u] + self.table[s][g.mul(t, u)]) % m
                    if lhs != rhs:
                        raise CocycleError(f"cocycle identity fails at ({s}, {t}, {u})")

    def value(self, s: int, t: int) -> int:
        return self.table[s][t]

    def root(self, s: int, t: int) -> Cyclotomic:
        return Cyclotomic.root(self.root_order, self.table[s][t])

    @classmethod
    def trivial(cls, group: FiniteGroup, root_order: int = 1) -> "Cocycle":
        n = group.order
        return cls(group, root_order, tuple((0,) * n for _ in range(n)))

    @classmethod
    def coboundary(cls, group: FiniteGroup, root_order: int, beta: Sequence[int]) -> "Cocycle":
        """The coboundary of a 1-cochain with beta(identity) = 0."""
        if len(beta) != group.order:
            raise CocycleError("one exponent per group element required")
        if beta[group.identity] % root_order:
            raise CocycleError("beta must vanish at the identity")
        n = group.order
        table = tuple(
            tuple(
                (beta[s] + beta[t] - beta[group.mul(s, t)]) % root_order
                for t in range(n)
            )
            for s in range(n)
        )
        return cls(group, root_order, table)

    @classmethod
    def bilinear_on_product(cls, a: int, b: int) -> "Cocycle":
        """On C_a x C_b: omega((i1,j1),(i2,j2)) = zeta_g^(j1 i2), g = gcd(a, b).

        Bilinear, hence a cocycle; nontrivial whenever g > 1.
        """
        g = math.gcd(a, b)
        group = FiniteGroup.direct_product(FiniteGroup.cyclic(a), FiniteGroup.cyclic(b))
        m = max(g, 1)
        n = group.order

        def dec(x: int) -> tuple[int, int]:
            return x // b, x % b

        table = []
        for s in range(n):
            _, j1 = dec(s)
            table.append(tuple((j1 * dec(t)[0]) % m for t in range(n)))
        return cls(group, m, tuple(table))

    @classmethod
    def pauli(cls) -> "Cocycle":
        """The Klein four-group cocycle realized by the Pauli matrices in M_2.

        Elements (0,0),(0,1),(1,0),(1,1) carry 1, sigma_x, sigma_y, sigma_z;
        exponents are powers of i read off the Pauli products.
        """
        group = FiniteGroup.klein_four()
        table = (
            (0, 0, 0, 0),
            (0, 0, 1, 3),
            (0, 3, 0, 1),
            (0, 1, 3, 0),
        )
        return cls(group, 4, table)

    def to_dict(self) -> dict:
        return {
            "group": self.group.to_dict(),
            "root_order": self.root_order,
            "values": [list(row) for row in self.table],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Cocycle":
        try:
            group = FiniteGroup.from_dict(data["group"])
            m = int(data["root_order"])
            table = tuple(tuple(int(x) for x in row) for row in data["values"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CocycleError(f"malformed cocycle data: {exc}") from None
        return cls(group, m, table)


def regular_class_count(cocycle: Cocycle) -> int:
    """Number of conjugacy classes on which the cocycle is symmetric over the
    centralizer; equals the Wedderburn block count of the twisted algebra."""
    g = cocycle.group
    count = 0
    for cls_ in g.conjugacy_classes():
        if all(
            cocycle.value(s, z) == cocycle.value(z, s)
            for s in cls_
            for z in g.centralizer(s)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Graded algebras by structure constants
# ---------------------------------------------------------------------------

SparseVec = dict[int, Cyclotomic]


@dataclass(frozen=True)
class GradedAlgebra:
    """Finite dimensional *-algebra with basis graded by a finite group.

    ``mult[i][j]`` lists (basis index, coefficient) pairs for the product of
    basis elements i and j; ``star[i]`` likewise for the involution.
    Coefficients live in Q(zeta_root_order).  Construction verifies that the
    grading is multiplicative, the involution maps the g-component to the
    g^-1-component and is an involutive anti-homomorphism, and the product
    is associative.
    """

    group: FiniteGroup
    basis_labels: tuple[str, ...]
    grading: tuple[int, ...]
    root_order: int
    mult: tuple[tuple[tuple[tuple[int, Cyclotomic], ...], ...], ...]
    star: tuple[tuple[tuple[int, Cyclotomic], ...], ...]

    def __post_init__(self):
        n = len(self.basis_labels)
        if len(self.grading) != n or len(self.mult) != n or len(self.star) != n:
            raise GradedAlgebraError("basis, grading, mult, and star sizes differ")
        for g in self.grading:
            if not (0 <= g < self.group.order):
                raise GradedAlgebraError("grading index out of range")
        for i in range(n):
            if len(self.mult[i]) != n:
                raise GradedAlgebraError("mult table is not square")
            for j in range(n):
                target = self.group.mul(self.grading[i], self.grading[j])
                for z, c in self.mult[i][j]:
                    if c.is_zero():
                        raise GradedAlgebraError("zero coefficients must be dropped")
                    if self.grading[z] != target:
                        raise GradedAlgebraError(
                            f"product of basis {i}, {j} leaves its graded component"
                        )
            inv = self.group.inv(self.grading[i])
            for z, c in self.star[i]:
                if self.grading[z] != inv:
                    raise GradedAlgebraError(
                        f"involution of basis {i} leaves the inverse component"
                    )
        self._check_star()
        self._check_associative()

    # -- sparse-vector helpers ------------------------------------------------

    def vec_of_basis(self, i: int) -> SparseVec:
        return {i: Cyclotomic.one(self.root_order)}

    def multiply_vectors(self, x: SparseVec, y: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, a in x.items():
            for j, b in y.items():
                ab = a * b
                for z, c in self.mult[i][j]:
                    cur = acc.get(z)
                    val = ab * c if cur is None else cur + ab * c
                    acc[z] = val
        return {z: c for z, c in acc.items() if not c.is_zero()}

    def star_vector(self, x: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, a in x.items():
            ac = a.conjugate()
            for z, c in self.star[i]:
                cur = acc.get(z)
                val = ac * c if cur is None else cur + ac * c
                acc[z] = val
        return {z: c for z, c in acc.items() if not c.is_zero()}

    def _check_star(self):
        n = len(self.basis_labels)
        for i in range(n):
            double = self.star_vector(self.star_vector(self.vec_of_basis(i)))
            if double != self.vec_of_basis(i):
                raise GradedAlgebraError(f"involution is not involutive on basis {i}")
        for i in range(n):
            for j in range(n):
                lhs = self.star_vector(self.multiply_vectors(self.vec_of_basis(i), self.vec_of_basis(j)))
                rhs = self.multiply_vectors(
                    self.star_vector(self.vec_of_basis(j)),
                    self.star_vector(self.vec_of_basis(i)),
                )
                if lhs != rhs:
                    raise GradedAlgebraError(
                        f"involution is not anti-multiplicative on basis ({i}, {j})"
                    )

    def _check_associative(self):
        n = len(self.basis_labels)
        basis = [self.vec_of_basis(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = self.multiply_vectors(basis[i], basis[j])
                for kk in range(n):
                    lhs = self.multiply_vectors(ij, basis[kk])
                    rhs = self.multiply_vectors(basis[i], self.multiply_vectors(basis[j], basis[kk]))
                    if lhs != rhs:
                        raise GradedAlgebraError(
                            f"product is not associative at ({i}, {j}, {kk})"
                        )

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def component(self, g: int) -> list[int]:
        return [i for i, gi in enumerate(self.grading) if gi == g]

    @classmethod
    def ungraded(
        cls,
        basis_labels: Sequence[str],
        root_order: int,
        mult,
        star,
    ) -> "GradedAlgebra":
        """Wrap plain structure constants with the trivial grading."""
        trivial = FiniteGroup.cyclic(1)
        n = len(basis_labels)
        return cls(
            group=trivial,
            basis_labels=tuple(basis_labels),
            grading=(0,) * n,
            root_order=root_order,
            mult=_coerce_mult(mult, root_order),
            star=_coerce_star(star, root_order),
        )

    def to_dict(self) -> dict:
        from .cyclotomic import cyclotomic_to_json

        return {
            "group": self.group.to_dict(),
            "basis": list(self.basis_labels),
            "grading": list(self.grading),
            "root_order": self.root_order,
            "mult": [
                [[[z, cyclotomic_to_json(c)] for z, c in cell] for cell in row]
                for row in self.mult
            ],
            "star": [[[z, cyclotomic_to_json(c)] for z, c in cell] for cell in self.star],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "GradedAlgebra":
        from .cyclotomic import cyclotomic_from_json

        try:
            group = FiniteGroup.from_dict(data["group"])
            order = int(data["root_order"])
            basis = tuple(str(x) for x in data["basis"])
            grading = tuple(int(x) for x in data["grading"])
            mult = tuple(
                tuple(
                    tuple((int(z), cyclotomic_from_json(order, c)) for z, c in cell)
                    for cell in row
                )
                for row in data["mult"]
            )
            star = tuple(
                tuple((int(z), cyclotomic_from_json(order, c)) for z, c in cell)
                for cell in data["star"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GradedAlgebraError(f"malformed graded algebra data: {exc}") from None
        return cls(
            group=group,
            basis_labels=basis,
            grading=grading,
            root_order=order,
            mult=mult,
            star=star,
        )


def _coerce_coeff(value, order: int) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value.lift(order) if value.order != order else value
    return Cyclotomic.rational(order, value)


def _coerce_mult(mult, order: int):
    return tuple(
        tuple(
            tuple((int(z), _coerce_coeff(c, order)) for z, c in cell)
            for cell in row
        )
        for row in mult
    )


def _coerce_star(star, order: int):
    return tuple(
        tuple((int(z), _coerce_coeff(c, order)) for z, c in cell) for cell in star
    )


def is_ergodic(b: GradedAlgebra) -> bool:
    """Ergodic means the identity-graded component is spanned by the unit."""
    return len(b.component(b.group.identity)) == 1


def twisted_group_algebra(h: FiniteGroup, omega: Cocycle) -> GradedAlgebra:
    """C*_omega(H): basis d_s with d_s d_t = omega(s,t) d_st and
    d_s* = omega(s, s^-1)^-1 d_(s^-1), graded by H itself."""
    if omega.group.table != h.table or omega.group.identity != h.identity:
        raise CocycleError("cocycle is defined on a different group")
    m = omega.root_order
    n = h.order
    mult = tuple(
        tuple(((h.mul(s, t), omega.root(s, t)),) for t in range(n)) for s in range(n)
    )
    star = tuple(
        ((h.inv(s), Cyclotomic.root(m, -omega.value(s, h.inv(s)))),) for s in range(n)
    )
    return GradedAlgebra(
        group=h,
        basis_labels=tuple(f"d[{h.label(s)}]" for s in range(n)),
        grading=tuple(range(n)),
        root_order=m,
        mult=mult,
        star=star,
    )


# ---------------------------------------------------------------------------
# Extraction of (subgroup, cocycle) from an ergodic graded algebra
# ---------------------------------------------------------------------------

def _real_positive(x: Cyclotomic) -> bool:
    return x == x.conjugate() and complex(x).real > 0


def extract_torsion_data(b: GradedAlgebra) -> tuple[FiniteGroup, Cocycle]:
    """Recover the support subgroup and a representative cocycle.

    Requires the identity component to be one-dimensional (ergodicity) and
    every nonzero component to be one-dimensional and spanned by an element
    with b* b a positive multiple of the unit.  The returned cocycle is the
    one of the normalized unitaries; its class invariants, not the table
    itself, are canonical.
    """
    if not is_ergodic(b):
        raise NonErgodicError(
            f"identity component has dimension {len(b.component(b.group.identity))}"
        )
    g = b.group
    e = g.identity
    components: dict[int, list[int]] = {}
    for idx, gi in enumerate(b.grading):
        components.setdefault(gi, []).append(idx)
    for s, idxs in components.items():
        if len(idxs) > 1:
            raise TorsionExtractionError(
                f"component of {g.label(s)} has dimension {len(idxs)}"
            )

    # normalize the identity component to the unit
    e_idx = components[e][0]
    be = b.vec_of_basis(e_idx)
    square = b.multiply_vectors(be, be)
    c = square.get(e_idx)
    if c is None or c.is_zero():
        raise TorsionExtractionError("identity component squares to zero")
    unit = {e_idx: c.inverse()}
    check = b.multiply_vectors(unit, unit)
    if check != unit:
        raise TorsionExtractionError("identity component does not contain a unit")

    support = sorted(components)
    pos = {s: i for i, s in enumerate(support)}
    for s in support:
        if g.inv(s) not in pos:
            raise TorsionExtractionError(f"support not closed under inverse at {g.label(s)}")
        for t in support:
            if g.mul(s, t) not in pos:
                raise TorsionExtractionError(
                    f"support not closed under product at ({g.label(s)}, {g.label(t)})"
                )

    reps: dict[int, SparseVec] = {
        s: (unit if s == e else b.vec_of_basis(components[s][0])) for s in support
    }

    # b* b must be a positive multiple of the unit: the invertibility check
    lam: dict[int, Cyclotomic] = {}
    for s in support:
        prod = b.multiply_vectors(b.star_vector(reps[s]), reps[s])
        if set(prod) != {e_idx}:
            raise TorsionExtractionError(f"{g.label(s)}* {g.label(s)} is not scalar")
        value = prod[e_idx] * c  # coefficient relative to the unit
        if not _real_positive(value):
            raise TorsionExtractionError(
                f"component of {g.label(s)} is not spanned by an invertible: "
                f"b* b = {value} times the unit"
            )
        lam[s] = value

    m_big = 2 * (b.root_order if b.root_order % 2 == 0 else 2 * b.root_order)
    table = [[0] * len(support) for _ in support]
    for s in support:
        for t in support:
            st = g.mul(s, t)
            prod = b.multiply_vectors(reps[s], reps[t])
            target = reps[st]
            ((tgt_idx, tgt_coeff),) = tuple(target.items())
            gamma = prod.get(tgt_idx)
            if gamma is None:
                raise TorsionExtractionError(
                    f"product of components {g.label(s)}, {g.label(t)} vanishes"
                )
            gamma = gamma / tgt_coeff
            # omega = gamma * sqrt(lam_st / (lam_s lam_t)) must be a root of
            # unity; compare squares exactly, then fix the sign numerically
            lhs = (gamma * gamma * lam[st]).lift(m_big)
            rhs_base = (lam[s] * lam[t]).lift(m_big)
            matches = []
            for a in range(m_big):
                if lhs == Cyclotomic.root(m_big, 2 * a) * rhs_base:
                    ratio = complex(gamma) * complex(Cyclotomic.root(m_big, -a))
                    if ratio.real > 0:
                        matches.append(a)
            if len(matches) != 1:
                raise TorsionExtractionError(
                    f"normalized cocycle value at ({g.label(s)}, {g.label(t)}) "
                    "is not a root of unity"
                )
            table[pos[s]][pos[t]] = matches[0]

    sub_table = tuple(
        tuple(pos[g.mul(s, t)] for t in support) for s in support
    )
    subgroup = FiniteGroup(
        sub_table, pos[e], tuple(g.label(s) for s in support)
    )
    cocycle = Cocycle(subgroup, m_big, tuple(tuple(row) for row in table))
    return subgroup, cocycle


# ---------------------------------------------------------------------------
# Wedderburn block decomposition
# ---------------------------------------------------------------------------

def _left_mult_matrix(b: GradedAlgebra, i: int) -> list[list[Cyclotomic]]:
    n = b.dim
    zero = Cyclotomic.zero(b.root_order)
    out = [[zero] * n for _ in range(n)]
    for j in range(n):
        for z, c in b.mult[i][j]:
            out[z][j] = out[z][j] + c
    return out


def _field_rank_and_kernel(rows: list[list[Cyclotomic]], order: int):
    """Gaussian elimination over Q(zeta_order); returns (rank, kernel basis)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    m = [row[:] for row in rows]
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not m[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    kernel = []
    one = Cyclotomic.one(order)
    zero = Cyclotomic.zero(order)
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for rr, pc in enumerate(pivots):
            vec[pc] = -m[rr][fc]
        kernel.append(vec)
    return len(pivots), kernel


def center_dimension(b: GradedAlgebra) -> int:
    """Exact dimension of the center, by solving xz = zx for all basis z."""
    n = b.dim
    rows: list[list[Cyclotomic]] = []
    lefts = [_left_mult_matrix(b, i) for i in range(n)]
    # right multiplication by basis i, as a matrix acting on coefficient vectors
    zero = Cyclotomic.zero(b.root_order)
    for i in range(n):
        right = [[zero] * n for _ in range(n)]
        for j in range(n):
            for z, c in b.mult[j][i]:
                right[z][j] = right[z][j] + c
        li = lefts[i]
        for z in range(n):
            rows.append([li[z][j] - right[z][j] for j in range(n)])
    _, kernel = _field_rank_and_kernel(rows, b.root_order)
    return len(kernel)


def _trace_form(b: GradedAlgebra):
    n = b.dim
    traces = []
    for z in range(n):
        tr = Cyclotomic.zero(b.root_order)
        for j in range(n):
            for w, c in b.mult[z][j]:
                if w == j:
                    tr = tr + c
        traces.append(tr)
    form = []
    for i in range(n):
        row = []
        for j in range(n):
            val = Cyclotomic.zero(b.root_order)
            for z, c in b.mult[i][j]:
                val = val + c * traces[z]
            row.append(val)
        form.append(row)
    return form, traces


def block_decomposition(
    b: GradedAlgebra,
    tol: float = 1e-9,
    seed: int = 0,
    attempts: int = 12,
) -> tuple[int, ...]:
    """Wedderburn block sizes (m_1, ..., m_r), sorted ascending.

    Semisimplicity is certified exactly through the trace form; the block
    multiset comes from clustering the spectrum of a random self-adjoint
    element in the left regular representation and is accepted only when it
    reproduces both the dimension and the exact center dimension.
    """
    n = b.dim
    form, traces = _trace_form(b)
    rank_, kernel = _field_rank_and_kernel(form, b.root_order)
    if rank_ < n:
        witness = {
            b.basis_labels[i]: str(c)
            for i, c in enumerate(kernel[0])
            if not c.is_zero()
        }
        raise NonSemisimpleError(
            "trace form is degenerate: algebra is not semisimple", witness
        )
    r_exact = center_dimension(b)

    lefts = [np.array([[complex(x) for x in row] for row in _left_mult_matrix(b, i)]) for i in range(n)]
    star_mat = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for z, c in b.star[i]:
            star_mat[z, i] += complex(c)
    # orthonormalize the GNS space of the normalized trace
    gram = np.zeros((n, n), dtype=complex)
    for i in range(n):
        star_i = b.star_vector(b.vec_of_basis(i))
        for j in range(n):
            val = Cyclotomic.zero(b.root_order)
            for w, cw in star_i.items():
                for z, cz in b.mult[w][j]:
                    val = val + cw * cz * traces[z]
            gram[i, j] = complex(val) / n
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        raise BlockDecompositionError(
            "trace inner product is not positive definite: not a *-algebra presentation"
        ) from None
    chol_h = chol.conj().T
    chol_h_inv = np.linalg.inv(chol_h)

    rng = random.Random(seed)
    for _ in range(attempts):
        coeffs = np.array(
            [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(n)]
        )
        h_coeffs = coeffs + star_mat @ coeffs.conj()
        op = sum(h_coeffs[i] * lefts[i] for i in range(n))
        herm = chol_h @ op @ chol_h_inv
        eigs = np.linalg.eigvalsh(herm)
        clusters = []
        start = 0
        for i in range(1, n):
            if eigs[i] - eigs[i - 1] > tol:
                clusters.append(i - start)
                start = i
        clusters.append(n - start)
        histogram: dict[int, int] = {}
        for size in clusters:
            histogram[size] = histogram.get(size, 0) + 1
        if any(cnt % size for size, cnt in histogram.items()):
            continue
        blocks = []
        for size, cnt in histogram.items():
            blocks.extend([size] * (cnt // size))
        blocks.sort()
        if sum(x * x for x in blocks) == n and len(blocks) == r_exact:
            return tuple(blocks)
    raise BlockDecompositionError(
        f"spectral clustering did not stabilize against center dimension {r_exact}"
    )
