import math
import random

from qautk.dims import DimVector, random_dim_vectors
from qautk.exact_linalg import FgAbelianGroup
from qautk.ktheory import boundary_matrix, closed_form, k_theory, verify_theorem


def test_boundary_single_block():
    assert boundary_matrix(DimVector.of(2)).to_lists() == [[2, -2], [-2, 2]]


def test_boundary_unit_blocks():
    b = boundary_matrix(DimVector.of(1, 1, 1, 1))
    assert (b.rows, b.cols) == (17, 8)
    assert list(b.row(0)) == [1, 0, 0, 0, -1, 0, 0, 0]
    assert list(b.row(16)) == [-1, -1, -1, -1, 1, 1, 1, 1]


def test_boundary_two_blocks():
    b = boundary_matrix(DimVector.of(2, 4))
    assert (b.rows, b.cols) == (5, 4)
    assert list(b.row(4)) == [-2, -4, 2, 4]
    assert b.to_lists()[:4] == [
        [2, 0, -2, 0],
        [4, 0, 0, -2],
        [0, 2, -4, 0],
        [0, 4, 0, -4],
    ]


def test_k_theory_named_values():
    res = k_theory(DimVector.of(1, 1, 1, 1, 1))
    assert res.k0 == FgAbelianGroup(17, ())
    assert res.k1 == FgAbelianGroup(1, ())

    res = k_theory(DimVector.of(2))
    assert res.k0 == FgAbelianGroup(1, (2,))
    assert res.k1 == FgAbelianGroup(1, ())

    res = k_theory(DimVector.of(2, 4))
    assert res.k0 == FgAbelianGroup(2, (2, 2, 2))
    assert res.kernel_generator == (1, 2, 1, 2)


def test_closed_form_values():
    assert closed_form(DimVector.of(1, 2)) == (FgAbelianGroup(2, ()), FgAbelianGroup(1, ()))
    assert closed_form(DimVector.of(3, 3, 3)) == (
        FgAbelianGroup(5, (3,) * 5),
        FgAbelianGroup(1, ()),
    )
    assert closed_form(DimVector.of(1)) == (FgAbelianGroup(1, ()), FgAbelianGroup(1, ()))


def test_scope_warning():
    assert k_theory(DimVector.of(1)).warnings
    assert not k_theory(DimVector.of(2)).warnings


def test_verify_named():
    assert verify_theorem(DimVector.of(1, 1, 1, 1))
    assert verify_theorem(DimVector.of(2))


def test_verify_random_sweep():
    for dims in random_dim_vectors(100, 6, 8, seed=17):
        assert verify_theorem(dims), dims


def test_kernel_generator_structure():
    rng = random.Random(23)
    for _ in range(80):
        n = rng.randint(1, 6)
        dims = DimVector(tuple(rng.randint(1, 8) for _ in range(n)))
        res = k_theory(dims)
        gen = res.kernel_generator
        assert len(gen) == 2 * n
        a = gen[:n]
        assert gen[n:] == a
        for i in range(n):
            for j in range(n):
                assert dims[i] * a[j] == dims[j] * a[i]
        d = dims.gcd
        assert tuple(abs(x) for x in a) == tuple(k // d for k in dims)


def test_cokernel_free_summand():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randint(1, 5)
        dims = DimVector(tuple(rng.randint(1, 7) for _ in range(n)))
        assert k_theory(dims).k0.free_rank >= 1


def test_scaling_behaviour():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 4)
        base = tuple(rng.randint(1, 4) for _ in range(n))
        c = rng.randint(2, 3)
        small = k_theory(DimVector(base))
        big = k_theory(DimVector(tuple(c * k for k in base)))
        assert small.k0.free_rank == big.k0.free_rank
        d = math.gcd(*base) if n > 1 else base[0]
        assert big.k0.torsion == (c * d,) * (2 * n - 1)
        if d > 1:
            assert small.k0.torsion == (d,) * (2 * n - 1)
