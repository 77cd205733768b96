import numpy as np
import pytest

from charring import gfp
from charring.blocks import block_decomposition, principal_block
from charring.errors import OracleCapExceeded
from charring.loewy import (
    ORACLE_CAP,
    LoewyReport,
    frobenius_matrix,
    loewy_report,
    loewy_series,
    nilradical,
    oracle_loewy_length,
    oracle_nilpotent_set,
)
from charring.modring import ModAlgebra, build_algebra

from conftest import ALL_FIXTURES, FIXTURE_PRIME_PAIRS, table

rng = np.random.default_rng(7)


def all_blocks(name, p):
    return block_decomposition(table(name), p)


def as_set(rows):
    return {tuple(int(x) for x in r) for r in rows}


class TestNilradical:
    def test_c2(self):
        A = build_algebra(table("C2"), 2)
        assert nilradical(A).tolist() == [[1, 1]]

    def test_s3_principal_p3(self, S3):
        B = principal_block(S3, 3)
        J = nilradical(B)
        assert J.shape[0] == 1
        e = B.idempotent
        std_e = B.parent.multiply([0, 0, 1], e)
        expected = (e + std_e) % 3
        assert gfp.rank(np.vstack([B.to_parent(J[0]), expected]), 3) == 1

    def test_semisimple_off_order(self, S3):
        A = build_algebra(S3, 5)
        assert nilradical(A).shape[0] == 0

    def test_rejects_noncommutative(self):
        # 2x2 upper triangular matrices over F_2, basis E11, E12, E22
        n = np.zeros((3, 3, 3), dtype=np.int64)
        n[0, 0, 0] = n[0, 1, 1] = n[1, 2, 1] = n[2, 2, 2] = 1
        with pytest.raises(ValueError):
            nilradical(ModAlgebra(2, n, np.array([1, 0, 1])))


class TestLoewySeries:
    def test_c3_p3(self):
        r = loewy_report(build_algebra(table("C3"), 3))
        assert r.radical_dims == (3, 2, 1, 0)
        assert r.loewy_length == 3

    def test_s3_principal_p3(self, S3):
        r = loewy_report(principal_block(S3, 3))
        assert r.radical_dims == (2, 1, 0) and r.loewy_length == 2

    @pytest.mark.parametrize("name", ["S3", "A4", "D10"])
    def test_semisimple(self, name):
        for b in all_blocks(name, 7):
            r = loewy_report(b)
            assert r.radical_dims == (b.dim, 0) and r.loewy_length == 1

    @pytest.mark.parametrize("name,p", FIXTURE_PRIME_PAIRS)
    def test_report_invariants(self, name, p):
        for b in all_blocks(name, p):
            r = loewy_report(b)
            dims = r.radical_dims
            assert dims[0] == b.dim and dims[-1] == 0
            assert all(a > c for a, c in zip(dims, dims[1:]))
            assert r.loewy_length == dims.index(0)
            assert (r.loewy_length == 1) == (dims[1] == 0)

    def test_explicit_radical_argument(self):
        A = build_algebra(table("C4"), 2)
        assert loewy_series(A, nilradical(A)) == LoewyReport("", (4, 3, 2, 1, 0))


class TestOracle:
    def test_c2(self):
        A = build_algebra(table("C2"), 2)
        assert as_set(oracle_nilpotent_set(A)) == {(0, 0), (1, 1)}

    def test_c1(self):
        A = build_algebra(table("C1"), 2)
        assert as_set(oracle_nilpotent_set(A)) == {(0,)}

    def test_s3_principal_p3(self, S3):
        B = principal_block(S3, 3)
        v = nilradical(B)[0]
        assert as_set(oracle_nilpotent_set(B)) == {(0, 0), tuple(v), tuple(2 * v % 3)}

    def test_cap(self):
        with pytest.raises(OracleCapExceeded):
            oracle_nilpotent_set(principal_block(table("n768"), 2))
        assert oracle_nilpotent_set(build_algebra(table("C2"), 2), cap=5).shape[0] == 2

    @pytest.mark.parametrize("name,p", FIXTURE_PRIME_PAIRS + [("S3", 5), ("C7", 2)])
    def test_oracle_equivalence(self, name, p):
        for b in all_blocks(name, p):
            if b.dim > ORACLE_CAP.get(p, 0):
                continue
            nil = oracle_nilpotent_set(b)
            J = nilradical(b)
            assert np.array_equal(gfp.span_basis(nil, p, b.dim), J)
            # the nilradical is a subspace, so the set itself is the span
            assert nil.shape[0] == p ** J.shape[0]
            assert oracle_loewy_length(b, nil) == loewy_report(b).loewy_length


@pytest.mark.parametrize("name,p", FIXTURE_PRIME_PAIRS)
def test_frobenius_linearity(name, p):
    A = build_algebra(table(name), p)
    F = frobenius_matrix(A)
    for b in A.basis():
        assert np.array_equal(A.power(b, p), b @ F % p)
    X = rng.integers(0, p, size=(100, A.dim))
    assert np.array_equal(A.power(X, p), X @ F % p)


@pytest.mark.parametrize("name,p", FIXTURE_PRIME_PAIRS)
def test_radical_is_ideal_with_semisimple_quotient(name, p):
    for B in [build_algebra(table(name), p)] + all_blocks(name, p):
        J = nilradical(B)
        for b in B.basis():
            for j in J:
                assert gfp.in_span(J, B.multiply(b, j), p)
        # Frobenius is injective on B/J: images of B together with J span B
        assert gfp.rank(np.vstack([J, frobenius_matrix(B)]), p) == B.dim


@pytest.mark.parametrize("name,p", FIXTURE_PRIME_PAIRS)
def test_algebra_length_is_max_over_blocks(name, p):
    t = table(name)
    whole = loewy_report(build_algebra(t, p)).loewy_length
    assert whole == max(loewy_report(b).loewy_length for b in all_blocks(name, p))


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_radical_dimension_equals_whole_minus_semisimple(name):
    # over F_p with p not dividing |G| every block is semisimple
    t = table(name)
    p = next(q for q in (2, 3, 5, 7, 11) if t.order % q)
    assert nilradical(build_algebra(t, p)).shape[0] == 0
