"""Canonicalization, the star condition, and minimal generation."""

import pytest
from hypothesis import given, strategies as st

from affmon import (
    CanonicalMonoid2,
    CanonicalMonoid3,
    DuplicateGeneratorError,
    NotPhiMinimalError,
    Vec2,
    ZeroGeneratorError,
    canonical_coords,
    canonicalize,
    det_divisors,
    enumerate_factorizations,
    validate_minimal_generation,
)
from affmon.intlin import IDENTITY, Mat2xP
from conftest import star_monoids


def vecs(*pairs):
    return [Vec2(x, y) for x, y in pairs]


class TestCanonicalize:
    def test_worked_example_monoid(self):
        m = canonicalize(vecs((0, 1), (11, 10), (10, 3)))
        assert isinstance(m, CanonicalMonoid3)
        assert (m.a, m.b, m.c, m.d) == (11, 10, 10, 3)
        assert not m.star
        assert m.transform == IDENTITY

    def test_two_generator_transform(self):
        m = canonicalize(vecs((2, 1), (3, 1)))
        assert isinstance(m, CanonicalMonoid2)
        assert (m.a, m.b) == (1, 1)
        assert m.transform.as_rows() == ((1, -2), (0, 1))

    def test_star_fixture(self):
        m = canonicalize(vecs((0, 1), (1, 2), (3, 5)))
        assert isinstance(m, CanonicalMonoid3)
        assert (m.a, m.b, m.c, m.d) == (1, 2, 3, 5)
        assert m.star

    def test_star_detection(self):
        assert canonicalize(vecs((0, 1), (1, 2), (3, 5))).star  # 6 - 5 = 1
        assert not canonicalize(vecs((0, 1), (11, 10), (10, 3))).star  # 67
        assert canonicalize(vecs((0, 1), (1, 1), (2, 1))).star  # 2 - 1 = 1

    def test_input_order_is_irrelevant(self):
        reference = canonicalize(vecs((0, 1), (1, 2), (3, 5)))
        shuffled = canonicalize(vecs((3, 5), (0, 1), (1, 2)))
        assert shuffled == reference

    def test_rejects_non_phi_minimal(self):
        with pytest.raises(NotPhiMinimalError):
            canonicalize(vecs((0, 1), (2, 4)))

    def test_rejects_duplicates_and_zero(self):
        with pytest.raises(DuplicateGeneratorError):
            canonicalize(vecs((1, 2), (1, 2)))
        with pytest.raises(ZeroGeneratorError):
            canonicalize(vecs((0, 0), (1, 2)))

    def test_rejects_wrong_generator_count(self):
        with pytest.raises(ValueError):
            canonicalize(vecs((1, 2)))
        with pytest.raises(ValueError):
            canonicalize(vecs((0, 1), (1, 2), (3, 5), (2, 1)))

    @given(star_monoids())
    def test_idempotent_on_canonical_generators(self, m):
        again = canonicalize(list(m.gens))
        assert again == m
        assert again.transform == IDENTITY

    @given(star_monoids())
    def test_star_implies_unit_second_divisor(self, m):
        d1, d2 = det_divisors(Mat2xP.from_vecs(m.gens))
        assert d1 == 1
        assert d2 == 1

    def test_second_divisor_is_gcd_of_first_coordinates(self):
        m = canonicalize(vecs((0, 1), (4, 1), (6, 1)))
        # not star; d2 = gcd(4, 6) = 2
        assert det_divisors(Mat2xP.from_vecs(m.gens))[1] == 2


class TestCanonicalCoords:
    def test_identity_transform_is_a_no_op(self):
        m = canonicalize(vecs((0, 1), (1, 2), (3, 5)))
        assert canonical_coords(m, Vec2(6, 13)) == Vec2(6, 13)

    def test_maps_through_the_transform(self):
        m = canonicalize(vecs((2, 1), (3, 1)))
        # (5,2) = (2,1) + (3,1) maps to (1,2) = (0,1) + (1,1)
        assert canonical_coords(m, Vec2(5, 2)) == Vec2(1, 2)

    def test_none_outside_the_cone(self):
        m = canonicalize(vecs((2, 1), (3, 1)))
        # slope 1/5 is below the monoid's cone; the image goes negative
        assert canonical_coords(m, Vec2(1, 5)) is None

    @given(
        st.integers(0, 8), st.integers(0, 8),
    )
    def test_membership_is_invariant(self, i, j):
        raw = vecs((2, 1), (3, 1))
        m = canonicalize(raw)
        s = i * raw[0] + j * raw[1]
        mapped = canonical_coords(m, s)
        assert mapped is not None
        raw_member = enumerate_factorizations(tuple(raw), s).member
        canon_member = enumerate_factorizations(m.gens, mapped).member
        assert raw_member and canon_member


class TestMinimalGeneration:
    def test_star_fixture_is_minimal(self):
        m = canonicalize(vecs((0, 1), (1, 2), (3, 5)))
        assert validate_minimal_generation(m)

    def test_redundant_middle_generator(self):
        # (1,2) = (1,1) + (0,1)
        m = canonicalize(vecs((0, 1), (1, 2), (1, 1)))
        assert not validate_minimal_generation(m)

    def test_two_generators_always_minimal(self):
        m = canonicalize(vecs((0, 1), (5, 3)))
        assert validate_minimal_generation(m)

    @given(star_monoids())
    def test_generated_star_monoids_are_minimal(self, m):
        assert validate_minimal_generation(m)

    def test_divisibility_criterion_matches(self):
        # the middle generator is redundant exactly when c divides a
        for raw, minimal in [
            (vecs((0, 1), (2, 5), (1, 1)), False),  # c=1 divides a=2
            (vecs((0, 1), (2, 5), (3, 4)), True),
            (vecs((0, 1), (4, 3), (2, 1)), False),  # c=2 divides a=4
            (vecs((0, 1), (5, 3), (2, 1)), True),
        ]:
            m = canonicalize(raw)
            assert validate_minimal_generation(m) is minimal


class TestConstructorInvariants:
    def test_dim2_validates(self):
        with pytest.raises(ValueError):
            CanonicalMonoid2(a=0, b=1, transform=IDENTITY)
        with pytest.raises(NotPhiMinimalError):
            CanonicalMonoid2(a=2, b=4, transform=IDENTITY)

    def test_dim3_requires_slope_order(self):
        with pytest.raises(ValueError):
            CanonicalMonoid3(a=3, b=5, c=1, d=2, transform=IDENTITY)
        with pytest.raises(ValueError):  # equal slopes are not allowed either
            CanonicalMonoid3(a=1, b=2, c=1, d=2, transform=IDENTITY)
        with pytest.raises(NotPhiMinimalError):
            CanonicalMonoid3(a=1, b=2, c=2, d=4, transform=IDENTITY)
