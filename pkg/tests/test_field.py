"""Tests for finite field arithmetic, characters, square roots and traces."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nmds_selfdual._exceptions import (
    DivisionByZero,
    FieldError,
    InvalidFieldSpec,
    InvalidSubfield,
    NonResidue,
    UndefinedCharacterArgument,
    UnsupportedField,
)
from nmds_selfdual._field import GaloisField, find_irreducible, is_irreducible, prime_power
from nmds_selfdual.types import FieldSpec


def _f13() -> GaloisField:
    return GaloisField.from_order(13)


def _f9() -> GaloisField:
    return GaloisField.from_order(9)


def _f25() -> GaloisField:
    return GaloisField.from_order(25)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


class TestConstruction:
    """Tests for field construction and defining polynomials."""

    def test_prime_field_generator(self) -> None:
        """F_13 has smallest primitive element 2."""
        field = _f13()
        assert (field.p, field.m, field.q) == (13, 1, 13)
        assert field.g == 2

    def test_default_modulus_of_f9(self) -> None:
        """The smallest monic irreducible quadratic over F_3 is x^2 + 1."""
        field = _f9()
        assert tuple(field.spec.modulus) == (1, 0, 1)
        assert field.g == 4

    def test_find_irreducible_matches_predicate(self) -> None:
        """find_irreducible returns a polynomial is_irreducible accepts."""
        for p, m in ((3, 2), (3, 3), (5, 2), (7, 2)):
            spec = find_irreducible(p, m)
            assert spec.m == m
            assert is_irreducible(p, spec.modulus)

    def test_reducible_modulus_rejected(self) -> None:
        """x^2 over F_3 is not a valid modulus."""
        with pytest.raises(InvalidFieldSpec):
            GaloisField(FieldSpec(p=3, m=2, modulus=(0, 0, 1)))

    def test_non_monic_modulus_rejected(self) -> None:
        """2x^2 + 1 is not monic."""
        with pytest.raises(InvalidFieldSpec, match="monic"):
            GaloisField(FieldSpec(p=3, m=2, modulus=(1, 0, 2)))

    def test_non_prime_power_rejected(self) -> None:
        """12 is not a prime power."""
        with pytest.raises(InvalidFieldSpec):
            GaloisField.from_order(12)

    def test_characteristic_two_unsupported(self) -> None:
        """Even characteristic is out of scope."""
        with pytest.raises(UnsupportedField):
            GaloisField.from_order(8)

    def test_from_order_is_cached(self) -> None:
        """Repeated lookups return the same field object."""
        assert GaloisField.from_order(25) is GaloisField.from_order(25)

    def test_explicit_modulus(self) -> None:
        """A caller-supplied modulus is honoured."""
        field = GaloisField.from_order(9, (2, 2, 1))
        assert tuple(field.spec.modulus) == (2, 2, 1)
        assert field.multiplicative_order(field.g) == 8

    def test_prime_power_split(self) -> None:
        """prime_power splits q into (p, m) or returns None."""
        assert prime_power(81) == (3, 4)
        assert prime_power(13) == (13, 1)
        assert prime_power(12) is None
        assert prime_power(1) is None

    def test_check_rejects_out_of_range(self) -> None:
        """Encodings outside [0, q) are not elements."""
        with pytest.raises(FieldError):
            _f13().check(13)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------


class TestArithmetic:
    """Tests for the field operations."""

    def test_powers_of_generator_in_f9(self) -> None:
        """g = 1 + i squares to 2i and has order 8."""
        field = _f9()
        assert [field.pow(field.g, e) for e in range(8)] == [1, 4, 6, 7, 2, 8, 3, 5]

    def test_negative_exponent(self) -> None:
        """pow with a negative exponent inverts first."""
        assert _f13().pow(2, -1) == 7

    def test_inverse_of_zero(self) -> None:
        """inv(0) raises DivisionByZero, which is also a ZeroDivisionError."""
        with pytest.raises(DivisionByZero):
            _f13().inv(0)
        with pytest.raises(ZeroDivisionError):
            _f9().div(1, 0)

    def test_sum_and_prod(self) -> None:
        """sum and prod fold over iterables."""
        field = _f13()
        assert field.sum([4, 9, 1]) == 1
        assert field.prod([2, 7]) == 1
        assert field.sum([]) == 0
        assert field.prod([]) == 1

    def test_coefficient_encoding(self) -> None:
        """Element a + b*x is encoded as a + b*p."""
        field = _f9()
        assert field.to_coefficients(7) == (1, 2)
        assert field.from_coefficients((1, 2)) == 7

    @pytest.mark.parametrize("q", [9, 13, 25, 27, 49, 81])
    def test_frobenius_fixes_every_element(self, q: int) -> None:
        """x^q = x for every element."""
        field = GaloisField.from_order(q)
        assert all(field.pow(x, q) == x for x in field.elements())

    @pytest.mark.parametrize("q", [9, 25, 27, 81, 121])
    def test_encoding_round_trip(self, q: int) -> None:
        """Every encoding in [0, q) survives to_coefficients and back."""
        field = GaloisField.from_order(q)
        for x in range(q):
            coefficients = field.to_coefficients(x)
            assert len(coefficients) == field.m
            assert all(0 <= c < field.p for c in coefficients)
            assert field.from_coefficients(coefficients) == x

    def test_without_tables(self) -> None:
        """Arithmetic agrees with and without log/exp tables."""
        tabled = _f25()
        plain = GaloisField.from_order(25, table_threshold=1)
        assert not plain.has_tables
        for x in range(1, 25):
            for y in range(25):
                assert plain.mul(x, y) == tabled.mul(x, y)
                assert plain.add(x, y) == tabled.add(x, y)
            assert plain.inv(x) == tabled.inv(x)
            assert plain.eta(x) == tabled.eta(x)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
    def test_ring_axioms_in_f25(self, x: int, y: int, z: int) -> None:
        """Associativity and distributivity hold in F_25."""
        field = _f25()
        assert field.add(field.add(x, y), z) == field.add(x, field.add(y, z))
        assert field.mul(field.mul(x, y), z) == field.mul(x, field.mul(y, z))
        assert field.mul(x, field.add(y, z)) == field.add(field.mul(x, y), field.mul(x, z))
        assert field.sub(field.add(x, y), y) == x

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 26))
    def test_inverse_in_f27(self, x: int) -> None:
        """Every nonzero element of F_27 times its inverse is 1."""
        field = GaloisField.from_order(27)
        assert field.mul(x, field.inv(x)) == 1


# ---------------------------------------------------------------------------
# Quadratic character and square roots
# ---------------------------------------------------------------------------


class TestCharacter:
    """Tests for eta and sqrt."""

    def test_eta_of_minus_one(self) -> None:
        """-1 is a square exactly when q = 1 (mod 4)."""
        assert _f13().eta(12) == 1
        assert GaloisField.from_order(11).eta(10) == -1

    def test_eta_undefined_at_zero(self) -> None:
        """The character is not defined at 0."""
        with pytest.raises(UndefinedCharacterArgument):
            _f13().eta(0)

    def test_sqrt_returns_smaller_root(self) -> None:
        """10 = 6^2 = 7^2 in F_13, and the smaller encoding wins."""
        assert _f13().sqrt(10) == 6

    def test_sqrt_of_non_residue(self) -> None:
        """2 is not a square modulo 13."""
        with pytest.raises(NonResidue):
            _f13().sqrt(2)

    def test_tonelli_shanks_path(self) -> None:
        """Square roots without tables square back correctly."""
        field = GaloisField.from_order(97, table_threshold=1)
        for x in range(1, 97):
            if field.eta(x) == 1:
                root = field.sqrt(x)
                assert field.mul(root, root) == x

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 80), st.integers(1, 80))
    def test_eta_is_multiplicative(self, x: int, y: int) -> None:
        """eta(xy) = eta(x) eta(y) in F_81."""
        field = GaloisField.from_order(81)
        assert field.eta(field.mul(x, y)) == field.eta(x) * field.eta(y)


# ---------------------------------------------------------------------------
# Subfields and polynomials
# ---------------------------------------------------------------------------


class TestSubfields:
    """Tests for subfield enumeration, traces and polynomial products."""

    def test_prime_subfield_of_f9(self) -> None:
        """F_3 sits in F_9 as the encodings 0, 1, 2."""
        assert _f9().subfield_elements(3) == [0, 1, 2]

    def test_subfield_of_f81(self) -> None:
        """F_9 inside F_81 has nine elements closed under x -> x^9."""
        field = GaloisField.from_order(81)
        members = field.subfield_elements(9)
        assert len(members) == 9
        assert all(field.pow(x, 9) == x for x in members)

    def test_invalid_subfield(self) -> None:
        """F_9 does not embed in F_27."""
        with pytest.raises(InvalidSubfield):
            GaloisField.from_order(27).subfield_elements(9)

    def test_trace_in_f9(self) -> None:
        """Tr(1 + i) = (1 + i) + (1 - i) = 2."""
        assert _f9().trace_to_subfield(4, 3) == 2

    @pytest.mark.parametrize("q, r", [(9, 3), (25, 5), (49, 7), (81, 9)])
    def test_trace_is_linear_over_subfield(self, q: int, r: int) -> None:
        """Tr(a x + b y) = a Tr(x) + b Tr(y) for a, b in F_r, and Tr is onto F_r."""
        field = GaloisField.from_order(q)
        subfield = field.subfield_elements(r)
        trace = [field.trace_to_subfield(x, r) for x in range(q)]
        assert set(trace) == set(subfield)
        for x in range(q):
            for y in range(q):
                assert trace[field.add(x, y)] == field.add(trace[x], trace[y])
            for a in subfield:
                assert trace[field.mul(a, x)] == field.mul(a, trace[x])

    def test_trace_needs_square_order(self) -> None:
        """The relative trace is only defined onto F_r with q = r^2."""
        with pytest.raises(InvalidSubfield):
            GaloisField.from_order(81).trace_to_subfield(5, 3)

    def test_trace_fibers_have_size_r(self) -> None:
        """Every fiber of the trace F_25 -> F_5 has five points."""
        field = _f25()
        counts: dict[int, int] = {}
        for x in field.elements():
            value = field.trace_to_subfield(x, 5)
            counts[value] = counts.get(value, 0) + 1
        assert counts == {h: 5 for h in range(5)}

    def test_poly_from_roots(self) -> None:
        """(x - 1)(x + 1) = x^2 - 1, low degree first."""
        assert _f13().poly_from_roots([1, 12]) == [12, 0, 1]
