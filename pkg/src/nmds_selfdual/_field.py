"""Exact arithmetic in F_{p^m}.

Elements are plain integers in ``[0, q)``: the element with polynomial
representative ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is encoded as
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``. A :class:`GaloisField` is immutable
once built and may be shared freely.
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterable, Sequence

from sympy import factorint, isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_eval, gf_gcd, gf_mul, gf_pow_mod, gf_rem, gf_strip, gf_sub

from nmds_selfdual._exceptions import (
    DivisionByZero,
    FieldError,
    InvalidFieldSpec,
    InvalidSubfield,
    NonResidue,
    UndefinedCharacterArgument,
    UnsupportedField,
)
from nmds_selfdual.types._field import FieldSpec

logger = logging.getLogger("nmds_selfdual")

DEFAULT_TABLE_THRESHOLD = 2**20
ADD_TABLE_LIMIT = 729


# ---------------------------------------------------------------------------
# Polynomials over F_p (sympy galoistools, high degree first)
# ---------------------------------------------------------------------------


def _to_sympy(coeffs_low_first: Sequence[int]) -> list:
    return gf_strip([ZZ(c) for c in reversed(coeffs_low_first)])


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Test a monic polynomial over F_p for irreducibility.

    Degrees up to 3 are checked by root exhaustion; larger degrees by
    ``gcd(x^(p^i) - x, f) == 1`` for ``1 <= i <= m/2``.

    Args:
        p: The prime characteristic.
        modulus: Coefficients low degree first; the last one must be 1.
    """
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    f = _to_sympy(modulus)
    if m <= 3:
        return all(int(gf_eval(f, ZZ(a), p, ZZ)) != 0 for a in range(p))
    x = [ZZ(1), ZZ(0)]
    for i in range(1, m // 2 + 1):
        h = gf_pow_mod(x, p**i, f, p, ZZ)
        g = gf_gcd(gf_sub(h, x, p, ZZ), f, p, ZZ)
        if [int(c) for c in g] != [1]:
            return False
    return True


def find_irreducible(p: int, m: int) -> FieldSpec:
    """Return the smallest monic irreducible polynomial of degree ``m``.

    Candidates are ordered lexicographically on ``(c_0, c_1, ..., c_{m-1})``,
    so the result is deterministic; for ``m == 1`` it is ``x`` itself.

    Raises:
        InvalidFieldSpec: If ``p`` is not prime or ``m < 1``.
    """
    if not isprime(p):
        raise InvalidFieldSpec(f"characteristic {p} is not prime")
    if m < 1:
        raise InvalidFieldSpec(f"extension degree must be >= 1, got {m}")
    for low in itertools.product(range(p), repeat=m):
        modulus = (*low, 1)
        if is_irreducible(p, modulus):
            return FieldSpec(p=p, m=m, modulus=modulus)
    raise InvalidFieldSpec(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


def prime_power(q: int) -> tuple[int, int] | None:
    """Split ``q`` as ``p**m`` with ``p`` prime, or return ``None``."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, m),) = factors.items()
    return int(p), int(m)


# ---------------------------------------------------------------------------
# The field
# ---------------------------------------------------------------------------


class GaloisField:
    """The finite field F_{p^m} of odd characteristic.

    Builds, in order: the defining polynomial (validated), the smallest
    primitive element ``g``, and, when ``q <= table_threshold``, log/exp
    tables so that multiplication is two lookups.

    Args:
        spec: The field description.
        table_threshold: Largest ``q`` for which tables are built.

    Raises:
        InvalidFieldSpec: If ``p`` is not prime or the modulus is not a
            monic irreducible of degree ``m``.
        UnsupportedField: For characteristic 2.
    """

    def __init__(self, spec: FieldSpec, *, table_threshold: int = DEFAULT_TABLE_THRESHOLD) -> None:
        p, m, modulus = spec.p, spec.m, tuple(spec.modulus)
        if not isprime(p):
            raise InvalidFieldSpec(f"characteristic {p} is not prime")
        if p == 2:
            raise UnsupportedField("characteristic 2 is not supported")
        if len(modulus) != m + 1:
            raise InvalidFieldSpec(f"modulus needs {m + 1} coefficients, got {len(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise InvalidFieldSpec(f"modulus coefficients must lie in [0, {p})")
        if modulus[-1] != 1:
            raise InvalidFieldSpec("modulus must be monic")
        if not is_irreducible(p, modulus):
            raise InvalidFieldSpec(f"modulus {modulus} is reducible over F_{p}")

        self.spec = spec
        self.p = p
        self.m = m
        self.q = p**m
        self._modulus_poly = _to_sympy(modulus)
        self._order_primes = [int(ell) for ell in primefactors(self.q - 1)]
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        self._add_table: list[list[int]] | None = None
        self._neg_table: list[int] | None = None

        self.g = self._find_primitive()
        if self.q <= table_threshold:
            self._build_tables()
        logger.debug("Built F_%d (p=%d, m=%d, g=%d, tables=%s)", self.q, p, m, self.g, self.has_tables)

    @classmethod
    def from_order(
        cls,
        q: int,
        modulus: Sequence[int] | None = None,
        *,
        table_threshold: int = DEFAULT_TABLE_THRESHOLD,
    ) -> GaloisField:
        """Build (or fetch from cache) the field with ``q`` elements.

        Args:
            q: An odd prime power.
            modulus: Optional defining polynomial, low degree first;
                defaults to :func:`find_irreducible`.
            table_threshold: Largest ``q`` for which tables are built.

        Raises:
            InvalidFieldSpec: If ``q`` is not a prime power.
        """
        split = prime_power(q)
        if split is None:
            raise InvalidFieldSpec(f"{q} is not a prime power")
        p, m = split
        return _cached_field(p, m, None if modulus is None else tuple(modulus), table_threshold)

    # ------------------------------------------------------------------
    # Encoding
    # ------------------------------------------------------------------

    def to_coefficients(self, x: int) -> tuple[int, ...]:
        """Decode ``x`` into its ``m`` polynomial coefficients, low first."""
        coeffs = []
        for _ in range(self.m):
            x, c = divmod(x, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def from_coefficients(self, coeffs: Iterable[int]) -> int:
        """Encode polynomial coefficients (low first) as an integer."""
        value = 0
        place = 1
        for c in coeffs:
            value += (c % self.p) * place
            place *= self.p
        return value

    def check(self, x: int) -> int:
        """Return ``x`` if it is a valid element encoding.

        Raises:
            FieldError: If ``x`` is outside ``[0, q)``.
        """
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise FieldError(f"{x!r} is not an element of F_{self.q}")
        return x

    def elements(self) -> range:
        """All elements in encoding order."""
        return range(self.q)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _combine(self, x: int, y: int, sign: int) -> int:
        p = self.p
        result = 0
        place = 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            result += ((dx + sign * dy) % p) * place
            place *= p
        return result

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        if self._add_table is not None:
            return self._add_table[x][y]
        return self._combine(x, y, 1)

    def neg(self, x: int) -> int:
        if self.m == 1:
            return -x % self.p
        if self._neg_table is not None:
            return self._neg_table[x]
        return self._combine(0, x, -1)

    def sub(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x - y) % self.p
        if self._add_table is not None:
            return self._add_table[x][self._neg_table[y]]
        return self._combine(x, y, -1)

    def _mul_poly(self, x: int, y: int) -> int:
        fx = _to_sympy(self.to_coefficients(x))
        fy = _to_sympy(self.to_coefficients(y))
        product = gf_rem(gf_mul(fx, fy, self.p, ZZ), self._modulus_poly, self.p, ZZ)
        return self.from_coefficients(int(c) for c in reversed(product))

    def mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return self._mul_poly(x, y)

    def _pow_generic(self, x: int, e: int) -> int:
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def pow(self, x: int, e: int) -> int:
        """Raise ``x`` to the integer power ``e`` (square-and-multiply).

        ``pow(x, 0) == 1``; negative exponents go through :meth:`inv`.
        """
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self.m == 1:
            return pow(x, e, self.p)
        if self._exp is not None:
            return self._exp[self._log[x] * e % (self.q - 1)]
        return self._pow_generic(x, e)

    def inv(self, x: int) -> int:
        """Multiplicative inverse.

        Raises:
            DivisionByZero: If ``x == 0``.
        """
        if x == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[-self._log[x] % (self.q - 1)]
        return self._pow_generic(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def sum(self, values: Iterable[int]) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values: Iterable[int]) -> int:
        total = 1
        for v in values:
            total = self.mul(total, v)
        return total

    # ------------------------------------------------------------------
    # Multiplicative structure
    # ------------------------------------------------------------------

    def _find_primitive(self) -> int:
        n = self.q - 1
        for candidate in range(1, self.q):
            if all(self._pow_raw(candidate, n // ell) != 1 for ell in self._order_primes):
                return candidate
        raise FieldError("no primitive element found")  # pragma: no cover

    def _pow_raw(self, x: int, e: int) -> int:
        if self.m == 1:
            return pow(x, e, self.p)
        return self._pow_generic(x, e)

    def find_primitive(self) -> int:
        """The smallest-encoding element of multiplicative order ``q - 1``."""
        return self.g

    def _build_tables(self) -> None:
        q = self.q
        exp = [0] * (q - 1)
        log = [-1] * q
        current = 1
        for i in range(q - 1):
            exp[i] = current
            log[current] = i
            current = self._mul_poly(current, self.g) if self.m > 1 else current * self.g % self.p
        self._exp = exp
        self._log = log
        if self.m > 1 and q <= ADD_TABLE_LIMIT:
            self._neg_table = [self._combine(0, x, -1) for x in range(q)]
            self._add_table = [[self._combine(x, y, 1) for y in range(q)] for x in range(q)]

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    def log(self, x: int) -> int:
        """Discrete logarithm to base ``g``.

        Raises:
            DivisionByZero: If ``x == 0``.
        """
        if x == 0:
            raise DivisionByZero("log of 0 is undefined")
        if self._log is not None:
            return self._log[x]
        current = 1
        for i in range(self.q - 1):
            if current == x:
                return i
            current = self.mul(current, self.g)
        raise FieldError(f"{x} is not a power of the primitive element")  # pragma: no cover

    def multiplicative_order(self, x: int) -> int:
        """The order of a nonzero ``x`` in F_q*."""
        if x == 0:
            raise DivisionByZero("0 has no multiplicative order")
        order = self.q - 1
        for ell in self._order_primes:
            while order % ell == 0 and self.pow(x, order // ell) == 1:
                order //= ell
        return order

    # ------------------------------------------------------------------
    # Quadratic character and square roots
    # ------------------------------------------------------------------

    def eta(self, x: int) -> int:
        """Quadratic character: ``+1`` on nonzero squares, ``-1`` otherwise.

        Raises:
            UndefinedCharacterArgument: If ``x == 0``.
            UnsupportedField: In characteristic 2.
        """
        if self.p == 2:  # pragma: no cover
            raise UnsupportedField("quadratic character needs odd characteristic")
        if x == 0:
            raise UndefinedCharacterArgument("the quadratic character is undefined at 0")
        if self._log is not None:
            return 1 if self._log[x] % 2 == 0 else -1
        value = self.pow(x, (self.q - 1) // 2)
        if value == 1:
            return 1
        if value == self.neg(1):
            return -1
        raise FieldError(f"Euler criterion gave {value} for {x}")  # pragma: no cover

    def is_square(self, x: int) -> bool:
        return x == 0 or self.eta(x) == 1

    def sqrt(self, x: int) -> int:
        """Square root with the smaller integer encoding.

        Raises:
            NonResidue: If ``x`` is not a square.
        """
        if x == 0:
            return 0
        if self.eta(x) == -1:
            raise NonResidue(f"{x} is not a square in F_{self.q}")
        if self._log is not None:
            root = self._exp[self._log[x] // 2]
        else:
            root = self._tonelli_shanks(x)
        return min(root, self.neg(root))

    def _tonelli_shanks(self, x: int) -> int:
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.pow(self.g, t)
        root = self.pow(x, (t + 1) // 2)
        b = self.pow(x, t)
        while b != 1:
            i, b2 = 0, b
            while b2 != 1:
                b2 = self.mul(b2, b2)
                i += 1
            c = self.pow(z, 1 << (s - i - 1))
            root = self.mul(root, c)
            z = self.mul(c, c)
            b = self.mul(b, z)
            s = i
        return root

    # ------------------------------------------------------------------
    # Subfields
    # ------------------------------------------------------------------

    def _subfield_degree(self, r: int) -> int:
        split = prime_power(r)
        if split is None or split[0] != self.p or self.m % split[1] != 0:
            raise InvalidSubfield(f"F_{r} is not a subfield of F_{self.q}")
        return split[1]

    def subfield_elements(self, r: int) -> list[int]:
        """The elements of the subfield F_r, in encoding order.

        Raises:
            InvalidSubfield: If F_r does not embed in F_q.
        """
        self._subfield_degree(r)
        generator = self.pow(self.g, (self.q - 1) // (r - 1))
        members = {0}
        current = 1
        for _ in range(r - 1):
            members.add(current)
            current = self.mul(current, generator)
        return sorted(members)

    def trace_to_subfield(self, x: int, r: int) -> int:
        """The relative trace ``x + x^r`` from F_{r^2} onto F_r.

        Raises:
            InvalidSubfield: If ``r * r != q`` or ``r`` is not a power of ``p``.
        """
        if r * r != self.q:
            raise InvalidSubfield(f"trace needs q = r^2, got q={self.q}, r={r}")
        self._subfield_degree(r)
        value = self.add(x, self.pow(x, r))
        if self.pow(value, r) != value:  # pragma: no cover
            raise FieldError(f"trace of {x} left F_{r}")
        return value

    # ------------------------------------------------------------------
    # Polynomials over F_q (low degree first)
    # ------------------------------------------------------------------

    def poly_from_roots(self, roots: Iterable[int]) -> list[int]:
        """Coefficients of the monic polynomial ``prod (x - a)``, low first."""
        coeffs = [1]
        for a in roots:
            shifted = [0, *coeffs]
            for i, c in enumerate(coeffs):
                shifted[i] = self.sub(shifted[i], self.mul(a, c))
            coeffs = shifted
        return coeffs

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, m={self.m}, modulus={tuple(self.spec.modulus)})"


@functools.lru_cache(maxsize=64)
def _cached_field(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    table_threshold: int,
) -> GaloisField:
    spec = find_irreducible(p, m) if modulus is None else FieldSpec(p=p, m=m, modulus=modulus)
    return GaloisField(spec, table_threshold=table_threshold)
