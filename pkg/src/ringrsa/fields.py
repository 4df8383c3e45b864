"""Field presets and prime-element search.

Two preset families expose rings whose integers are plain coefficient
vectors over a power basis: quadratic fields Q(sqrt(d)) for square-free
d = 2, 3 mod 4 (so the ring of integers is Z[sqrt(d)]), and cyclotomic
fields Q(zeta_m).  A generic descriptor wraps an arbitrary caller-supplied
modulus.  Key material comes from either rational primes embedded as
scalars or from ring elements whose norm is a rational prime; a prime
norm forces the quotient by the element to be a prime field, so such an
element generates a prime ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import SearchExhaustedError
from .lattice import hnf, lattices_equal
from .primes import carmichael_lambda, euler_phi, is_probable_prime, multiplicative_order
from .ring import RingContext, RingElement, ideal_matrix, make_ring, norm

__all__ = [
    "FieldDescriptor",
    "PrimeElement",
    "quadratic_field",
    "cyclotomic_field",
    "generic_field",
    "parse_field_spec",
    "is_inert_prime",
    "find_inert_prime",
    "find_prime_norm_element",
    "totient_of_product",
    "coset_box_naive",
]

_SQUARE_FREE_TRIAL_BOUND = 10**6
_SEARCH_ATTEMPT_BOUND = 10**5


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    ring: RingContext
    label: str
    param: int | None = None

    def __post_init__(self):
        if self.kind not in ("quadratic", "cyclotomic", "generic"):
            raise ValueError("unknown field kind")

    def spec_string(self) -> str:
        if self.kind == "quadratic":
            return f"quadratic:d={self.param}"
        if self.kind == "cyclotomic":
            return f"cyclotomic:m={self.param}"
        return "generic:phi=" + ",".join(str(c) for c in self.ring.phi_coeffs)


@dataclass(frozen=True)
class PrimeElement:
    element: RingElement
    norm_abs: int

    def __post_init__(self):
        actual = abs(norm(self.element.context, self.element))
        if actual != self.norm_abs or self.norm_abs <= 1:
            raise ValueError("norm_abs inconsistent with the element")


def _is_square_free(d: int) -> bool:
    x = abs(d)
    f = 2
    while f <= _SQUARE_FREE_TRIAL_BOUND and f * f <= x:
        if x % f == 0:
            x //= f
            if x % f == 0:
                return False
        f += 1 if f == 2 else 2
    if x > 1 and math.isqrt(x) ** 2 == x:
        return False
    return True


def quadratic_field(d: int) -> FieldDescriptor:
    """Q(sqrt(d)) with integers Z[sqrt(d)], requiring d = 2, 3 mod 4."""
    if d in (0, 1):
        raise ValueError("d must not be 0 or 1")
    if not _is_square_free(d):
        raise ValueError("not square-free")
    if d % 4 not in (2, 3):
        raise ValueError("NC-property violated (d = 1 mod 4)")
    ring = make_ring((d, 0))
    return FieldDescriptor("quadratic", ring, f"Q(sqrt({d}))", d)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c
            for j, dj in enumerate(den):
                num[k - dn + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division not exact")
    return out


def _cyclotomic_poly(m: int, cache: dict[int, list[int]]) -> list[int]:
    if m in cache:
        return cache[m]
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, _cyclotomic_poly(d, cache))
    cache[m] = poly
    return poly


def cyclotomic_field(m: int) -> FieldDescriptor:
    """Q(zeta_m): ring modulus is the m-th cyclotomic polynomial."""
    if m < 3:
        raise ValueError("m must be at least 3")
    poly = _cyclotomic_poly(m, {})
    assert len(poly) - 1 == euler_phi(m)
    ring = make_ring(tuple(-c for c in poly[:-1]))
    return FieldDescriptor("cyclotomic", ring, f"Q(zeta_{m})", m)


def generic_field(phi_coeffs: Sequence[int]) -> FieldDescriptor:
    ring = make_ring(phi_coeffs)
    return FieldDescriptor("generic", ring, f"generic degree {ring.degree}")


def parse_field_spec(spec: str) -> FieldDescriptor:
    """Parse quadratic:d=<int> | cyclotomic:m=<int> | generic:phi=<csv>."""
    kind, sep, rest = spec.partition(":")
    name, eq, value = rest.partition("=")
    if not sep or not eq:
        raise ValueError(f"bad field spec: {spec!r}")
    try:
        if kind == "quadratic" and name == "d":
            return quadratic_field(int(value))
        if kind == "cyclotomic" and name == "m":
            return cyclotomic_field(int(value))
        if kind == "generic" and name == "phi":
            return generic_field([int(c) for c in value.split(",")])
    except ValueError as exc:
        if "invalid literal" in str(exc):
            raise ValueError(f"bad field spec: {spec!r}") from None
        raise
    raise ValueError(f"bad field spec: {spec!r}")


def is_inert_prime(field: FieldDescriptor, p: int) -> bool:
    """Test whether the rational prime p stays prime-like in the field.

    Quadratic: p is odd, coprime to 4d, and d is a quadratic non-residue
    mod p.  Cyclotomic: p does not divide m and the multiplicative order
    of p mod m is the largest attainable (the Carmichael function of m);
    when the unit group mod m is cyclic this is exactly the inert
    condition, and in every case p*q generates a square-free ideal whose
    totient divides (p^n - 1)(q^n - 1), which is what key generation needs.
    """
    if not is_probable_prime(p):
        raise ValueError("p must be prime")
    if field.kind == "quadratic":
        d = field.param
        if p == 2 or (4 * d) % p == 0:
            return False
        return pow(d % p, (p - 1) // 2, p) == p - 1
    if field.kind == "cyclotomic":
        m = field.param
        if m % p == 0:
            return False
        return multiplicative_order(p, m) == carmichael_lambda(m)
    raise ValueError("no inert-prime criterion for generic fields")


def _scalar_element(field: FieldDescriptor, p: int) -> PrimeElement:
    n = field.ring.degree
    elem = field.ring.element((p,) + (0,) * (n - 1))
    return PrimeElement(elem, p**n)


def find_inert_prime(
    field: FieldDescriptor,
    bits: int,
    rng,
    exclude: int | None = None,
    max_attempts: int = _SEARCH_ATTEMPT_BOUND,
) -> PrimeElement:
    """Random search for an inert rational prime of the given bit length."""
    if bits < 2:
        raise ValueError("bits must be at least 2")
    lo, hi = 1 << (bits - 1), 1 << bits
    for _ in range(max_attempts):
        cand = rng.randrange(lo, hi)
        if cand == exclude or not is_probable_prime(cand):
            continue
        if is_inert_prime(field, cand):
            return _scalar_element(field, cand)
    raise SearchExhaustedError("search exhausted: no inert prime found")


def find_prime_norm_element(
    field: FieldDescriptor,
    coeff_bound: int,
    rng,
    max_attempts: int = _SEARCH_ATTEMPT_BOUND,
) -> PrimeElement:
    """Random search for an element whose norm is a rational prime.

    Resamples scalar vectors whenever the degree allows a non-scalar
    generator, so the resulting ideals are not forced to be rational.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    ctx = field.ring
    n = ctx.degree
    for _ in range(max_attempts):
        coeffs = tuple(rng.randrange(-coeff_bound, coeff_bound + 1) for _ in range(n))
        if n > 1 and not any(coeffs[1:]):
            continue
        elem = ctx.element(coeffs)
        value = abs(norm(ctx, elem))
        if value > 1 and is_probable_prime(value):
            return PrimeElement(elem, value)
    raise SearchExhaustedError("search exhausted: no prime-norm element found")


def totient_of_product(ctx: RingContext, alpha: PrimeElement, beta: PrimeElement) -> int:
    """(|N(alpha)| - 1) * (|N(beta)| - 1) for non-associate prime elements."""
    la = hnf(ideal_matrix(ctx, alpha.element).entries)
    lb = hnf(ideal_matrix(ctx, beta.element).entries)
    if lattices_equal(la, lb):
        raise ValueError("associate prime elements generate the same ideal")
    return (alpha.norm_abs - 1) * (beta.norm_abs - 1)


def coset_box_naive(field: FieldDescriptor, p: int, q: int):
    """Box with every radix p*q: the coset box of distinct inert primes."""
    from .lattice import CosetBox

    if p == q:
        raise ValueError("p and q must be distinct")
    if not (is_probable_prime(p) and is_probable_prime(q)):
        raise ValueError("p and q must be prime")
    return CosetBox((p * q,) * field.ring.degree)
