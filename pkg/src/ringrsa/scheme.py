"""Key generation, block encryption, and the byte codec.

A key pair is built from two non-associate prime elements alpha, beta:
the public lattice is the HNF of the ideal matrix of alpha * beta, the
public exponent e is invertible modulo
phi = (|N(alpha)| - 1) * (|N(beta)| - 1), and d is its inverse.  Messages
are points of the public coset box; encryption raises them to the e-th
convolution power with per-step reduction back into the box, decryption
applies d the same way.  The byte codec frames a payload with an 8-byte
big-endian length header and packs fixed-size chunks into mixed-radix
box coordinates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import CapacityError, CiphertextFormatError, SearchExhaustedError
from .fields import (
    FieldDescriptor,
    PrimeElement,
    find_inert_prime,
    find_prime_norm_element,
    totient_of_product,
)
from .lattice import CosetBox, HnfBasis, hnf, reduce_mod_lattice
from .ring import RingElement, conv_mul, conv_pow, ideal_matrix, norm

__all__ = [
    "InertPrimeMode",
    "PrimeNormElementMode",
    "PublicKey",
    "PrivateKey",
    "CiphertextBlock",
    "keygen",
    "keypair_from_primes",
    "encrypt_block",
    "decrypt_block",
    "encode_bytes",
    "decode_blocks",
    "validate_keypair",
]

_MIN_CODEC_CAPACITY = 1 << 16
_ASSOCIATE_RETRY_BOUND = 64
_DEFAULT_E = 65537


@dataclass(frozen=True)
class InertPrimeMode:
    bits: int


@dataclass(frozen=True)
class PrimeNormElementMode:
    coeff_bound: int


KeygenMode = Union[InertPrimeMode, PrimeNormElementMode]


@dataclass(frozen=True)
class PublicKey:
    field: FieldDescriptor
    lattice: HnfBasis
    e: int

    def __post_init__(self):
        if self.lattice.dimension != self.field.ring.degree:
            raise ValueError("lattice dimension does not match the field degree")
        if not 1 <= self.e < math.prod(self.lattice.diag):
            raise ValueError("public exponent out of range")


@dataclass(frozen=True)
class PrivateKey:
    field: FieldDescriptor
    alpha: RingElement
    beta: RingElement
    d: int
    phi: int
    lattice: HnfBasis

    def __post_init__(self):
        ctx = self.field.ring
        expected = (abs(norm(ctx, self.alpha)) - 1) * (abs(norm(ctx, self.beta)) - 1)
        if self.phi != expected:
            raise ValueError("totient inconsistent with the prime elements")
        if not 1 <= self.d < self.phi:
            raise ValueError("private exponent out of range")
        gamma = conv_mul(ctx, self.alpha, self.beta)
        if hnf(ideal_matrix(ctx, gamma).entries) != self.lattice:
            raise ValueError("lattice inconsistent with the prime elements")


@dataclass(frozen=True)
class CiphertextBlock:
    vector: RingElement


def _select_e(phi: int, e_choice: int | None) -> int:
    if phi <= 2:
        raise ValueError("no valid e (totient too small)")
    if e_choice is not None:
        if not 1 <= e_choice < phi:
            raise ValueError("requested public exponent out of range")
        if math.gcd(e_choice, phi) != 1:
            raise ValueError("requested public exponent not coprime to the totient")
        return e_choice
    if _DEFAULT_E < phi and math.gcd(_DEFAULT_E, phi) == 1:
        return _DEFAULT_E
    for e in range(3, phi):
        if math.gcd(e, phi) == 1:
            return e
    raise ValueError("no valid e (totient too small)")


def keypair_from_primes(
    field: FieldDescriptor,
    alpha: PrimeElement,
    beta: PrimeElement,
    e_choice: int | None = None,
) -> tuple[PublicKey, PrivateKey]:
    """Assemble a key pair from two already-found prime elements."""
    ctx = field.ring
    phi = totient_of_product(ctx, alpha, beta)
    gamma = conv_mul(ctx, alpha.element, beta.element)
    basis = hnf(ideal_matrix(ctx, gamma).entries)
    e = _select_e(phi, e_choice)
    d = pow(e, -1, phi)
    pub = PublicKey(field, basis, e)
    priv = PrivateKey(field, alpha.element, beta.element, d, phi, basis)
    return pub, priv


def keygen(
    field: FieldDescriptor,
    mode: KeygenMode,
    e_choice: int | None = None,
    rng=None,
) -> tuple[PublicKey, PrivateKey]:
    """Generate a key pair in the given field.

    InertPrimeMode draws two distinct rational inert primes of the given
    bit length; PrimeNormElementMode draws two prime-norm elements with
    bounded coefficients, retrying associates up to an internal bound.
    """
    if rng is None:
        rng = random.SystemRandom()
    for _ in range(_ASSOCIATE_RETRY_BOUND):
        if isinstance(mode, InertPrimeMode):
            alpha = find_inert_prime(field, mode.bits, rng)
            beta = find_inert_prime(
                field, mode.bits, rng, exclude=alpha.element.coeffs[0]
            )
        elif isinstance(mode, PrimeNormElementMode):
            alpha = find_prime_norm_element(field, mode.coeff_bound, rng)
            beta = find_prime_norm_element(field, mode.coeff_bound, rng)
        else:
            raise ValueError("unknown keygen mode")
        try:
            return keypair_from_primes(field, alpha, beta, e_choice)
        except ValueError as exc:
            if "associate" in str(exc):
                continue
            raise
    raise SearchExhaustedError("search exhausted: could not find non-associate primes")


def _vector_of(arg, ctx) -> tuple[int, ...]:
    if isinstance(arg, CiphertextBlock):
        arg = arg.vector
    if isinstance(arg, RingElement):
        if arg.context != ctx:
            raise ValueError("context mismatch")
        return arg.coeffs
    vec = tuple(int(c) for c in arg)
    if len(vec) != ctx.degree:
        raise ValueError("vector length does not match the field degree")
    return vec


def _in_box(basis: HnfBasis, vec: Sequence[int]) -> bool:
    return all(0 <= c < b for c, b in zip(vec, basis.diag))


def _box_reducer(basis: HnfBasis):
    if all(
        basis.entries[i][j] == 0
        for i in range(basis.dimension)
        for j in range(i + 1, basis.dimension)
    ):
        diag = basis.diag
        return lambda v: tuple(c % b for c, b in zip(v, diag))
    return lambda v: reduce_mod_lattice(basis, v)


def encrypt_block(pub: PublicKey, block) -> CiphertextBlock:
    """e-th convolution power of a box point, reduced into the box per step."""
    ctx = pub.field.ring
    vec = _vector_of(block, ctx)
    if not _in_box(pub.lattice, vec):
        raise ValueError("message outside coset box")
    out = conv_pow(ctx, ctx.element(vec), pub.e, step_reducer=_box_reducer(pub.lattice))
    return CiphertextBlock(out)


def decrypt_block(priv: PrivateKey, block) -> RingElement:
    """d-th convolution power of a ciphertext point, reduced per step."""
    ctx = priv.field.ring
    vec = _vector_of(block, ctx)
    if not _in_box(priv.lattice, vec):
        raise ValueError("ciphertext outside coset box")
    return conv_pow(ctx, ctx.element(vec), priv.d, step_reducer=_box_reducer(priv.lattice))


def _chunk_bytes(box: CosetBox) -> int:
    capacity = box.capacity
    if capacity < _MIN_CODEC_CAPACITY:
        raise CapacityError("modulus too small for byte encoding")
    return (capacity.bit_length() - 1) // 8


def encode_bytes(box: CosetBox, payload: bytes) -> list[tuple[int, ...]]:
    """Frame payload bytes as box points.

    The stream is an 8-byte big-endian payload length followed by the
    payload, zero-padded to whole chunks of k = (bitlen(capacity) - 1) // 8
    bytes; each chunk, read big-endian, is written in the mixed-radix
    system of the box radices.
    """
    k = _chunk_bytes(box)
    stream = len(payload).to_bytes(8, "big") + bytes(payload)
    if len(stream) % k:
        stream += b"\x00" * (k - len(stream) % k)
    blocks = []
    for pos in range(0, len(stream), k):
        value = int.from_bytes(stream[pos : pos + k], "big")
        digits = []
        for radix in box.radices:
            value, digit = divmod(value, radix)
            digits.append(digit)
        blocks.append(tuple(digits))
    return blocks


def decode_blocks(box: CosetBox, blocks: Iterable[Sequence[int]]) -> bytes:
    """Invert encode_bytes, validating box membership and the header."""
    k = _chunk_bytes(box)
    out = bytearray()
    count = 0
    for block in blocks:
        count += 1
        if len(block) != len(box.radices) or any(
            not 0 <= digit < radix for digit, radix in zip(block, box.radices)
        ):
            raise CiphertextFormatError("block outside box")
        value = 0
        scale = 1
        for digit, radix in zip(block, box.radices):
            value += digit * scale
            scale *= radix
        if value >> (8 * k):
            raise CiphertextFormatError("block value out of codec range")
        out += value.to_bytes(k, "big")
    if len(out) < 8:
        raise CiphertextFormatError("corrupt length header")
    length = int.from_bytes(out[:8], "big")
    if 8 + length > len(out) or count != -(-(8 + length) // k):
        raise CiphertextFormatError("corrupt length header")
    return bytes(out[8 : 8 + length])


def validate_keypair(pub: PublicKey, priv: PrivateKey) -> bool:
    """Consistency of a key pair: exponents, lattice, and determinant."""
    if pub.field != priv.field:
        return False
    ctx = pub.field.ring
    if pub.e * priv.d % priv.phi != 1:
        return False
    gamma = conv_mul(ctx, priv.alpha, priv.beta)
    if hnf(ideal_matrix(ctx, gamma).entries) != pub.lattice:
        return False
    modulus = abs(norm(ctx, priv.alpha)) * abs(norm(ctx, priv.beta))
    return math.prod(pub.lattice.diag) == modulus
