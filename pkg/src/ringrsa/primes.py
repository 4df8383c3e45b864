"""Integer number theory: probabilistic primality and small-modulus helpers."""

from __future__ import annotations

import math
import random

__all__ = [
    "is_probable_prime",
    "euler_phi",
    "carmichael_lambda",
    "multiplicative_order",
]

# Strong-pseudoprime bases that decide primality for every n < 3.3e24,
# comfortably past 2**64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_RANDOM_ROUNDS = 64
_sysrand = random.SystemRandom()


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin: deterministic below 2**64, else 64 random rounds.

    Above 2**64 the error probability is below 4**-64 = 2**-128.
    """
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    if n < 1 << 64:
        bases = _DETERMINISTIC_BASES
    else:
        bases = [_sysrand.randrange(2, n - 1) for _ in range(_RANDOM_ROUNDS)]
    return all(_strong_probable_prime(n, a) for a in bases)


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    total = 1
    for p, k in _factorize(m).items():
        total *= p ** (k - 1) * (p - 1)
    return total


def carmichael_lambda(m: int) -> int:
    """Exponent of the unit group mod m (the largest attainable order)."""
    if m < 1:
        raise ValueError("m must be positive")
    parts = []
    for p, k in _factorize(m).items():
        if p == 2 and k >= 3:
            parts.append(1 << (k - 2))
        else:
            parts.append(p ** (k - 1) * (p - 1))
    return math.lcm(*parts) if parts else 1


def multiplicative_order(a: int, m: int) -> int:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError("order undefined: arguments not coprime")
    order = 1
    x = a
    while x != 1:
        x = x * a % m
        order += 1
    return order
