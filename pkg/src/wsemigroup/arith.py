"""Small exact integer helpers.

All divisions round toward minus infinity (mathematical floor), never toward
zero: ``floor_div(-7, 8) == -1``.
"""

from __future__ import annotations

import math


def floor_div(a: int, b: int) -> int:
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def floor_sum(a: int, b: int) -> int:
    """Brute-force ``sum(floor(k*a/b) for k in 1..b-1)``."""
    return sum(k * a // b for k in range(1, b))


def floor_sum_closed(a: int, b: int) -> int:
    """Closed form of :func:`floor_sum` for positive ``a`` and ``b``."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    num = (a - 1) * (b - 1) + math.gcd(a, b) - 1
    assert num % 2 == 0
    return num // 2


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``1..m-1`` (``m >= 2``)."""
    return pow(a, -1, m)
