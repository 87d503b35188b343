"""Small exact-integer arithmetic helpers (trial division scale)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes increasing."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, k in self.pairs:
            out *= p**k
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by deterministic trial division."""
    if n < 1:
        raise InvalidParameterError(f"cannot factorize {n}; need n >= 1")
    pairs = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            k = 0
            while rest % d == 0:
                rest //= d
                k += 1
            pairs.append((d, k))
        d += 1 if d == 2 else 2
    if rest > 1:
        pairs.append((rest, 1))
    return Factorization(tuple(pairs))


def tau(n: int) -> int:
    """Number of positive divisors of n."""
    out = 1
    for _, k in factorize(n).pairs:
        out *= k + 1
    return out


def sigma(n: int) -> int:
    """Sum of positive divisors of n."""
    out = 1
    for p, k in factorize(n).pairs:
        out *= (p ** (k + 1) - 1) // (p - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    out = [1]
    for p, k in factorize(n).pairs:
        out = [d * p**e for d in out for e in range(k + 1)]
    return sorted(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).pairs == ((n, 1),)


def is_squarefree(n: int) -> bool:
    return all(k == 1 for _, k in factorize(n).pairs)


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k, or None if n is not a prime power."""
    f = factorize(n).pairs
    if len(f) == 1:
        return f[0]
    return None
