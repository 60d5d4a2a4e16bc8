"""Arithmetic in the prime field F_p.

Everything here works on plain Python ints.  Moduli are capped below 2**31 so
that every product of two residues fits in a signed 64-bit integer, which lets
the graph builder vectorise the same arithmetic with numpy int64 arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError, SearchCapError

MAX_MODULUS = 2**31

# Below this size a linear scan beats building the baby-step table.
_LINEAR_DLOG_LIMIT = 1000


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return the prime factorisation of ``n >= 1`` as ``((q, k), ...)``."""
    if n < 1:
        raise InvalidParameterError(f"cannot factorise {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            factors.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime ``3 <= p < 2**31`` together with the factorisation of p-1."""

    p: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not 3 <= self.p < MAX_MODULUS:
            raise InvalidParameterError(f"modulus {self.p} outside [3, 2**31)")
        if not is_prime(self.p):
            raise InvalidParameterError(f"{self.p} is not prime")
        if math.prod(q**k for q, k in self.factors) != self.p - 1:
            raise InvalidParameterError("factorisation does not multiply to p-1")

    @classmethod
    def of(cls, p: int | PrimeModulus) -> PrimeModulus:
        if isinstance(p, PrimeModulus):
            return p
        p = int(p)
        if not 3 <= p < MAX_MODULUS or not is_prime(p):
            raise InvalidParameterError(f"{p} is not an odd prime below 2**31")
        return cls(p, factorize(p - 1))

    def __int__(self):
        return self.p


def _as_int(p) -> int:
    return p.p if isinstance(p, PrimeModulus) else int(p)


def mod_pow(base: int, exp: int, p) -> int:
    """``base**exp mod p`` by square-and-multiply; ``exp == 0`` gives 1."""
    if exp < 0:
        raise InvalidParameterError("exponent must be non-negative")
    return pow(base, exp, _as_int(p))


def find_congruent_prime(m: int, t: int, ceiling: int = MAX_MODULUS) -> PrimeModulus:
    """Smallest prime ``p >= m`` with ``(t - 1) | (p - 1)``.

    Only candidates in the progression ``1 mod (t-1)`` are tested.  Raises
    :class:`SearchCapError` if none is found below ``ceiling``.
    """
    if m < 3:
        raise InvalidParameterError("m must be at least 3")
    if t < 2 or t % 2:
        raise InvalidParameterError("t must be an even integer >= 2")
    step = t - 1
    # first candidate >= m congruent to 1 mod step
    p = m + (1 - m) % step
    if step % 2 == 1 and p % 2 == 0:
        # odd step: alternate candidates are even, skip them
        p += step
    inc = 2 * step if step % 2 == 1 else step
    while p < ceiling:
        if is_prime(p):
            return PrimeModulus(p, factorize(p - 1))
        p += inc
    raise SearchCapError(f"no prime = 1 mod {step} in [{m}, {ceiling})")


def is_primitive_root(g: int, p) -> bool:
    modulus = PrimeModulus.of(p)
    if not 1 <= g < modulus.p:
        return False
    return all(pow(g, (modulus.p - 1) // q, modulus.p) != 1 for q, _ in modulus.factors)


def smallest_primitive_root(p) -> int:
    """Smallest generator of F_p^*.

    Any primitive root works for the construction; the smallest one makes the
    output reproducible.
    """
    modulus = PrimeModulus.of(p)
    for g in range(2, modulus.p):
        if is_primitive_root(g, modulus):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def discrete_log(f: int, g: int, p) -> int:
    """Exponent ``k`` in ``{1, ..., p-1}`` with ``g**k == f (mod p)``.

    ``f == 1`` returns ``p - 1``, never 0.  Uses baby-step giant-step for
    ``p >= 1000`` and a linear scan below that.
    """
    p = _as_int(p)
    f %= p
    if f == 0:
        raise InvalidParameterError("discrete log of 0 is undefined")
    order = p - 1
    if p < _LINEAR_DLOG_LIMIT:
        x = 1
        for k in range(1, p):
            x = x * g % p
            if x == f:
                return k
        raise InvalidParameterError(f"{g} does not generate F_{p}^*")

    m = math.isqrt(order - 1) + 1
    baby = {}
    x = 1
    for j in range(m):
        baby.setdefault(x, j)
        x = x * g % p
    giant = pow(g, -m, p)
    gamma = f
    for i in range(m + 1):
        j = baby.get(gamma)
        if j is not None:
            k = (i * m + j) % order
            return k or order
        gamma = gamma * giant % p
    raise InvalidParameterError(f"{g} does not generate F_{p}^*")
