"""Prime fields F_p and their roots of unity."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime, nextprime


class UnsupportedFieldError(ValueError):
    """Raised when F_p does not contain the requested roots of unity."""


@dataclass(frozen=True)
class Field:
    """The prime field F_p, optionally tagged with a unity order d | p - 1."""

    p: int
    d: int = 1

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.d < 1:
            raise ValueError("unity order must be positive")
        if (self.p - 1) % self.d:
            raise UnsupportedFieldError(f"{self.d} does not divide p - 1 = {self.p - 1}")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, -1, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p

    def signed(self, a: int) -> int:
        """Representative of ``a`` in (-p/2, p/2]; used for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


def _check_order(field: Field, d: int) -> None:
    if d < 1:
        raise ValueError("root order must be positive")
    if (field.p - 1) % d:
        raise UnsupportedFieldError(f"F_{field.p} has no primitive {d}-th root of unity")


def _multiplicative_order(a: int, p: int) -> int:
    n = p - 1
    order = n
    # strip prime factors of p - 1 while a^(order/q) == 1
    m, q = n, 2
    factors = []
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for q in factors:
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def primitive_root_of_unity(field: Field, d: int) -> int:
    """Smallest residue of multiplicative order exactly ``d``."""
    _check_order(field, d)
    if d == 1:
        return 1
    for a in range(2, field.p):
        if pow(a, d, field.p) == 1 and _multiplicative_order(a, field.p) == d:
            return a
    raise UnsupportedFieldError(f"no primitive {d}-th root in F_{field.p}")  # pragma: no cover


def enumerate_roots_of_unity(field: Field, d: int) -> list[int]:
    """All ``d`` of the d-th roots of unity, ascending."""
    zeta = primitive_root_of_unity(field, d)
    return sorted(pow(zeta, k, field.p) for k in range(d))


def smallest_prime(modulus: int, minimum: int = 2**15) -> int:
    """Smallest prime p > minimum with p = 1 (mod modulus)."""
    p = nextprime(minimum)
    while (p - 1) % modulus:
        p = nextprime(p)
    return p
