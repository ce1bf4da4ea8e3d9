"""Small finite fields GF(p^k) as lookup tables (elements are ints 0..q-1, base-p digits)."""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p**k, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    return (p, k) if rest == 1 else None


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    out = [0] * (2 * k)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    for d in range(2 * k - 1, k - 1, -1):
        c = out[d]
        if c:
            for i in range(k + 1):
                out[d - k + i] = (out[d - k + i] - c * mod[i]) % p
    return out[:k]


def _irreducible(p: int, k: int) -> list[int]:
    """Lowest monic irreducible polynomial of degree k over GF(p), low coefficient first."""
    for coeffs in product(range(p), repeat=k):
        poly = list(coeffs) + [1]
        if k == 1 or _has_no_factor(poly, p):
            return poly
    raise AssertionError("unreachable")


def _has_no_factor(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            div = list(coeffs) + [1]
            rem = list(poly)
            for s in range(k - d, -1, -1):
                c = rem[s + d]
                if c:
                    for i in range(d + 1):
                        rem[s + i] = (rem[s + i] - c * div[i]) % p
            if not any(rem[:d]):
                return False
    return True


@lru_cache(maxsize=None)
def field_tables(q: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(add, mul) tables of GF(q)."""
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
        return add, mul
    mod = _irreducible(p, k)

    def digits(x: int) -> list[int]:
        return [(x // p ** i) % p for i in range(k)]

    def value(ds: list[int]) -> int:
        return sum(d * p ** i for i, d in enumerate(ds))

    add = tuple(tuple(value([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q))
                for a in range(q))
    mul = tuple(tuple(value(_polymulmod(digits(a), digits(b), mod, p)) for b in range(q)) for a in range(q))
    return add, mul
