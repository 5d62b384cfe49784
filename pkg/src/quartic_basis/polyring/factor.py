"""Factorization of quartics modulo p, the Dedekind criterion, and integer helpers.

The mod-p path is deterministic: small primes find roots by exhaustive
search, larger primes split gcd(f, X^p - X) by trying shifts c = 0, 1, ...
Rootless quartic remainders are separated into an irreducible quartic, a
square of a quadratic, or two distinct quadratics.
"""
from __future__ import annotations

import logging
from itertools import chain, product
from math import isqrt

from sympy import divisors, factorint, isprime

from quartic_basis.polyring.intpoly import IntPoly
from quartic_basis.polyring.modpoly import ModPoly, gcd

logger = logging.getLogger(__name__)

EXHAUSTIVE_ROOT_LIMIT = 1000

Factorization = list[tuple[ModPoly, int]]


def _sort_key(item: tuple[ModPoly, int]) -> tuple[int, tuple[int, ...]]:
    return item[0].degree, item[0].coeffs


def _linear(root: int, p: int) -> ModPoly:
    return ModPoly((-root, 1), p)


def _roots_exhaustive(f: ModPoly) -> list[int]:
    return [r for r in range(f.p) if f.evaluate(r) == 0]


def _split_roots(g: ModPoly) -> list[int]:
    """Roots of a squarefree product of distinct linear factors, odd p."""
    p = g.p
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [(-g.coeffs[0]) % p]
    half = (p - 1) // 2
    for c in range(p):
        trial = ModPoly((c, 1), p).pow_mod(half, g) - ModPoly.one(p)
        d = gcd(g, trial)
        if 0 < d.degree < g.degree:
            return sorted(_split_roots(d) + _split_roots(g // d))
    raise RuntimeError(f"could not split {g} modulo {p}")


def _roots_large(f: ModPoly) -> list[int]:
    x = ModPoly.x(f.p)
    g = gcd(f, x.pow_mod(f.p, f) - x)
    return _split_roots(g)


def _split_quadratics(g: ModPoly) -> tuple[ModPoly, ModPoly]:
    """Split a squarefree quartic that is a product of two irreducible quadratics."""
    p = g.p
    exponent = (p * p - 1) // 2
    candidates = chain(
        ((c, 1) for c in range(p)),
        ((c0, c1, 1) for c1, c0 in product(range(p), repeat=2)),
    )
    for coeffs in candidates:
        trial = ModPoly(coeffs, p).pow_mod(exponent, g) - ModPoly.one(p)
        d = gcd(g, trial)
        if d.degree == 2:
            return d, g // d
    raise RuntimeError(f"could not split {g} into quadratics modulo {p}")


def _rootless_part(g: ModPoly) -> Factorization:
    p = g.p
    if g.degree <= 0:
        return []
    if g.degree <= 3:
        return [(g, 1)]
    if g.degree != 4:
        raise ValueError("only quartics and lower degrees are supported")
    if not g.is_squarefree():
        # rootless, so g is the square of an irreducible quadratic
        dg = g.derivative()
        if dg.is_zero():
            # characteristic 2: g = h(X^2) = h(X)^2 since Frobenius fixes F_2
            return [(ModPoly(g.coeffs[0::2], p), 2)]
        return [(gcd(g, dg), 2)]
    if p == 2:
        # X^2 + X + 1 is the only irreducible quadratic over F_2
        return [(g, 1)]
    x = ModPoly.x(p)
    if (x.pow_mod(p * p, g) - x).is_zero():
        q1, q2 = _split_quadratics(g)
        return [(q1, 1), (q2.monic(), 1)]
    return [(g, 1)]


def factor_mod_p(f: ModPoly) -> Factorization:
    """Complete factorization of a polynomial of degree <= 4 over F_p."""
    p = f.p
    if f.degree <= 0:
        return []
    f = f.monic()
    roots = _roots_exhaustive(f) if p < EXHAUSTIVE_ROOT_LIMIT else _roots_large(f)
    found: Factorization = []
    rest = f
    for r in roots:
        lin = _linear(r, p)
        e = 0
        while rest.degree > 0:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            e += 1
        found.append((lin, e))
    found.extend(_rootless_part(rest))
    return sorted(found, key=_sort_key)


def factor_shape_mod_p(poly: IntPoly, p: int) -> Factorization:
    """Factor the reduction of P modulo p into monic irreducibles with multiplicities."""
    return factor_mod_p(poly.to_mod(p))


def dedekind_test(poly: IntPoly, p: int) -> bool:
    """True iff p divides the index [Z_K : Z[alpha]]."""
    factors = factor_shape_mod_p(poly, p)
    expanded = IntPoly.constant(1)
    repeated = ModPoly.one(p)
    for g, e in factors:
        expanded = expanded * g.lift() ** e
        if e >= 2:
            repeated = repeated * g
    if repeated.is_constant():
        return False
    m = (poly - expanded).exact_div(p).to_mod(p)
    return not gcd(m, repeated).is_constant()


def is_irreducible_quartic(poly: IntPoly) -> bool:
    """Irreducibility over Q of a monic integer quartic.

    No rational root (roots of a monic integer polynomial divide the constant
    term) and no splitting X^4 + mX^3 + nX^2 + aX + b = (X^2 + uX + v)(X^2 + u'X + w).
    """
    if poly.degree != 4 or not poly.is_monic():
        raise ValueError(f"{poly} is not a monic quartic")
    b, a, n, m = poly.coeffs[:4]
    if b == 0:
        return False
    candidates = divisors(abs(b))
    for d in candidates:
        if poly.evaluate(d) == 0 or poly.evaluate(-d) == 0:
            return False
    for d in candidates:
        for v in (d, -d):
            w = b // v
            disc = m * m - 4 * (n - v - w)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            for num in {m + root, m - root}:
                if num % 2:
                    continue
                u = num // 2
                if u * w + (m - u) * v == a:
                    return False
    return True


def factor_integer(n: int, limit: int) -> tuple[dict[int, int], int]:
    """Factor |n| with bounded effort.

    Returns the prime part and the unfactored cofactor (1 when complete).
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    found = factorint(abs(n), limit=limit)
    primes: dict[int, int] = {}
    cofactor = 1
    for q, e in found.items():
        if isprime(q):
            primes[int(q)] = int(e)
        else:
            cofactor *= int(q) ** int(e)
    if cofactor != 1:
        logger.warning("factorization incomplete n_bits=%s cofactor_bits=%s", abs(n).bit_length(), cofactor.bit_length())
    return dict(sorted(primes.items())), cofactor
