"""Polynomials and matrices over GF(2), and the (q-1)x(q-1) matrix Delta_q.

A GF(2)[z] polynomial is an int whose bit i is the coefficient of z^i.
Entries of Delta_q are first built over the integers (as {exponent: coeff}
dicts, evaluated at concrete h, b and d-coefficients) and reduced mod 2
at the end.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .wreath import HParams, coeff_d

__all__ = [
    "PolyBit",
    "MatPolyBit",
    "poly_mul",
    "poly_pow",
    "poly_trunc",
    "poly_str",
    "monomial",
    "reduce_mod2",
    "omega_table",
    "omega_generic",
    "build_delta_int",
    "build_delta",
    "delta_mod2_even",
    "delta_mod2_odd",
    "det_gf2",
    "minor_gf2",
    "det_exponent",
    "expected_det",
    "expected_minor",
]

PolyBit = int
MatPolyBit = tuple[tuple[int, ...], ...]
IntPoly = dict[int, int]


def monomial(e: int) -> PolyBit:
    return 1 << e


def poly_mul(f: PolyBit, g: PolyBit) -> PolyBit:
    out = 0
    while g:
        if g & 1:
            out ^= f
        f <<= 1
        g >>= 1
    return out


def poly_pow(f: PolyBit, k: int) -> PolyBit:
    out = 1
    while k:
        if k & 1:
            out = poly_mul(out, f)
        f = poly_mul(f, f)
        k >>= 1
    return out


def poly_trunc(f: PolyBit, order: int) -> PolyBit:
    """Drop every term above z^order."""
    return f & ((1 << (order + 1)) - 1)


def poly_str(f: PolyBit) -> str:
    if f == 0:
        return "0"
    terms = []
    for i in range(f.bit_length()):
        if f >> i & 1:
            terms.append("1" if i == 0 else "z" if i == 1 else f"z^{i}")
    return "+".join(terms)


def reduce_mod2(p: IntPoly) -> PolyBit:
    out = 0
    for e, c in p.items():
        if c & 1:
            out ^= 1 << e
    return out


def _add(p: IntPoly, e: int, c: int) -> None:
    if c:
        p[e] = p.get(e, 0) + c


def _d(k: int, nu: int, H: HParams) -> int:
    """d_k^(nu), with out-of-range indices read as 0."""
    if k < 1 or nu < 0 or nu > (k - 1) // 2:
        return 0
    return coeff_d(k, nu, H)


def omega_table(q: int, kappa: int, lam: int, H: HParams) -> IntPoly:
    """Entry (kappa, lam) of Delta_q, case by case."""
    h, b = H.h, H.b
    d = lambda k, nu: coeff_d(k, nu, H)  # noqa: E731
    p: IntPoly = {}
    if kappa == 0:
        if lam == 0:
            _add(p, q, d(q - 1, 0))
            _add(p, 0, -1)
        elif 1 <= lam <= (q - 3) // 2:
            _add(p, lam + q, d(q - 1, lam))
        return p
    if kappa == 1:
        if lam == 0:
            _add(p, q - 1, d(q, 0))
            _add(p, 0, b)
        elif 1 <= lam <= (q - 1) // 2:
            _add(p, lam + q - 1, d(q, lam))
        return p
    odd = kappa % 2 == 1
    if odd and not 3 <= kappa <= q - 2 or not odd and not 2 <= kappa <= q - 3:
        raise ValueError(f"row {kappa} is outside Delta_{q}")
    if lam == 0:
        _add(p, kappa - 2, d(kappa - 1, 0) * h)
        _add(p, kappa - 1, b * d(kappa, 0))
        _add(p, kappa + q - 2, d(kappa + q - 1, 0))
    elif odd and 1 <= lam <= (kappa - 3) // 2 or not odd and 1 <= lam <= (kappa - 2) // 2:
        _add(p, kappa + lam - 2, -((lam - 1) * d(kappa - 1, lam) * h + d(kappa - 1, lam - 1)))
        _add(p, kappa + lam - 1, b * d(kappa, lam))
        _add(p, kappa + lam + q - 2, d(kappa + q - 1, lam))
    elif odd and lam == (kappa - 1) // 2:
        _add(p, (3 * kappa - 5) // 2, -d(kappa - 1, (kappa - 3) // 2))
        _add(p, (3 * kappa - 3) // 2, b * d(kappa, (kappa - 1) // 2))
        _add(p, (3 * kappa + 2 * q - 5) // 2, d(kappa + q - 1, (kappa - 1) // 2))
    elif not odd and lam == kappa // 2:
        _add(p, (3 * kappa - 4) // 2, -d(kappa - 1, (kappa - 2) // 2))
        _add(p, (3 * kappa + 2 * q - 4) // 2, d(kappa + q - 1, kappa // 2))
    elif odd and (kappa + 1) // 2 <= lam <= (kappa + q - 2) // 2 or (
        not odd and (kappa + 2) // 2 <= lam <= (kappa + q - 3) // 2
    ):
        _add(p, kappa + lam + q - 2, d(kappa + q - 1, lam))
    return p


def omega_generic(q: int, kappa: int, lam: int, H: HParams) -> IntPoly:
    """The same entries for kappa >= 2 from one uniform expression.

    Substituting the reduction of F_k into F_{k-1} and F_{k+q-1} in
    h z F'_{k-1} = h(k-1) F_{k-1} + b F_k + F_{k+q-1} and collecting the
    coefficient of h^lam F_1^(lam) gives
        -((lam-1) h d_{k-1}^(lam) + d_{k-1}^(lam-1)) z^(k+lam-2)
        + b d_k^(lam) z^(k+lam-1) + d_{k+q-1}^(lam) z^(k+lam+q-2).
    """
    if kappa < 2:
        return omega_table(q, kappa, lam, H)
    h, b = H.h, H.b
    p: IntPoly = {}
    _add(p, kappa + lam - 2, -((lam - 1) * h * _d(kappa - 1, lam, H) + _d(kappa - 1, lam - 1, H)))
    _add(p, kappa + lam - 1, b * _d(kappa, lam, H))
    _add(p, kappa + lam + q - 2, _d(kappa + q - 1, lam, H))
    return {e: c for e, c in p.items() if c}


def build_delta_int(q: int, H: HParams) -> list[list[IntPoly]]:
    return [[omega_table(q, k, l, H) for l in range(q - 1)] for k in range(q - 1)]


def build_delta(q: int, H: HParams) -> MatPolyBit:
    """Delta_q reduced mod 2."""
    return tuple(tuple(reduce_mod2(p) for p in row) for row in build_delta_int(q, H))


def delta_mod2_even(q: int) -> MatPolyBit:
    """The mod-2 shape of Delta_q for |H| even, entry by entry."""
    M = [[0] * (q - 1) for _ in range(q - 1)]
    M[0][0] = 1
    for k in range(1, q - 1):
        if k % 2:
            M[k][(k - 1) // 2] ^= monomial((3 * k - 3) // 2)
            M[k][(k + q - 2) // 2] ^= monomial((3 * k + 3 * q - 6) // 2)
        elif k <= q - 3:
            M[k][k // 2] ^= monomial((3 * k - 4) // 2)
    return tuple(tuple(r) for r in M)


def delta_mod2_odd(q: int) -> MatPolyBit:
    """The mod-2 shape of Delta_q for |H| odd."""
    M = [[0] * (q - 1) for _ in range(q - 1)]
    M[0][0] = 1
    if ((q - 3) // 2) % 2 == 0:
        M[0][(q - 3) // 2] ^= monomial((3 * q - 3) // 2)
    for k in range(1, q - 1):
        if k % 2:
            if k >= 3 and ((k - 3) // 2) % 2 == 0:
                M[k][(k - 3) // 2] ^= monomial((3 * k - 7) // 2)
            lam = (k - 1) // 2
            if lam % 2 and k >= 3:
                M[k][lam] ^= monomial((3 * k - 5) // 2) ^ monomial((3 * k - 3) // 2)
            elif lam % 2 == 0:
                M[k][lam] ^= monomial((3 * k - 3) // 2)
            M[k][(k + q - 2) // 2] ^= monomial((3 * k + 3 * q - 6) // 2)
        elif k <= q - 3:
            if ((k - 2) // 2) % 2 == 0:
                M[k][(k - 2) // 2] ^= monomial((3 * k - 6) // 2) ^ monomial((3 * k - 4) // 2)
            M[k][k // 2] ^= monomial((3 * k - 4) // 2)
            if ((k + q - 3) // 2) % 2 == 0:
                M[k][(k + q - 3) // 2] ^= monomial((3 * k + 3 * q - 7) // 2)
    return tuple(tuple(r) for r in M)


def det_gf2(M: Sequence[Sequence[PolyBit]]) -> PolyBit:
    """Determinant over GF(2)[z] by Laplace expansion along rows.

    Signs vanish mod 2, and the sub-determinant on the remaining rows
    depends only on the set of columns still free, so it is memoized on
    that column bitmask.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    rows = tuple(tuple(r) for r in M)

    @lru_cache(maxsize=None)
    def rec(r: int, free: int) -> PolyBit:
        if r == n:
            return 1
        acc = 0
        row = rows[r]
        cols = free
        while cols:
            c = (cols & -cols).bit_length() - 1
            cols &= cols - 1
            if row[c]:
                sub = rec(r + 1, free & ~(1 << c))
                if sub:
                    acc ^= poly_mul(row[c], sub)
        return acc

    return rec(0, (1 << n) - 1)


def minor_gf2(M: Sequence[Sequence[PolyBit]], row: int, col: int) -> PolyBit:
    """Determinant after deleting one row and one column."""
    sub = [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(M) if i != row]
    return det_gf2(sub)


def det_exponent(q: int) -> int:
    return (3 * q * q - 11 * q + 12) // 2


def expected_det(q: int, h_even: bool) -> PolyBit:
    out = monomial(det_exponent(q))
    if not h_even and q % 4 == 3:
        out ^= monomial((3 * q * q - 8 * q + 9) // 2)
    return out


def expected_minor(q: int, kappa: int, h_even: bool) -> PolyBit:
    """Predicted Delta_{kappa,0} mod 2 (row kappa and column 0 removed)."""
    if kappa == 0:
        return monomial(det_exponent(q))
    if h_even or kappa == 1 or q % 4 == 1:
        return 0
    r = kappa % 4
    if r == 1:
        return 0
    kp = (kappa - 2) // 4
    shift = {2: 5, 3: 3, 0: 1}[r]
    return monomial((3 * q * q - 8 * q + shift - 12 * kp) // 2)
