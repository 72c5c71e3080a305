"""Closed-form parity predicates for Hecke group subgroup counts and their lifts.

Everything here is a decision procedure on the index n: membership in a
linear family n = c * (1 + 2(q-1) eta) is tested by divisibility, never
by scanning eta.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import digit_sum_2, divisors, is_prime

__all__ = [
    "ParityVerdict",
    "is_fermat_prime",
    "cond_eta",
    "sq_parity",
    "sq_parity_fermat",
    "Nq_parity",
    "Nq_parity_fermat",
    "Mq_parity",
    "binom_shift_parity",
    "lift_component_parity",
    "lift_parity",
    "cond_Cq",
    "fermat_bed",
    "fermat_threshold",
    "tree_case_parity",
    "CQ_RESIDUES",
]


@dataclass(frozen=True)
class ParityVerdict:
    odd: bool
    eta: int | None = None
    d: int | None = None
    sigma: int | None = None
    components: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.odd


EVEN = ParityVerdict(False)


def _check_q(q: int) -> None:
    if q < 3 or not is_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")


def is_fermat_prime(q: int) -> bool:
    return q >= 3 and is_prime(q) and (q - 1) & (q - 2) == 0


def cond_eta(q: int, eta: int) -> bool:
    return digit_sum_2((q - 1) * eta + 1) == digit_sum_2(eta) + digit_sum_2((q - 2) * eta + 1)


def _eta_of(x: int, step: int) -> int | None:
    """eta with x == 1 + step * eta, if there is one."""
    if x < 1 or (x - 1) % step:
        return None
    return (x - 1) // step


def sq_parity(q: int, n: int) -> ParityVerdict:
    """Parity of the number of index-n subgroups."""
    _check_q(q)
    if n < 1:
        raise ValueError("index must be positive")
    if n % 2:
        eta = _eta_of(n, 2 * (q - 1))
    else:
        eta = _eta_of(n // 2, 2 * (q - 1))
    if eta is not None and cond_eta(q, eta):
        return ParityVerdict(True, eta=eta)
    return EVEN


def _sigma_family(q: int, n: int, value) -> int | None:
    """Smallest sigma >= 1 with value(sigma) == n, for an increasing family."""
    sigma = 1
    while True:
        v = value(sigma)
        if v == n:
            return sigma
        if v > n:
            return None
        sigma += 1


def sq_parity_fermat(q: int, n: int) -> ParityVerdict:
    if not is_fermat_prime(q):
        raise ValueError(f"{q} is not a Fermat prime")
    for num in (lambda s: 2 * (q - 1) ** s - q, lambda s: 4 * (q - 1) ** s - 2 * q):
        sigma = _sigma_family(q, n, lambda s: num(s) // (q - 2))
        if sigma is not None:
            return ParityVerdict(True, sigma=sigma)
    return EVEN


def Nq_parity_fermat(q: int, n: int) -> ParityVerdict:
    if not is_fermat_prime(q):
        raise ValueError(f"{q} is not a Fermat prime")
    # sigma >= 0 in n = (4(q-1)^(sigma+1) - 2q)/(q-2); search over sigma + 1 >= 1
    s1 = _sigma_family(q, n, lambda s: (4 * (q - 1) ** s - 2 * q) // (q - 2))
    return ParityVerdict(True, sigma=s1 - 1) if s1 is not None else EVEN


def Nq_parity(q: int, n: int) -> ParityVerdict:
    """Parity of the number of index-n subgroups that are free products of Cq's."""
    _check_q(q)
    if n < 1:
        raise ValueError("index must be positive")
    verdict = EVEN
    if n % 2 == 0:
        eta = _eta_of(n - 1, 4 * (q - 1)) if n >= 2 else None
        if eta is not None and cond_eta(q, eta):
            verdict = ParityVerdict(True, eta=eta)
    if is_fermat_prime(q):
        fast = Nq_parity_fermat(q, n)
        if fast.odd != verdict.odd:
            raise AssertionError(f"digit-sum and explicit forms disagree at q={q}, n={n}")
    return verdict


def Mq_parity(q: int, n: int) -> ParityVerdict:
    """Subgroups without free factor Cq always come in even number."""
    _check_q(q)
    if n < 1:
        raise ValueError("index must be positive")
    return EVEN


def binom_shift_parity(lam: int, k: int) -> bool:
    """Whether C(2^lam k + 1, k - 1) is odd, by the explicit k-families."""
    if lam < 1 or k < 1:
        raise ValueError("lambda and k must be positive")
    base = 2**lam - 1
    sigma = 1
    while True:
        a = (2 ** (lam * sigma) - 1) // base
        if a > k:
            return False
        if a == k or 2 * a == k:
            return True
        sigma += 1


def lift_component_parity(q: int, d: int, n: int, h_even: bool) -> ParityVerdict:
    """Parity of the divisor-d summand of the lifted count at index n."""
    _check_q(q)
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    if d % q == 0:
        return EVEN
    step = 2 * (q - 1)
    first = second = None
    if n % (2 * d) == 0:
        eta = _eta_of(n // (2 * d), step)
        if eta is not None and cond_eta(q, eta):
            first = eta
    if not h_even and d % 2 and n % d == 0:
        eta = _eta_of(n // d, step)
        if eta is not None and cond_eta(q, eta):
            second = eta
    if first is not None and second is not None:
        raise AssertionError(f"both families claim q={q}, d={d}, n={n}")
    eta = first if first is not None else second
    if eta is None:
        return EVEN
    return ParityVerdict(True, eta=eta, d=d)


def lift_parity(q: int, m: int, n: int, h_even: bool) -> ParityVerdict:
    """Parity of the generalized subgroup number of the m-fold lift at index n.

    Only gcd(m, |H|) = 1 is meaningful, so an even |H| forces m odd.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if h_even and m % 2 == 0:
        raise ValueError("|H| even and m even violate gcd(m, |H|) = 1")
    odd = False
    comps = []
    for d in divisors(m):
        v = lift_component_parity(q, d, n, h_even)
        if v.odd:
            odd = not odd
            comps.append((d, v.eta))
    return ParityVerdict(odd, components=tuple(comps))


def cond_Cq(q: int, p: int) -> bool:
    """True iff q/2 mod p is not a power of q - 1 mod p."""
    if not is_fermat_prime(q):
        raise ValueError(f"{q} is not a Fermat prime")
    if p < 3 or not is_prime(p) or (2 * q * (q - 1)) % p == 0:
        raise ValueError(f"p={p} must be an odd prime not dividing 2q(q-1)")
    target = q * pow(2, -1, p) % p
    g = (q - 1) % p
    x = 1
    while True:
        if x == target:
            return False
        x = x * g % p
        if x == 1:
            return True


CQ_RESIDUES = {
    3: (24, (7, 17)),
    5: (40, (7, 11, 17, 19, 21, 23, 29, 33)),
    17: (
        136,
        (7, 13, 19, 21, 23, 31, 35, 39, 41, 43, 53, 57, 59, 63, 65, 67, 69, 71, 73, 77, 79, 83,
         93, 95, 97, 105, 113, 115, 117, 123, 125, 129),
    ),
}


def fermat_bed(q: int, m: int, n: int, h_even: bool) -> ParityVerdict:
    """The explicit odd-index family n = t (2(q-1)^sigma - q)/(q-2)."""
    if not is_fermat_prime(q):
        raise ValueError(f"{q} is not a Fermat prime")
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    for t in divisors(2 * m):
        if t % q == 0 or (h_even and t % 2) or n % t:
            continue
        x = n // t
        rhs = x * (q - 2) + q
        if rhs % 2:
            continue
        half = rhs // 2
        sigma = 0
        while half % (q - 1) == 0 and half > 1:
            half //= q - 1
            sigma += 1
        if half == 1 and sigma >= 1:
            return ParityVerdict(True, d=t, sigma=sigma)
    return EVEN


def fermat_threshold(q: int, m: int) -> int:
    """Smallest integer n with n >= 4 m^2 / (q - 2)."""
    return -(-4 * m * m // (q - 2))


def tree_case_parity(q: int, k: int) -> bool:
    """Whether M_core(q, k, k-1)/(k-1)! is odd, by the explicit k-families."""
    if not is_fermat_prime(q):
        raise ValueError(f"{q} is not a Fermat prime")
    if k < 1:
        raise ValueError("k must be positive")
    sigma = 1
    while True:
        a = ((q - 1) ** sigma - 1) // (q - 2)
        if a > k:
            return False
        if a == k or 2 * a == k:
            return True
        sigma += 1
