"""Exact cyclotomic polynomials, their reductions mod p, and root multiplicities.

Integer polynomials are exact (arbitrary-precision coefficients); modular
polynomials live over Z/p for a prime p. Cyclotomic indices up to 10^6 are
supported, with the caveat that very large squarefree indices are slow.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .numth import (
    check_prime,
    divisors,
    euler_phi,
    multiplicative_order,
    radical,
    residues_of_order,
)

MAX_CYCLOTOMIC_INDEX = 10**6


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Polynomial with exact integer coefficients, ascending by power.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __mul__(self, other):
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_monic(self, divisor: "IntPoly"):
        """Long division by a monic divisor; exact integer arithmetic."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div_monic(self, divisor: "IntPoly") -> "IntPoly":
        q, r = self.divmod_monic(divisor)
        if r:
            raise ArithmeticError(f"division of {self} by {divisor} is not exact")
        return q

    def compose_power(self, k: int) -> "IntPoly":
        """Substitute X -> X^k."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        out = [0] * (k * self.degree + 1) if self else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPoly":
        coeffs = [0] * (n + 1)
        coeffs[0] = -1
        coeffs[n] = 1
        return cls(coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("X" if i == 1 else f"X^{i}")
            mag = abs(c)
            body = mono if (mag == 1 and i > 0) else (str(mag) if i == 0 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


# numpy convolution is safe whenever intermediate sums fit in int64
_NUMPY_SUM_CAP = 2**62


class ModPoly:
    """Polynomial over Z/p, coefficients reduced to [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        check_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _strip(c % p for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check_same_modulus(self, other):
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __mul__(self, other):
        self._check_same_modulus(other)
        if not self or not other:
            return ModPoly(self.p, ())
        n, m = len(self.coeffs), len(other.coeffs)
        # large products go through numpy's C convolution when int64 is safe
        if n * m > 4096 and (self.p - 1) ** 2 * min(n, m) < _NUMPY_SUM_CAP:
            conv = np.convolve(
                np.array(self.coeffs, dtype=np.int64),
                np.array(other.coeffs, dtype=np.int64),
            )
            return ModPoly(self.p, (conv % self.p).tolist())
        out = [0] * (n + m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ModPoly(self.p, out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ModPoly(self.p, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def divmod_linear(self, eps: int):
        """Synthetic division by (X - eps) over Z/p: (quotient, remainder)."""
        if not self:
            return ModPoly(self.p, ()), 0
        eps %= self.p
        quot = [0] * self.degree
        acc = 0
        for i in range(self.degree, -1, -1):
            acc = (acc * eps + self.coeffs[i]) % self.p
            if i > 0:
                quot[i - 1] = acc
        return ModPoly(self.p, quot), acc

    def __str__(self):
        return f"({IntPoly(self.coeffs)}) mod {self.p}"

    def __repr__(self):
        return f"ModPoly({self.p}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, exact over the integers.

    Squarefree indices use the exact-division recursion
    Phi_n = (X^n - 1) / prod_{d|n, d<n} Phi_d; a non-squarefree index n
    reduces to its radical r via Phi_n(X) = Phi_r(X^(n/r)).
    """
    if not isinstance(n, int) or n < 1 or n > MAX_CYCLOTOMIC_INDEX:
        raise DomainError(f"cyclotomic index out of range [1, 10^6]: {n!r}")
    r = radical(n)
    if r != n:
        return cyclotomic_poly(r).compose_power(n // r)
    quot = IntPoly.x_pow_minus_one(n)
    for d in divisors(n):
        if d < n:
            quot = quot.exact_div_monic(cyclotomic_poly(d))
    return quot


def reduce_mod(poly: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of an integer polynomial mod p."""
    check_prime(p)
    return ModPoly(p, poly.coeffs)


def root_multiplicity(pbar: ModPoly, eps: int) -> int:
    """Largest m with (X - eps)^m dividing pbar over Z/p."""
    if not pbar:
        raise DomainError("root multiplicity undefined for the zero polynomial")
    if not 0 <= eps < pbar.p:
        raise DomainError(f"residue {eps} not reduced mod {pbar.p}")
    mult = 0
    current = pbar
    while True:
        quot, rem = current.divmod_linear(eps)
        if rem != 0:
            return mult
        mult += 1
        current = quot


def order_t_multiplicity(n: int, p: int, t: int) -> int:
    """Common multiplicity of every order-t residue as a root of Phi_n mod p.

    The p-part of n is stripped first via Phi_{m p^f} = Phi_m^{phi(p^f)} mod p;
    the residue sweep then runs on the p-free part. Fails loudly if the
    order-t residues disagree.
    """
    check_prime(p)
    if t < 1 or (p - 1) % t != 0:
        raise DomainError(f"t = {t} does not divide p - 1 = {p - 1}")
    f = 0
    n0 = n  # validated by cyclotomic_poly below
    while n0 % p == 0:
        n0 //= p
        f += 1
    pbar = reduce_mod(cyclotomic_poly(n0), p)
    mults = {eps: root_multiplicity(pbar, eps) for eps in residues_of_order(p, t)}
    if len(set(mults.values())) != 1:
        raise AssertionError(
            f"order-{t} residues disagree on multiplicity for n={n}, p={p}: {mults}"
        )
    scale = euler_phi(p**f) if f else 1
    return scale * next(iter(mults.values()))


@dataclass
class LemmaReport:
    """Result of the exhaustive multiplicity/positivity/power-identity sweep."""

    n_max: int
    primes: tuple
    checks_run: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "primes": list(self.primes),
            "checks_run": self.checks_run,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
        }


def _is_t_times_p_power(n: int, t: int, p: int) -> bool:
    if n % t != 0:
        return False
    rest = n // t
    while rest % p == 0:
        rest //= p
    return rest == 1


def verify_lemma_range(n_max: int, primes) -> LemmaReport:
    """Sweep all n <= n_max, p in primes, t | p - 1 and check three facts:

    (a) every order-t residue has the same multiplicity as a root of Phi_n mod p;
    (b) that multiplicity is positive iff n = t * p^f for some f >= 0;
    (c) Phi_{n p^f} = Phi_n^{phi(p^f)} mod p for f <= 2 whenever p does not
        divide n.

    Failures land in the counterexample list; none are expected.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    primes = tuple(sorted({check_prime(p) for p in primes}))
    report = LemmaReport(n_max=n_max, primes=primes)
    for p in primes:
        for n in range(1, n_max + 1):
            pbar = reduce_mod(cyclotomic_poly(n), p)
            for t in divisors(p - 1):
                mults = {
                    eps: root_multiplicity(pbar, eps)
                    for eps in residues_of_order(p, t)
                }
                report.checks_run += 1
                if len(set(mults.values())) != 1:
                    report.counterexamples.append(
                        {"n": n, "p": p, "t": t, "fact": "uniformity",
                         "multiplicities": mults}
                    )
                    continue
                mult = next(iter(mults.values()))
                expected_positive = _is_t_times_p_power(n, t, p)
                report.checks_run += 1
                if (mult > 0) != expected_positive:
                    report.counterexamples.append(
                        {"n": n, "p": p, "t": t, "fact": "positivity",
                         "multiplicity": mult,
                         "n_is_t_times_p_power": expected_positive}
                    )
            if n % p != 0:
                base = pbar
                for f in (1, 2):
                    q = p**f
                    lifted = reduce_mod(cyclotomic_poly(n * q), p)
                    report.checks_run += 1
                    if lifted != base ** euler_phi(q):
                        report.counterexamples.append(
                            {"n": n, "p": p, "f": f, "fact": "prime_power_identity"}
                        )
    return report


__all__ = [
    "IntPoly",
    "ModPoly",
    "LemmaReport",
    "cyclotomic_poly",
    "reduce_mod",
    "multiplicative_order",
    "root_multiplicity",
    "order_t_multiplicity",
    "verify_lemma_range",
    "MAX_CYCLOTOMIC_INDEX",
]
