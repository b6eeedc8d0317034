"""Exact integer matrix algebra.

Characteristic polynomials (fraction-free Bareiss evaluation plus exact
interpolation), cyclotomic factorization of monic integer polynomials,
finite-order detection, Smith normal form, and kernel dimensions mod p.
"""

from fractions import Fraction
from math import lcm

from .cyclotomic import IntPoly, cyclotomic_poly
from .errors import DomainError, NotCyclotomicProduct, NotFiniteOrder
from .numth import check_prime, euler_phi

MAX_DIMENSION = 64


class IntMatrix:
    """Immutable square matrix with arbitrary-precision integer entries."""

    __slots__ = ("rows", "dimension")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        d = len(rows)
        if d < 1 or any(len(row) != d for row in rows):
            raise DomainError("matrix must be square with dimension >= 1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "dimension", d)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, d: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def block_diagonal(cls, blocks) -> "IntMatrix":
        blocks = list(blocks)
        d = sum(b.dimension for b in blocks)
        rows = [[0] * d for _ in range(d)]
        off = 0
        for b in blocks:
            for i in range(b.dimension):
                for j in range(b.dimension):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.dimension
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        self._check_dim(other)
        return IntMatrix(
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        self._check_dim(other)
        return IntMatrix(
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return IntMatrix([-x for x in row] for row in self.rows)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([c * x for x in row] for row in self.rows)

    def _check_dim(self, other):
        if self.dimension != other.dimension:
            raise DomainError("dimension mismatch")

    def __matmul__(self, other):
        self._check_dim(other)
        cols = list(zip(*other.rows))
        return IntMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self.rows
        )

    def __pow__(self, n: int) -> "IntMatrix":
        if n < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.dimension)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.dimension)

    def det(self) -> int:
        """Determinant via fraction-free Bareiss elimination."""
        d = self.dimension
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(d - 1):
            if m[k][k] == 0:
                for i in range(k + 1, d):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, d):
                for j in range(k + 1, d):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[d - 1][d - 1]

    def inverse_unimodular(self) -> "IntMatrix":
        """Inverse of a matrix with det = +-1; exact, entries stay integral."""
        d = self.dimension
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
            for i, row in enumerate(self.rows)
        ]
        for k in range(d):
            piv = next((i for i in range(k, d) if aug[i][k] != 0), None)
            if piv is None:
                raise DomainError("matrix is singular")
            aug[k], aug[piv] = aug[piv], aug[k]
            inv = 1 / aug[k][k]
            aug[k] = [x * inv for x in aug[k]]
            for i in range(d):
                if i != k and aug[i][k] != 0:
                    c = aug[i][k]
                    aug[i] = [x - c * y for x, y in zip(aug[i], aug[k])]
        out = [[x for x in row[d:]] for row in aug]
        if any(x.denominator != 1 for row in out for x in row):
            raise DomainError("matrix is not unimodular")
        return IntMatrix([[int(x) for x in row] for row in out])

    def conjugate_by(self, u: "IntMatrix") -> "IntMatrix":
        """u @ self @ u^{-1} for unimodular u."""
        return u @ self @ u.inverse_unimodular()

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"


def companion_matrix(poly: IntPoly) -> IntMatrix:
    """Companion matrix of a monic integer polynomial of degree >= 1."""
    if not poly.is_monic() or poly.degree < 1:
        raise DomainError("companion matrix needs a monic polynomial of degree >= 1")
    k = poly.degree
    rows = [[0] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = 1
    for i in range(k):
        rows[i][k - 1] = -poly[i]
    return IntMatrix(rows)


def _check_cap(m: IntMatrix):
    if m.dimension > MAX_DIMENSION:
        raise DomainError(f"dimension {m.dimension} exceeds cap {MAX_DIMENSION}")


def char_poly(m: IntMatrix) -> IntPoly:
    """Exact det(X*I - M): Bareiss evaluation at d+1 points, then interpolation."""
    _check_cap(m)
    d = m.dimension
    points = list(range(d + 1))
    values = []
    for x in points:
        shifted = IntMatrix(
            [x - v if i == j else -v for j, v in enumerate(row)]
            for i, row in enumerate(m.rows)
        )
        values.append(shifted.det())
    # Newton form with exact divided differences; the result is integral
    coeffs = [Fraction(v) for v in values]
    for j in range(1, d + 1):
        for i in range(d, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - j])
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError("non-integral divided difference")
    acc = IntPoly((int(coeffs[d]),))
    for i in range(d - 1, -1, -1):
        acc = acc * IntPoly((-points[i], 1)) + IntPoly((int(coeffs[i]),))
    return acc


def cyclotomic_factorization(f: IntPoly) -> tuple:
    """Multiset of indices d_i with prod Phi_{d_i} = f, sorted ascending.

    Greedy trial division, candidates ascending; the enumeration cap
    d <= 2*deg^2 + 6 covers every d with phi(d) <= deg.
    """
    if not f.is_monic() or f.degree < 1:
        raise DomainError("factorization needs a monic polynomial of degree >= 1")
    remaining = f
    indices = []
    cap = 2 * f.degree**2 + 6
    for d in range(1, cap + 1):
        if euler_phi(d) > remaining.degree:
            continue
        phi_d = cyclotomic_poly(d)
        while remaining.degree >= phi_d.degree:
            quot, rem = remaining.divmod_monic(phi_d)
            if rem:
                break
            remaining = quot
            indices.append(d)
        if remaining.degree == 0:
            break
    if remaining.degree != 0:
        raise NotCyclotomicProduct(
            f"{f} is not a product of cyclotomic polynomials"
        )
    return tuple(sorted(indices))


def matrix_order(m: IntMatrix) -> int:
    """Least N >= 1 with M^N = I; raises NotFiniteOrder otherwise."""
    _check_cap(m)
    try:
        indices = cyclotomic_factorization(char_poly(m))
    except NotCyclotomicProduct as exc:
        raise NotFiniteOrder(
            "characteristic polynomial is not a product of cyclotomics"
        ) from exc
    n = lcm(*indices)
    # semisimplicity is not implied by the char poly; verify by powering
    if not (m**n).is_identity():
        raise NotFiniteOrder(f"M^{n} != I (matrix is not semisimple)")
    return n


def smith_normal_form(m: IntMatrix) -> tuple:
    """Invariant factors of Z^d / M Z^d, divisibility-chained, zeros last.

    Plain Euclidean row/column reduction with minimal-absolute-value pivots;
    exact arbitrary-precision arithmetic throughout.
    """
    _check_cap(m)
    d = m.dimension
    a = [list(row) for row in m.rows]

    def find_pivot(k):
        best = None
        for i in range(k, d):
            for j in range(k, d):
                v = abs(a[i][j])
                if v and (best is None or v < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    invariants = []
    for k in range(d):
        while True:
            piv = find_pivot(k)
            if piv is None:
                invariants.extend([0] * (d - k))
                return tuple(invariants)
            i, j = piv
            a[k], a[i] = a[i], a[k]
            for row in a:
                row[k], row[j] = row[j], row[k]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, d):
                q = a[i][k] // pivot
                if q:
                    for j in range(k, d):
                        a[i][j] -= q * a[k][j]
                if a[i][k]:
                    dirty = True
            for j in range(k + 1, d):
                q = a[k][j] // pivot
                if q:
                    for i in range(k, d):
                        a[i][j] -= q * a[i][k]
                if a[k][j]:
                    dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain to hold
            offender = None
            for i in range(k + 1, d):
                for j in range(k + 1, d):
                    if a[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                invariants.append(abs(pivot))
                break
            for j in range(k, d):
                a[k][j] += a[offender][j]
    return tuple(invariants)


def kernel_dim_mod_p(m: IntMatrix, p: int) -> int:
    """Dimension over Z/p of the null space of M mod p."""
    _check_cap(m)
    check_prime(p)
    d = m.dimension
    a = [[x % p for x in row] for row in m.rows]
    rank = 0
    for col in range(d):
        piv = next((i for i in range(rank, d) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for i in range(d):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return d - rank


__all__ = [
    "IntMatrix",
    "MAX_DIMENSION",
    "companion_matrix",
    "char_poly",
    "cyclotomic_factorization",
    "matrix_order",
    "smith_normal_form",
    "kernel_dim_mod_p",
    "DomainError",
    "NotCyclotomicProduct",
    "NotFiniteOrder",
]
