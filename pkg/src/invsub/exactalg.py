"""Exact rational polynomial and matrix algebra.

Everything here runs on ``fractions.Fraction``: deciding whether a
matrix keeps finitely many invariant subspaces hinges on exact
eigenvalue collisions, which floating point cannot witness.  Floats are
rejected at the boundary rather than converted.

The four public operations are the characteristic polynomial
(Faddeev-LeVerrier), the minimal polynomial (first linear dependence
among flattened matrix powers), squarefree decomposition (Yun) and
distinct-real-root counting (Sturm chains evaluated at +-infinity).
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import prod


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: exact rational input required"
        )
    return Fraction(value)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class RationalPolynomial:
    """Dense polynomial with exact rational coefficients.

    Coefficients are indexed by degree and trailing zeros are stripped;
    the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable) -> None:
        coeffs = [_to_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coefficients[-1] == 1

    def monic(self) -> "RationalPolynomial":
        lc = self.leading_coefficient()
        return RationalPolynomial(c / lc for c in self.coefficients)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            i * c for i, c in enumerate(self.coefficients) if i > 0
        )

    def __call__(self, value) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        x = _to_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coefficients)

    def __add__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial(
            [x + y for x, y in zip(a, b)] + list(a[len(b):])
        )

    def __sub__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self.coefficients)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = RationalPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other) -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coefficients) - other.degree, 0)
        remainder = list(self.coefficients)
        lc = other.leading_coefficient()
        for shift in range(len(remainder) - other.degree - 1, -1, -1):
            factor = remainder[shift + other.degree] / lc
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                remainder[shift + i] -= factor * c
        return RationalPolynomial(quotient), RationalPolynomial(remainder)

    def __floordiv__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[1]

    def gcd(self, other: "RationalPolynomial") -> "RationalPolynomial":
        """Monic greatest common divisor (zero if both inputs are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a if a.is_zero() else a.monic()

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class RationalMatrix:
    """Square matrix of exact rationals.

    Rows are stored as a tuple of tuples of ``Fraction``; instances are
    immutable.  Entries given as ints or strings like ``"3/4"`` are
    coerced, floats are rejected.
    """

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        entries = tuple(tuple(_to_fraction(x) for x in row) for row in rows)
        if not entries:
            raise ValueError("matrix must have at least one row")
        n = len(entries)
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError(
                    f"row {i + 1} has {len(row)} entries, expected {n}"
                )
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        )

    @classmethod
    def block_diagonal(cls, blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        """Assemble square blocks along the diagonal, zeros elsewhere."""
        if not blocks:
            raise ValueError("need at least one block")
        n = sum(b.n for b in blocks)
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block.entries):
                rows[offset + i][offset:offset + block.n] = row
            offset += block.n
        return cls(rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix) or self.n != other.n:
            return NotImplemented
        return RationalMatrix(
            tuple(x + y for x, y in zip(r, s))
            for r, s in zip(self.entries, other.entries)
        )

    def __sub__(self, other) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix) or self.n != other.n:
            return NotImplemented
        return RationalMatrix(
            tuple(x - y for x, y in zip(r, s))
            for r, s in zip(self.entries, other.entries)
        )

    def __mul__(self, other) -> "RationalMatrix":
        if not isinstance(other, RationalMatrix) or self.n != other.n:
            return NotImplemented
        cols = tuple(zip(*other.entries))
        return RationalMatrix(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
            for row in self.entries
        )

    def scaled(self, factor) -> "RationalMatrix":
        c = _to_fraction(factor)
        return RationalMatrix(tuple(c * x for x in row) for row in self.entries)

    def trace(self) -> Fraction:
        return sum(row[i] for i, row in enumerate(self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def inverse(self) -> "RationalMatrix":
        """Exact inverse by Gauss-Jordan elimination.

        Raises ValueError on a singular matrix.
        """
        n = self.n
        aug = [
            list(row) + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.entries)
        ]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            scale = aug[col][col]
            aug[col] = [x / scale for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
        return RationalMatrix(tuple(row[n:]) for row in aug)

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.entries
        )
        return f"RationalMatrix([{rows}])"


def evaluate_at_matrix(p: RationalPolynomial, a: RationalMatrix) -> RationalMatrix:
    """Evaluate the polynomial at a square matrix (Horner's rule)."""
    acc = RationalMatrix.identity(a.n).scaled(0)
    for c in reversed(p.coefficients):
        acc = acc * a + RationalMatrix.identity(a.n).scaled(c)
    return acc


def char_poly(a: RationalMatrix) -> RationalPolynomial:
    """Characteristic polynomial det(xI - A), monic of degree n.

    Uses the Faddeev-LeVerrier recurrence

        M_1 = I,   c_{n-k} = -tr(A M_k) / k,   M_{k+1} = A M_k + c_{n-k} I

    entirely in rational arithmetic.
    """
    n = a.n
    coefficients = [Fraction(0)] * n + [Fraction(1)]
    m = RationalMatrix.identity(n)
    for k in range(1, n + 1):
        am = a * m
        c = -am.trace() / k
        coefficients[n - k] = c
        m = am + RationalMatrix.identity(n).scaled(c)
    return RationalPolynomial(coefficients)


def min_poly(a: RationalMatrix) -> RationalPolynomial:
    """Minimal polynomial: the monic annihilator of least degree.

    Flattens I, A, A^2, ... into vectors of length n^2 and maintains a
    reduced echelon basis with combination tracking; the first power
    that is linearly dependent on its predecessors yields the minimal
    polynomial directly.  Cayley-Hamilton bounds the search at degree n.
    """
    n = a.n
    rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = RationalMatrix.identity(n)
    degree = 0
    while True:
        vec = [entry for row in power.entries for entry in row]
        combo = [Fraction(0)] * degree + [Fraction(1)]
        for pivot, rvec, rcombo in rows:
            c = vec[pivot]
            if c != 0:
                for i, x in enumerate(rvec):
                    if x != 0:
                        vec[i] -= c * x
                for i, x in enumerate(rcombo):
                    combo[i] -= c * x
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            return RationalPolynomial(combo)
        if degree == n:
            raise AssertionError("no dependence by degree n; broken arithmetic")
        scale = vec[pivot]
        rows.append(
            (pivot, [x / scale for x in vec], [x / scale for x in combo])
        )
        power = power * a
        degree += 1


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """Factorization p = constant * prod g_i^(m_i) with the g_i monic,
    squarefree, pairwise coprime and nonconstant."""

    constant: Fraction
    factors: tuple[tuple[RationalPolynomial, int], ...]

    def __post_init__(self) -> None:
        for g, multiplicity in self.factors:
            if g.degree < 1:
                raise ValueError(f"constant factor in decomposition: {g}")
            if multiplicity < 1:
                raise ValueError(f"invalid multiplicity {multiplicity}")

    def reconstruct(self) -> RationalPolynomial:
        """Multiply the decomposition back out (exact)."""
        result = RationalPolynomial((self.constant,))
        for g, multiplicity in self.factors:
            result = result * g**multiplicity
        return result


def squarefree_decompose(p: RationalPolynomial) -> SquarefreeDecomposition:
    """Squarefree decomposition by Yun's algorithm.

    Multiplicities come out strictly increasing.  Rejects constant and
    zero polynomials.
    """
    if p.degree < 1:
        raise ValueError("squarefree decomposition needs degree >= 1")
    constant = p.leading_coefficient()
    f = p.monic()
    g0 = f.gcd(f.derivative())
    b = f // g0
    c = f.derivative() // g0
    d = c - b.derivative()
    factors = []
    multiplicity = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            factors.append((a, multiplicity))
        b = b // a
        c = d // a
        d = c - b.derivative()
        multiplicity += 1
    return SquarefreeDecomposition(constant, tuple(factors))


def count_real_roots(p: RationalPolynomial) -> int:
    """Number of distinct real roots of a squarefree polynomial.

    Builds the Sturm chain p, p', -rem(...), ... and returns the drop in
    sign variations from -infinity to +infinity, where the sign of a
    polynomial at +-infinity is read off its leading coefficient and
    degree parity (no root bounds needed).  Non-squarefree input is
    rejected: the plain Sturm chain requires gcd(p, p') constant.
    """
    if p.degree < 1:
        raise ValueError("real-root counting needs a nonconstant polynomial")
    if p.gcd(p.derivative()).degree != 0:
        raise ValueError("polynomial is not squarefree; decompose it first")
    chain = [p, p.derivative()]
    while True:
        remainder = chain[-2] % chain[-1]
        if remainder.is_zero():
            break
        chain.append(-remainder)

    def variations(signs: list[int]) -> int:
        return sum(a != b for a, b in zip(signs, signs[1:]))

    at_pos = [_sign(q.leading_coefficient()) for q in chain]
    at_neg = [
        s * (-1 if q.degree % 2 == 1 else 1) for s, q in zip(at_pos, chain)
    ]
    return variations(at_neg) - variations(at_pos)
