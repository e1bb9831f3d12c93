"""Independent reference implementations used only by the tests.

Each oracle recomputes a quantity by a different route than the library
(cofactor expansion instead of Faddeev-LeVerrier, direct enumeration
instead of polynomial convolution, a DP table instead of the pentagonal
recurrence) so that agreement is evidence, not tautology.
"""

from collections import Counter
from fractions import Fraction
from itertools import product

from invsub.exactalg import RationalMatrix, RationalPolynomial
from invsub.spectrum import BlockConfig


def char_poly_cofactor(a: RationalMatrix) -> RationalPolynomial:
    """det(x*I - A) by Laplace expansion along the first column.

    Exponential in n; keep n <= 5.
    """
    n = a.n
    x = RationalPolynomial.x()
    cells = [
        [RationalPolynomial((-a.entries[i][j],)) for j in range(n)]
        for i in range(n)
    ]
    for i in range(n):
        cells[i][i] = cells[i][i] + x
    return _poly_det(cells)


def _poly_det(cells: list[list[RationalPolynomial]]) -> RationalPolynomial:
    n = len(cells)
    if n == 1:
        return cells[0][0]
    total = RationalPolynomial.zero()
    for i in range(n):
        minor = [row[1:] for k, row in enumerate(cells) if k != i]
        term = cells[i][0] * _poly_det(minor)
        total = total + (-term if i % 2 else term)
    return total


def brute_force_profile(config: BlockConfig) -> tuple[int, ...]:
    """Dimension profile by enumerating one subspace choice per block.

    A real block of size k admits chain members of dimension 0..k; a
    complex block with part k admits dimensions 0, 2, ..., 2k.  Every
    invariant subspace is a direct sum of one choice per block, so the
    profile is the histogram of total dimensions.
    """
    choices = [range(k + 1) for k in config.real_blocks]
    choices += [range(0, 2 * k + 1, 2) for k in config.complex_blocks]
    histogram = Counter(sum(dims) for dims in product(*choices))
    return tuple(histogram.get(d, 0) for d in range(config.n + 1))


def naive_partition_count(n: int) -> int:
    """p(n) by the textbook DP over largest allowed part."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def real_divisor_count(decomposition, count_real_roots) -> int:
    """Number of monic divisors over the reals of the decomposed
    polynomial: each squarefree factor g of multiplicity m splits over
    the reals into count_real_roots(g) linear and (deg g - that)/2
    quadratic irreducibles, each contributing a factor (m + 1)."""
    total = 1
    for factor, multiplicity in decomposition.factors:
        real = count_real_roots(factor)
        pairs = (factor.degree - real) // 2
        total *= (multiplicity + 1) ** (real + pairs)
    return total


def random_fraction(rng, max_abs_num: int = 9, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-max_abs_num, max_abs_num), rng.randint(1, max_den))


def random_rational_matrix(rng, n: int) -> RationalMatrix:
    return RationalMatrix(
        [[random_fraction(rng) for _ in range(n)] for _ in range(n)]
    )


def random_invertible_matrix(rng, n: int, bound: int = 5) -> RationalMatrix:
    """Random integer-entry matrix, resampled until invertible."""
    while True:
        candidate = RationalMatrix(
            [
                [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
                for _ in range(n)
            ]
        )
        try:
            candidate.inverse()
        except ValueError:
            continue
        return candidate


def companion_matrix(p: RationalPolynomial) -> RationalMatrix:
    """Companion matrix of a monic polynomial of degree >= 1."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p.coefficients[i]
    return RationalMatrix(rows)
