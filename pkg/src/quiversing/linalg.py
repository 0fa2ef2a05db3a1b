"""Dense exact matrices over the Gaussian rationals.

Matrices are tuples of row tuples.  Ranks use fraction-free (Bareiss)
elimination over the Gaussian integers after clearing denominators row by
row, so no intermediate fractions appear and no tolerance is involved.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .gauss import GaussianRational

Matrix = tuple[tuple[GaussianRational, ...], ...]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    """Shape of ``m``; an empty matrix needs ``cols`` to be unambiguous."""
    if not m:
        return 0, cols or 0
    return len(m), len(m[0])


def matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return tuple(tuple(GaussianRational.coerce(x) for x in row) for row in rows)


def matmul(a: Matrix, b: Matrix, inner: int, cols: int) -> Matrix:
    """Product of an r x inner and an inner x cols matrix.

    Dimensions are passed explicitly because zero-row matrices carry no
    column count.
    """
    rows = len(a)
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = ZERO
            for k in range(inner):
                x = a[i][k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c: GaussianRational, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def conj_transpose(a: Matrix, cols: int) -> Matrix:
    rows = len(a)
    return tuple(tuple(a[i][j].conjugate() for i in range(rows)) for j in range(cols))


def trace(a: Matrix) -> GaussianRational:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def _to_gaussian_integers(row: Sequence[GaussianRational]) -> list[tuple[int, int]]:
    den = lcm(*(x.re.denominator for x in row), *(x.im.denominator for x in row)) if row else 1
    return [(int(x.re * den), int(x.im * den)) for x in row]


def _gi_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_exact_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (re // n, im // n)


def rank(m: Sequence[Sequence[GaussianRational]]) -> int:
    """Exact rank by Bareiss elimination over the Gaussian integers."""
    a = [_to_gaussian_integers(row) for row in m if any(row)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    prev = (1, 0)
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != (0, 0)), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, cols):
                t0 = _gi_mul(p, row_i[j])
                t1 = _gi_mul(f, row_r[j])
                row_i[j] = _gi_exact_div((t0[0] - t1[0], t0[1] - t1[1]), prev)
            row_i[c] = (0, 0)
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rational_rank(m: Sequence[Sequence[int | Fraction]]) -> int:
    return rank([[GaussianRational(x) for x in row] for row in m])
