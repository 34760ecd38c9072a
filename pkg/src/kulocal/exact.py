"""Exact scalar, polynomial, cyclotomic, and integer-matrix arithmetic.

Scalars are Python ints and ``fractions.Fraction``, so everything here (and
everything built on it) is exact; the package contains no floating point.

Main contents:

* integer polynomials (ascending coefficient tuples) and cyclotomic
  polynomials,
* ``Cyclotomic``: elements of Q(zeta_e) in the power basis mod the e-th
  cyclotomic polynomial, the canonical form in which sums of roots of unity
  can be compared (the power basis injects into C, the naive exponent
  representation does not),
* ``IntMatrix`` with exact Bareiss determinants,
* Smith normal form with full unimodular witnesses U, S, V (A = U*S*V),
  integer kernel lattices, integer linear solving, and row Hermite normal
  form for canonical lattice comparison,
* quotient rings Z[x]/(m) for monic m, with multiplication matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# elementary number theory


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def multiplicative_order(a: int, m: int) -> int:
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    order, x = 1, a % m
    while x != 1:
        x = (x * a) % m
        order += 1
    return order


def is_primitive_root(a: int, m: int) -> bool:
    """True if a generates the unit group mod m (vacuously true for m = 1)."""
    if m == 1:
        return True
    if math.gcd(a, m) != 1:
        return False
    return multiplicative_order(a, m) == euler_phi(m)


def smallest_primitive_root(m: int) -> int:
    """Smallest l >= 2 generating the units mod m; 2 for the vacuous m = 1."""
    if m == 1:
        return 2
    for a in range(2, m + 1):
        if is_primitive_root(a, m):
            return a
    raise ValueError(f"no primitive root mod {m}")


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    n = abs(n)
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# integer polynomials: tuples of coefficients, ascending degree, trimmed


def poly_trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(f: Sequence, g: Sequence) -> tuple:
    n = max(len(f), len(g))
    return poly_trim(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def poly_neg(f: Sequence) -> tuple:
    return tuple(-a for a in f)


def poly_sub(f: Sequence, g: Sequence) -> tuple:
    return poly_add(f, poly_neg(g))


def poly_mul(f: Sequence, g: Sequence) -> tuple:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return poly_trim(out)


def poly_scale(c, f: Sequence) -> tuple:
    return poly_trim(c * a for a in f)


def poly_divmod_monic(f: Sequence, g: Sequence) -> tuple[tuple, tuple]:
    """Divide f by monic g; exact over the coefficient ring (int or Fraction)."""
    g = poly_trim(g)
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(f)
    dg = len(g) - 1
    if dg == 0:
        return poly_trim(rem), ()
    quo = [0] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quo[i - dg] = c
        for j in range(dg + 1):
            rem[i - dg + j] -= c * g[j]
    return poly_trim(quo), poly_trim(rem)


def poly_x_power(n: int) -> tuple:
    return (0,) * n + (1,)


def poly_pow_mod(f: Sequence, n: int, modulus: Sequence) -> tuple:
    result: tuple = (1,)
    base = poly_divmod_monic(f, modulus)[1]
    while n > 0:
        if n & 1:
            result = poly_divmod_monic(poly_mul(result, base), modulus)[1]
        base = poly_divmod_monic(poly_mul(base, base), modulus)[1]
        n >>= 1
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple:
    """The e-th cyclotomic polynomial, by exact division of x^e - 1."""
    if e < 1:
        raise ValueError("conductor must be positive")
    if e == 1:
        return (-1, 1)
    num = poly_sub(poly_x_power(e), (1,))
    for d in divisors(e):
        if d < e:
            num, rem = poly_divmod_monic(num, cyclotomic_polynomial(d))
            assert rem == ()
    return num


# ---------------------------------------------------------------------------
# cyclotomic numbers


class Cyclotomic:
    """An element of Q(zeta_e), stored in the power basis mod Phi_e.

    Coefficients are ints or Fractions; equality is coefficientwise, which is
    honest equality of complex numbers because Phi_e is irreducible.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence):
        phi = len(cyclotomic_polynomial(conductor)) - 1
        c = list(coeffs)
        if len(c) > phi:
            raise ValueError("coefficient vector longer than phi(e)")
        c += [0] * (phi - len(c))
        self.conductor = conductor
        self.coeffs = tuple(c)

    # -- constructors

    @classmethod
    def from_poly(cls, conductor: int, poly: Sequence) -> "Cyclotomic":
        rem = poly_divmod_monic(poly, cyclotomic_polynomial(conductor))[1]
        return cls(conductor, rem)

    @classmethod
    def zeta_power(cls, conductor: int, a: int) -> "Cyclotomic":
        return cls.from_poly(conductor, poly_x_power(a % conductor))

    @classmethod
    def from_rational(cls, conductor: int, value) -> "Cyclotomic":
        return cls(conductor, [value])

    @classmethod
    def zero(cls, conductor: int) -> "Cyclotomic":
        return cls(conductor, [])

    @classmethod
    def one(cls, conductor: int) -> "Cyclotomic":
        return cls(conductor, [1])

    # -- ring operations

    def _check(self, other: "Cyclotomic") -> None:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check(other)
        return Cyclotomic(
            self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check(other)
        return Cyclotomic(
            self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [other * a for a in self.coeffs])
        self._check(other)
        return Cyclotomic.from_poly(
            self.conductor, poly_mul(self.coeffs, other.coeffs)
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyclotomic":
        result = Cyclotomic.one(self.conductor)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.conductor, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.conductor, tuple(Fraction(a) for a in self.coeffs)))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"Cyclotomic(e={self.conductor}, {list(self.coeffs)})"


def reduce_root_of_unity_sum(e: int, exponents: Iterable[int]) -> Cyclotomic:
    """Reduce sum(zeta_e^a for a in exponents) to canonical form mod Phi_e."""
    counts = [0] * e
    for a in exponents:
        counts[a % e] += 1
    return Cyclotomic.from_poly(e, poly_trim(counts))


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """Immutable rectangular matrix over Z (arbitrary precision)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        self.rows = len(rows)
        self.cols = ncols
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        cols = [tuple(c) for c in columns]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls([[c[i] for c in cols] for i in range(nrows)], cols=len(cols))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.entries, nrows=self.cols)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().entries
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in bt]
                for row in self.entries
            ],
            cols=other.cols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in r] for r in self.entries], cols=self.cols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def det(self) -> int:
        """Exact determinant (fraction-free Bareiss elimination)."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = pivot
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and self.det() in (1, -1)


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    return IntMatrix(
        [list(r1) + list(r2) for r1, r2 in zip(a.entries, b.entries)],
        cols=a.cols + b.cols,
    )


def vstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.cols:
        raise ValueError("column mismatch")
    return IntMatrix(list(a.entries) + list(b.entries), cols=a.cols)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """A = U * S * V with U, V unimodular and S diagonal, d_i | d_{i+1}.

    u_inv and v_inv are carried along because kernel and solving use them;
    they are exact inverses of u and v by construction.
    """

    a: IntMatrix
    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        n = min(self.s.rows, self.s.cols)
        diag = [self.s.entries[i][i] for i in range(n)]
        return tuple(d for d in diag if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def cokernel_invariants(self) -> tuple[int, list[int]]:
        """(free rank, torsion factors) of Z^rows / column-span(A)."""
        torsion = [d for d in self.invariant_factors if d != 1]
        return self.a.rows - self.rank, torsion

    def verify(self) -> bool:
        if self.u * self.s * self.v != self.a:
            return False
        if not (self.u.is_unimodular() and self.v.is_unimodular()):
            return False
        if (self.u * self.u_inv != IntMatrix.identity(self.a.rows)
                or self.v * self.v_inv != IntMatrix.identity(self.a.cols)):
            return False
        facs = self.invariant_factors
        if any(d <= 0 for d in facs):
            return False
        if any(facs[i + 1] % facs[i] for i in range(len(facs) - 1)):
            return False
        # zero rows/cols of S only after the nonzero diagonal block
        for i in range(self.s.rows):
            for j in range(self.s.cols):
                if i != j and self.s.entries[i][j] != 0:
                    return False
        return True


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Elementary row/column reduction with min-|pivot| selection.

    Pivot ties break at the lowest row, then the lowest column.  Column and
    row clearing use 2x2 unimodular gcd combinations, which keeps coefficient
    growth tame at the sizes this package handles (<= ~125 square).
    """
    m, n = a.rows, a.cols
    s = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        uinv[i], uinv[j] = uinv[j], uinv[i]
        for r in range(m):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    def row_add(i, j, c):  # row_i += c * row_j
        si, sj = s[i], s[j]
        for t in range(n):
            si[t] += c * sj[t]
        ui, uj = uinv[i], uinv[j]
        for t in range(m):
            ui[t] += c * uj[t]
        for r in range(m):
            u[r][j] -= c * u[r][i]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        uinv[i] = [-x for x in uinv[i]]
        for r in range(m):
            u[r][i] = -u[r][i]

    def row_combine(i, j, aa, bb, cc, dd):
        # (row_i, row_j) <- (aa*row_i + bb*row_j, cc*row_i + dd*row_j),
        # with aa*dd - bb*cc = 1
        si, sj = s[i], s[j]
        for t in range(n):
            si[t], sj[t] = aa * si[t] + bb * sj[t], cc * si[t] + dd * sj[t]
        ui, uj = uinv[i], uinv[j]
        for t in range(m):
            ui[t], uj[t] = aa * ui[t] + bb * uj[t], cc * ui[t] + dd * uj[t]
        for r in range(m):
            ur = u[r]
            ur[i], ur[j] = dd * ur[i] - cc * ur[j], -bb * ur[i] + aa * ur[j]

    def col_swap(i, j):
        for r in range(m):
            s[r][i], s[r][j] = s[r][j], s[r][i]
        for r in range(n):
            vinv[r][i], vinv[r][j] = vinv[r][j], vinv[r][i]
        v[i], v[j] = v[j], v[i]

    def col_add(i, j, c):  # col_i += c * col_j
        for r in range(m):
            s[r][i] += c * s[r][j]
        for r in range(n):
            vinv[r][i] += c * vinv[r][j]
        vj, vi = v[j], v[i]
        for t in range(n):
            vj[t] -= c * vi[t]

    def col_combine(i, j, aa, bb, cc, dd):
        # (col_i, col_j) <- (aa*col_i + bb*col_j, cc*col_i + dd*col_j),
        # with aa*dd - bb*cc = 1
        for r in range(m):
            sr = s[r]
            sr[i], sr[j] = aa * sr[i] + bb * sr[j], cc * sr[i] + dd * sr[j]
        for r in range(n):
            vr = vinv[r]
            vr[i], vr[j] = aa * vr[i] + bb * vr[j], cc * vr[i] + dd * vr[j]
        vi, vj = v[i], v[j]
        for t in range(n):
            vi[t], vj[t] = dd * vi[t] - cc * vj[t], -bb * vi[t] + aa * vj[t]

    t = 0
    while t < min(m, n):
        # pick the minimal-absolute-value nonzero entry of the trailing block
        pivot = None
        best = None
        for i in range(t, m):
            row = s[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        if s[t][t] < 0:
            row_negate(t)

        while True:
            # clear column t below the pivot, accumulating gcds at the pivot
            for i in range(t + 1, m):
                if s[i][t]:
                    p, x = s[t][t], s[i][t]
                    if x % p == 0:
                        row_add(i, t, -(x // p))
                    else:
                        g, aa, bb = xgcd(p, x)
                        row_combine(t, i, aa, bb, -(x // g), p // g)
            # clear row t to the right of the pivot
            for j in range(t + 1, n):
                if s[t][j]:
                    p, x = s[t][t], s[t][j]
                    if x % p == 0:
                        col_add(j, t, -(x // p))
                    else:
                        g, aa, bb = xgcd(p, x)
                        col_combine(t, j, aa, bb, -(x // g), p // g)
            if all(s[i][t] == 0 for i in range(t + 1, m)) and all(
                s[t][j] == 0 for j in range(t + 1, n)
            ):
                d = s[t][t]
                offender = None
                for i in range(t + 1, m):
                    row = s[i]
                    for j in range(t + 1, n):
                        if row[j] % d:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                row_add(t, offender, 1)
        t += 1

    return SmithDecomposition(
        a=a,
        u=IntMatrix(u, cols=m),
        s=IntMatrix(s, cols=n),
        v=IntMatrix(v, cols=n),
        u_inv=IntMatrix(uinv, cols=m),
        v_inv=IntMatrix(vinv, cols=n),
    )


def kernel_lattice(a: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of {v : A v = 0}; saturated automatically."""
    dec = smith_normal_form(a)
    r = dec.rank
    cols = [dec.v_inv.column(j) for j in range(r, a.cols)]
    return IntMatrix.from_columns(cols, nrows=a.cols)


def solve_integer(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution of A x = b, or None if none exists."""
    if len(b) != a.rows:
        raise ValueError("rhs length mismatch")
    dec = smith_normal_form(a)
    w = dec.u_inv.apply(b)
    facs = dec.invariant_factors
    x = [0] * a.cols
    for i, wi in enumerate(w):
        if i < len(facs):
            if wi % facs[i]:
                return None
            x[i] = wi // facs[i]
        elif wi != 0:
            return None
    return dec.v_inv.apply(x[: a.cols])


# ---------------------------------------------------------------------------
# lattices as row spans, canonical Hermite form


def row_hnf(rows: Iterable[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical row Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above each pivot lie in [0, pivot), zero
    rows are dropped.  Two generating sets span the same lattice iff their
    Hermite forms are equal.
    """
    mat = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        # combine all rows >= r with a nonzero entry in column c
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                if piv is None:
                    piv = i
                else:
                    g, x, y = xgcd(mat[piv][c], mat[i][c])
                    p, q = mat[piv][c] // g, mat[i][c] // g
                    rp, ri = mat[piv], mat[i]
                    for t in range(c, ncols):
                        rp[t], ri[t] = x * rp[t] + y * ri[t], -q * rp[t] + p * ri[t]
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        p = mat[r][c]
        for k in range(r):
            q = mat[k][c] // p
            if q:
                rk, rr = mat[k], mat[r]
                for t in range(c, ncols):
                    rk[t] -= q * rr[t]
        r += 1
    return tuple(tuple(row) for row in mat[:r])


def lattice_contains(hnf_rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of v in the lattice given by its row Hermite form."""
    w = list(v)
    for row in hnf_rows:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            continue
        if w[c] % row[c]:
            return False
        q = w[c] // row[c]
        if q:
            for t in range(len(w)):
                w[t] -= q * row[t]
    return not any(w)


def lattice_equal(rows_a, rows_b, ncols: int) -> bool:
    return row_hnf(rows_a, ncols) == row_hnf(rows_b, ncols)


def lattice_spans(rows_big, rows_small, ncols: int) -> bool:
    """True if every row of rows_small lies in the lattice of rows_big."""
    hnf = row_hnf(rows_big, ncols)
    return all(lattice_contains(hnf, v) for v in rows_small)


def express_in_rows(rows: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients c with sum(c_i * rows_i) = v, or None."""
    mat = IntMatrix.from_columns(rows, nrows=len(v)) if rows else IntMatrix.zeros(len(v), 0)
    return solve_integer(mat, v)


# ---------------------------------------------------------------------------
# quotient rings Z[x]/(m), m monic


class QuotientRing:
    """Z[x]/(m) for a monic integer polynomial m; a free Z-module of rank deg m."""

    __slots__ = ("modulus", "degree")

    def __init__(self, modulus: Sequence[int]):
        mod = poly_trim(modulus)
        if not mod or mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if len(mod) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = mod
        self.degree = len(mod) - 1

    def element(self, coeffs: Sequence[int]) -> "QuotientRingElement":
        rem = poly_divmod_monic(poly_trim(coeffs), self.modulus)[1]
        return QuotientRingElement(self, rem)

    @property
    def zero(self) -> "QuotientRingElement":
        return QuotientRingElement(self, ())

    @property
    def one(self) -> "QuotientRingElement":
        return QuotientRingElement(self, (1,))

    def x_power(self, n: int) -> "QuotientRingElement":
        return self.element(poly_x_power(n))

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientRing) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"QuotientRing(modulus={list(self.modulus)})"


class QuotientRingElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, reduced_coeffs: Sequence[int]):
        self.ring = ring
        c = list(reduced_coeffs)
        c += [0] * (ring.degree - len(c))
        self.coeffs = tuple(c)

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "QuotientRingElement") -> "QuotientRingElement":
        self._check(other)
        return QuotientRingElement(
            self.ring, poly_trim(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "QuotientRingElement") -> "QuotientRingElement":
        self._check(other)
        return QuotientRingElement(
            self.ring, poly_trim(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "QuotientRingElement":
        return QuotientRingElement(self.ring, poly_neg(self.coeffs))

    def __mul__(self, other) -> "QuotientRingElement":
        if isinstance(other, int):
            return QuotientRingElement(self.ring, poly_scale(other, self.coeffs))
        self._check(other)
        return self.ring.element(poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuotientRingElement":
        result = self.ring.one
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.element((other,))
        if not isinstance(other, QuotientRingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"QRE({list(self.coeffs)} mod {list(self.ring.modulus)})"


def mult_matrix(a: QuotientRingElement) -> IntMatrix:
    """Matrix of multiplication by a on the monomial basis 1, x, .., x^{d-1}."""
    ring = a.ring
    cols = [(a * ring.x_power(j)).coeffs for j in range(ring.degree)]
    return IntMatrix.from_columns(cols, nrows=ring.degree)


def mult_matrix_determinant(a: QuotientRingElement) -> int:
    """det of multiplication by a; multiplicative in a, and +-1 iff a is a unit."""
    return mult_matrix(a).det()


def ring_inverse(a: QuotientRingElement) -> QuotientRingElement | None:
    """Inverse of a in Z[x]/(m) if one exists over Z, else None."""
    ring = a.ring
    rhs = [1] + [0] * (ring.degree - 1)
    sol = solve_integer(mult_matrix(a), rhs)
    if sol is None:
        return None
    inv = QuotientRingElement(ring, poly_trim(sol))
    assert (a * inv) == ring.one
    return inv
