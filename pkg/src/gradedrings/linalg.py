"""Exact linear algebra over the rationals and Gaussian rationals.

Everything in this package computes with exact scalars.  A :class:`Scalar`
is a pair of ``Fraction`` values (real and imaginary part), so the field is
Q or Q(i) and field axioms hold on the nose.  A :class:`Subspace` stores a
reduced row-echelon basis, which is a canonical form: two subspaces are
equal exactly when their stored matrices are identical.  There is no
floating point and no tolerance anywhere.

Pairings against a Gram matrix G use the convention

    <x, y> = sum_ij  x_i * G[i][j] * conj(y_j),

linear in the first argument and conjugate-linear in the second, which for
Hermitian G gives <y, x> = conj(<x, y>).
"""

from __future__ import annotations

import re
from bisect import bisect_left
from fractions import Fraction

from .errors import MalformedInputError, PreconditionError

_F0 = Fraction(0)
_F1 = Fraction(1)


class Scalar:
    """An element of Q or Q(i) in reduced canonical form.

    Immutable by convention; arithmetic returns new objects.  ``Fraction``
    keeps numerator/denominator reduced with a positive denominator, so
    equal scalars always compare and hash equal.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    # -- parsing and formatting ------------------------------------------

    _REAL_IMAG = re.compile(
        r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)\s*\*\s*i)?\s*$"
    )
    _PURE_IMAG = re.compile(r"^\s*(?P<im>[+-]?\d+(?:/\d+)?)\s*\*\s*i\s*$")

    @classmethod
    def from_string(cls, text: str) -> "Scalar":
        """Parse "p", "p/q", "p/q+r/s*i", "p/q-r/s*i" or "r/s*i"."""
        if not isinstance(text, str):
            raise MalformedInputError(f"scalar must be a string, got {type(text).__name__}")
        m = cls._REAL_IMAG.match(text)
        if m:
            re_part = Fraction(m.group("re"))
            if m.group("im") is None:
                return cls(re_part)
            im_part = Fraction(m.group("im"))
            if m.group("sign") == "-":
                im_part = -im_part
            return cls(re_part, im_part)
        m = cls._PURE_IMAG.match(text)
        if m:
            return cls(_F0, Fraction(m.group("im")))
        raise MalformedInputError(f"cannot parse scalar string {text!r}")

    @staticmethod
    def _frac_str(f: Fraction) -> str:
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def __str__(self):
        if not self.im:
            return self._frac_str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self._frac_str(self.re)}{sign}{self._frac_str(abs(self.im))}*i"

    def __repr__(self):
        return f"Scalar({self})"

    # -- field arithmetic -------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of scalars by zero")
        if not self.im and not other.im:
            return Scalar(self.re / other.re)
        norm = other.re * other.re + other.im * other.im
        return Scalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def conjugate(self) -> "Scalar":
        if not self.im:
            return self
        return Scalar(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.im or other.im:
            raise MalformedInputError("complex scalars are not ordered")
        return self.re < other.re


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value) -> Scalar:
    s = Scalar._coerce(value)
    if s is None:
        if isinstance(value, str):
            return Scalar.from_string(value)
        raise MalformedInputError(f"cannot interpret {value!r} as a scalar")
    return s


# -- vector helpers -------------------------------------------------------

def zero_vector(n: int) -> list[Scalar]:
    return [ZERO] * n


def unit_vector(n: int, i: int) -> list[Scalar]:
    v = [ZERO] * n
    v[i] = ONE
    return v


def vector(values) -> list[Scalar]:
    return [as_scalar(v) for v in values]


def is_zero_vector(v) -> bool:
    return not any(v)


def conj_vector(v) -> list[Scalar]:
    return [x.conjugate() for x in v]


def pairing(u, v, gram) -> Scalar:
    """<u, v> against one Gram matrix (conjugate-linear in v)."""
    acc = ZERO
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = gram[i]
        part = ZERO
        for j, vj in enumerate(v):
            if vj and row[j]:
                part = part + row[j] * vj.conjugate()
        if part:
            acc = acc + ui * part
    return acc


def is_hermitian(gram) -> bool:
    n = len(gram)
    if any(len(row) != n for row in gram):
        return False
    for i in range(n):
        for j in range(i, n):
            if gram[i][j] != gram[j][i].conjugate():
                return False
    return True


# -- subspaces ------------------------------------------------------------

class EchelonBasis:
    """Mutable accumulator that keeps its rows in reduced row-echelon form.

    Rows have leading coefficient 1, pivot columns are zero in every other
    row, and rows are ordered by pivot column, so the final matrix is the
    canonical representative of the span.
    """

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def residual(self, vec) -> list[Scalar]:
        """Reduce ``vec`` against the current rows; zero iff contained."""
        if len(vec) != self.ambient:
            raise MalformedInputError(
                f"vector has length {len(vec)}, ambient dimension is {self.ambient}"
            )
        v = list(vec)
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        v[j] = v[j] - c * rj
        return v

    def contains(self, vec) -> bool:
        return is_zero_vector(self.residual(vec))

    def add(self, vec) -> bool:
        """Insert a vector; returns True when the span grew."""
        v = self.residual(vec)
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return False
        c = v[lead]
        if c != ONE:
            v = [x / c if x else ZERO for x in v]
        for row in self.rows:
            f = row[lead]
            if f:
                for j, vj in enumerate(v):
                    if vj:
                        row[j] = row[j] - f * vj
        at = bisect_left(self.pivots, lead)
        self.pivots.insert(at, lead)
        self.rows.insert(at, v)
        return True

    def extend(self, vectors) -> None:
        for v in vectors:
            self.add(v)

    def to_subspace(self) -> "Subspace":
        return Subspace(self.ambient, tuple(tuple(r) for r in self.rows), tuple(self.pivots))


class Subspace:
    """A linear subspace held by its canonical reduced-echelon basis."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, rows, pivots):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def basis(self) -> EchelonBasis:
        eb = EchelonBasis(self.ambient)
        eb.rows = [list(r) for r in self.rows]
        eb.pivots = list(self.pivots)
        return eb

    def contains(self, vec) -> bool:
        return self.basis().contains(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise MalformedInputError("ambient dimensions differ")
        eb = self.basis()
        return all(eb.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise MalformedInputError("ambient dimensions differ")
        eb = self.basis()
        eb.extend(other.rows)
        return eb.to_subspace()

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row-reduce rows (a | a) and (b | 0); rows whose left
        half vanished have right halves spanning the intersection."""
        if other.ambient != self.ambient:
            raise MalformedInputError("ambient dimensions differ")
        n = self.ambient
        eb = EchelonBasis(2 * n)
        for a in self.rows:
            eb.add(list(a) + list(a))
        for b in other.rows:
            eb.add(list(b) + [ZERO] * n)
        out = EchelonBasis(n)
        for row in eb.rows:
            if not any(row[:n]):
                out.add(row[n:])
        return out.to_subspace()

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"<Subspace dim {self.dim} of {self.ambient}>"


def span(vectors, ambient: int) -> Subspace:
    """Canonical reduced-echelon basis of the linear span."""
    eb = EchelonBasis(ambient)
    for v in vectors:
        eb.add(v)
    return eb.to_subspace()


def full_space(ambient: int) -> Subspace:
    return span([unit_vector(ambient, i) for i in range(ambient)], ambient)


def nullspace(matrix, ncols: int) -> Subspace:
    """Exact right kernel {v : M v = 0} of a matrix given as a list of rows."""
    eb = EchelonBasis(ncols)
    for row in matrix:
        if len(row) != ncols:
            raise MalformedInputError("matrix rows have inconsistent length")
        if eb.dim == ncols:
            break
        eb.add(row)
    pivot_set = set(eb.pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zero_vector(ncols)
        v[free] = ONE
        for p, row in zip(eb.pivots, eb.rows):
            if row[free]:
                v[p] = -row[free]
        kernel.append(v)
    return span(kernel, ncols)


def joint_orthogonal_complement(inner: Subspace, outer: Subspace, grams) -> Subspace:
    """Vectors of ``outer`` orthogonal to all of ``inner`` under every Gram.

    Returns {x in outer : <x, s>_a = 0 for all s in inner and all a}.
    Requires inner <= outer and Hermitian Grams.
    """
    n = outer.ambient
    if inner.ambient != n:
        raise MalformedInputError("ambient dimensions differ")
    if not outer.contains_subspace(inner):
        raise PreconditionError("inner subspace is not contained in the outer one")
    for a, gram in enumerate(grams):
        if len(gram) != n or not is_hermitian(gram):
            raise MalformedInputError(f"Gram {a} is not a Hermitian {n}x{n} matrix")
    if inner.is_zero() or outer.is_zero():
        return outer
    # <x, s> = sum_j x_j * (G conj(s))_j is linear in x; collect one
    # constraint row per (Gram, inner basis vector), then solve inside the
    # coordinates of ``outer``.
    constraints = []
    for gram in grams:
        for s in inner.rows:
            cs = conj_vector(s)
            row = []
            for j in range(n):
                gj = gram[j]
                acc = ZERO
                for k, ck in enumerate(cs):
                    if ck and gj[k]:
                        acc = acc + gj[k] * ck
                row.append(acc)
            if any(row):
                constraints.append(row)
    if not constraints:
        return outer
    # Rewrite each constraint in the coordinates y of x = sum_t y_t w_t.
    reduced = []
    for c in constraints:
        reduced.append([
            sum((w[j] * c[j] for j in range(n) if w[j] and c[j]), ZERO)
            for w in outer.rows
        ])
    ker = nullspace(reduced, outer.dim)
    eb = EchelonBasis(n)
    for y in ker.rows:
        x = zero_vector(n)
        for t, yt in enumerate(y):
            if yt:
                w = outer.rows[t]
                for j in range(n):
                    if w[j]:
                        x[j] = x[j] + yt * w[j]
        eb.add(x)
    return eb.to_subspace()


def psd_counterexample(gram):
    """A vector x with <x, x> < 0 if the Hermitian form is not positive
    semidefinite, else None.

    Decided exactly by symmetric elimination with diagonal pivoting.  A
    congruence transform is tracked so the returned witness is expressed in
    the original coordinates.  When no nonzero diagonal pivot remains, any
    surviving off-diagonal entry c yields the explicit witness
    -conj(c) * w_j + w_k of value -2|c|^2.
    """
    n = len(gram)
    if not is_hermitian(gram):
        raise MalformedInputError("Gram matrix is not Hermitian")
    g = [list(row) for row in gram]
    track = {i: unit_vector(n, i) for i in range(n)}
    alive = list(range(n))
    while alive:
        pivot = next((i for i in alive if g[i][i]), None)
        if pivot is None:
            for j in alive:
                for k in alive:
                    if j != k and g[j][k]:
                        c = g[j][k]
                        t = -c.conjugate()
                        return [
                            t * wj + wk for wj, wk in zip(track[j], track[k])
                        ]
            return None
        d = g[pivot][pivot]
        if d.re < 0:
            return list(track[pivot])
        alive.remove(pivot)
        for j in alive:
            f = g[j][pivot]
            if not f:
                continue
            m = f / d
            wj, wp = track[j], track[pivot]
            track[j] = [a - m * b if b else a for a, b in zip(wj, wp)]
            gp = g[pivot]
            gj = g[j]
            for k in alive:
                if gp[k]:
                    gj[k] = gj[k] - m * gp[k]
    return None


def psd_check(gram) -> bool:
    """True iff the Hermitian form is positive semidefinite (exact)."""
    return psd_counterexample(gram) is None
