"""Exact linear algebra over F_p and F_{p^2}, including Frobenius-semilinear maps.

Field elements are plain ints. For F_{p^2} the int ``a + b*p`` encodes
``a + b*s`` with ``s^2 = d`` for the least quadratic non-residue ``d``, so
Frobenius is the conjugation ``a + b*s -> a - b*s``.

Vectors are tuples, matrices are tuples of row tuples, and a subspace is
held by its reduced row echelon basis, which makes equal subspaces compare
equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

__all__ = ["GF", "Subspace", "SemilinearMap", "rref", "rank", "nullspace", "matmul"]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class GF:
    p: int
    degree: int = 1

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.degree not in (1, 2):
            raise ValueError("only F_p and F_{p^2} are supported")
        if self.degree == 2 and self.p == 2:
            raise ValueError("F_4 is not supported")

    @cached_property
    def nonresidue(self) -> int:
        squares = {x * x % self.p for x in range(self.p)}
        return next(d for d in range(2, self.p) if d not in squares)

    @property
    def order(self) -> int:
        return self.p**self.degree

    def elements(self):
        return range(self.order)

    # encoding ---------------------------------------------------------
    def split(self, x: int) -> tuple[int, int]:
        return x % self.p, x // self.p

    def join(self, a: int, b: int = 0) -> int:
        return a % self.p + (b % self.p) * self.p if self.degree == 2 else a % self.p

    def coerce(self, value) -> int:
        """From an int or, for F_{p^2}, a coefficient pair [a, b]."""
        if isinstance(value, (list, tuple)):
            if self.degree != 2 or len(value) != 2:
                raise ValueError(f"coefficient pair {value!r} needs degree 2")
            return self.join(int(value[0]), int(value[1]))
        return self.join(int(value))

    def export(self, x: int):
        if self.degree == 1:
            return x
        a, b = self.split(x)
        return a if b == 0 else [a, b]

    # arithmetic -------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.degree == 1:
            return (x + y) % self.p
        (a, b), (c, d) = self.split(x), self.split(y)
        return self.join(a + c, b + d)

    def neg(self, x: int) -> int:
        if self.degree == 1:
            return -x % self.p
        a, b = self.split(x)
        return self.join(-a, -b)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.degree == 1:
            return x * y % self.p
        (a, b), (c, d) = self.split(x), self.split(y)
        return self.join(a * c + self.nonresidue * b * d, a * d + b * c)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        if self.degree == 1:
            return pow(x, p - 2, p)
        a, b = self.split(x)
        norm_inv = pow((a * a - self.nonresidue * b * b) % p, p - 2, p)
        return self.join(a * norm_inv, -b * norm_inv)

    def frob(self, x: int, k: int = 1) -> int:
        """x -> x^(p^k); k may be negative."""
        if self.degree == 1 or k % 2 == 0:
            return x
        a, b = self.split(x)
        return self.join(a, -b)

    # vectors / matrices ----------------------------------------------
    def vec(self, values) -> tuple[int, ...]:
        return tuple(self.coerce(v) for v in values)

    def mat(self, rows) -> tuple[tuple[int, ...], ...]:
        return tuple(self.vec(r) for r in rows)

    def export_mat(self, A) -> list[list]:
        """Inverse of :meth:`mat`: ints for F_p entries, pairs otherwise."""
        return [[self.export(x) for x in r] for r in A]

    def frob_vec(self, v, k: int = 1):
        if self.degree == 1 or k % 2 == 0:
            return tuple(v)
        return tuple(self.frob(x, k) for x in v)

    def frob_mat(self, A, k: int = 1):
        return tuple(self.frob_vec(r, k) for r in A)

    def dot(self, u, v) -> int:
        s = 0
        for x, y in zip(u, v):
            if x and y:
                s = self.add(s, self.mul(x, y))
        return s

    def matvec(self, A, v) -> tuple[int, ...]:
        return tuple(self.dot(row, v) for row in A)

    def identity(self, n: int):
        return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    def zero_matrix(self, n: int, m: int | None = None):
        return tuple((0,) * (n if m is None else m) for _ in range(n))

    def random_vector(self, n: int, rng: random.Random):
        return tuple(rng.randrange(self.order) for _ in range(n))


def matmul(K: GF, A, B):
    cols = list(zip(*B))
    return tuple(tuple(K.dot(row, c) for c in cols) for row in A)


def transpose(A):
    return tuple(zip(*A))


def rref(K: GF, rows, ncols: int):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        scale = K.inv(M[r][c])
        M[r] = [K.mul(scale, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r]), pivots


def rank(K: GF, A) -> int:
    if not A:
        return 0
    return len(rref(K, A, len(A[0]))[0])


def nullspace(K: GF, A, ncols: int):
    """Basis of {x : A x = 0}."""
    R, pivots = rref(K, A, ncols) if A else ((), [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [0] * ncols
        x[fcol] = 1
        for row, pc in zip(R, pivots):
            x[pc] = K.neg(row[fcol])
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^n, stored by its reduced echelon basis."""

    field: GF
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, K: GF, n: int, vectors) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        return cls(K, n, rref(K, vectors, n)[0] if vectors else ())

    @classmethod
    def zero(cls, K: GF, n: int) -> "Subspace":
        return cls(K, n, ())

    @classmethod
    def full(cls, K: GF, n: int) -> "Subspace":
        return cls(K, n, K.identity(n))

    @classmethod
    def coordinate(cls, K: GF, n: int, indices) -> "Subspace":
        """Span of the standard basis vectors at the given 0-based indices."""
        return cls.span(K, n, [tuple(1 if j == i else 0 for j in range(n)) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        if not any(v):
            return True
        return rank(self.field, self.basis + (tuple(v),)) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.n, self.basis + other.basis)

    def annihilator(self):
        """Rows l with l . v = 0 for every v in the subspace."""
        return nullspace(self.field, self.basis, self.n) if self.basis else list(self.field.identity(self.n))

    def __and__(self, other: "Subspace") -> "Subspace":
        constraints = list(self.annihilator()) + list(other.annihilator())
        return Subspace.span(self.field, self.n, nullspace(self.field, constraints, self.n))

    def frob(self, k: int = 1) -> "Subspace":
        return Subspace.span(self.field, self.n, [self.field.frob_vec(v, k) for v in self.basis])

    def labels(self, names) -> list[str]:
        """Names of the standard basis vectors when the subspace is coordinate."""
        out = []
        for v in self.basis:
            support = [i for i, x in enumerate(v) if x]
            if len(support) != 1:
                return [str(v) for v in self.basis]
            out.append(names[support[0]])
        return out


@dataclass(frozen=True)
class SemilinearMap:
    """x -> A . sigma^twist(x) where sigma is the p-th power Frobenius."""

    field: GF
    matrix: tuple[tuple[int, ...], ...]
    twist: int = 1

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __call__(self, v):
        return self.field.matvec(self.matrix, self.field.frob_vec(v, self.twist))

    def compose(self, other: "SemilinearMap") -> "SemilinearMap":
        """self after other."""
        K = self.field
        return SemilinearMap(K, matmul(K, self.matrix, K.frob_mat(other.matrix, self.twist)), self.twist + other.twist)

    def image(self, W: Subspace | None = None) -> Subspace:
        K = self.field
        if W is None:
            return Subspace.span(K, self.n, transpose(self.matrix))
        return Subspace.span(K, self.n, [self(v) for v in W.basis])

    def preimage(self, W: Subspace) -> Subspace:
        K = self.field
        L = W.annihilator()
        constraints = matmul(K, L, self.matrix) if L else ()
        Y = Subspace.span(K, self.n, nullspace(K, constraints, self.n) if constraints else K.identity(self.n))
        return Y.frob(-self.twist)

    def kernel(self) -> Subspace:
        return self.preimage(Subspace.zero(self.field, self.n))

    def rank(self) -> int:
        return rank(self.field, self.matrix)
