"""Unitary p-adic Dieudonne modules given by rational-integer matrices.

All matrices have entries in Z, on which the Witt-vector Frobenius acts
trivially, so F^n has matrix A_F^n and the compatibility of F, V and the
pairing reduces to plain matrix identities. Witt vectors are never built;
everything is exact integer arithmetic plus p-adic valuations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegerEntries, NotOddPrime
from .ffield import GF, rank
from .modp import ModPModule

__all__ = [
    "CrystalModule",
    "AxiomCheck",
    "AxiomReport",
    "IsoclinicResult",
    "SlopeMultiset",
    "verify_axioms",
    "table1_module",
    "cyclic_lift",
    "isoclinic_check",
    "newton_slopes",
    "charpoly",
    "reduce_mod_p",
    "vp",
    "vp_det",
]

INF = float("inf")


def _is_odd_prime(p) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p**0.5) + 1, 2))


def _int_matrix(name, A):
    rows = []
    for row in A:
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, (float, Fraction)) and x == int(x):
                    x = int(x)
                else:
                    raise NonIntegerEntries(f"{name} has a non-integer entry {x!r}")
            out.append(x)
        rows.append(tuple(out))
    return tuple(rows)


@dataclass(frozen=True)
class CrystalModule:
    p: int
    A_F: tuple
    A_V: tuple
    B: tuple | None = None
    splitting: tuple | None = None  # (M1, M2), 1-based
    signature: tuple[int, int] | None = None
    basis_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not _is_odd_prime(self.p):
            raise NotOddPrime(f"p = {self.p!r} is not an odd prime")
        object.__setattr__(self, "A_F", _int_matrix("A_F", self.A_F))
        object.__setattr__(self, "A_V", _int_matrix("A_V", self.A_V))
        if self.B is not None:
            object.__setattr__(self, "B", _int_matrix("B", self.B))
        if self.splitting is not None:
            M1, M2 = self.splitting
            object.__setattr__(self, "splitting", (tuple(M1), tuple(M2)))
        if self.signature is not None:
            object.__setattr__(self, "signature", tuple(self.signature))
        if self.basis_names is None:
            object.__setattr__(self, "basis_names", tuple(f"x{i}" for i in range(1, len(self.A_F) + 1)))

    @property
    def rank(self) -> int:
        return len(self.A_F)

    @property
    def q(self) -> int:
        return self.rank // 2

    def replace(self, **changes) -> "CrystalModule":
        data = dict(
            p=self.p, A_F=self.A_F, A_V=self.A_V, B=self.B, splitting=self.splitting,
            signature=self.signature, basis_names=self.basis_names,
        )
        data.update(changes)
        return CrystalModule(**data)


# integer matrix helpers ---------------------------------------------------

def _matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(sum(x * y for x, y in zip(row, c)) for c in cols) for row in A)


def _transpose(A):
    return tuple(zip(*A))


def _scalar(n, c):
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def vp(x: int, p: int):
    if x == 0:
        return INF
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _vp_matrix(A, p):
    return min((vp(x, p) for row in A for x in row), default=INF)


def _det(A) -> int:
    """Bareiss fraction-free determinant."""
    M = [list(r) for r in A]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1] if n else 1


def vp_det(A, p: int):
    return vp(_det(A), p)


def _rank_mod_p(A, p) -> int:
    if not A or not A[0]:
        return 0
    K = GF(p)
    return rank(K, K.mat(A))


# axioms -------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    number: int
    name: str
    passed: bool
    detail: str = ""
    counterexample: tuple[str, ...] = ()


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"({c.number}) {c.name}: {mark}"
            if c.detail:
                line += f" - {c.detail}"
            if c.counterexample:
                line += f" [counterexample: {', '.join(c.counterexample)}]"
            lines.append(line)
        return "\n".join(lines)


def verify_axioms(m: CrystalModule) -> AxiomReport:
    """Check the seven conditions for a unitary p-adic Dieudonne module."""
    n, p, names = m.rank, m.p, m.basis_names
    checks = []

    square = all(len(A) == n and all(len(r) == n for r in A) for A in (m.A_F, m.A_V, m.B or m.A_F))
    ok1 = square and n > 0 and n % 2 == 0
    checks.append(AxiomCheck(1, "free of rank 2q", ok1, "" if ok1 else f"matrices are not a common even size (rank {n})"))
    if not ok1:
        return AxiomReport(tuple(checks) + tuple(
            AxiomCheck(k, t, False, "skipped: bad shape") for k, t in _LATER))
    q = n // 2

    if m.splitting is None:
        checks.append(AxiomCheck(2, "M = M1 + M2 with rank-q summands", False, "no splitting"))
        M1 = M2 = None
    else:
        M1, M2 = m.splitting
        ok2 = (
            len(M1) == q and len(M2) == q
            and set(M1).isdisjoint(M2) and set(M1) | set(M2) == set(range(1, n + 1))
        )
        checks.append(AxiomCheck(2, "M = M1 + M2 with rank-q summands", ok2,
                                 "" if ok2 else f"M1={list(M1)} and M2={list(M2)} do not split 1..{n} into halves"))
        if not ok2:
            M1 = M2 = None

    pI = _scalar(n, p)
    FV, VF = _matmul(m.A_F, m.A_V), _matmul(m.A_V, m.A_F)
    bad = [j for j in range(n) if any(FV[i][j] != pI[i][j] or VF[i][j] != pI[i][j] for i in range(n))]
    checks.append(AxiomCheck(3, "F V = V F = p", not bad, "" if not bad else "A_F A_V or A_V A_F differs from p Id",
                             tuple(names[j] for j in bad[:1])))

    checks.append(_check_pairing(m))

    if M1 is None or m.signature is None:
        checks.append(AxiomCheck(5, "signature dimensions", False, "needs a valid splitting and a signature"))
    else:
        a, b = m.signature
        i1, i2 = [i - 1 for i in M1], [i - 1 for i in M2]
        d1 = q - _rank_mod_p([[m.A_F[r][c] for c in i2] for r in i1], p)
        d2 = q - _rank_mod_p([[m.A_F[r][c] for c in i1] for r in i2], p)
        ok5 = (d1, d2) == (a, b)
        checks.append(AxiomCheck(5, "signature dimensions", ok5,
                                 f"dim M1/FM2 = {d1}, dim M2/FM1 = {d2}, expected ({a},{b})"))

    if M1 is None:
        checks.append(AxiomCheck(6, "F and V homogeneous of degree 1", False, "needs a valid splitting"))
        checks.append(AxiomCheck(7, "M1 and M2 totally isotropic", False, "needs a valid splitting"))
    else:
        blocks = [set(i - 1 for i in M1), set(i - 1 for i in M2)]
        witness = None
        for A in (m.A_F, m.A_V):
            for j in range(n):
                same = blocks[0] if j in blocks[0] else blocks[1]
                if any(A[i][j] for i in same):
                    witness = witness or names[j]
        checks.append(AxiomCheck(6, "F and V homogeneous of degree 1", witness is None,
                                 "" if witness is None else "F or V keeps a basis vector in its own summand",
                                 (witness,) if witness else ()))
        if m.B is None:
            checks.append(AxiomCheck(7, "M1 and M2 totally isotropic", False, "no pairing"))
        else:
            pair = next(((names[i], names[j]) for blk in blocks for i in blk for j in blk if m.B[i][j]), None)
            checks.append(AxiomCheck(7, "M1 and M2 totally isotropic", pair is None,
                                     "" if pair is None else "nonzero pairing inside a summand", pair or ()))
    return AxiomReport(tuple(checks))


_LATER = [
    (2, "M = M1 + M2 with rank-q summands"),
    (3, "F V = V F = p"),
    (4, "perfect alternating pairing with <Fx,y> = <x,Vy>"),
    (5, "signature dimensions"),
    (6, "F and V homogeneous of degree 1"),
    (7, "M1 and M2 totally isotropic"),
]


def _check_pairing(m: CrystalModule) -> AxiomCheck:
    title = "perfect alternating pairing with <Fx,y> = <x,Vy>"
    B, n, names = m.B, m.rank, m.basis_names
    if B is None:
        return AxiomCheck(4, title, False, "no pairing")
    for i in range(n):
        if B[i][i]:
            return AxiomCheck(4, title, False, "alternating check failed: <x,x> != 0", (names[i],))
        for j in range(i + 1, n):
            if B[i][j] != -B[j][i]:
                return AxiomCheck(4, title, False, "alternating check failed: B is not antisymmetric",
                                  (names[i], names[j]))
    if _rank_mod_p(B, m.p) != n:
        return AxiomCheck(4, title, False, "perfectness check failed: det B is not a unit mod p")
    lhs, rhs = _matmul(_transpose(m.A_F), B), _matmul(B, m.A_V)
    for i in range(n):
        for j in range(n):
            if lhs[i][j] != rhs[i][j]:
                return AxiomCheck(4, title, False, "adjointness check failed: A_F^T B != B A_V",
                                  (names[i], names[j]))
    return AxiomCheck(4, title, True)


# built-in modules ---------------------------------------------------------

TABLE1_NAMES = tuple(f"e{i}" for i in range(1, 6)) + tuple(f"f{i}" for i in range(1, 6))

# image of each basis vector as (coefficient, basis name); "p" marks a factor p
_TABLE1_F = {
    "e1": (1, "f5"), "e2": ("p", "f1"), "e3": (1, "f2"), "e4": (1, "f3"), "e5": ("p", "f4"),
    "f1": ("-p", "e5"), "f2": (1, "e1"), "f3": ("p", "e2"), "f4": ("p", "e3"), "f5": (1, "e4"),
}
_TABLE1_V = {
    "e1": ("p", "f2"), "e2": (1, "f3"), "e3": (1, "f4"), "e4": ("p", "f5"), "e5": (-1, "f1"),
    "f1": (1, "e2"), "f2": ("p", "e3"), "f3": ("p", "e4"), "f4": (1, "e5"), "f5": ("p", "e1"),
}


def _table_matrix(table, p):
    idx = {name: k for k, name in enumerate(TABLE1_NAMES)}
    A = [[0] * 10 for _ in range(10)]
    for src, (coef, dst) in table.items():
        c = {"p": p, "-p": -p}.get(coef, coef)
        A[idx[dst]][idx[src]] = c
    return A


def table1_module(p: int) -> CrystalModule:
    """The signature (3,2) module whose reduction lies in the EO stratum gamma_{3,4}."""
    if not _is_odd_prime(p):
        raise NotOddPrime(f"p = {p!r} is not an odd prime")
    B = [[0] * 10 for _ in range(10)]
    for i in range(5):
        sign = (-1) ** i  # <e_i, f_i> = (-1)^(i-1) with 1-based i
        B[i][5 + i] = sign
        B[5 + i][i] = -sign
    return CrystalModule(
        p=p,
        A_F=_table_matrix(_TABLE1_F, p),
        A_V=_table_matrix(_TABLE1_V, p),
        B=B,
        splitting=(tuple(range(1, 6)), tuple(range(6, 11))),
        signature=(3, 2),
        basis_names=TABLE1_NAMES,
    )


def cyclic_lift(m: int, n: int, p: int) -> CrystalModule:
    """Lift of M_{m,n}: F(e_i) = e_{i+m}, V(e_i) = e_{i+n}, with e_{j+m+n} = p e_j."""
    h = m + n
    F = [[0] * h for _ in range(h)]
    V = [[0] * h for _ in range(h)]
    for i in range(h):
        F[(i + m) % h][i] = 1 if i + m < h else p
        V[(i + n) % h][i] = 1 if i + n < h else p
    return CrystalModule(p=p, A_F=F, A_V=V, basis_names=tuple(f"e{i}" for i in range(h)))


# slopes -------------------------------------------------------------------

@dataclass(frozen=True)
class IsoclinicResult:
    N: int
    s: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.s, self.N)


def isoclinic_check(m: CrystalModule, n_max: int | None = None) -> IsoclinicResult | None:
    """Smallest N <= n_max with A_F^N = p^s U, U invertible mod p.

    When found, F^N M = p^s M and every slope of the isocrystal is s/N.
    """
    if n_max is None:
        n_max = 2 * m.rank
    p = m.p
    power = m.A_F
    for N in range(1, n_max + 1):
        if N > 1:
            power = _matmul(power, m.A_F)
        s = _vp_matrix(power, p)
        if s == INF:
            return None
        U = [[x // p**s for x in row] for row in power]
        if _rank_mod_p(U, p) == m.rank:
            return IsoclinicResult(N, s)
    return None


@dataclass(frozen=True)
class SlopeMultiset:
    """(slope, height) pairs, slopes ascending and distinct."""

    parts: tuple[tuple[Fraction, int], ...]

    @property
    def height(self) -> int:
        return sum(h for _, h in self.parts)

    @property
    def dimension(self) -> Fraction:
        return sum((s * h for s, h in self.parts), Fraction(0))

    def is_symmetric(self) -> bool:
        d = dict(self.parts)
        return all(d.get(1 - s) == h for s, h in self.parts)

    def __str__(self):
        def fmt(s):
            return str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"
        return "[" + ", ".join(fmt(s) if h == 1 else f"{fmt(s)}^{h}" for s, h in self.parts) + "]"


def charpoly(A) -> list[int]:
    """Coefficients c_0, ..., c_n of det(T - A), by Faddeev-LeVerrier over Z."""
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = _scalar(n, 0)
    for k in range(1, n + 1):
        AM = _matmul(A, M)
        M = tuple(tuple(AM[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)) for i in range(n))
        AM = _matmul(A, M)
        tr = sum(AM[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return coeffs


def newton_slopes(m: CrystalModule) -> SlopeMultiset:
    """p-adic valuations of the eigenvalues of A_F, from the Newton polygon of its char poly."""
    _int_matrix("A_F", m.A_F)
    coeffs = charpoly(m.A_F)
    if coeffs[0] == 0:
        raise ValueError("A_F is singular; the isocrystal is not defined")
    pts = [(k, vp(c, m.p)) for k, c in enumerate(coeffs) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    parts = {}
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        s = Fraction(y1 - y2, x2 - x1)
        parts[s] = parts.get(s, 0) + (x2 - x1)
    return SlopeMultiset(tuple(sorted(parts.items())))


def reduce_mod_p(m: CrystalModule) -> ModPModule:
    p = m.p
    red = lambda A: [[x % p for x in row] for row in A]  # noqa: E731
    return ModPModule(
        p,
        red(m.A_F),
        red(m.A_V),
        splitting=m.splitting,
        pairing=red(m.B) if m.B is not None else None,
        signature=m.signature,
        basis_names=m.basis_names,
    )
