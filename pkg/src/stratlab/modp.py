"""Mod-p Dieudonne modules: F, V, canonical filtrations and EO invariants.

A module is a vector space N = k^{2q} with F(x) = F_matrix . x^(p) and
V(x) = V_matrix . x^(1/p), where x^(p) is the coordinatewise Frobenius. The
columns of F_matrix are therefore the images of the basis vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import cached_property

from .errors import EtaInvalid, InvariantViolation, NoSplitting
from .ffield import GF, SemilinearMap, Subspace
from .finalseq import FinalSequence
from .polygons import NewtonPolygon
from .weyl import CosetRep

__all__ = [
    "ModPModule",
    "EtaVector",
    "invariant_failures",
    "semilinear_rank_stable",
    "canonical_filtration",
    "final_flag",
    "final_sequence_of_module",
    "unitary_eta",
    "eo_class_from_eta",
    "cyclic_module",
    "minimal_module",
    "superspecial_unitary_module",
    "direct_sum",
]


@dataclass(frozen=True)
class ModPModule:
    """Matrix entries are given as field values: an int is an element of F_p,
    a pair [a, b] is a + b s in F_{p^2}. Use ``field.export_mat`` to feed
    stored matrices back in."""

    p: int
    F_matrix: tuple
    V_matrix: tuple
    field_degree: int = 1
    splitting: tuple | None = None  # (M1, M2), 1-based basis indices
    pairing: tuple | None = None
    signature: tuple[int, int] | None = None
    basis_names: tuple[str, ...] | None = dc_field(default=None, compare=False)
    check: bool = dc_field(default=True, compare=False, repr=False)

    def __post_init__(self):
        K = self.field
        object.__setattr__(self, "F_matrix", K.mat(self.F_matrix))
        object.__setattr__(self, "V_matrix", K.mat(self.V_matrix))
        if self.pairing is not None:
            object.__setattr__(self, "pairing", K.mat(self.pairing))
        if self.splitting is not None:
            M1, M2 = self.splitting
            object.__setattr__(self, "splitting", (tuple(sorted(M1)), tuple(sorted(M2))))
        if self.signature is not None:
            object.__setattr__(self, "signature", tuple(self.signature))
        if self.basis_names is None:
            object.__setattr__(self, "basis_names", tuple(f"x{i}" for i in range(1, self.dim + 1)))
        if self.check:
            failures = invariant_failures(self)
            if failures:
                raise InvariantViolation(*failures[0])

    @cached_property
    def field(self) -> GF:
        return GF(self.p, self.field_degree)

    @property
    def dim(self) -> int:
        return len(self.F_matrix)

    @property
    def q(self) -> int:
        return self.dim // 2

    @cached_property
    def F(self) -> SemilinearMap:
        return SemilinearMap(self.field, self.F_matrix, 1)

    @cached_property
    def V(self) -> SemilinearMap:
        return SemilinearMap(self.field, self.V_matrix, -1)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def part(self, which: int) -> Subspace:
        """The coordinate span N_1 (which=1) or N_2 (which=2)."""
        if self.splitting is None:
            raise NoSplitting("module has no splitting")
        return Subspace.coordinate(self.field, self.dim, [i - 1 for i in self.splitting[which - 1]])

    def describe(self, W: Subspace) -> str:
        return "<" + ", ".join(W.labels(self.basis_names)) + ">"


def invariant_failures(m: ModPModule) -> list[tuple[str, str]]:
    """(check, message) for every violated module invariant; empty when valid."""
    n = len(m.F_matrix)
    out = []
    shapes = [("F_matrix", m.F_matrix), ("V_matrix", m.V_matrix)]
    if m.pairing is not None:
        shapes.append(("pairing", m.pairing))
    for name, A in shapes:
        if any(len(row) != n for row in A):
            return [("shape", f"{name} is not {n}x{n}")]
    if n == 0 or n % 2:
        return [("shape", f"dimension {n} is not a positive even number")]
    F, V = m.F, m.V
    if any(any(row) for row in F.compose(V).matrix):
        out.append(("FV=0", "F o V is not zero"))
    if any(any(row) for row in V.compose(F).matrix):
        out.append(("VF=0", "V o F is not zero"))
    if F.kernel() != V.image():
        out.append(("kerF=imV", "ker F differs from im V"))
    if V.kernel() != F.image():
        out.append(("kerV=imF", "ker V differs from im F"))
    if m.splitting is not None:
        M1, M2 = m.splitting
        if set(M1) & set(M2) or set(M1) | set(M2) != set(range(1, n + 1)):
            out.append(("splitting", "M1 and M2 must partition 1..2q"))
        else:
            N1, N2 = m.part(1), m.part(2)
            for name, op in (("F", F), ("V", V)):
                if not (op.image(N1) <= N2 and op.image(N2) <= N1):
                    out.append(("homogeneous", f"{name} does not swap N1 and N2"))
    if m.pairing is not None:
        B = m.pairing
        K = m.field
        if any(B[i][j] != K.neg(B[j][i]) for i in range(n) for j in range(n)) or any(B[i][i] for i in range(n)):
            out.append(("alternating", "pairing is not alternating"))
    return out


def semilinear_rank_stable(m: ModPModule) -> int:
    """Dimension of the stable image of F (the p-rank)."""
    G = m.F
    r = G.rank()
    for _ in range(m.dim):
        G = m.F.compose(G)
        r_next = G.rank()
        if r_next == r:
            break
        r = r_next
    return r


def canonical_filtration(m: ModPModule) -> list[Subspace]:
    """Closure of {0, N} under W -> F(W) and W -> V^{-1}(W), sorted by dimension."""
    members = {m.zero(), m.full()}
    todo = list(members)
    while todo:
        W = todo.pop()
        for U in (m.F.image(W), m.V.preimage(W)):
            if U not in members:
                members.add(U)
                todo.append(U)
    chain = sorted(members, key=lambda W: W.dim)
    for lo, hi in zip(chain, chain[1:]):
        if not lo < hi:
            raise InvariantViolation("canonical filtration", "F/V^-1 closure is not a chain")
    return chain


def _refine(chain: list[Subspace], rng: random.Random | None) -> list[Subspace]:
    K = chain[0].field
    n = chain[0].n
    flag = [chain[0]]
    for lo, hi in zip(chain, chain[1:]):
        cur = lo
        if rng is None:
            # echelon basis of the larger space, pivots ascending
            for v in hi.basis:
                if not cur.contains(v):
                    cur = cur + Subspace.span(K, n, [v])
                    flag.append(cur)
        else:
            while cur.dim < hi.dim:
                v = tuple(0 for _ in range(n))
                for b in hi.basis:
                    c = rng.randrange(K.order)
                    v = tuple(K.add(x, K.mul(c, y)) for x, y in zip(v, b))
                if not cur.contains(v):
                    cur = cur + Subspace.span(K, n, [v])
                    flag.append(cur)
    return flag


def final_flag(m: ModPModule, rng: random.Random | None = None) -> list[Subspace]:
    """A full flag refining the canonical filtration (deterministic unless rng given)."""
    return _refine(canonical_filtration(m), rng)


def final_sequence_of_module(m: ModPModule, rng: random.Random | None = None) -> FinalSequence:
    flag = final_flag(m, rng)
    return FinalSequence(m.q, tuple(m.F.image(C).dim for C in flag))


@dataclass(frozen=True)
class EtaVector:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        prev = 0
        for v in values:
            if not prev <= v <= prev + 1:
                raise EtaInvalid(f"eta must be non-decreasing with unit steps from 0: {values}")
            prev = v

    @property
    def q(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        return self.values[j - 1]


def unitary_eta(m: ModPModule, flag: list[Subspace] | None = None) -> EtaVector:
    """eta_1(j) = dim(C_{1,j} cap ker F) along the flag cut down to N_1."""
    N1 = m.part(1)
    if flag is None:
        flag = final_flag(m)
    ker_F = m.F.kernel()
    pieces = []
    for C in flag:
        piece = C & N1
        if piece.dim and (not pieces or pieces[-1] != piece):
            pieces.append(piece)
    return EtaVector(tuple((C & ker_F).dim for C in pieces))


def eo_class_from_eta(e: EtaVector, a: int, b: int) -> CosetRep:
    """u_t is the first index at which eta reaches t."""
    if len(e.values) != a + b:
        raise EtaInvalid(f"eta has {len(e.values)} entries, expected {a + b}")
    if not e.values or e.values[-1] != b:
        raise EtaInvalid(f"eta must end at b = {b}: {e.values}")
    u = tuple(e.values.index(t) + 1 for t in range(1, b + 1))
    return CosetRep(a, b, u)


def cyclic_module(m: int, n: int, p: int) -> ModPModule:
    """M_{m,n}: F(e_i) = e_{i+m}, V(e_i) = e_{i+n}, zero once the index passes m+n-1."""
    h = m + n
    F = [[0] * h for _ in range(h)]
    V = [[0] * h for _ in range(h)]
    for i in range(h):
        if i + m < h:
            F[i + m][i] = 1
        if i + n < h:
            V[i + n][i] = 1
    names = tuple(f"e{i}" for i in range(h))
    return ModPModule(p, F, V, basis_names=names, check=False)


def direct_sum(mods: list[ModPModule], names: list[str] | None = None) -> ModPModule:
    n = sum(x.dim for x in mods)
    F = [[0] * n for _ in range(n)]
    V = [[0] * n for _ in range(n)]
    labels = []
    off = 0
    for k, x in enumerate(mods):
        XF, XV = x.field.export_mat(x.F_matrix), x.field.export_mat(x.V_matrix)
        for i in range(x.dim):
            for j in range(x.dim):
                F[off + i][off + j] = XF[i][j]
                V[off + i][off + j] = XV[i][j]
        prefix = names[k] if names else f"M{k + 1}"
        labels.extend(f"{prefix}.{b}" for b in x.basis_names)
        off += x.dim
    return ModPModule(mods[0].p, F, V, field_degree=mods[0].field_degree, basis_names=tuple(labels))


def minimal_module(P: NewtonPolygon, p: int) -> ModPModule:
    """Direct sum of the cyclic modules M_{m,n}, one per factor copy, slopes ascending."""
    parts, names = [], []
    for m, n, mult in P.factors:
        for c in range(mult):
            parts.append(cyclic_module(m, n, p))
            names.append(f"M{m}{n}" + (f"_{c + 1}" if mult > 1 else ""))
    return direct_sum(parts, names)


def superspecial_unitary_module(a: int, b: int, p: int) -> ModPModule:
    """q = a+b copies of M_{1,1} with a splitting of signature (a, b).

    Copy k contributes its generator e0 to N_1, except for the first b even
    copies, which contribute F(e0) instead; the pairing is <e0, e1> = 1 in
    each copy.
    """
    q = a + b
    base = direct_sum([cyclic_module(1, 1, p)] * q, [f"c{k}" for k in range(1, q + 1)])
    flipped = {2 * t for t in range(1, b + 1)}
    M1, M2 = [], []
    B = [[0] * (2 * q) for _ in range(2 * q)]
    for k in range(1, q + 1):
        e0, e1 = 2 * k - 1, 2 * k
        (M1 if k not in flipped else M2).append(e0)
        (M2 if k not in flipped else M1).append(e1)
        B[e0 - 1][e1 - 1] = 1
        B[e1 - 1][e0 - 1] = -1
    return ModPModule(
        p,
        base.F_matrix,
        base.V_matrix,
        splitting=(tuple(M1), tuple(M2)),
        pairing=B,
        signature=(a, b),
        basis_names=base.basis_names,
    )
