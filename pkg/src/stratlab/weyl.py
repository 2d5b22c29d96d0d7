"""Permutation combinatorics for unitary Ekedahl-Oort strata.

Permutations are stored in one-line notation (``images[i-1] == p(i)``);
cycle strings such as ``"(2,6,8,4)(3,7,9,5)"`` are accepted and printed as
sugar.  Products compose right to left: ``(p * r)(i) == p(r(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import NotInWq, NotTabulated, ParseError

__all__ = [
    "Permutation",
    "CosetRep",
    "length",
    "coset_rep",
    "enumerate_W",
    "eo_dimension",
    "is_in_Wq",
    "enumerate_Wq",
    "forget_unitary_32",
    "FORGET_TABLE_32",
]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n: int | None = None) -> "Permutation":
        """Build a permutation from cycle notation.

        ``cycles`` is either a string like ``"(1,3)(2,4)"`` or a sequence of
        integer sequences. The cycles are multiplied right to left, so they
        need not be disjoint. ``n`` defaults to the largest entry.
        """
        if isinstance(cycles, str):
            cycles = _parse_cycles(cycles)
        cycles = [tuple(int(x) for x in c) for c in cycles]
        top = max((x for c in cycles for x in c), default=0)
        if n is None:
            n = max(top, 1)
        if top > n or any(x < 1 for c in cycles for x in c):
            raise ValueError(f"cycle entries must lie in 1..{n}")
        result = cls.identity(n)
        for c in cycles:
            if len(set(c)) != len(c):
                raise ValueError(f"repeated entry in cycle {c}")
            result = result * _cycle(c, n)
        return result

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("permutations act on different sets")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its smallest entry."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __str__(self):
        return self.cycle_string()


def _parse_cycles(text: str) -> list[tuple[int, ...]]:
    stripped = text.replace(" ", "")
    if _CYCLE_RE.sub("", stripped) != "":
        raise ParseError(f"malformed cycle string {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if body == "":
            continue
        try:
            cycles.append(tuple(int(x) for x in body.split(",")))
        except ValueError as exc:
            raise ParseError(f"malformed cycle string {text!r}") from exc
    return cycles


def _cycle(c: tuple[int, ...], n: int) -> Permutation:
    images = list(range(1, n + 1))
    for k, x in enumerate(c):
        images[x - 1] = c[(k + 1) % len(c)]
    return Permutation(tuple(images))


def length(p: Permutation) -> int:
    """Number of inversions, i.e. pairs i < j with p(i) > p(j)."""
    im = p.images
    return sum(1 for i, j in combinations(range(len(im)), 2) if im[i] > im[j])


@dataclass(frozen=True)
class CosetRep:
    """The minimal-length coset representative gamma_{u_1,...,u_b} of W(a,b)."""

    a: int
    b: int
    u: tuple[int, ...]

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        object.__setattr__(self, "u", u)
        if self.a < 0 or self.b < 0:
            raise ValueError("signature entries must be non-negative")
        if len(u) != self.b:
            raise ValueError(f"expected {self.b} indices, got {len(u)}")
        if any(x >= y for x, y in zip(u, u[1:])):
            raise ValueError(f"indices must be strictly increasing: {u}")
        if u and (u[0] < 1 or u[-1] > self.a + self.b):
            raise ValueError(f"indices must lie in 1..{self.a + self.b}: {u}")

    @property
    def q(self) -> int:
        return self.a + self.b

    @property
    def label(self) -> str:
        return "gamma_{" + ",".join(map(str, self.u)) + "}"

    def __str__(self):
        return self.label


def coset_rep(r: CosetRep) -> Permutation:
    """The permutation (b, ..., u_b) ... (2, ..., u_2)(1, ..., u_1) in S_{a+b}."""
    n = max(r.q, 1)
    cycles = [tuple(range(i, r.u[i - 1] + 1)) for i in range(r.b, 0, -1)]
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], n)


def enumerate_W(a: int, b: int) -> list[CosetRep]:
    """All gamma_{u} for (a, b), with u running over b-subsets in lex order."""
    if a < 0 or b < 0:
        raise ValueError("signature entries must be non-negative")
    reps = [CosetRep(a, b, u) for u in combinations(range(1, a + b + 1), b)]
    assert len(reps) == comb(a + b, b)
    return reps


def eo_dimension(r: CosetRep) -> int:
    return sum(ui - i for i, ui in enumerate(r.u, start=1))


def is_in_Wq(p: Permutation, q: int) -> bool:
    if p.n != 2 * q:
        raise ValueError(f"expected a permutation of 1..{2 * q}, got n={p.n}")
    inv = p.inverse()
    if any(inv(k) >= inv(k + 1) for k in range(1, q)):
        return False
    return all(p(i) + p(2 * q + 1 - i) == 2 * q + 1 for i in range(1, 2 * q + 1))


def enumerate_Wq(q: int) -> list[Permutation]:
    """All 2^q elements of W_q.

    An element is fixed by the positions of the values 1..q, which take one
    slot from each mirror pair {i, 2q+1-i}; the values q+1..2q fill the
    mirrored slots in the order forced by the symmetry condition.
    """
    out = []
    for choice in product((0, 1), repeat=q):
        low = sorted(i if c == 0 else 2 * q + 1 - i for i, c in zip(range(1, q + 1), choice))
        images = [0] * (2 * q)
        for value, pos in enumerate(low, start=1):
            images[pos - 1] = value
            images[2 * q - pos] = 2 * q + 1 - value
        out.append(Permutation(tuple(images)))
    out.sort(key=lambda w: w.images)
    return out


def _w(cycles: str) -> Permutation:
    return Permutation.from_cycles(cycles, 10)


# Values of the forgetful map psi_{3,2} on the four strata where they are
# known explicitly. The general formula is not reproduced here.
FORGET_TABLE_32: dict[tuple[int, int], Permutation] = {
    (1, 4): _w("(3,6,4)(5,7,8)"),
    (1, 5): _w("(2,6,4,3)(5,7,8,9)"),
    (2, 3): _w("(2,6,4,3)(5,7,8,9)"),
    (2, 4): _w("(2,6,8,4)(3,7,9,5)"),
}


def forget_unitary_32(r: CosetRep) -> Permutation:
    if (r.a, r.b) != (3, 2):
        raise NotTabulated(f"forgetful map is tabulated only for signature (3,2), got ({r.a},{r.b})")
    try:
        return FORGET_TABLE_32[r.u]
    except KeyError:
        raise NotTabulated(f"omega for {r.label} is not tabulated") from None


def require_in_Wq(p: Permutation, q: int) -> None:
    if p.n != 2 * q or not is_in_Wq(p, q):
        raise NotInWq(f"{p.cycle_string()} is not in W_{q}")
