"""Final sequences and the generic first slope of an EO stratum of A_q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, InvalidFinalSequence
from .weyl import Permutation, require_in_Wq

__all__ = [
    "FinalSequence",
    "final_sequence_from_permutation",
    "phi_tilde",
    "stable_set",
    "generic_first_slope",
]


@dataclass(frozen=True)
class FinalSequence:
    """phi(0), ..., phi(2q), stored with the leading phi(0) = 0."""

    q: int
    phi: tuple[int, ...]

    def __post_init__(self):
        phi = tuple(int(x) for x in self.phi)
        object.__setattr__(self, "phi", phi)
        q = self.q
        if q < 1 or len(phi) != 2 * q + 1:
            raise InvalidFinalSequence(f"need 2q+1 = {2 * q + 1} values, got {len(phi)}")
        if phi[0] != 0:
            raise InvalidFinalSequence("phi(0) must be 0")
        for i in range(1, 2 * q + 1):
            if not phi[i - 1] <= phi[i] <= phi[i - 1] + 1:
                raise InvalidFinalSequence(f"step at i={i} is not 0 or 1")
        for i in range(2 * q + 1):
            if phi[2 * q - i] != q - i + phi[i]:
                raise InvalidFinalSequence(f"symmetry phi(2q-i) = q-i+phi(i) fails at i={i}")

    @classmethod
    def from_values(cls, values) -> "FinalSequence":
        """From the display tuple [phi(1), ..., phi(2q)]."""
        values = list(values)
        if len(values) % 2:
            raise InvalidFinalSequence(f"expected an even number of values, got {len(values)}")
        return cls(len(values) // 2, (0, *values))

    def values(self) -> list[int]:
        return list(self.phi[1:])

    def __call__(self, i: int) -> int:
        return self.phi[i]

    def __str__(self):
        return "[" + ",".join(map(str, self.phi[1:])) + "]"


def final_sequence_from_permutation(w: Permutation, q: int) -> FinalSequence:
    require_in_Wq(w, q)
    phi = [0]
    for i in range(1, 2 * q + 1):
        phi.append(phi[-1] + (1 if w(i) > q else 0))
    return FinalSequence(q, tuple(phi))


def phi_tilde(f: FinalSequence, i: int) -> int:
    if not 1 <= i <= 2 * f.q:
        raise IndexOutOfRange(f"i={i} outside 1..{2 * f.q}")
    return f.phi[i] if f.phi[i] != 0 else f.q + i


def stable_set(f: FinalSequence) -> frozenset[int]:
    """The limit of S, phi~(S), phi~(phi~(S)), ... starting from S = {1..2q}.

    The chain is decreasing, so the first repeat is the intersection of all
    iterates.
    """
    S = frozenset(range(1, 2 * f.q + 1))
    for _ in range(2 * f.q + 1):
        T = frozenset(phi_tilde(f, i) for i in S)
        if T == S:
            return S
        S = T
    raise AssertionError("phi~ iteration did not stabilise")  # unreachable for valid input


def generic_first_slope(f: FinalSequence, *, with_sets: bool = False):
    """#C / #D where D is the stable set and C = D cap {q+1..2q}.

    With ``with_sets=True`` returns ``(slope, D, C)``.
    """
    D = stable_set(f)
    C = frozenset(i for i in D if i > f.q)
    slope = Fraction(len(C), len(D))
    return (slope, D, C) if with_sets else slope
