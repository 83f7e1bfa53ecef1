"""Residue arithmetic mod n for cyclic defining sets.

Covers q^2-cyclotomic cosets, the -q map x -> n - qx, consecutive-run
defining sets, and the decomposition Z = Z1 u Z2 with Z1 = Z n (-qZ).
Residues are always normalized to [0, n-1]; the convention here is that
a coset is represented by its minimal member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Coset:
    """Orbit of a residue under multiplication by a fixed unit mod n."""

    n: int
    members: tuple[int, ...]  # sorted

    @property
    def rep(self) -> int:
        """Canonical representative: the minimal member."""
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x % self.n in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True)
class ResidueSet:
    """A duplicate-free set of residues mod n, stored sorted."""

    n: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, n: int, values) -> "ResidueSet":
        norm = {v % n for v in values}
        return cls(n, tuple(sorted(norm)))

    @classmethod
    def empty(cls, n: int) -> "ResidueSet":
        return cls(n, ())

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x % self.n in self.as_set

    def __iter__(self):
        return iter(self.members)

    def _like(self, other: "ResidueSet"):
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")

    def union(self, other: "ResidueSet") -> "ResidueSet":
        self._like(other)
        return ResidueSet(self.n, tuple(sorted(self.as_set | other.as_set)))

    def intersection(self, other: "ResidueSet") -> "ResidueSet":
        self._like(other)
        return ResidueSet(self.n, tuple(sorted(self.as_set & other.as_set)))

    def difference(self, other: "ResidueSet") -> "ResidueSet":
        self._like(other)
        return ResidueSet(self.n, tuple(sorted(self.as_set - other.as_set)))

    def is_consecutive_run(self) -> bool:
        """Whether the members form one gap-free integer interval."""
        if not self.members:
            return False
        lo, hi = self.members[0], self.members[-1]
        return hi - lo + 1 == len(self.members)


@dataclass(frozen=True)
class Decomposition:
    """Split of a defining set into Z1 = Z n (-qZ) and Z2 = Z \\ Z1."""

    z1: ResidueSet
    z2: ResidueSet

    @property
    def entanglement_count(self) -> int:
        """|Z1|: the number of entangled pairs the code consumes."""
        return len(self.z1)


def cyclotomic_coset(n: int, multiplier: int, i: int) -> Coset:
    """Orbit of i under repeated multiplication by ``multiplier`` mod n.

    For the lengths used here (n | q^2 + 1, multiplier q^2 = -1 mod n) the
    orbit is {i, n - i}; the computation does not assume that shape.
    """
    i %= n
    members = {i}
    x = (i * multiplier) % n
    while x != i:
        members.add(x)
        x = (x * multiplier) % n
    return Coset(n, tuple(sorted(members)))


def all_cosets(n: int, multiplier: int) -> list[Coset]:
    """Partition of [0, n-1] into cyclotomic cosets, ordered by representative."""
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            c = cyclotomic_coset(n, multiplier, i)
            for x in c.members:
                seen[x] = True
            out.append(c)
    return out


def neg_q_image(n: int, q: int, s: ResidueSet) -> ResidueSet:
    """The set -qS = {(n - q x) mod n | x in S}."""
    return ResidueSet(n, tuple(sorted((-q * x) % n for x in s.members)))


def neg_q_coset(n: int, q: int, c: Coset) -> Coset:
    """Image of a whole coset under the -q map (again a coset)."""
    qsq = (q * q) % n
    return cyclotomic_coset(n, qsq, (-q * c.rep) % n)


def coset_neg_q_identity(n: int, q: int, u: int, v: int) -> tuple[Coset, Coset]:
    """The pair (-q C_{uq+v}, C_{vq-u}).

    Because -q(uq + v) = -(vq - u) mod n whenever q^2 = -1 mod n, the two
    cosets coincide for every u, v with uq + v != 0 mod n; callers assert
    the equality.
    """
    idx = (u * q + v) % n
    if idx == 0:
        raise ValueError("uq + v is 0 mod n; the zero coset is excluded")
    qsq = (q * q) % n
    left = neg_q_coset(n, q, cyclotomic_coset(n, qsq, idx))
    right = cyclotomic_coset(n, qsq, (v * q - u) % n)
    return left, right


def run_defining_set(n: int, s: int, delta: int) -> ResidueSet:
    """Union of the cosets C_{s+1} ... C_{s+delta} for s = (n-1)/2.

    Since C_{s+j} = {s+j, s+1-j}, the union is the consecutive interval
    [s+1-delta, s+delta] of size 2*delta.
    """
    if not 1 <= delta <= s:
        raise ValueError(f"run half-length {delta} outside [1, {s}]")
    return ResidueSet(n, tuple(range(s + 1 - delta, s + delta + 1)))


def is_coset_closed(n: int, multiplier: int, s: ResidueSet) -> bool:
    members = s.as_set
    return all((x * multiplier) % n in members for x in members)


def decompose(n: int, q: int, z: ResidueSet) -> Decomposition:
    """Decompose a defining set as Z1 = Z n (-qZ), Z2 = Z \\ Z1.

    Rejects sets that are not unions of q^2-cyclotomic cosets, since the
    entanglement count |Z1| is only meaningful for defining sets.
    """
    if z.n != n:
        raise ValueError(f"modulus mismatch: {z.n} vs {n}")
    qsq = (q * q) % n
    if not is_coset_closed(n, qsq, z):
        raise ValueError("set is not closed under the q^2-cyclotomic action")
    zset = z.as_set
    neg = {(-q * x) % n for x in zset}
    z1 = zset & neg
    z2 = zset - z1
    return Decomposition(
        z1=ResidueSet(n, tuple(sorted(z1))),
        z2=ResidueSet(n, tuple(sorted(z2))),
    )
