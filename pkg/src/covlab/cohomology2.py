"""Nonabelian 2-cochains, cocycle laws, coboundary twisting and H^2 classes.

A 2-cochain on (G, A) is a pair (xi, phi) with xi: G x G -> A and
phi: G -> Aut(A).  It is a 2-cocycle when, composing automorphisms as
functions and writing ad(a): x -> a x a^-1,

    phi(g2) . phi(g1) . phi(g2*g1)^-1 == ad(xi(g2, g1))            (pairs)
    xi(g2,g1) * xi(g2*g1,g0) == phi(g2)(xi(g1,g0)) * xi(g2,g1*g0)  (triples)

Two cocycles are cohomologous when a twist zeta: G -> A turns one into the
other via

    phi~(g)  = ad(zeta(g)) . phi(g)
    xi~(g1,g0) = zeta(g1) * phi(g1)(zeta(g0)) * xi(g1,g0) * zeta(g1*g0)^-1.

H^2(G, A) is the resulting pointed set of classes; no group structure is
imposed (none exists for nonabelian A).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from . import config
from .fingroup import (AutGroup, GroupTable, compose_perm, compute_aut,
                       inner_perm, invert_perm)


class SearchSpaceTooLarge(Exception):
    def __init__(self, size: int, cap: int) -> None:
        self.size, self.cap = size, cap
        super().__init__(f"enumeration of size {size} exceeds cap {cap}")


@dataclass(frozen=True)
class TwistMap:
    """A map zeta: G -> A, stored as one A-index per group element."""

    zeta: Tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.zeta[g]


@dataclass(frozen=True, eq=False)
class Cochain2:
    """A 2-cochain: xi as a |G| x |G| table of A-indices, phi as one
    automorphism index (into compute_aut(A).perms) per G element."""

    G: GroupTable
    A: GroupTable
    xi: Tuple[Tuple[int, ...], ...]
    phi: Tuple[int, ...]

    def __post_init__(self) -> None:
        n, m = self.G.order, self.A.order
        if len(self.xi) != n or any(len(row) != n for row in self.xi):
            raise ValueError("xi is not total on G x G")
        if any(not (0 <= v < m) for row in self.xi for v in row):
            raise ValueError("xi has entries outside A")
        naut = self.aut.order
        if len(self.phi) != n or any(not (0 <= v < naut) for v in self.phi):
            raise ValueError("phi is not total on G or indexes outside Aut(A)")

    @property
    def aut(self) -> AutGroup:
        return compute_aut(self.A)

    def phi_perm(self, g: int):
        return self.aut.perms[self.phi[g]]

    def is_normalized(self) -> bool:
        if self.phi[0] != 0:
            return False
        return all(self.xi[g][0] == 0 and self.xi[0][g] == 0
                   for g in self.G.elements())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain2) and self.G == other.G
                and self.A == other.A and self.xi == other.xi
                and self.phi == other.phi)

    def __hash__(self) -> int:
        return hash((self.G.table, self.A.table, self.xi, self.phi))


def trivial_cochain(G: GroupTable, A: GroupTable) -> Cochain2:
    n = G.order
    return Cochain2(G, A, tuple((0,) * n for _ in range(n)), (0,) * n)


@dataclass(frozen=True)
class CocycleReport:
    valid: bool
    law: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.valid


def validate_cocycle(c: Cochain2) -> CocycleReport:
    """Check both cocycle conditions; report the first failing pair/triple."""
    G, A = c.G, c.A
    perms = [c.phi_perm(g) for g in G.elements()]
    for g1 in G.elements():
        for g0 in G.elements():
            lhs = compose_perm(perms[g1],
                               compose_perm(perms[g0],
                                            invert_perm(perms[G.mul(g1, g0)])))
            if lhs != inner_perm(A, c.xi[g1][g0]):
                return CocycleReport(False, "automorphism_condition", (g1, g0))
    for g2 in G.elements():
        for g1 in G.elements():
            for g0 in G.elements():
                lhs = A.mul(c.xi[g2][g1], c.xi[G.mul(g2, g1)][g0])
                rhs = A.mul(perms[g2][c.xi[g1][g0]], c.xi[g2][G.mul(g1, g0)])
                if lhs != rhs:
                    return CocycleReport(False, "factor_set_condition",
                                         (g2, g1, g0))
    return CocycleReport(True)


def is_neutral(c: Cochain2) -> bool:
    """True iff xi is identically 1; phi is then necessarily a homomorphism."""
    if any(v != 0 for row in c.xi for v in row):
        return False
    aut = c.aut
    for g1 in c.G.elements():
        for g0 in c.G.elements():
            assert aut.table.mul(c.phi[g1], c.phi[g0]) == c.phi[c.G.mul(g1, g0)], \
                "neutral cochain whose phi is not a homomorphism"
    return True


def coboundary_twist(c: Cochain2, t: TwistMap) -> Cochain2:
    """Twist a cocycle by zeta; the output is again a valid cocycle."""
    if not validate_cocycle(c):
        raise ValueError("input cochain is not a cocycle")
    G, A, aut = c.G, c.A, c.aut
    if len(t.zeta) != G.order or any(not (0 <= z < A.order) for z in t.zeta):
        raise ValueError("twist map is not total on G")
    new_phi = tuple(
        aut.index_of(compose_perm(inner_perm(A, t.zeta[g]), c.phi_perm(g)))
        for g in G.elements()
    )
    new_xi = tuple(
        tuple(
            A.mul(A.mul(A.mul(t.zeta[g1], c.phi_perm(g1)[t.zeta[g0]]),
                        c.xi[g1][g0]),
                  A.inv(t.zeta[G.mul(g1, g0)]))
            for g0 in G.elements()
        )
        for g1 in G.elements()
    )
    out = Cochain2(G, A, new_xi, new_phi)
    assert validate_cocycle(out), "coboundary twist left the cocycle set"
    return out


def _twists(G: GroupTable, A: GroupTable, normalized: bool,
            cap: Optional[int]) -> Iterator[Tuple[int, ...]]:
    free = G.order - 1 if normalized else G.order
    size = A.order ** free
    limit = cap if cap is not None else config.enum_cap()
    if size > limit:
        raise SearchSpaceTooLarge(size, limit)
    for combo in itertools.product(A.elements(), repeat=free):
        yield (0,) + combo if normalized else combo


def cohomologous(c1: Cochain2, c2: Cochain2,
                 cap: Optional[int] = None,
                 normalized_only: Optional[bool] = None) -> Optional[TwistMap]:
    """Search all twist maps for a witness that c1 ~ c2.

    When both cocycles are normalized the connecting twist necessarily has
    zeta(1) = 1, so only normalized twists are tried (the full space can be
    forced with normalized_only=False).  Returns the lexicographically first
    witness, or None.
    """
    if c1.G != c2.G or c1.A != c2.A:
        raise ValueError("cochains live over different (G, A)")
    for c in (c1, c2):
        if not validate_cocycle(c):
            raise ValueError("input cochain is not a cocycle")
    if normalized_only is None:
        normalized_only = c1.is_normalized() and c2.is_normalized()
    G, A, aut = c1.G, c1.A, c1.aut
    perms1 = [c1.phi_perm(g) for g in G.elements()]
    perms2 = [c2.phi_perm(g) for g in G.elements()]
    ads = [inner_perm(A, a) for a in A.elements()]
    for zeta in _twists(G, A, normalized_only, cap):
        ok = all(compose_perm(ads[zeta[g]], perms1[g]) == perms2[g]
                 for g in G.elements())
        if not ok:
            continue
        for g1 in G.elements():
            for g0 in G.elements():
                lhs = A.mul(A.mul(A.mul(zeta[g1], perms1[g1][zeta[g0]]),
                                  c1.xi[g1][g0]),
                            A.inv(zeta[G.mul(g1, g0)]))
                if lhs != c2.xi[g1][g0]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return TwistMap(zeta)
    return None


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class H2Class:
    representative: Cochain2
    size: int
    distinguished: bool
    neutral: bool


@dataclass(frozen=True)
class H2Classification:
    G: GroupTable
    A: GroupTable
    classes: Tuple[H2Class, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def distinguished_index(self) -> int:
        for i, cls in enumerate(self.classes):
            if cls.distinguished:
                return i
        raise AssertionError("no class contains the trivial cocycle")


def _cocycle_key(xi, phi):
    return (tuple(v for row in xi for v in row), tuple(phi))


def enumerate_normalized_cocycles(G: GroupTable, A: GroupTable,
                                  cap: Optional[int] = None) -> Tuple[Cochain2, ...]:
    """All normalized valid 2-cocycles over (G, A), in lexicographic order."""
    aut = compute_aut(A)
    n = G.order
    free = n - 1
    size = (aut.order ** free) * (A.order ** (free * free))
    limit = cap if cap is not None else config.enum_cap()
    if size > limit:
        raise SearchSpaceTooLarge(size, limit)
    found = []
    nontrivial = list(range(1, n))
    for phi_tail in itertools.product(range(aut.order), repeat=free):
        phi = (0,) + phi_tail
        for xi_flat in itertools.product(A.elements(), repeat=free * free):
            xi = [[0] * n for _ in range(n)]
            it = iter(xi_flat)
            for g1 in nontrivial:
                for g0 in nontrivial:
                    xi[g1][g0] = next(it)
            c = Cochain2(G, A, tuple(tuple(r) for r in xi), phi)
            if validate_cocycle(c):
                found.append(c)
    found.sort(key=lambda c: _cocycle_key(c.xi, c.phi))
    return tuple(found)


def classify_h2(G: GroupTable, A: GroupTable,
                cap: Optional[int] = None) -> H2Classification:
    """Partition all normalized valid cocycles into cohomology classes.

    The class of the trivial cocycle is flagged as the distinguished point.
    Canonical representatives are the lexicographically least (xi, phi)
    tables of each class; classes are listed in representative order.
    """
    cocycles = enumerate_normalized_cocycles(G, A, cap)
    index = {_cocycle_key(c.xi, c.phi): i for i, c in enumerate(cocycles)}
    twists = list(_twists(G, A, normalized=True, cap=cap))
    seen = [False] * len(cocycles)
    classes = []
    trivial_key = _cocycle_key(trivial_cochain(G, A).xi, trivial_cochain(G, A).phi)
    for i, c in enumerate(cocycles):
        if seen[i]:
            continue
        orbit = set()
        for zeta in twists:
            tw = coboundary_twist(c, TwistMap(zeta))
            j = index[_cocycle_key(tw.xi, tw.phi)]
            orbit.add(j)
        for j in orbit:
            seen[j] = True
        rep = min((cocycles[j] for j in orbit),
                  key=lambda cc: _cocycle_key(cc.xi, cc.phi))
        assert rep.is_normalized()
        classes.append(H2Class(
            representative=rep,
            size=len(orbit),
            distinguished=any(
                _cocycle_key(cocycles[j].xi, cocycles[j].phi) == trivial_key
                for j in orbit),
            neutral=any(all(v == 0 for row in cocycles[j].xi for v in row)
                        for j in orbit),
        ))
    classes.sort(key=lambda cls: _cocycle_key(cls.representative.xi,
                                              cls.representative.phi))
    return H2Classification(G, A, tuple(classes))
