"""Central covers, sections, the induced factor set, and spin obstructions.

A central cover is a surjection pi: S -> L whose kernel K sits inside the
centre of S.  Any section s (a right inverse of pi with s(1) = 1) produces
the K-valued factor set

    z(l1, l0) = s(l1) s(l0) s(l1 l0)^-1,

a classical central 2-cocycle whose class does not depend on the section.
Pushing z through a homomorphism from K into the centre of a gauge group A
gives the induced cochain (zeta o z, 1) over (L, A).  A representation of S
descends to L exactly when the kernel acts trivially; a kernel element
acting nontrivially is the obstruction witness (the finite stand-in for
noninteger spin).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

from .cohomology2 import Cochain2, validate_cocycle
from .exactlin import Mat
from .fingroup import (GroupHom, GroupTable, centre, check_hom, cyclic,
                       direct_product, is_surjective, kernel, quaternion8,
                       subgroup)
from .multiplet import MatrixRep, validate_rep


class SectionInvalid(Exception):
    pass


class NotCentral(Exception):
    def __init__(self, witness) -> None:
        self.witness = witness
        super().__init__(f"image element is not central (witness {witness})")


@dataclass(frozen=True)
class CentralCover:
    S: GroupTable
    L: GroupTable
    pi: GroupHom

    def __post_init__(self) -> None:
        if self.pi.source != self.S or self.pi.target != self.L:
            raise ValueError("pi must map S onto L")
        rep = check_hom(self.pi)
        if not rep.valid:
            raise ValueError(f"pi is not a homomorphism (witness {rep.witness})")
        if not is_surjective(self.pi):
            raise ValueError("pi is not surjective")
        ker = kernel(self.pi)
        z = set(centre(self.S))
        for k in ker:
            if k not in z:
                raise ValueError(f"kernel element {k} is not central")

    @property
    def kernel_elements(self) -> Tuple[int, ...]:
        return kernel(self.pi)

    def kernel_group(self) -> Tuple[GroupTable, Tuple[int, ...]]:
        return subgroup(self.S, self.kernel_elements, name="ker")


@dataclass(frozen=True)
class Section:
    cover: CentralCover
    lift: Tuple[int, ...]

    def __post_init__(self) -> None:
        cov = self.cover
        if len(self.lift) != cov.L.order:
            raise SectionInvalid("lift is not total on L")
        if self.lift[0] != 0:
            raise SectionInvalid("lift must send the identity to the identity")
        for l in cov.L.elements():
            if cov.pi.map[self.lift[l]] != l:
                raise SectionInvalid(f"pi(lift({l})) != {l}")


def all_sections(cover: CentralCover) -> Tuple[Section, ...]:
    """Every section with lift(1) = 1, in lexicographic lift order."""
    fibers = []
    for l in cover.L.elements():
        if l == 0:
            fibers.append((0,))
        else:
            fibers.append(tuple(s for s in cover.S.elements()
                                if cover.pi.map[s] == l))
    return tuple(Section(cover, lift)
                 for lift in itertools.product(*fibers))


@dataclass(frozen=True)
class ZData:
    """The factor set of a section: values in S, plus the same data as a
    cochain over (L, K) with K reindexed as its own group."""

    section: Section
    values: Tuple[Tuple[int, ...], ...]      # S-element per (l1, l0)
    k_group: GroupTable
    k_elements: Tuple[int, ...]              # ambient S-elements of K
    cochain: Cochain2                        # over (L, K), trivial phi


def z_cocycle(s: Section) -> ZData:
    """Compute z on all pairs, check centrality of its values, and validate
    it as a cocycle with trivial coefficient action."""
    cov = s.cover
    S, L = cov.S, cov.L
    k_group, k_elems = cov.kernel_group()
    k_index = {amb: i for i, amb in enumerate(k_elems)}
    values = []
    k_table = []
    for l1 in L.elements():
        row_v, row_k = [], []
        for l0 in L.elements():
            v = S.mul(S.mul(s.lift[l1], s.lift[l0]), S.inv(s.lift[L.mul(l1, l0)]))
            if v not in k_index:
                raise SectionInvalid(f"z({l1},{l0}) = {v} lies outside the kernel")
            row_v.append(v)
            row_k.append(k_index[v])
        values.append(tuple(row_v))
        k_table.append(tuple(row_k))
    cochain = Cochain2(L, k_group, tuple(k_table), (0,) * L.order)
    report = validate_cocycle(cochain)
    assert report.valid, f"factor set fails the cocycle law: {report}"
    return ZData(s, tuple(values), k_group, k_elems, cochain)


def z_class_trivial(z: ZData) -> Optional[Tuple[int, ...]]:
    """Search all maps L -> K (unnormalized included) for a twist killing z.

    Returns the first trivializing twist (as K-indices) or None.  K is
    central, so the twisted factor set is zeta(l1) zeta(l0) z(l1,l0)
    zeta(l1 l0)^-1.
    """
    L, K = z.cochain.G, z.k_group
    for zeta in itertools.product(K.elements(), repeat=L.order):
        ok = True
        for l1 in L.elements():
            for l0 in L.elements():
                tw = K.mul(K.mul(K.mul(zeta[l1], zeta[l0]),
                                 z.cochain.xi[l1][l0]),
                           K.inv(zeta[L.mul(l1, l0)]))
                if tw != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return zeta
    return None


def induced_gauge_cocycle(s: Section, zeta_on_k: GroupHom) -> Cochain2:
    """Push the factor set into a gauge group: the cochain (zeta o z, 1).

    zeta_on_k must be a homomorphism from the kernel group into the gauge
    group A, landing in the centre of A (NotCentral otherwise).
    """
    z = z_cocycle(s)
    if zeta_on_k.source != z.k_group:
        raise ValueError("zeta is not defined on the kernel group")
    rep = check_hom(zeta_on_k)
    if not rep.valid:
        raise ValueError(f"zeta is not a homomorphism (witness {rep.witness})")
    A = zeta_on_k.target
    central = set(centre(A))
    for k in z.k_group.elements():
        if zeta_on_k.map[k] not in central:
            raise NotCentral((k, zeta_on_k.map[k]))
    L = z.cochain.G
    xi = tuple(tuple(zeta_on_k.map[z.cochain.xi[l1][l0]] for l0 in L.elements())
               for l1 in L.elements())
    out = Cochain2(L, A, xi, (0,) * L.order)
    report = validate_cocycle(out)
    assert report.valid, f"induced cochain fails the cocycle law: {report}"
    return out


@dataclass(frozen=True)
class CentreHomReport:
    valid: bool
    hom_witness: Optional[Tuple[int, int]] = None
    centrality_witness: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.valid


def check_centre_hom(mapping: GroupHom) -> CentreHomReport:
    """Check that a kernel restriction is a homomorphism into the centre.

    These are exactly the two consequences a trivial-cocycle implementation
    forces on its kernel gauge elements.
    """
    rep = check_hom(mapping)
    if not rep.valid:
        return CentreHomReport(False, hom_witness=rep.witness)
    A = mapping.target
    central = set(centre(A))
    for k in mapping.source.elements():
        if mapping.map[k] not in central:
            bad = next(a for a in A.elements()
                       if A.mul(mapping.map[k], a) != A.mul(a, mapping.map[k]))
            return CentreHomReport(False, centrality_witness=(k, bad))
    return CentreHomReport(True)


# ---------------------------------------------------------------------------
# descent of representations and the spin obstruction

@dataclass(frozen=True)
class SpinVerdict:
    descends: bool
    obstruction_witness: Optional[int]      # kernel element acting nontrivially
    descended: Optional[MatrixRep]          # the L-representation, if any
    zeta_trivial: bool
    model_consistent: bool


def spin_obstruction(s: Section, zeta_on_k: GroupHom,
                     rep: MatrixRep) -> SpinVerdict:
    """Decide whether an S-representation descends along the cover.

    The representation descends iff every kernel element acts as the
    identity; the first kernel element acting nontrivially is the witness.
    When the kernel gauge assignment zeta is trivial, every multiplet in the
    model must descend; a non-descending representation then flags the model
    as inconsistent.
    """
    cov = s.cover
    if rep.group != cov.S:
        raise ValueError("representation is not defined on the covering group")
    vr = validate_rep(rep)
    if not vr:
        raise ValueError(f"invalid representation: {vr.violation} {vr.witness}")
    witness = None
    for amb in cov.kernel_elements:
        if rep(amb) != Mat.identity(rep.dim):
            witness = amb
            break
    zeta_trivial = all(v == 0 for v in zeta_on_k.map)
    if witness is not None:
        return SpinVerdict(False, witness, None, zeta_trivial,
                           model_consistent=not zeta_trivial)
    L = cov.L
    mats = tuple(rep(s.lift[l]) for l in L.elements())
    descended = MatrixRep(L, rep.dim, mats)
    dv = validate_rep(descended)
    assert dv.valid, f"descended map is not a representation: {dv.violation}"
    return SpinVerdict(True, None, descended, zeta_trivial, model_consistent=True)


# ---------------------------------------------------------------------------
# shipped covers

def q8_cover() -> CentralCover:
    """The quaternion double cover of Z2 x Z2 with kernel {1, -1}."""
    q8 = quaternion8()
    l = direct_product(cyclic(2), cyclic(2), "Z2xZ2")
    # 1,-1 -> (0,0); i,-i -> (1,0); j,-j -> (0,1); k,-k -> (1,1)
    pi_map = (0, 0, 2, 2, 1, 1, 3, 3)
    return CentralCover(q8, l, GroupHom(q8, l, pi_map))


def cyclic_cover(m: int, d: int) -> CentralCover:
    """Z_m -> Z_(m/d) with kernel Z_d; the finite stand-in for covers with
    cyclic fundamental group."""
    if m % d != 0:
        raise ValueError("d must divide m")
    s = cyclic(m)
    l = cyclic(m // d)
    return CentralCover(s, l, GroupHom(s, l, tuple(x % (m // d)
                                                   for x in range(m))))


def split_cover(k_order: int, l: GroupTable) -> CentralCover:
    """The trivial cover K x L -> L."""
    k = cyclic(k_order)
    s = direct_product(k, l, name=f"Z{k_order}x{l.name}")
    pi_map = tuple(e % l.order for e in range(s.order))
    return CentralCover(s, l, GroupHom(s, l, pi_map))
