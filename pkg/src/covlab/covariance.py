"""Implementations of functorial group covariance and their canonical cocycles.

Given a theory functor Af: C -> D and a group action T on C, write gC for
T(g)(C) and gAf for Af o T(g).  An implementation is a family of natural
isomorphisms eta(g): Af -> gAf with eta(1) = id.  Its canonical 2-cocycle
over (G, Aut(Af)) has components

    xi(g1, g0) at object g1g0.C  =  eta(g1)_{g0.C} o eta(g0)_C o eta(g1g0)_C^-1
    phi(g)(alpha) at object g.C  =  eta(g)_C o alpha_C o eta(g)_C^-1

where Aut(Af) is the gauge group of natural automorphisms of Af.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

from . import config
from .cohomology2 import (Cochain2, SearchSpaceTooLarge, TwistMap,
                          coboundary_twist, validate_cocycle)
from .extension import ExtensionGroup
from .fincat import (GAction, Report, TheoryFunctor, validate_functor,
                     validate_gaction)
from .fingroup import GroupTable, compute_aut, make_group


class NotInGaugeGroup(Exception):
    pass


class NotNatural(Exception):
    pass


class Eq18Violated(Exception):
    def __init__(self, witness: Tuple[int, int]) -> None:
        self.witness = witness
        super().__init__(f"frame-isomorphism composition law fails at {witness}")


Family = Tuple[str, ...]  # one target-morphism id per object, in object order


@dataclass(frozen=True)
class GaugeGroup:
    """Aut(Af): natural automorphisms of a theory functor, with realizers."""

    table: GroupTable
    families: Tuple[Family, ...]
    objects: Tuple[str, ...]

    @property
    def order(self) -> int:
        return self.table.order

    def index_of(self, family) -> int:
        fam = tuple(family[x] for x in self.objects) if isinstance(family, dict) \
            else tuple(family)
        try:
            return self.families.index(fam)
        except ValueError:
            raise NotInGaugeGroup(f"family {fam} is not a natural automorphism") \
                from None

    def component(self, idx: int, obj: str) -> str:
        return self.families[idx][self.objects.index(obj)]


def compute_gauge_group(F: TheoryFunctor, cap: Optional[int] = None) -> GaugeGroup:
    """Enumerate all natural automorphisms of F and the group they form.

    A family {alpha_C} of invertible morphisms F(C) -> F(C) is natural when
    alpha_{C'} o F(gamma) == F(gamma) o alpha_C for every gamma: C -> C'.
    Families are ordered with the identity family first, then lexicographically.
    """
    rep = validate_functor(F)
    if not rep:
        raise ValueError(f"functor invalid: {rep.violation} {rep.witness}")
    src, tgt = F.source, F.target
    objects = src.objects
    per_object = [tgt.invertible_endos(F.on_obj(x)) for x in objects]
    total = 1
    for opts in per_object:
        total *= len(opts)
    limit = cap if cap is not None else config.enum_cap()
    if total > limit:
        raise SearchSpaceTooLarge(total, limit)

    families = []
    for combo in itertools.product(*per_object):
        comp = dict(zip(objects, combo))
        natural = True
        for m, d, c in src.morphisms:
            fm = F.on_mor(m)
            if tgt.compose(comp[c], fm) != tgt.compose(fm, comp[d]):
                natural = False
                break
        if natural:
            families.append(tuple(combo))
    ident = tuple(tgt.identity(F.on_obj(x)) for x in objects)
    families.sort(key=lambda fam: (fam != ident, fam))
    index = {fam: i for i, fam in enumerate(families)}

    def mul(i: int, j: int) -> int:
        a, b = families[i], families[j]
        prod = tuple(tgt.compose(a[k], b[k]) for k in range(len(objects)))
        return index[prod]

    table = tuple(tuple(mul(i, j) for j in range(len(families)))
                  for i in range(len(families)))
    gt = make_group(table, name=f"Aut({F.name or 'A'})")
    return GaugeGroup(gt, tuple(families), objects)


class Implementation:
    """A family eta(g) of natural isomorphisms Af -> gAf, with eta(1) = id."""

    def __init__(self, functor: TheoryFunctor, action: GAction,
                 eta: Sequence[Mapping[str, str]], name: Optional[str] = None) -> None:
        self.functor = functor
        self.action = action
        self.eta = tuple(dict(e) for e in eta)
        self.name = name

    def component(self, g: int, obj: str) -> str:
        return self.eta[g][obj]


def validate_implementation(impl: Implementation) -> Report:
    F, act = impl.functor, impl.action
    rep = validate_functor(F)
    if not rep:
        return Report(False, f"Functor:{rep.violation}", rep.witness)
    rep = validate_gaction(act)
    if not rep:
        return Report(False, f"GAction:{rep.violation}", rep.witness)
    src, tgt = F.source, F.target
    G = act.group
    if len(impl.eta) != G.order:
        return Report(False, "FamilyPerElementMissing", (len(impl.eta),))
    for x in src.objects:
        if impl.eta[0].get(x) != tgt.identity(F.on_obj(x)):
            return Report(False, "IdentityFamilyNotIdentity", (x,))
    for g in G.elements():
        fam = impl.eta[g]
        for x in src.objects:
            m = fam.get(x)
            if m is None:
                return Report(False, "FamilyNotTotal", (g, x))
            if (tgt.dom(m) != F.on_obj(x)
                    or tgt.cod(m) != F.on_obj(act.act_obj(g, x))):
                return Report(False, "ComponentShape", (g, x))
            if tgt.inverse(m) is None:
                return Report(False, "ComponentNotInvertible", (g, x))
        for mor, d, c in src.morphisms:
            lhs = tgt.compose(fam[c], F.on_mor(mor))
            rhs = tgt.compose(F.on_mor(act.act_mor(g, mor)), fam[d])
            if lhs != rhs:
                return Report(False, "NotNatural", (g, mor))
    return Report(True)


def twist_implementation(impl: Implementation, zeta: Sequence[int],
                         gauge: GaugeGroup, name: Optional[str] = None) -> Implementation:
    """New implementation with eta~(g)_C = zeta(g)_{g.C} o eta(g)_C."""
    tgt = impl.functor.target
    act = impl.action
    new_eta = []
    for g, fam in enumerate(impl.eta):
        zfam = gauge.families[zeta[g]]
        new_eta.append({
            x: tgt.compose(zfam[gauge.objects.index(act.act_obj(g, x))], fam[x])
            for x in impl.functor.source.objects
        })
    return Implementation(impl.functor, act, new_eta, name)


def _require_valid(impl: Implementation) -> None:
    rep = validate_implementation(impl)
    if not rep:
        raise ValueError(f"implementation invalid: {rep.violation} {rep.witness}")


def extract_cocycle(impl: Implementation,
                    gauge: Optional[GaugeGroup] = None) -> Cochain2:
    """Canonical normalized 2-cocycle of an implementation over (G, Aut(Af))."""
    _require_valid(impl)
    if gauge is None:
        gauge = compute_gauge_group(impl.functor)
    F, act = impl.functor, impl.action
    G = act.group
    tgt = F.target
    objects = F.source.objects
    aut = compute_aut(gauge.table)

    def xi_family(g1: int, g0: int) -> Family:
        prod = G.mul(g1, g0)
        inv_prod = G.inv(prod)
        comps = []
        for d in objects:
            c = act.act_obj(inv_prod, d)
            m = tgt.compose(
                impl.component(g1, act.act_obj(g0, c)),
                tgt.compose(impl.component(g0, c),
                            tgt.inverse(impl.component(prod, c))),
            )
            comps.append(m)
        return tuple(comps)

    xi = tuple(
        tuple(gauge.index_of(xi_family(g1, g0)) for g0 in G.elements())
        for g1 in G.elements()
    )

    def phi_perm(g: int) -> Tuple[int, ...]:
        ginv = G.inv(g)
        out = []
        for alpha in range(gauge.order):
            comps = []
            for d in objects:
                c = act.act_obj(ginv, d)
                m = tgt.compose(
                    impl.component(g, c),
                    tgt.compose(gauge.component(alpha, c),
                                tgt.inverse(impl.component(g, c))),
                )
                comps.append(m)
            out.append(gauge.index_of(tuple(comps)))
        return tuple(out)

    try:
        phi = tuple(aut.index_of(phi_perm(g)) for g in G.elements())
    except KeyError as err:
        raise NotInGaugeGroup(str(err)) from None

    c = Cochain2(G, gauge.table, xi, phi)
    assert validate_cocycle(c), "extracted cochain fails the cocycle laws"
    assert c.is_normalized(), "extracted cochain is not normalized"
    return c


def compare_implementations(i1: Implementation, i2: Implementation,
                            gauge: Optional[GaugeGroup] = None) -> TwistMap:
    """Witness zeta with zeta(g)_{g.C} = eta2(g)_C o eta1(g)_C^-1.

    Each zeta(g) is asserted to be a natural automorphism, and the two
    extracted cocycles are asserted to be related by the coboundary twist
    through zeta, exactly.
    """
    _require_valid(i1)
    _require_valid(i2)
    if gauge is None:
        gauge = compute_gauge_group(i1.functor)
    F, act = i1.functor, i1.action
    G, tgt = act.group, F.target
    objects = F.source.objects
    zeta = []
    for g in G.elements():
        ginv = G.inv(g)
        comps = []
        for d in objects:
            c = act.act_obj(ginv, d)
            comps.append(tgt.compose(i2.component(g, c),
                                     tgt.inverse(i1.component(g, c))))
        try:
            zeta.append(gauge.index_of(tuple(comps)))
        except NotInGaugeGroup as err:
            raise NotNatural(f"difference family at g={g} is not natural: {err}") \
                from None
    witness = TwistMap(tuple(zeta))
    c1, c2 = extract_cocycle(i1, gauge), extract_cocycle(i2, gauge)
    assert coboundary_twist(c1, witness) == c2, \
        "cocycles of the two implementations are not related by the witness"
    return witness


def lift_to_extension(impl: Implementation, ext: ExtensionGroup,
                      gauge: Optional[GaugeGroup] = None) -> Implementation:
    """Implementation of the extension group E via rho(a,g)_C = a_{g.C} o eta(g)_C.

    The extracted E-cocycle is asserted neutral, with phi-part
    phi^(a,g) = ad(a) o phi(g).
    """
    _require_valid(impl)
    if gauge is None:
        gauge = compute_gauge_group(impl.functor)
    c = ext.cochain
    if c != extract_cocycle(impl, gauge):
        raise ValueError("extension was not built from this implementation's cocycle")
    F, act = impl.functor, impl.action
    G, tgt = act.group, F.target
    E = ext.E
    objects = F.source.objects

    functors = [act.functors[ext.unpair(e)[1]] for e in E.elements()]
    e_action = GAction(E, functors)

    eta = []
    for e in E.elements():
        a, g = ext.unpair(e)
        fam = {}
        for x in objects:
            gx = act.act_obj(g, x)
            fam[x] = tgt.compose(gauge.component(a, gx), impl.component(g, x))
        eta.append(fam)
    lifted = Implementation(F, e_action, eta, name=f"lift({impl.name or 'eta'})")
    _require_valid(lifted)

    ec = extract_cocycle(lifted, gauge)
    assert all(v == 0 for row in ec.xi for v in row), "lifted cocycle is not neutral"
    aut = compute_aut(gauge.table)
    for e in E.elements():
        a, g = ext.unpair(e)
        expected = tuple(gauge.table.mul(gauge.table.mul(a, x), gauge.table.inv(a))
                         for x in c.phi_perm(g))
        assert aut.perms[ec.phi[e]] == expected, \
            "lifted phi is not ad(a) o phi(g)"
    return lifted


# ---------------------------------------------------------------------------
# active/passive composition at a base object

@dataclass(frozen=True)
class ActivePassive:
    """The composite automorphisms Xi(g) of Af(C0), one per group element."""

    base_object: str
    components: Tuple[str, ...]
    kernel_checks: Tuple[Tuple[int, str], ...]  # (g, zeta(g)_{C0}) for trivial psi_g


def active_passive_compose(psi: Mapping[int, str], impl: Implementation,
                           base_object: str) -> ActivePassive:
    """Compose active frame isomorphisms with a trivial-cocycle implementation.

    psi maps each g to an isomorphism C0 -> g^-1.C0 in the source category,
    required to satisfy psi_{g1 g0} = (g0^-1 . psi_{g1}) o psi_{g0}.  Then

        Xi(g) = Af(g.psi_g) o eta(g)_{C0}

    is asserted to be a homomorphism G -> Aut(Af(C0)), with Xi(k) equal to
    eta(k)_{C0} whenever psi_k is the identity of C0.
    """
    _require_valid(impl)
    F, act = impl.functor, impl.action
    G = act.group
    src, tgt = F.source, F.target

    c = extract_cocycle(impl)
    if any(v != 0 for row in c.xi for v in row) or any(p != 0 for p in c.phi):
        raise ValueError("implementation cocycle must be trivial")

    for g in G.elements():
        m = psi.get(g)
        if m is None:
            raise ValueError(f"psi not total: missing element {g}")
        if src.dom(m) != base_object or src.cod(m) != act.act_obj(G.inv(g), base_object):
            raise ValueError(f"psi_{g} has the wrong shape")
        if src.inverse(m) is None:
            raise ValueError(f"psi_{g} is not invertible")
    if psi[0] != src.identity(base_object):
        raise ValueError("psi at the identity must be the identity morphism")
    for g1 in G.elements():
        for g0 in G.elements():
            lhs = psi[G.mul(g1, g0)]
            rhs = src.compose(act.act_mor(G.inv(g0), psi[g1]), psi[g0])
            if lhs != rhs:
                raise Eq18Violated((g1, g0))

    comps = []
    for g in G.elements():
        active = F.on_mor(act.act_mor(g, psi[g]))
        comps.append(tgt.compose(active, impl.component(g, base_object)))
    assert comps[0] == tgt.identity(F.on_obj(base_object))
    for g1 in G.elements():
        for g0 in G.elements():
            assert tgt.compose(comps[g1], comps[g0]) == comps[G.mul(g1, g0)], \
                f"Xi is not a homomorphism at ({g1},{g0})"

    kernel_checks = []
    for k in G.elements():
        if psi[k] == src.identity(base_object):
            zk = impl.component(k, base_object)
            assert comps[k] == zk
            kernel_checks.append((k, zk))
    return ActivePassive(base_object, tuple(comps), tuple(kernel_checks))
