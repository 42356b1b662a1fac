import random

import pytest

from covlab import fingroup as fg
from covlab import models
from covlab.cohomology2 import coboundary_twist, cohomologous, validate_cocycle
from covlab.covariance import (Eq18Violated, active_passive_compose,
                               compare_implementations, compute_gauge_group,
                               extract_cocycle, lift_to_extension,
                               twist_implementation, validate_implementation)
from covlab.extension import build_extension
from covlab.fincat import (FinCat, TheoryFunctor, group_as_category, identity_functor,
                           validate_fincat, validate_gaction)


def test_one_object_category_valid():
    cat = group_as_category(fg.cyclic(4))
    assert validate_fincat(cat).valid
    assert cat.invertible_endos("*") == ("r0", "r1", "r2", "r3")


def test_hom_set_cap_enforced():
    cat = group_as_category(fg.cyclic(65))
    rep = validate_fincat(cat)
    assert not rep.valid
    assert rep.violation == "HomSetCapExceeded"


def test_missing_composite_detected():
    cat = group_as_category(fg.cyclic(2))
    broken = FinCat(cat.objects, cat.morphisms,
                    {k: v for k, v in cat.compose_table.items()
                     if k != ("r1", "r1")},
                    cat.identities)
    rep = validate_fincat(broken)
    assert not rep.valid
    assert rep.violation == "MissingComposite"
    assert rep.witness == ("r1", "r1")


def test_swap_action_is_valid_gaction():
    impl = models.swap_model()
    assert validate_gaction(impl.action).valid
    assert validate_implementation(impl).valid


def test_gauge_group_one_object_z4():
    impl = models.one_object_cyclic_model()
    gauge = compute_gauge_group(impl.functor)
    assert gauge.order == 4
    assert gauge.table.order_profile() == (1, 2, 4, 4)


def test_gauge_group_discrete_source_naturality_vacuous():
    # one object, no nonidentity arrows in the source: every invertible endo
    # of the image object is natural, so the gauge group is the full Z4
    target = group_as_category(fg.cyclic(4))
    source = FinCat(["pt"], [("idpt", "pt", "pt")],
                    {("idpt", "idpt"): "idpt"}, {"pt": "idpt"})
    assert validate_fincat(source).valid
    functor = TheoryFunctor(source, target, {"pt": "*"}, {"idpt": "r0"})
    gauge = compute_gauge_group(functor)
    assert gauge.order == 4
    assert gauge.table.order_profile() == (1, 2, 4, 4)


def test_gauge_group_trivial_for_nonabelian_endos():
    # natural automorphisms of the identity functor on B(S3) = centre(S3) = 1
    cat = group_as_category(fg.symmetric3(), prefix="s")
    gauge = compute_gauge_group(identity_functor(cat))
    assert gauge.order == 1


def test_gauge_group_centralizer_constrained_across_isomorphic_objects():
    # two frames joined by invertible arrows with Z4 decorations: any natural
    # family must take equal decorations on both objects
    impl = models.spin_frame_model()
    gauge = compute_gauge_group(impl.functor)
    assert gauge.order == 4
    for fam in gauge.families:
        decos = {m.split(":")[1] for m in fam}
        assert len(decos) == 1


def test_identity_implementation_extracts_trivial_cocycle():
    impl = models.one_object_cyclic_model(power=0)
    c = extract_cocycle(impl)
    assert all(v == 0 for row in c.xi for v in row)
    assert all(p == 0 for p in c.phi)


def test_z4_model_extraction():
    impl = models.one_object_cyclic_model(power=1)
    c = extract_cocycle(impl)
    assert validate_cocycle(c).valid and c.is_normalized()
    # xi(g,g) = r^2, phi = ad(r) = id on the abelian gauge group
    assert c.xi[1][1] == 2
    assert c.phi == (0, 0)
    # the class is trivial, witness zeta(g) = r
    from covlab.cohomology2 import trivial_cochain
    w = cohomologous(trivial_cochain(c.G, c.A), c)
    assert w is not None and w.zeta == (0, 1)


def test_naturality_violation_detected():
    impl = models.swap_model()
    bad = models.Implementation(impl.functor, impl.action,
                                [impl.eta[0], {"X": "u", "Y": "u"}])
    rep = validate_implementation(bad)
    assert not rep.valid


def test_implementation_with_eta_not_identity_at_1_rejected():
    impl = models.one_object_cyclic_model()
    bad = models.Implementation(impl.functor, impl.action,
                                [{"*": "r1"}, {"*": "r1"}])
    rep = validate_implementation(bad)
    assert not rep.valid
    assert rep.violation == "IdentityFamilyNotIdentity"


def test_compare_implementations_identity():
    impl = models.one_object_cyclic_model()
    w = compare_implementations(impl, impl)
    assert w.zeta == (0, 0)


def test_compare_r_and_r3_models():
    i1 = models.one_object_cyclic_model(power=1)
    i2 = models.one_object_cyclic_model(power=3)
    w = compare_implementations(i1, i2)
    # zeta(g) = r^3 * r^-1 = r^2
    assert w.zeta == (0, 2)
    c1, c2 = extract_cocycle(i1), extract_cocycle(i2)
    assert coboundary_twist(c1, w) == c2


def test_random_gauge_twists_recover_witness():
    rng = random.Random(11)
    impls = [models.one_object_cyclic_model(), models.swap_model(),
             models.spin_frame_model()]
    for base in impls:
        gauge = compute_gauge_group(base.functor)
        for _ in range(6):
            zeta = tuple([0] + [rng.randrange(gauge.order)
                                for _ in range(base.action.group.order - 1)])
            other = twist_implementation(base, zeta, gauge)
            assert validate_implementation(other).valid
            w = compare_implementations(base, other, gauge)
            assert coboundary_twist(extract_cocycle(base, gauge), w) \
                == extract_cocycle(other, gauge)


def test_lift_to_extension_neutral():
    for impl in (models.one_object_cyclic_model(),
                 models.one_object_cyclic_model(power=2),
                 models.spin_frame_model()):
        c = extract_cocycle(impl)
        ext = build_extension(c)
        lifted = lift_to_extension(impl, ext)
        ec = extract_cocycle(lifted)
        assert all(v == 0 for row in ec.xi for v in row)


def test_active_passive_frame_rotation():
    impl, psi, base = models.frame_rotation_model(twist_parity=True)
    res = active_passive_compose(psi, impl, base)
    # Xi is the parity homomorphism Z4 -> Z2 realized on decorations
    decos = [m.split(":")[1] for m in res.components]
    assert decos == ["0", "1", "0", "1"]


def test_active_passive_trivial_for_plain_lift():
    impl, psi, base = models.frame_rotation_model(twist_parity=False)
    res = active_passive_compose(psi, impl, base)
    assert all(m == res.components[0] for m in res.components)


def test_active_passive_kernel_element():
    # in the spin-frame model, s=2 acts trivially on objects; with psi_2 = id
    # the composite must equal the gauge component of eta(2)
    impl = models.spin_frame_model()
    src = impl.functor.source
    psi = {}
    for s in range(4):
        target = impl.action.act_obj((4 - s) % 4, "F0")
        jump = int(target[1:])
        psi[s] = f"m{jump}<0:0"
    res = active_passive_compose(psi, impl, "F0")
    assert (2, impl.component(2, "F0")) in res.kernel_checks
    assert impl.component(2, "F0") == "m0<0:2"


def test_active_passive_eq18_violation():
    # in the spin-frame model psi decorations must be additive in g; a
    # non-additive choice has the right shapes but breaks the composition law
    impl = models.spin_frame_model()
    psi = {}
    for s in range(4):
        jump = int(impl.action.act_obj((4 - s) % 4, "F0")[1:])
        psi[s] = f"m{jump}<0:{1 if s == 1 else 0}"
    with pytest.raises(Eq18Violated) as exc:
        active_passive_compose(psi, impl, "F0")
    assert exc.value.witness == (1, 1)


def test_trivial_implementations_satisfy_trivial_relations():
    # implementations flagged trivial satisfy both trivial-cocycle identities
    for impl in (models.one_object_cyclic_model(power=0),
                 models.swap_model(), models.spin_frame_model(),
                 models.frame_rotation_model()[0]):
        c = extract_cocycle(impl)
        gauge = compute_gauge_group(impl.functor)
        if any(v != 0 for row in c.xi for v in row) or any(c.phi):
            continue
        G = impl.action.group
        tgt = impl.functor.target
        act = impl.action
        # eta(g1 g0)_C = eta(g1)_{g0.C} o eta(g0)_C
        for g1 in G.elements():
            for g0 in G.elements():
                for x in impl.functor.source.objects:
                    lhs = impl.component(G.mul(g1, g0), x)
                    rhs = tgt.compose(impl.component(g1, act.act_obj(g0, x)),
                                      impl.component(g0, x))
                    assert lhs == rhs
        # eta(g)_C o alpha_C = alpha_{g.C} o eta(g)_C
        for g in G.elements():
            for a in range(gauge.order):
                for x in impl.functor.source.objects:
                    gx = act.act_obj(g, x)
                    lhs = tgt.compose(impl.component(g, x),
                                      gauge.component(a, x))
                    rhs = tgt.compose(gauge.component(a, gx),
                                      impl.component(g, x))
                    assert lhs == rhs
