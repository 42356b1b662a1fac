import itertools

import pytest

from covlab import fingroup as fg
from covlab import models
from covlab.cohomology2 import cohomologous, trivial_cochain, validate_cocycle
from covlab.covering import (CentralCover, NotCentral, Section,
                             SectionInvalid, all_sections, check_centre_hom,
                             cyclic_cover, induced_gauge_cocycle, q8_cover,
                             spin_obstruction, split_cover, z_class_trivial,
                             z_cocycle)
from covlab.exactlin import Mat
from covlab.fingroup import GroupHom
from covlab.multiplet import MatrixRep


def test_q8_cover_well_formed():
    cov = q8_cover()
    assert cov.kernel_elements == (0, 1)
    k, elems = cov.kernel_group()
    assert k.order == 2


def test_non_central_kernel_rejected():
    s3 = fg.symmetric3()
    z2 = fg.cyclic(2)
    # sign homomorphism S3 -> Z2 has kernel A3, not central
    sign = tuple(0 if s3.element_order(x) in (1, 3) else 1 for x in s3.elements())
    with pytest.raises(ValueError):
        CentralCover(s3, z2, GroupHom(s3, z2, sign))


def test_section_invariants():
    cov = q8_cover()
    with pytest.raises(SectionInvalid):
        Section(cov, (1, 2, 4, 6))  # lift(1) != 1
    with pytest.raises(SectionInvalid):
        Section(cov, (0, 2, 4, 6))  # lift(1) lies in the wrong fiber


def test_all_sections_count():
    cov = q8_cover()
    assert len(all_sections(cov)) == 8
    cov2 = cyclic_cover(4, 2)
    assert len(all_sections(cov2)) == 2


def test_split_cover_homomorphic_section_gives_trivial_z():
    cov = split_cover(2, fg.cyclic(3))
    lift = tuple(range(cov.L.order))  # l -> (0, l) has index l
    z = z_cocycle(Section(cov, lift))
    assert all(v == 0 for row in z.cochain.xi for v in row)
    assert z_class_trivial(z) is not None


def test_cyclic_cover_z4_over_z2():
    cov = cyclic_cover(4, 2)
    for sec in all_sections(cov):
        z = z_cocycle(sec)
        # z(g,g) = lift(g)^2 in the kernel
        g = 1
        expected = cov.S.mul(sec.lift[g], sec.lift[g])
        assert z.values[g][g] == expected
        assert z_class_trivial(z) is None  # nontrivial class


def test_q8_every_section_gives_nontrivial_class():
    cov = q8_cover()
    for sec in all_sections(cov):
        z = z_cocycle(sec)
        assert z_class_trivial(z) is None


def test_q8_all_raw_lift_choices_nontrivial():
    # all 2^4 raw lift maps (identity lift unconstrained) still produce
    # kernel-valued factor sets that no twist map kills
    cov = q8_cover()
    S, L = cov.S, cov.L
    kernel = cov.kernel_elements
    fibers = [tuple(s for s in S.elements() if cov.pi.map[s] == l)
              for l in L.elements()]
    count = 0
    for lift in itertools.product(*fibers):
        count += 1
        z = {}
        for l1 in L.elements():
            for l0 in L.elements():
                v = S.mul(S.mul(lift[l1], lift[l0]),
                          S.inv(lift[L.mul(l1, l0)]))
                assert v in kernel
                z[(l1, l0)] = v
        for zeta in itertools.product(kernel, repeat=L.order):
            assert any(
                S.mul(S.mul(S.mul(zeta[l1], zeta[l0]), z[(l1, l0)]),
                      S.inv(zeta[L.mul(l1, l0)])) != 0
                for l1 in L.elements() for l0 in L.elements())
    assert count == 16


def test_q8_z_class_is_section_independent():
    cov = q8_cover()
    sections = all_sections(cov)
    for s1, s2 in itertools.combinations(sections, 2):
        c1, c2 = z_cocycle(s1).cochain, z_cocycle(s2).cochain
        assert cohomologous(c1, c2) is not None


def test_z_class_section_independent_across_cover_types():
    covers = [cyclic_cover(8, 2), cyclic_cover(6, 3),
              split_cover(2, fg.standard_group("Z2xZ2"))]
    for cov in covers:
        assert cov.L.order <= 8
        sections = all_sections(cov)
        for s1, s2 in itertools.combinations(sections, 2):
            assert cohomologous(z_cocycle(s1).cochain,
                                z_cocycle(s2).cochain) is not None


def test_induced_cocycle_trivial_zeta():
    cov = q8_cover()
    k, _ = cov.kernel_group()
    a = fg.cyclic(2)
    zeta = GroupHom(k, a, (0, 0))
    for sec in all_sections(cov):
        out = induced_gauge_cocycle(sec, zeta)
        assert validate_cocycle(out).valid
        w = cohomologous(out, trivial_cochain(out.G, out.A),
                         normalized_only=False)
        assert w is not None


def test_induced_cocycle_q8_univalence_nontrivial():
    cov = q8_cover()
    k, _ = cov.kernel_group()
    a = fg.cyclic(2)
    zeta = GroupHom(k, a, (0, 1))  # -1 -> the gauge flip
    for sec in all_sections(cov):
        out = induced_gauge_cocycle(sec, zeta)
        assert cohomologous(out, trivial_cochain(out.G, out.A),
                            normalized_only=False) is None


def test_induced_cocycle_split_cover_trivial_regardless_of_zeta():
    cov = split_cover(2, fg.standard_group("Z2xZ2"))
    k, _ = cov.kernel_group()
    a = fg.cyclic(2)
    lift = tuple(range(cov.L.order))
    for zeta_map in [(0, 0), (0, 1)]:
        out = induced_gauge_cocycle(Section(cov, lift), GroupHom(k, a, zeta_map))
        assert cohomologous(out, trivial_cochain(out.G, out.A)) is not None


def test_induced_cocycle_rejects_noncentral_zeta():
    cov = q8_cover()
    k, _ = cov.kernel_group()
    s3 = fg.symmetric3()
    transposition = next(x for x in s3.elements() if s3.element_order(x) == 2)
    zeta = GroupHom(k, s3, (0, transposition))
    with pytest.raises(NotCentral):
        induced_gauge_cocycle(all_sections(cov)[0], zeta)


def test_check_centre_hom():
    k = fg.cyclic(2)
    assert check_centre_hom(GroupHom(k, fg.cyclic(4), (0, 2))).valid
    assert check_centre_hom(GroupHom(k, fg.cyclic(4), (0, 0))).valid
    bad_hom = check_centre_hom(GroupHom(k, fg.cyclic(4), (0, 1)))
    assert not bad_hom.valid and bad_hom.hom_witness is not None
    s3 = fg.symmetric3()
    transposition = next(x for x in s3.elements() if s3.element_order(x) == 2)
    noncentral = check_centre_hom(GroupHom(k, s3, (0, transposition)))
    assert not noncentral.valid
    assert noncentral.centrality_witness is not None


def test_spin_frame_model_kernel_restriction_is_central_hom():
    k_table, gauge, mapping = models.spin_frame_kernel_restriction()
    report = check_centre_hom(mapping)
    assert report.valid
    # the nonidentity kernel element lands on an involutive central element
    img = mapping.map[1]
    assert img != 0
    assert gauge.table.mul(img, img) == 0


def test_spin_obstruction_q8():
    cov = q8_cover()
    sec = all_sections(cov)[0]
    k, _ = cov.kernel_group()
    zeta = GroupHom(k, fg.cyclic(2), (0, 1))
    two_dim = models.q8_two_dim_rep()
    verdict = spin_obstruction(sec, zeta, two_dim)
    assert not verdict.descends
    assert verdict.obstruction_witness == 1  # the central -1
    assert verdict.model_consistent

    for axis in "1ijk":
        v = spin_obstruction(sec, zeta, models.q8_sign_rep(axis))
        assert v.descends
        assert v.descended is not None and v.descended.group == cov.L


def test_spin_obstruction_trivial_zeta_inconsistency_flag():
    cov = q8_cover()
    sec = all_sections(cov)[0]
    k, _ = cov.kernel_group()
    trivial_zeta = GroupHom(k, fg.cyclic(2), (0, 0))
    verdict = spin_obstruction(sec, trivial_zeta, models.q8_two_dim_rep())
    assert not verdict.descends
    assert not verdict.model_consistent  # trivial univalence but no descent


def test_descends_iff_kernel_in_rep_kernel():
    cov = q8_cover()
    sec = all_sections(cov)[0]
    k, _ = cov.kernel_group()
    zeta = GroupHom(k, fg.cyclic(2), (0, 1))
    reps = [models.q8_two_dim_rep()] + [models.q8_sign_rep(a) for a in "1ijk"]
    for rep in reps:
        verdict = spin_obstruction(sec, zeta, rep)
        kernel_trivial = all(rep(amb) == Mat.identity(rep.dim)
                             for amb in cov.kernel_elements)
        assert verdict.descends == kernel_trivial


def test_split_cover_descent():
    cov = split_cover(2, fg.cyclic(2))
    lift = tuple(range(cov.L.order))
    sec = Section(cov, lift)
    k, _ = cov.kernel_group()
    zeta = GroupHom(k, fg.cyclic(2), (0, 0))
    # rep of K x L trivial on K descends
    mats = tuple(Mat([[1 if (e % 2 == 0) else -1]]) for e in range(cov.S.order))
    rep = MatrixRep(cov.S, 1, mats)
    verdict = spin_obstruction(sec, zeta, rep)
    assert verdict.descends
