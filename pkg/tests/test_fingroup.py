import itertools

import pytest

from covlab import fingroup as fg


def test_make_group_z2():
    g = fg.make_group([[0, 1], [1, 0]])
    assert g.order == 2
    assert g.mul(1, 1) == 0


def test_make_group_rejects_non_permutation_row():
    with pytest.raises(fg.NotInvertible) as exc:
        fg.make_group([[0, 1], [1, 1]])
    assert exc.value.element == 1


def test_make_group_rejects_out_of_range():
    with pytest.raises(fg.IndexOutOfRange):
        fg.make_group([[0, 2], [2, 0]])


def test_make_group_rejects_no_identity():
    # each row is a permutation of {0,1} but no two-sided identity exists
    with pytest.raises(fg.NoIdentity):
        fg.make_group([[1, 0], [1, 0]])


def test_make_group_rejects_non_associative():
    # order-3 Latin square with identity that is not a group (no such thing
    # exists at order 3, so use order 5: a quasigroup loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(fg.NotAssociative) as exc:
        fg.make_group(table)
    x, y, z = exc.value.witness
    g = table
    assert g[g[x][y]][z] != g[x][g[y][z]]


def test_make_group_reindexes_identity_to_zero():
    # Z2 written with identity at index 1
    g = fg.make_group([[1, 0], [0, 1]])
    assert g.mul(0, 0) == 0 and g.mul(1, 1) == 0 and g.mul(0, 1) == 1


def test_z4_element_orders():
    g = fg.cyclic(4)
    assert g.element_order(1) == 4
    assert g.order_profile() == (1, 2, 4, 4)


def test_group_axioms_by_exhaustive_scan():
    for name in ("Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"):
        g = fg.standard_group(name)
        n = g.order
        assert all(g.mul(0, x) == x and g.mul(x, 0) == x for x in range(n))
        for x, y, z in itertools.product(range(n), repeat=3):
            assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))
        for x in range(n):
            assert g.mul(x, g.inv(x)) == 0 and g.mul(g.inv(x), x) == 0


def test_q8_structure():
    q8 = fg.quaternion8()
    assert q8.order_profile() == (1, 2, 4, 4, 4, 4, 4, 4)
    assert not q8.is_abelian()
    # i*j = k with the element order 1,-1,i,-i,j,-j,k,-k
    assert q8.mul(2, 4) == 6
    assert q8.mul(4, 2) == 7


def test_centre_examples():
    assert fg.centre(fg.cyclic(4)) == (0, 1, 2, 3)
    assert fg.centre(fg.symmetric3()) == (0,)
    assert fg.centre(fg.quaternion8()) == (0, 1)


def test_centre_is_subgroup():
    for name in ("Z4", "S3", "Q8", "Z2xZ2"):
        g = fg.standard_group(name)
        z = fg.centre(g)
        sub, elems = fg.subgroup(g, z)
        assert elems == z


def test_aut_orders():
    assert fg.compute_aut(fg.cyclic(2)).order == 1
    assert fg.compute_aut(fg.cyclic(3)).order == 2
    assert fg.compute_aut(fg.standard_group("Z2xZ2")).order == 6


def test_aut_is_a_group_and_composition_matches_table():
    for name in ("Z3", "Z4", "Z2xZ2", "S3", "Q8"):
        g = fg.standard_group(name)
        aut = fg.compute_aut(g)
        for p in aut.perms:
            assert fg.is_automorphism(g, p)
        for i, p in enumerate(aut.perms):
            for j, q in enumerate(aut.perms):
                assert aut.perms[aut.table.mul(i, j)] == fg.compose_perm(p, q)


def test_aut_deterministic_ordering():
    g = fg.standard_group("Z2xZ2")
    aut = fg.compute_aut(g)
    assert list(aut.perms) == sorted(aut.perms)
    assert aut.perms[0] == fg.identity_perm(4)


def test_aut_q8_order_24():
    # Aut(Q8) permutes the three axis pairs and twists signs: order 24
    assert fg.compute_aut(fg.quaternion8()).order == 24


def test_aut_s3_is_inner():
    s3 = fg.symmetric3()
    aut = fg.compute_aut(s3)
    assert aut.order == 6
    inner = {fg.inner_perm(s3, a) for a in s3.elements()}
    assert inner == set(aut.perms)


def test_check_hom_examples():
    z2, z4 = fg.cyclic(2), fg.cyclic(4)
    ident = fg.GroupHom(z2, z2, (0, 1))
    assert fg.check_hom(ident).valid

    mod2 = fg.GroupHom(z4, z2, (0, 1, 0, 1))
    assert fg.check_hom(mod2).valid

    bad = fg.GroupHom(z4, z2, (0, 1, 1, 1))
    report = fg.check_hom(bad)
    assert not report.valid
    assert report.witness == (1, 1)


def test_quotient_q8_by_centre():
    q8 = fg.quaternion8()
    q, proj = fg.quotient(q8, fg.centre(q8))
    assert q.order == 4
    assert q.order_profile() == (1, 2, 2, 2)  # Z2 x Z2
    assert fg.check_hom(proj).valid


def test_direct_product_encoding():
    z2, z3 = fg.cyclic(2), fg.cyclic(3)
    g = fg.direct_product(z2, z3)
    assert g.order == 6
    assert g.is_abelian()
    # pair (a, b) encoded as a*3 + b
    assert g.mul(1 * 3 + 2, 1 * 3 + 2) == ((0) * 3 + 1)


def test_cap_exceeded():
    with pytest.raises(fg.CapExceeded):
        fg.automorphism_perms(fg.cyclic(16), cap=8)
