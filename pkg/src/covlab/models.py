"""Shipped finite models: categories, actions, implementations and fixtures.

These are the small worked models every report and test runs on; none of
them needs external data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import fingroup as fg
from .cohomology2 import Cochain2, trivial_cochain
from .covariance import Implementation, compute_gauge_group
from .exactlin import I as IU, Mat, ONE
from .fincat import (FinCat, GAction, TheoryFunctor, decorated_frames_category,
                     group_as_category, identity_functor)
from .multiplet import FieldSpaceAction, MatrixRep, SubMultiplet


def _identity_action(group: fg.GroupTable, cat: FinCat) -> GAction:
    ident = identity_functor(cat)
    return GAction(group, tuple(ident for _ in group.elements()))


# ---------------------------------------------------------------------------
# one-object model: trivial Z2 action, gauge group Z4

def one_object_cyclic_model(power: int = 1):
    """One object with endomorphism group Z4; G = Z2 acts trivially;
    eta(g) is the `power`-th rotation.  Gauge group: Z4."""
    z4 = fg.cyclic(4)
    cat = group_as_category(z4, prefix="r", name="BZ4")
    functor = identity_functor(cat)
    g2 = fg.cyclic(2)
    action = _identity_action(g2, cat)
    eta = [{"*": "r0"}, {"*": f"r{power % 4}"}]
    return Implementation(functor, action, eta, name=f"Z4Rot[p={power}]")


# ---------------------------------------------------------------------------
# two isomorphic objects swapped by Z2; trivial gauge group

def swap_model():
    objects = ["X", "Y"]
    mors = [("idX", "X", "X"), ("idY", "Y", "Y"), ("u", "X", "Y"), ("v", "Y", "X")]
    compose = {
        ("idX", "idX"): "idX", ("idY", "idY"): "idY",
        ("u", "idX"): "u", ("idY", "u"): "u",
        ("v", "idY"): "v", ("idX", "v"): "v",
        ("v", "u"): "idX", ("u", "v"): "idY",
    }
    cat = FinCat(objects, mors, compose, {"X": "idX", "Y": "idY"}, name="SwapIso")
    swap = TheoryFunctor(cat, cat, {"X": "Y", "Y": "X"},
                         {"idX": "idY", "idY": "idX", "u": "v", "v": "u"},
                         name="swap")
    g2 = fg.cyclic(2)
    action = GAction(g2, (identity_functor(cat), swap))
    functor = identity_functor(cat)
    eta = [{"X": "idX", "Y": "idY"}, {"X": "u", "Y": "v"}]
    return Implementation(functor, action, eta, name="SwapIso")


# ---------------------------------------------------------------------------
# frame rotation model: Z4 relabelling 4 frames, Z2-decorated arrows

def _frame_mid(j: int, i: int, u: int) -> str:
    return f"m{j}<{i}:{u}"


def frame_rotation_model(twist_parity: bool = True):
    """G = Z4 cyclically relabels 4 frame objects; arrows carry a Z2 decoration.

    The theory functor embeds the plain frame groupoid into the decorated one.
    With twist_parity the implementation picks the decorated lift of parity
    g mod 2 (still a trivial cocycle, since parity is a homomorphism).
    """
    z2 = fg.cyclic(2)
    z4 = fg.cyclic(4)
    n = 4
    plain = decorated_frames_category(n, fg.trivial_group(), name="Frames")
    deco = decorated_frames_category(n, z2, name="FramesZ2")

    functor = TheoryFunctor(
        plain, deco,
        {f"F{i}": f"F{i}" for i in range(n)},
        {_frame_mid(j, i, 0): _frame_mid(j, i, 0)
         for j in range(n) for i in range(n)},
        name="A",
    )

    functors = []
    for g in range(4):
        obj_map = {f"F{i}": f"F{(i + g) % n}" for i in range(n)}
        mor_map = {_frame_mid(j, i, 0): _frame_mid((j + g) % n, (i + g) % n, 0)
                   for j in range(n) for i in range(n)}
        functors.append(TheoryFunctor(plain, plain, obj_map, mor_map, name=f"T{g}"))
    action = GAction(z4, tuple(functors))

    eta = []
    for g in range(4):
        s = (g % 2) if twist_parity else 0
        eta.append({f"F{i}": _frame_mid((i + g) % n, i, s) for i in range(n)})
    impl = Implementation(functor, action, eta,
                          name=f"FrameRot[{'parity' if twist_parity else 'plain'}]")
    psi = {g: _frame_mid((-g) % n, 0, 0) for g in range(4)}
    return impl, psi, "F0"


# ---------------------------------------------------------------------------
# spin-frame model: Z4 double-covering a Z2 frame flip, gauge group Z4

def spin_frame_model():
    """S = Z4 acts on 2 frames through its quotient Z2; arrows carry a Z4
    decoration and eta(s) lifts the frame jump with decoration s.

    The cocycle is trivial, the gauge group is Z4, and the kernel element
    s = 2 is implemented by the central gauge involution (decoration 2).
    """
    z4 = fg.cyclic(4)
    n = 2
    cat = decorated_frames_category(n, z4, name="SpinFrames")
    functor = identity_functor(cat)
    functors = []
    for s in range(4):
        obj_map = {f"F{i}": f"F{(i + s) % n}" for i in range(n)}
        mor_map = {_frame_mid(j, i, u): _frame_mid((j + s) % n, (i + s) % n, u)
                   for j in range(n) for i in range(n) for u in range(4)}
        functors.append(TheoryFunctor(cat, cat, obj_map, mor_map, name=f"T{s}"))
    action = GAction(z4, tuple(functors))
    eta = [{f"F{i}": _frame_mid((i + s) % n, i, s) for i in range(n)}
           for s in range(4)]
    return Implementation(functor, action, eta, name="SpinFrame")


def spin_frame_kernel_restriction():
    """The gauge elements implementing the kernel of Z4 -> Z2 in the
    spin-frame model, as a homomorphism from the kernel subgroup."""
    impl = spin_frame_model()
    gauge = compute_gauge_group(impl.functor)
    s_group = impl.action.group
    kernel_elems = (0, 2)
    k_table, _ = fg.subgroup(s_group, kernel_elems, name="ker")
    mapping = []
    for k in kernel_elems:
        fam = tuple(impl.component(k, x) for x in gauge.objects)
        mapping.append(gauge.index_of(fam))
    return k_table, gauge, fg.GroupHom(k_table, gauge.table, tuple(mapping))


# ---------------------------------------------------------------------------
# field-space fixtures

_J = ((0, -1), (1, 0))  # quarter rotation


def vector_multiplet_action():
    """A two-component field transforming in the vector pattern
    star(g) = (rotation by g)^-1 under the finite rotation subgroup Z4;
    trivial gauge group and trivial cocycle."""
    z4 = fg.cyclic(4)
    triv = fg.trivial_group()
    j = Mat(_J)
    jinv = j.inverse()
    star = [Mat.identity(2)]
    for _ in range(3):
        star.append(star[-1] * jinv)
    dot = MatrixRep(triv, 2, (Mat.identity(2),))
    return FieldSpaceAction(dot, tuple(star), trivial_cochain(z4, triv))


def block_diagonal_fixtures():
    """Direct-product fixtures with two inequivalent irreducible one-
    dimensional G-blocks; the no-mixing assertion is armed on all of them."""
    z2 = fg.cyclic(2)
    z4 = fg.cyclic(4)
    out = []

    def diag(a, b):
        return Mat([[a, 0], [0, b]])

    sign2 = [ONE, -ONE]
    # G = Z2: trivial vs sign block
    for dot_chars in ([ONE, ONE], sign2):
        dot = MatrixRep(z2, 2, (Mat.identity(2), diag(dot_chars[1], dot_chars[1])))
        star = (Mat.identity(2), diag(ONE, -ONE))
        out.append(FieldSpaceAction(dot, star, trivial_cochain(z2, z2)))
    # G = Z4: trivial vs sign, and the Gaussian character pair (i, -i)
    dot = MatrixRep(z2, 2, (Mat.identity(2), diag(-ONE, -ONE)))
    star = tuple(diag(ONE, (-ONE) ** g) for g in range(4))
    out.append(FieldSpaceAction(dot, star, trivial_cochain(z4, z2)))
    star = tuple(diag(IU ** g, (-IU) ** g) for g in range(4))
    out.append(FieldSpaceAction(MatrixRep(z2, 2, (Mat.identity(2), diag(-ONE, -ONE))),
                                star, trivial_cochain(z4, z2)))
    return out


def standard_submultiplets():
    """Coordinate-line injections/projections for two-dimensional fixtures."""
    sub1 = SubMultiplet(Mat([[1], [0]]), Mat([[1, 0]]))
    sub2 = SubMultiplet(Mat([[0], [1]]), Mat([[0, 1]]))
    return sub1, sub2


def equivalent_blocks_action():
    """Two copies of the trivial G-representation swapped by the gauge
    element: the mixing witness is (alpha, 1)."""
    z2 = fg.cyclic(2)
    swap = Mat([[0, 1], [1, 0]])
    dot = MatrixRep(z2, 2, (Mat.identity(2), swap))
    star = (Mat.identity(2), Mat.identity(2))
    return FieldSpaceAction(dot, star, trivial_cochain(z2, z2))


def central_z4_mixing_action():
    """The central Z4-model cocycle (A = Z4, xi(g,g) = r^2, phi = id) with a
    genuinely twisted star action: star(g) = i*identity squares to dot(r^2),
    and dot(r) is a rotation mixing the two copies of the multiplier block."""
    z2, z4 = fg.cyclic(2), fg.cyclic(4)
    j = Mat(_J)
    dot = MatrixRep(z4, 2, (Mat.identity(2), j, j * j, j * j * j))
    star = (Mat.identity(2), Mat.identity(2).scale(IU))
    cochain = Cochain2(z2, z4, ((0, 0), (0, 2)), (0, 0))
    return FieldSpaceAction(dot, star, cochain)


def q8_mixing_action():
    """The nontrivial-class cocycle (A = Z4, phi = inversion, xi(g,g) = r^2)
    whose extension is the quaternion group; the standard two-dimensional
    representation mixes the two inequivalent multiplier lines."""
    z2, z4 = fg.cyclic(2), fg.cyclic(4)
    d = Mat([[IU, 0], [0, -IU]])
    dot = MatrixRep(z4, 2, (Mat.identity(2), d, d * d, d * d * d))
    star = (Mat.identity(2), Mat(_J))
    aut4 = fg.compute_aut(z4)
    inv_idx = aut4.index_of((0, 3, 2, 1))
    cochain = Cochain2(z2, z4, ((0, 0), (0, 2)), (0, inv_idx))
    return FieldSpaceAction(dot, star, cochain)


def eigenline_submultiplets():
    """The two rotation eigenlines (1, -i) and (1, i) with dual projections."""
    half = Fraction(1, 2)
    sub1 = SubMultiplet(Mat([[1], [-IU]]), Mat([[half, IU * half]]))
    sub2 = SubMultiplet(Mat([[1], [IU]]), Mat([[half, -IU * half]]))
    return sub1, sub2


def q8_two_dim_rep():
    """The faithful two-dimensional representation of the quaternion group."""
    q8 = fg.quaternion8()
    d = Mat([[IU, 0], [0, -IU]])
    j = Mat([[0, 1], [-1, 0]])
    mats = {0: Mat.identity(2), 1: Mat.identity(2).scale(-ONE),
            2: d, 3: -d, 4: j, 5: -j, 6: d * j, 7: -(d * j)}
    return MatrixRep(q8, 2, tuple(mats[e] for e in range(8)))


def q8_sign_rep(axis: str):
    """A one-dimensional character of Q8: trivial for axis "1", otherwise the
    character whose kernel is the cyclic subgroup spanned by the axis."""
    q8 = fg.quaternion8()
    if axis == "1":
        return MatrixRep(q8, 1, tuple(Mat([[1]]) for _ in range(8)))
    kernel_axis = {"i": (2, 3), "j": (4, 5), "k": (6, 7)}[axis]
    mats = []
    for e in range(8):
        inside = e in (0, 1) or e in kernel_axis
        mats.append(Mat([[1 if inside else -1]]))
    return MatrixRep(q8, 1, tuple(mats))


NAMED_MODELS = {
    "Z4Rot": lambda: one_object_cyclic_model(1),
    "Z4Rot3": lambda: one_object_cyclic_model(3),
    "SwapIso": swap_model,
    "FrameRot": lambda: frame_rotation_model()[0],
    "SpinFrame": spin_frame_model,
}


def named_model(name: str) -> Implementation:
    try:
        return NAMED_MODELS[name]()
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {sorted(NAMED_MODELS)}") \
            from None
