"""Finite categories, functors between them, and group actions by functors.

A category is given by object ids, morphism records (id, dom, cod), a
composition table on composable pairs (total: every composable pair must
have a listed composite) and one identity morphism per object.  Composition
is written like functions: compose(f, g) = f o g, defined when dom(f) ==
cod(g), i.e. g is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple


HOM_SET_CAP = 64  # keeps natural-family enumeration tractable


@dataclass(frozen=True)
class Report:
    valid: bool
    violation: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.valid


class FinCat:
    """Immutable finite category; validate with validate_fincat."""

    def __init__(self, objects: Sequence[str],
                 morphisms: Sequence[Tuple[str, str, str]],
                 compose: Mapping[Tuple[str, str], str],
                 identities: Mapping[str, str],
                 name: Optional[str] = None) -> None:
        self.objects = tuple(objects)
        self.morphisms = tuple((str(m), str(d), str(c)) for m, d, c in morphisms)
        self.compose_table = dict(compose)
        self.identities = dict(identities)
        self.name = name
        self._dom = {m: d for m, d, _ in self.morphisms}
        self._cod = {m: c for m, _, c in self.morphisms}
        if len(self._dom) != len(self.morphisms):
            raise ValueError("duplicate morphism ids")
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object ids")

    def dom(self, m: str) -> str:
        return self._dom[m]

    def cod(self, m: str) -> str:
        return self._cod[m]

    def identity(self, obj: str) -> str:
        return self.identities[obj]

    def compose(self, f: str, g: str) -> str:
        """f o g (g first); defined when dom(f) == cod(g)."""
        return self.compose_table[(f, g)]

    def hom(self, x: str, y: str) -> Tuple[str, ...]:
        return tuple(sorted(m for m, d, c in self.morphisms
                            if d == x and c == y))

    def endos(self, x: str) -> Tuple[str, ...]:
        return self.hom(x, x)

    def inverse(self, m: str) -> Optional[str]:
        """Two-sided inverse of m, or None."""
        d, c = self.dom(m), self.cod(m)
        for cand in self.hom(c, d):
            if (self.compose_table.get((cand, m)) == self.identity(d)
                    and self.compose_table.get((m, cand)) == self.identity(c)):
                return cand
        return None

    def invertible_endos(self, x: str) -> Tuple[str, ...]:
        return tuple(m for m in self.endos(x) if self.inverse(m) is not None)


def validate_fincat(cat: FinCat) -> Report:
    """Exhaustively check the category laws; first witness on failure."""
    mor_ids = {m for m, _, _ in cat.morphisms}
    for m, d, c in cat.morphisms:
        if d not in cat.objects or c not in cat.objects:
            return Report(False, "UnknownObject", (m, d, c))
    for x in cat.objects:
        for y in cat.objects:
            if len(cat.hom(x, y)) > HOM_SET_CAP:
                return Report(False, "HomSetCapExceeded", (x, y))
    for obj in cat.objects:
        i = cat.identities.get(obj)
        if i is None or i not in mor_ids:
            return Report(False, "MissingIdentity", (obj,))
        if cat.dom(i) != obj or cat.cod(i) != obj:
            return Report(False, "BadIdentity", (obj, i))
    for (f, g), h in cat.compose_table.items():
        if f not in mor_ids or g not in mor_ids or h not in mor_ids:
            return Report(False, "UnknownMorphism", (f, g, h))
        if cat.dom(f) != cat.cod(g):
            return Report(False, "NotComposable", (f, g))
        if cat.dom(h) != cat.dom(g) or cat.cod(h) != cat.cod(f):
            return Report(False, "BadCompositeShape", (f, g, h))
    for f in sorted(mor_ids):
        for g in sorted(mor_ids):
            if cat.dom(f) == cat.cod(g) and (f, g) not in cat.compose_table:
                return Report(False, "MissingComposite", (f, g))
    for obj in cat.objects:
        i = cat.identity(obj)
        for m in sorted(mor_ids):
            if cat.dom(m) == obj and cat.compose(m, i) != m:
                return Report(False, "IdentityLaw", (m, i))
            if cat.cod(m) == obj and cat.compose(i, m) != m:
                return Report(False, "IdentityLaw", (i, m))
    for f in sorted(mor_ids):
        for g in sorted(mor_ids):
            if cat.dom(f) != cat.cod(g):
                continue
            for h in sorted(mor_ids):
                if cat.dom(g) != cat.cod(h):
                    continue
                if cat.compose(cat.compose(f, g), h) != cat.compose(f, cat.compose(g, h)):
                    return Report(False, "NotAssociative", (f, g, h))
    return Report(True)


class TheoryFunctor:
    """A functor between finite categories, given by its object/morphism maps."""

    def __init__(self, source: FinCat, target: FinCat,
                 obj_map: Mapping[str, str], mor_map: Mapping[str, str],
                 name: Optional[str] = None) -> None:
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name

    def on_obj(self, x: str) -> str:
        return self.obj_map[x]

    def on_mor(self, m: str) -> str:
        return self.mor_map[m]

    def then(self, outer: "TheoryFunctor", name: Optional[str] = None) -> "TheoryFunctor":
        """outer o self."""
        if outer.source is not self.target and outer.source.morphisms != self.target.morphisms:
            raise ValueError("functors are not composable")
        return TheoryFunctor(
            self.source, outer.target,
            {x: outer.on_obj(y) for x, y in self.obj_map.items()},
            {m: outer.on_mor(f) for m, f in self.mor_map.items()},
            name,
        )

    def maps_equal(self, other: "TheoryFunctor") -> bool:
        return self.obj_map == other.obj_map and self.mor_map == other.mor_map


def identity_functor(cat: FinCat) -> TheoryFunctor:
    return TheoryFunctor(cat, cat, {x: x for x in cat.objects},
                         {m: m for m, _, _ in cat.morphisms}, name="Id")


def validate_functor(F: TheoryFunctor) -> Report:
    src, tgt = F.source, F.target
    for x in src.objects:
        if F.obj_map.get(x) not in tgt.objects:
            return Report(False, "ObjectMapNotTotal", (x,))
    tgt_mors = {m for m, _, _ in tgt.morphisms}
    for m, d, c in src.morphisms:
        fm = F.mor_map.get(m)
        if fm not in tgt_mors:
            return Report(False, "MorphismMapNotTotal", (m,))
        if tgt.dom(fm) != F.on_obj(d) or tgt.cod(fm) != F.on_obj(c):
            return Report(False, "DomCodNotPreserved", (m,))
    for x in src.objects:
        if F.on_mor(src.identity(x)) != tgt.identity(F.on_obj(x)):
            return Report(False, "IdentityNotPreserved", (x,))
    for (f, g), h in src.compose_table.items():
        if tgt.compose(F.on_mor(f), F.on_mor(g)) != F.on_mor(h):
            return Report(False, "CompositionNotPreserved", (f, g))
    return Report(True)


def functor_is_invertible(F: TheoryFunctor) -> bool:
    return (sorted(F.obj_map.values()) == sorted(F.target.objects) and
            sorted(F.mor_map.values()) == sorted(m for m, _, _ in F.target.morphisms))


class GAction:
    """A homomorphism from a finite group into invertible endofunctors."""

    def __init__(self, group, functors: Sequence[TheoryFunctor]) -> None:
        self.group = group
        self.functors = tuple(functors)

    @property
    def category(self) -> FinCat:
        return self.functors[0].source

    def act_obj(self, g: int, x: str) -> str:
        return self.functors[g].on_obj(x)

    def act_mor(self, g: int, m: str) -> str:
        return self.functors[g].on_mor(m)


def validate_gaction(act: GAction) -> Report:
    grp = act.group
    if len(act.functors) != grp.order:
        return Report(False, "FunctorPerElementMissing", (len(act.functors),))
    cat = act.category
    for g, F in enumerate(act.functors):
        rep = validate_functor(F)
        if not rep:
            return Report(False, f"Functor({g}):{rep.violation}", rep.witness)
        if not functor_is_invertible(F):
            return Report(False, "FunctorNotInvertible", (g,))
    ident = identity_functor(cat)
    if not act.functors[0].maps_equal(ident):
        return Report(False, "IdentityElementNotIdentityFunctor", (0,))
    for g in grp.elements():
        for h in grp.elements():
            composed = act.functors[h].then(act.functors[g])  # T(g) o T(h)
            if not composed.maps_equal(act.functors[grp.mul(g, h)]):
                return Report(False, "NotAHomomorphism", (g, h))
    return Report(True)


# ---------------------------------------------------------------------------
# convenient constructors used by the shipped models

def group_as_category(group, prefix: str = "r", name: Optional[str] = None) -> FinCat:
    """One-object category whose endomorphisms are the group elements."""
    obj = "*"
    mors = [(f"{prefix}{i}", obj, obj) for i in group.elements()]
    compose = {(f"{prefix}{i}", f"{prefix}{j}"): f"{prefix}{group.mul(i, j)}"
               for i in group.elements() for j in group.elements()}
    return FinCat([obj], mors, compose, {obj: f"{prefix}0"}, name=name)


def decorated_frames_category(n_frames: int, deco, name: Optional[str] = None) -> FinCat:
    """Codiscrete category on n frame objects with `deco`-decorated arrows.

    hom(F_i, F_j) = {m[j][i][u] : u in deco}; composition multiplies the
    decorations in `deco` (a GroupTable) and composes the frame jumps.
    """
    objects = [f"F{i}" for i in range(n_frames)]
    mors = []
    compose = {}

    def mid(j: int, i: int, u: int) -> str:
        return f"m{j}<{i}:{u}"

    for j in range(n_frames):
        for i in range(n_frames):
            for u in deco.elements():
                mors.append((mid(j, i, u), f"F{i}", f"F{j}"))
    for k in range(n_frames):
        for j in range(n_frames):
            for i in range(n_frames):
                for u in deco.elements():
                    for v in deco.elements():
                        compose[(mid(k, j, u), mid(j, i, v))] = mid(k, i, deco.mul(u, v))
    identities = {f"F{i}": mid(i, i, 0) for i in range(n_frames)}
    return FinCat(objects, mors, compose, identities, name=name)
