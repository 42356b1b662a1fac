"""Finite groups as multiplication tables.

Conventions shared by the whole package:

  * group elements are the indices 0..order-1 and index 0 is the identity
    (tables with the identity elsewhere are reindexed on ingestion);
  * permutations compose like functions: compose(p, q)[x] = p[q[x]];
  * every enumeration is sorted, so outputs are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

Perm = Tuple[int, ...]


class GroupError(Exception):
    """Base class for multiplication-table validation failures."""


class NoIdentity(GroupError):
    def __init__(self) -> None:
        super().__init__("no two-sided identity element")


class NotInvertible(GroupError):
    def __init__(self, element: int) -> None:
        self.element = element
        super().__init__(f"element {element}: row/column is not a permutation "
                         "or no two-sided inverse exists")


class NotAssociative(GroupError):
    def __init__(self, witness: Tuple[int, int, int]) -> None:
        self.witness = witness
        super().__init__(f"associativity fails at triple {witness}")


class IndexOutOfRange(GroupError):
    def __init__(self, row: int, col: Optional[int], value) -> None:
        self.row, self.col, self.value = row, col, value
        super().__init__(f"bad table entry at ({row},{col}): {value!r}")


class CapExceeded(GroupError):
    def __init__(self, order: int, cap: int) -> None:
        self.order, self.cap = order, cap
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group: square index table with identity at index 0."""

    table: Tuple[Tuple[int, ...], ...]
    name: Optional[str] = None

    IDENTITY = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        row = self.table[a]
        for b in range(self.order):
            if row[b] == 0 and self.table[b][a] == 0:
                return b
        raise NotInvertible(a)

    def elements(self) -> range:
        return range(self.order)

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        out = 0
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def order_profile(self) -> Tuple[int, ...]:
        """Sorted multiset of element orders (an isomorphism invariant)."""
        return tuple(sorted(self.element_order(a) for a in self.elements()))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(n) for b in range(a + 1, n))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupTable) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        label = self.name or f"order-{self.order}"
        return f"GroupTable({label})"


def _reindexed(rows: Tuple[Tuple[int, ...], ...], e: int) -> Tuple[Tuple[int, ...], ...]:
    # swap labels 0 <-> e
    n = len(rows)
    lab = list(range(n))
    lab[0], lab[e] = e, 0
    return tuple(tuple(lab[rows[lab[i]][lab[j]]] for j in range(n)) for i in range(n))


def make_group(table: Sequence[Sequence[int]], name: Optional[str] = None) -> GroupTable:
    """Validate a multiplication table and return a GroupTable.

    The first violated axiom is reported: IndexOutOfRange, NoIdentity,
    NotInvertible (with the offending element) or NotAssociative (with the
    witness triple).  Tables whose identity is not element 0 are reindexed.
    """
    rows = []
    n = len(table)
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise IndexOutOfRange(i, len(row), None)
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not (0 <= v < n):
                raise IndexOutOfRange(i, j, v)
        rows.append(row)
    rows = tuple(rows)
    if n == 0:
        raise NoIdentity()

    identity = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()
    if identity != 0:
        rows = _reindexed(rows, identity)

    full = frozenset(range(n))
    for x in range(n):
        if frozenset(rows[x]) != full or frozenset(rows[y][x] for y in range(n)) != full:
            raise NotInvertible(x)
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise NotAssociative((x, y, z))
    for x in range(n):
        if not any(rows[x][y] == 0 and rows[y][x] == 0 for y in range(n)):
            raise NotInvertible(x)
    return GroupTable(rows, name)


# ---------------------------------------------------------------------------
# standard groups

def cyclic(n: int, name: Optional[str] = None) -> GroupTable:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupTable(table, name or f"Z{n}")


def direct_product(a: GroupTable, b: GroupTable, name: Optional[str] = None) -> GroupTable:
    """Product group on pairs, encoded as index i*|b| + j."""
    nb = b.order
    size = a.order * nb
    table = tuple(
        tuple(a.mul(x // nb, y // nb) * nb + b.mul(x % nb, y % nb) for y in range(size))
        for x in range(size)
    )
    return GroupTable(table, name or f"{a.name}x{b.name}")


def symmetric3() -> GroupTable:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[k]] for k in range(3))] for q in perms) for p in perms
    )
    return GroupTable(table, "S3")


_Q8_AXES = "1ijk"
_Q8_MUL = {  # (axis, axis) -> (sign, axis) for the unit quaternions
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
}


def quaternion8() -> GroupTable:
    """Q8 with element order 1, -1, i, -i, j, -j, k, -k."""
    def idx(sign: int, axis: str) -> int:
        return 2 * _Q8_AXES.index(axis) + (0 if sign == 1 else 1)

    def unpack(e: int) -> Tuple[int, str]:
        return (1 if e % 2 == 0 else -1), _Q8_AXES[e // 2]

    table = []
    for x in range(8):
        sx, ax = unpack(x)
        row = []
        for y in range(8):
            sy, ay = unpack(y)
            s, az = _Q8_MUL[(ax, ay)]
            row.append(idx(sx * sy * s, az))
        table.append(tuple(row))
    return GroupTable(tuple(table), "Q8")


def trivial_group() -> GroupTable:
    return GroupTable(((0,),), "1")


_STANDARD = {
    "1": trivial_group,
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z6": lambda: cyclic(6),
    "Z8": lambda: cyclic(8),
    "Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2), "Z2xZ2"),
    "S3": symmetric3,
    "Q8": quaternion8,
}


def standard_group(name: str) -> GroupTable:
    try:
        return _STANDARD[name]()
    except KeyError:
        raise KeyError(f"unknown group name {name!r}; known: {sorted(_STANDARD)}") from None


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass(frozen=True)
class GroupHom:
    source: GroupTable
    target: GroupTable
    map: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class HomReport:
    valid: bool
    witness: Optional[Tuple[int, int]] = None


def check_hom(h: GroupHom) -> HomReport:
    """True iff the homomorphism law holds at every pair; else a witness pair."""
    if len(h.map) != h.source.order or any(
        not (0 <= v < h.target.order) for v in h.map
    ):
        raise ValueError("map is not total on the source group")
    if h.map[0] != 0:
        return HomReport(False, (0, 0))
    for x in h.source.elements():
        for y in h.source.elements():
            if h.map[h.source.mul(x, y)] != h.target.mul(h.map[x], h.map[y]):
                return HomReport(False, (x, y))
    return HomReport(True)


def kernel(h: GroupHom) -> Tuple[int, ...]:
    return tuple(x for x in h.source.elements() if h.map[x] == 0)


def image(h: GroupHom) -> Tuple[int, ...]:
    return tuple(sorted(set(h.map)))


def is_surjective(h: GroupHom) -> bool:
    return len(set(h.map)) == h.target.order


def is_injective(h: GroupHom) -> bool:
    return len(set(h.map)) == h.source.order


# ---------------------------------------------------------------------------
# centre, subgroups, quotients

def centre(g: GroupTable) -> Tuple[int, ...]:
    """Elements commuting with everything, sorted."""
    return tuple(z for z in g.elements()
                 if all(g.mul(z, x) == g.mul(x, z) for x in g.elements()))


def closure(g: GroupTable, elems: Sequence[int]) -> Tuple[int, ...]:
    seen = {0, *elems}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for y in list(seen):
            for z in (g.mul(x, y), g.mul(y, x), g.inv(x)):
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
    return tuple(sorted(seen))


def subgroup(g: GroupTable, elems: Sequence[int],
             name: Optional[str] = None) -> Tuple[GroupTable, Tuple[int, ...]]:
    """Subgroup as its own GroupTable plus the sorted ambient elements."""
    elems = tuple(sorted(set(elems)))
    if 0 not in elems:
        raise ValueError("subgroup must contain the identity")
    pos = {e: i for i, e in enumerate(elems)}
    for x in elems:
        if g.inv(x) not in pos:
            raise ValueError(f"subset not inverse-closed at {x}")
        for y in elems:
            if g.mul(x, y) not in pos:
                raise ValueError(f"subset not closed at ({x},{y})")
    table = tuple(tuple(pos[g.mul(x, y)] for y in elems) for x in elems)
    return GroupTable(table, name), elems


def is_normal(g: GroupTable, elems: Sequence[int]) -> bool:
    sub = set(elems)
    return all(g.mul(g.mul(x, nrm), g.inv(x)) in sub
               for x in g.elements() for nrm in sub)


def quotient(g: GroupTable, normal: Sequence[int],
             name: Optional[str] = None) -> Tuple[GroupTable, GroupHom]:
    """Quotient by a normal subgroup, with the projection homomorphism.

    Cosets are ordered by their least member, so the identity coset is 0.
    """
    subgroup(g, normal)  # validates the subset
    if not is_normal(g, normal):
        raise ValueError("subgroup is not normal")
    nset = tuple(sorted(set(normal)))
    coset_of = {}
    cosets = []
    for x in g.elements():
        if x in coset_of:
            continue
        cos = tuple(sorted(g.mul(x, n) for n in nset))
        for m in cos:
            coset_of[m] = len(cosets)
        cosets.append(cos)
    order = sorted(range(len(cosets)), key=lambda i: cosets[i][0])
    relabel = {old: new for new, old in enumerate(order)}
    proj = tuple(relabel[coset_of[x]] for x in g.elements())
    table = tuple(
        tuple(proj[g.mul(cosets[order[i]][0], cosets[order[j]][0])]
              for j in range(len(cosets)))
        for i in range(len(cosets))
    )
    q = make_group(table, name)
    return q, GroupHom(g, q, proj)


# ---------------------------------------------------------------------------
# automorphisms

def compose_perm(p: Perm, q: Perm) -> Perm:
    return tuple(p[q[x]] for x in range(len(p)))


def invert_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def is_automorphism(g: GroupTable, perm: Perm) -> bool:
    n = g.order
    return (perm[0] == 0 and sorted(perm) == list(range(n)) and
            all(perm[g.mul(x, y)] == g.mul(perm[x], perm[y])
                for x in range(n) for y in range(n)))


@dataclass(frozen=True)
class AutGroup:
    """Automorphism group with one realizing permutation per element."""

    table: GroupTable
    perms: Tuple[Perm, ...]

    @property
    def order(self) -> int:
        return self.table.order

    def index_of(self, perm: Perm) -> int:
        try:
            return self.perms.index(tuple(perm))
        except ValueError:
            raise KeyError(f"{perm} is not an automorphism of the group") from None


def inner_perm(g: GroupTable, a: int) -> Perm:
    """The inner automorphism x -> a x a^-1 as a permutation."""
    ai = g.inv(a)
    return tuple(g.mul(g.mul(a, x), ai) for x in g.elements())


def generating_sequence(g: GroupTable) -> Tuple[int, ...]:
    gens: list[int] = []
    gen = closure(g, gens)
    for x in g.elements():
        if x not in gen:
            gens.append(x)
            gen = closure(g, gens)
            if len(gen) == g.order:
                break
    return tuple(gens)


def _bfs_recipes(g: GroupTable, gens: Tuple[int, ...]):
    """Breadth-first expressions of every element as (parent, generator-index).

    Returns the recipes plus the discovery order (parents precede children).
    """
    recipe = {0: None}
    order = [0]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for gi, gen in enumerate(gens):
            y = g.mul(x, gen)
            if y not in recipe:
                recipe[y] = (x, gi)
                order.append(y)
    return recipe, order


def automorphism_perms(g: GroupTable, cap: int = 128) -> Tuple[Perm, ...]:
    if g.order > cap:
        raise CapExceeded(g.order, cap)
    if g.order == 1:
        return (identity_perm(1),)
    gens = generating_sequence(g)
    recipe, fill_order = _bfs_recipes(g, gens)
    fill_order = [x for x in fill_order if recipe[x] is not None]
    elem_orders = [g.element_order(x) for x in g.elements()]
    candidates = [
        [y for y in g.elements() if elem_orders[y] == elem_orders[gen]]
        for gen in gens
    ]
    found = []
    for images in itertools.product(*candidates):
        img = [0] * g.order
        for x in fill_order:  # parents precede children in BFS order
            parent, gi = recipe[x]
            img[x] = g.mul(img[parent], images[gi])
        if sorted(img) != list(range(g.order)):
            continue
        perm = tuple(img)
        if all(perm[g.mul(x, y)] == g.mul(perm[x], perm[y])
               for x in g.elements() for y in g.elements()):
            found.append(perm)
    found.sort()
    return tuple(found)


@lru_cache(maxsize=None)
def compute_aut(g: GroupTable, cap: int = 128) -> AutGroup:
    """Full automorphism group, elements ordered lexicographically.

    The identity permutation is lexicographically least among identity-fixing
    permutations, so it lands at index 0 without reindexing.
    """
    perms = automorphism_perms(g, cap)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[compose_perm(p, q)] for q in perms) for p in perms
    )
    aut = AutGroup(make_group(table, name=f"Aut({g.name or g.order})"), perms)
    assert aut.perms[0] == identity_perm(g.order)
    return aut
