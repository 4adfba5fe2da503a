"""Finite groups as Cayley tables with 0-based dense indices.

Every group is a list of string labels plus an n x n index table, validated
exhaustively; all maps between groups are total lookup tables.  Conventions
used throughout the library:

* actions are on the right and written ``g ^ x``;
* conjugation means right conjugation ``x ^ g = g^-1 x g``;
* semidirect products multiply as ``(q1,n1)(q2,n2) = (q1 q2, n1^q2 n2)``;
* composition of automorphisms is "first then second", so that the natural
  action of Aut(G) on G is a right action.

Searches (automorphisms, isomorphisms, homomorphism enumeration) scan
candidates in index order, so the first witness is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .errors import CheckError, SizeGuardExceeded

MAX_AUT_ORDER = 24
MAX_ISO_ORDER = 48


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group: labels, Cayley table of indices, identity, inverses.

    Values are immutable after validation and safe to share; construct via
    :func:`validate_group` or one of the builders below.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def indices(self) -> range:
        return range(len(self.elements))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, a: int, g: int) -> int:
        """Right conjugation a^g = g^-1 a g."""
        return self.mul(self.mul(self.inverses[g], a), g)

    def label(self, i: int) -> str:
        return self.elements[i]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise CheckError("UnknownElement", (label, self.name or "?"))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in self.indices()
            for b in self.indices()
        )

    def center(self) -> tuple[int, ...]:
        return tuple(
            a
            for a in self.indices()
            if all(self.table[a][b] == self.table[b][a] for b in self.indices())
        )

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def validate_group(
    elements: Sequence[str], table: Sequence[Sequence[int]], name: str = ""
) -> FiniteGroup:
    """Check all group axioms exhaustively; return the group or raise.

    Raises CheckError with code DuplicateLabel, NotClosed, NotAssociative,
    NoIdentity or NoInverse, carrying a label witness.
    """
    labels = tuple(str(e) for e in elements)
    n = len(labels)
    if len(set(labels)) != n:
        seen: set[str] = set()
        for lab in labels:
            if lab in seen:
                raise CheckError("DuplicateLabel", (lab,))
            seen.add(lab)
    if len(table) != n:
        raise CheckError("NotClosed", (), "table is not square")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise CheckError("NotClosed", (labels[i],), "row length mismatch")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < n):
                raise CheckError("NotClosed", (labels[i], labels[j]))
        rows.append(tuple(row))
    tab = tuple(rows)

    if n <= 12:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                        raise CheckError(
                            "NotAssociative", (labels[a], labels[b], labels[c])
                        )
    else:
        # Light's associativity test: with S generating the magma under the
        # table, (a s) b = a (s b) for all a, b and s in S implies full
        # associativity.  Exact, and O(n^2 |S|) instead of O(n^3).
        gens: list[int] = []
        reach = [False] * n
        frontier: list[int] = []

        def close() -> None:
            while frontier:
                a = frontier.pop()
                for s in gens:
                    for b in (tab[a][s], tab[s][a]):
                        if not reach[b]:
                            reach[b] = True
                            frontier.append(b)

        for x in range(n):
            if not reach[x]:
                gens.append(x)
                reach[x] = True
                frontier.extend(i for i in range(n) if reach[i])
                close()
        for s in gens:
            row_s = tab[s]
            for a in range(n):
                t_as = tab[a][s]
                row_a = tab[a]
                left = tab[t_as]
                for b in range(n):
                    if left[b] != row_a[row_s[b]]:
                        raise CheckError(
                            "NotAssociative", (labels[a], labels[s], labels[b])
                        )

    identity = -1
    for e in range(n):
        if all(tab[e][x] == x and tab[x][e] == x for x in range(n)):
            identity = e
            break
    if identity < 0:
        raise CheckError("NoIdentity", ())

    inverses = []
    for a in range(n):
        inv = -1
        for b in range(n):
            if tab[a][b] == identity and tab[b][a] == identity:
                inv = b
                break
        if inv < 0:
            raise CheckError("NoInverse", (labels[a],))
        inverses.append(inv)

    return FiniteGroup(labels, tab, identity, tuple(inverses), name)


def group_from_mul(
    labels: Sequence[str], mul: Callable[[int, int], int], name: str = ""
) -> FiniteGroup:
    n = len(labels)
    return validate_group(labels, [[mul(a, b) for b in range(n)] for a in range(n)], name)


# ---------------------------------------------------------------------------
# builders


def trivial_group(name: str = "1") -> FiniteGroup:
    return validate_group(("1",), ((0,),), name)


def cyclic(n: int, name: str = "") -> FiniteGroup:
    labels = [f"c{i}" for i in range(n)]
    labels[0] = "1"
    return group_from_mul(labels, lambda a, b: (a + b) % n, name or f"Z{n}")


def symmetric(n: int, name: str = "") -> FiniteGroup:
    """S_n on {0..n-1}; product p*q is "apply p, then q"."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    labels = ["".join(map(str, p)) for p in perms]

    def mul(a: int, b: int) -> int:
        p, q = perms[a], perms[b]
        return index[tuple(q[p[i]] for i in range(n))]

    return group_from_mul(labels, mul, name or f"S{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str = "") -> FiniteGroup:
    return semidirect_product(a, b, trivial_action(a, b), name or f"{a.name}x{b.name}")


def klein_four() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), "V4")


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    """A total map between groups, index-to-index; validated by make_hom."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.map[i]

    def kernel(self) -> tuple[int, ...]:
        e = self.target.identity
        return tuple(i for i in self.source.indices() if self.map[i] == e)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.map)))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def make_hom(
    source: FiniteGroup, target: FiniteGroup, mapping: Sequence[int]
) -> Homomorphism:
    """Validate multiplicativity exhaustively; raise NotMultiplicative."""
    m = tuple(mapping)
    if len(m) != source.order:
        raise CheckError("NotMultiplicative", (), "map length mismatch")
    for v in m:
        if not (0 <= v < target.order):
            raise CheckError("NotMultiplicative", (), "map value out of range")
    for a in source.indices():
        for b in source.indices():
            if m[source.mul(a, b)] != target.mul(m[a], m[b]):
                raise CheckError(
                    "NotMultiplicative", (source.label(a), source.label(b))
                )
    return Homomorphism(source, target, m)


def identity_hom(g: FiniteGroup) -> Homomorphism:
    return Homomorphism(g, g, tuple(g.indices()))


def compose_homs(first: Homomorphism, second: Homomorphism) -> Homomorphism:
    """first then second; requires first.target == second.source."""
    if first.target != second.source:
        raise CheckError("DomainMismatch", (), "homomorphisms not composable")
    return Homomorphism(
        first.source, second.target, tuple(second.map[v] for v in first.map)
    )


def trivial_hom(source: FiniteGroup, target: FiniteGroup) -> Homomorphism:
    return Homomorphism(source, target, (target.identity,) * source.order)


@dataclass(frozen=True)
class HomAnalysis:
    valid: bool
    kernel: tuple[int, ...]
    image: tuple[int, ...]
    injective: bool
    surjective: bool


def hom_analyze(f: Homomorphism) -> HomAnalysis:
    """Re-check multiplicativity and report kernel/image/injectivity."""
    make_hom(f.source, f.target, f.map)
    return HomAnalysis(
        True, f.kernel(), f.image(), f.is_injective(), f.is_surjective()
    )


# ---------------------------------------------------------------------------
# subgroups and quotients


def subgroup_closure(g: FiniteGroup, gens: Sequence[int]) -> tuple[int, ...]:
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        a = frontier.pop()
        for s in gens:
            for b in (g.mul(a, s), g.mul(s, a)):
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
    return tuple(sorted(seen))


def check_subgroup(g: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    mem = tuple(sorted(set(members)))
    ms = set(mem)
    if g.identity not in ms:
        raise CheckError("NotSubgroup", (), "identity missing")
    for a in mem:
        if g.inv(a) not in ms:
            raise CheckError("NotSubgroup", (g.label(a),), "not inverse-closed")
        for b in mem:
            if g.mul(a, b) not in ms:
                raise CheckError("NotSubgroup", (g.label(a), g.label(b)))
    return mem


def subgroup_group(
    g: FiniteGroup, members: Sequence[int], name: str = ""
) -> tuple[FiniteGroup, Homomorphism]:
    """The subgroup on the given indices, plus its inclusion into g."""
    mem = check_subgroup(g, members)
    pos = {a: i for i, a in enumerate(mem)}
    sub = validate_group(
        tuple(g.label(a) for a in mem),
        [[pos[g.mul(a, b)] for b in mem] for a in mem],
        name or f"{g.name}-sub{len(mem)}",
    )
    incl = make_hom(sub, g, mem)
    return sub, incl


def quotient_group(
    g: FiniteGroup, members: Sequence[int], name: str = ""
) -> tuple[FiniteGroup, Homomorphism]:
    """G/N with canonical coset labels, plus the projection G -> G/N.

    Raises NotNormal with a conjugation witness if N is not normal.
    """
    mem = check_subgroup(g, members)
    ms = set(mem)
    for x in g.indices():
        for nn in mem:
            if g.conj(nn, x) not in ms:
                raise CheckError("NotNormal", (g.label(x), g.label(nn)))
    coset_of = [-1] * g.order
    reps: list[int] = []
    for a in g.indices():
        if coset_of[a] >= 0:
            continue
        reps.append(a)
        for nn in mem:
            coset_of[g.mul(nn, a)] = len(reps) - 1
    pos = {r: i for i, r in enumerate(reps)}
    labels = tuple(f"[{g.label(r)}]" for r in reps)
    table = [
        [coset_of[g.mul(a, b)] for b in reps] for a in reps
    ]
    quo = validate_group(labels, table, name or f"{g.name}/N{len(mem)}")
    proj = make_hom(g, quo, tuple(coset_of))
    return quo, proj


# ---------------------------------------------------------------------------
# right actions


@dataclass(frozen=True)
class RightAction:
    """A right action of `group` on `space` by automorphisms, g^x.

    act[s][x] is the index of s^x for s in space, x in group.
    """

    group: FiniteGroup
    space: FiniteGroup
    act: tuple[tuple[int, ...], ...]

    def __call__(self, s: int, x: int) -> int:
        return self.act[s][x]


def validate_action(
    group: FiniteGroup, space: FiniteGroup, act: Sequence[Sequence[int]]
) -> RightAction:
    a = tuple(tuple(row) for row in act)
    if len(a) != space.order or any(len(r) != group.order for r in a):
        raise CheckError("ActionShape", (), "action table has wrong shape")
    for s in space.indices():
        if a[s][group.identity] != s:
            raise CheckError("ActionIdentity", (space.label(s),))
    for s in space.indices():
        for x in group.indices():
            for y in group.indices():
                if a[s][group.mul(x, y)] != a[a[s][x]][y]:
                    raise CheckError(
                        "ActionCompat", (space.label(s), group.label(x), group.label(y))
                    )
    for s in space.indices():
        for t in space.indices():
            for x in group.indices():
                if a[space.mul(s, t)][x] != space.mul(a[s][x], a[t][x]):
                    raise CheckError(
                        "ActionNotAutomorphism",
                        (space.label(s), space.label(t), group.label(x)),
                    )
    return RightAction(group, space, a)


def action_from_fn(
    group: FiniteGroup, space: FiniteGroup, fn: Callable[[int, int], int]
) -> RightAction:
    return validate_action(
        group, space, [[fn(s, x) for x in group.indices()] for s in space.indices()]
    )


def trivial_action(group: FiniteGroup, space: FiniteGroup) -> RightAction:
    return RightAction(
        group, space, tuple(tuple(s for _ in group.indices()) for s in space.indices())
    )


def conjugation_action(g: FiniteGroup) -> RightAction:
    """g acting on itself by right conjugation."""
    return action_from_fn(g, g, lambda s, x: g.conj(s, x))


def action_through_hom(f: Homomorphism, base: RightAction) -> RightAction:
    """Pull a right action of f.target back along f to a right action of f.source."""
    if base.group != f.target:
        raise CheckError("DomainMismatch", (), "action group is not the hom target")
    return RightAction(
        f.source,
        base.space,
        tuple(
            tuple(base.act[s][f.map[x]] for x in f.source.indices())
            for s in base.space.indices()
        ),
    )


def semidirect_product(
    q: FiniteGroup, n: FiniteGroup, action: RightAction, name: str = ""
) -> FiniteGroup:
    """Q acting on N on the right: (q1,n1)(q2,n2) = (q1 q2, n1^q2 n2).

    Elements are ordered (q, n) lexicographically, index = qi*|N| + ni.
    """
    if action.group != q or action.space != n:
        raise CheckError("DomainMismatch", (), "action does not match the factors")
    size_n = n.order
    labels = [f"({q.label(a)}|{n.label(b)})" for a in q.indices() for b in n.indices()]

    def mul(i: int, j: int) -> int:
        q1, n1 = divmod(i, size_n)
        q2, n2 = divmod(j, size_n)
        return q.mul(q1, q2) * size_n + n.mul(action(n1, q2), n2)

    return group_from_mul(labels, mul, name or f"{q.name}><{n.name}")


# ---------------------------------------------------------------------------
# homomorphism search (deterministic, generator based)


def generating_sequence(g: FiniteGroup) -> tuple[list[int], list[int], dict[int, tuple[int, int]]]:
    """Greedy index-order generating sequence.

    Returns (gens, build_order, recipe) where every non-identity element a in
    build_order has recipe[a] = (parent, gen_position) with a = parent * gens[pos],
    parents appearing earlier in build_order.
    """
    gens: list[int] = []
    recipe: dict[int, tuple[int, int]] = {}
    order = [g.identity]
    known = {g.identity}

    def close() -> None:
        i = 0
        while i < len(order):
            a = order[i]
            for pos, s in enumerate(gens):
                b = g.mul(a, s)
                if b not in known:
                    known.add(b)
                    recipe[b] = (a, pos)
                    order.append(b)
            i += 1

    for x in g.indices():
        if x not in known:
            gens.append(x)
            known.add(x)
            recipe[x] = (g.identity, len(gens) - 1)
            order.append(x)
            close()
    return gens, order, recipe


def _extend_images(
    g: FiniteGroup,
    h: FiniteGroup,
    gens: list[int],
    order: list[int],
    recipe: dict[int, tuple[int, int]],
    images: Sequence[int],
) -> Optional[tuple[int, ...]]:
    """Extend generator images along the build order; verify f(a*s)=f(a)f(s).

    Checking multiplicativity against the generators suffices (induction on
    word length), so verification is |G|*|gens| not |G|^2.
    """
    f = [-1] * g.order
    f[g.identity] = h.identity
    for a in order[1:]:
        parent, pos = recipe[a]
        f[a] = h.mul(f[parent], images[pos])
    for a in g.indices():
        fa = f[a]
        for s, img in zip(gens, images):
            if f[g.mul(a, s)] != h.mul(fa, img):
                return None
    return tuple(f)


def iter_homomorphisms(
    g: FiniteGroup,
    h: FiniteGroup,
    candidate_filter: Optional[Callable[[int, int], bool]] = None,
) -> Iterator[tuple[int, ...]]:
    """All homomorphisms G -> H as map tuples, in deterministic order.

    candidate_filter(gen_element, candidate_image) may prune generator images;
    by default images are restricted to elements whose order divides the
    generator's order.
    """
    gens, order, recipe = generating_sequence(g)
    if not gens:
        yield (h.identity,)
        return
    cand_lists = []
    for s in gens:
        so = g.element_order(s)
        cands = [
            y
            for y in h.indices()
            if so % h.element_order(y) == 0
            and (candidate_filter is None or candidate_filter(s, y))
        ]
        cand_lists.append(cands)
    for images in itertools.product(*cand_lists):
        f = _extend_images(g, h, gens, order, recipe, images)
        if f is not None:
            yield f


def find_isomorphism(
    g: FiniteGroup, h: FiniteGroup, max_order: int = MAX_ISO_ORDER
) -> Optional[Homomorphism]:
    """First bijective homomorphism in generator-image index order, or None."""
    if g.order > max_order or h.order > max_order:
        raise SizeGuardExceeded("find_isomorphism", max(g.order, h.order), max_order)
    if g.order != h.order:
        return None
    if sorted(g.element_order(a) for a in g.indices()) != sorted(
        h.element_order(a) for a in h.indices()
    ):
        return None

    def exact_order(s: int, y: int) -> bool:
        return g.element_order(s) == h.element_order(y)

    for f in iter_homomorphisms(g, h, exact_order):
        if len(set(f)) == g.order:
            return Homomorphism(g, h, f)
    return None


@dataclass(frozen=True)
class AutGroup:
    """Aut(G) under "first then second" composition, with inner g -> conj_g."""

    group: FiniteGroup
    automorphisms: tuple[tuple[int, ...], ...]
    inner: Homomorphism  # G -> group


def automorphism_group(g: FiniteGroup, max_order: int = MAX_AUT_ORDER) -> AutGroup:
    """Brute-force Aut(G); guarded because the search is factorial."""
    if g.order > max_order:
        raise SizeGuardExceeded("automorphism_group", g.order, max_order)

    def exact_order(s: int, y: int) -> bool:
        return g.element_order(s) == g.element_order(y)

    autos = sorted(
        f for f in iter_homomorphisms(g, g, exact_order) if len(set(f)) == g.order
    )
    index = {f: i for i, f in enumerate(autos)}
    labels = [f"a{i}" for i in range(len(autos))]

    def mul(i: int, j: int) -> int:
        fi, fj = autos[i], autos[j]
        return index[tuple(fj[fi[x]] for x in g.indices())]

    aut = group_from_mul(labels, mul, f"Aut({g.name})")
    inner_map = []
    for a in g.indices():
        conj = tuple(g.conj(x, a) for x in g.indices())
        inner_map.append(index[conj])
    inner = make_hom(g, aut, inner_map)
    return AutGroup(aut, tuple(autos), inner)


def aut_action(ag: AutGroup, g: FiniteGroup) -> RightAction:
    """The tautological right action of Aut(G) on G: x^f = f(x)."""
    return action_from_fn(ag.group, g, lambda s, a: ag.automorphisms[a][s])
