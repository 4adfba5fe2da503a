"""Non-abelian 1-cocycles on the classifying nerve of a finite group.

A 1-cocycle with values in a crossed module G* is a pair of maps
x: Gamma -> G0, g: Gamma^2 -> G1 subject to

    x(ab)        = x(a) x(b) delta(g(a,b))                       (triangle)
    g(b,c) g(a,bc) = g(a,b)^x(c) g(ab,c)                         (tetrahedron)

and the normalizations x(1) = 1, g(1,b) = g(a,1) = 1.  A homotopy between
two cocycles is a pair (y, b) with y in G0 and b: Gamma -> G1 such that

    y x'(a)                    = x(a) y delta(b(a))
    b(b) b(a)^x'(b) g'(a,b)    = g(a,b)^y b(ab)

Everything in this module is finite and checked exhaustively; enumeration
guards are explicit and never truncate silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import CheckError, InternalDefect, SizeGuardExceeded
from .fgroup import FiniteGroup
from .xmod import CrossedModule, product_xmod
from .butterfly import Butterfly, DiagonalResult, diagonal_xmod
from . import simplicial

MAX_EQUIV_SPACE = 10**6
MAX_ENUM_SPACE = 10**7


@dataclass(frozen=True)
class Cocycle1:
    """Raw cocycle data; run cocycle_validate to certify it."""

    gamma: FiniteGroup
    target: CrossedModule
    x: tuple[int, ...]
    g: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Homotopy1:
    """y in G0 and b: Gamma -> G1 (the gauge-fixed a1 a0^-1)."""

    y: int
    b: tuple[int, ...]


def cocycle_validate(c: Cocycle1) -> Cocycle1:
    """Check normalization and both cocycle equations; first failure wins."""
    gam, xm = c.gamma, c.target
    if len(c.x) != gam.order or len(c.g) != gam.order:
        raise CheckError("NotNormalized", (), "map shapes do not match Gamma")
    e = gam.identity
    if c.x[e] != xm.g0.identity:
        raise CheckError("NotNormalized", ("x(1)",))
    for a in gam.indices():
        if c.g[e][a] != xm.g1.identity or c.g[a][e] != xm.g1.identity:
            raise CheckError("NotNormalized", (gam.label(a),))
    g0, g1 = xm.g0, xm.g1
    for a in gam.indices():
        for b in gam.indices():
            lhs = c.x[gam.mul(a, b)]
            rhs = g0.mul(g0.mul(c.x[a], c.x[b]), xm.delta.map[c.g[a][b]])
            if lhs != rhs:
                raise CheckError("TriangleFail", (gam.label(a), gam.label(b)))
    for a in gam.indices():
        for b in gam.indices():
            for cc in gam.indices():
                lhs = g1.mul(c.g[b][cc], c.g[a][gam.mul(b, cc)])
                rhs = g1.mul(xm.act(c.g[a][b], c.x[cc]), c.g[gam.mul(a, b)][cc])
                if lhs != rhs:
                    raise CheckError(
                        "TetrahedronFail", (gam.label(a), gam.label(b), gam.label(cc))
                    )
    return c


def is_valid_cocycle(c: Cocycle1) -> bool:
    try:
        cocycle_validate(c)
        return True
    except CheckError:
        return False


def trivial_cocycle(gamma: FiniteGroup, target: CrossedModule) -> Cocycle1:
    n = gamma.order
    return Cocycle1(
        gamma,
        target,
        (target.g0.identity,) * n,
        tuple((target.g1.identity,) * n for _ in range(n)),
    )


def cocycle_from_hom(gamma: FiniteGroup, target: CrossedModule, xmap) -> Cocycle1:
    """The cocycle (x, 1) of a homomorphism x: Gamma -> G0 (needs g == 1 to close)."""
    n = gamma.order
    return cocycle_validate(
        Cocycle1(gamma, target, tuple(xmap), tuple((target.g1.identity,) * n for _ in range(n)))
    )


# ---------------------------------------------------------------------------
# homotopies


def homotopy_check(src: Cocycle1, dst: Cocycle1, h: Homotopy1) -> Homotopy1:
    """Check the two homotopy equations exhaustively; raise on first failure."""
    if src.gamma != dst.gamma or src.target != dst.target:
        raise CheckError("DomainMismatch", (), "cocycles not comparable")
    gam, xm = src.gamma, src.target
    g0, g1 = xm.g0, xm.g1
    if h.b[gam.identity] != g1.identity:
        raise CheckError("NotNormalized", ("b(1)",))
    for a in gam.indices():
        lhs = g0.mul(h.y, dst.x[a])
        rhs = g0.mul(g0.mul(src.x[a], h.y), xm.delta.map[h.b[a]])
        if lhs != rhs:
            raise CheckError("HomotopyEdgeFail", (gam.label(a),))
    for a in gam.indices():
        for b in gam.indices():
            lhs = g1.mul(
                g1.mul(h.b[b], xm.act(h.b[a], dst.x[b])), dst.g[a][b]
            )
            rhs = g1.mul(xm.act(src.g[a][b], h.y), h.b[gam.mul(a, b)])
            if lhs != rhs:
                raise CheckError("HomotopyFaceFail", (gam.label(a), gam.label(b)))
    return h


def is_homotopy(src: Cocycle1, dst: Cocycle1, h: Homotopy1) -> bool:
    try:
        homotopy_check(src, dst, h)
        return True
    except CheckError:
        return False


def identity_homotopy(c: Cocycle1) -> Homotopy1:
    return Homotopy1(c.target.g0.identity, (c.target.g1.identity,) * c.gamma.order)


def transport_cocycle(src: Cocycle1, y: int, b: Sequence[int]) -> Cocycle1:
    """The unique cocycle homotopic to src through (y, b).

    Solves the homotopy equations for (x', g'); the result is validated, and
    (y, b) is then a homotopy src -> result by construction.
    """
    gam, xm = src.gamma, src.target
    g0, g1 = xm.g0, xm.g1
    yinv = g0.inv(y)
    xp = tuple(
        g0.mul(g0.mul(g0.mul(yinv, src.x[a]), y), xm.delta.map[b[a]])
        for a in gam.indices()
    )
    gp = []
    for a in gam.indices():
        row = []
        for bb in gam.indices():
            val = g1.mul(
                g1.inv(xm.act(b[a], xp[bb])),
                g1.mul(
                    g1.inv(b[bb]),
                    g1.mul(xm.act(src.g[a][bb], y), b[gam.mul(a, bb)]),
                ),
            )
            row.append(val)
        gp.append(tuple(row))
    out = cocycle_validate(Cocycle1(gam, xm, xp, tuple(gp)))
    homotopy_check(src, out, Homotopy1(y, tuple(b)))
    return out


def compose_homotopies(h12: Homotopy1, h23: Homotopy1, xm: CrossedModule) -> Homotopy1:
    """(y1, b1): c1 -> c2 followed by (y2, b2): c2 -> c3 is (y1 y2, b1^y2 b2)."""
    y = xm.g0.mul(h12.y, h23.y)
    b = tuple(
        xm.g1.mul(xm.act(h12.b[i], h23.y), h23.b[i]) for i in range(len(h12.b))
    )
    return Homotopy1(y, b)


def invert_homotopy(h: Homotopy1, xm: CrossedModule) -> Homotopy1:
    yinv = xm.g0.inv(h.y)
    b = tuple(xm.act(xm.g1.inv(bi), yinv) for bi in h.b)
    return Homotopy1(yinv, b)


def are_equivalent(
    src: Cocycle1, dst: Cocycle1, max_space: int = MAX_EQUIV_SPACE
) -> Optional[Homotopy1]:
    """Exhaustive homotopy search in deterministic order; first witness or None."""
    if src.gamma != dst.gamma or src.target != dst.target:
        raise CheckError("DomainMismatch", (), "cocycles not comparable")
    gam, xm = src.gamma, src.target
    g0, g1 = xm.g0, xm.g1
    free = [a for a in gam.indices() if a != gam.identity]
    space = g0.order * g1.order ** len(free)
    if space > max_space:
        raise SizeGuardExceeded("are_equivalent", space, max_space)
    for y in g0.indices():
        # the first homotopy equation does not involve b beyond delta(b);
        # use it as a cheap prefilter per position
        fibers = []
        ok = True
        for a in free:
            need = g0.mul(g0.inv(g0.mul(src.x[a], y)), g0.mul(y, dst.x[a]))
            fib = [m for m in g1.indices() if xm.delta.map[m] == need]
            if not fib:
                ok = False
                break
            fibers.append(fib)
        if not ok:
            continue
        for combo in itertools.product(*fibers):
            b = [g1.identity] * gam.order
            for a, m in zip(free, combo):
                b[a] = m
            h = Homotopy1(y, tuple(b))
            if is_homotopy(src, dst, h):
                return h
    return None


# ---------------------------------------------------------------------------
# enumeration of H^1


def iter_cocycles(
    gamma: FiniteGroup, target: CrossedModule, max_space: int = MAX_ENUM_SPACE
) -> Iterator[Cocycle1]:
    """All normalized cocycles in deterministic order (x outer, g inner)."""
    g0, g1 = target.g0, target.g1
    free = [a for a in gamma.indices() if a != gamma.identity]
    space = g0.order ** len(free) * g1.order ** (len(free) ** 2)
    if space > max_space:
        raise SizeGuardExceeded("enumerate_h1", space, max_space)

    preim: dict[int, list[int]] = {}
    for m in g1.indices():
        preim.setdefault(target.delta.map[m], []).append(m)

    for xvals in itertools.product(g0.indices(), repeat=len(free)):
        x = [g0.identity] * gamma.order
        for a, v in zip(free, xvals):
            x[a] = v
        fibers = []
        solvable = True
        for a in free:
            for b in free:
                need = g0.mul(g0.inv(g0.mul(x[a], x[b])), x[gamma.mul(a, b)])
                fib = preim.get(need)
                if not fib:
                    solvable = False
                    break
                fibers.append(fib)
            if not solvable:
                break
        if not solvable:
            continue
        pairs = [(a, b) for a in free for b in free]
        for combo in itertools.product(*fibers):
            g = [[g1.identity] * gamma.order for _ in gamma.indices()]
            for (a, b), m in zip(pairs, combo):
                g[a][b] = m
            c = Cocycle1(gamma, target, tuple(x), tuple(map(tuple, g)))
            if is_valid_cocycle(c):
                yield c


@dataclass(frozen=True)
class H1Result:
    representatives: tuple[Cocycle1, ...]
    class_count: int
    cocycle_count: int


def enumerate_h1(
    gamma: FiniteGroup,
    target: CrossedModule,
    max_space: int = MAX_ENUM_SPACE,
    max_equiv: int = MAX_EQUIV_SPACE,
) -> H1Result:
    """All cocycle classes; representatives are minimal in enumeration order."""
    reps: list[Cocycle1] = []
    total = 0
    for c in iter_cocycles(gamma, target, max_space):
        total += 1
        if not any(are_equivalent(r, c, max_equiv) is not None for r in reps):
            reps.append(c)
    return H1Result(tuple(reps), len(reps), total)


def class_index(c: Cocycle1, reps: Sequence[Cocycle1], max_equiv: int = MAX_EQUIV_SPACE) -> int:
    for i, r in enumerate(reps):
        if are_equivalent(r, c, max_equiv) is not None:
            return i
    raise CheckError("UnknownClass", (), "cocycle matches no representative")


# ---------------------------------------------------------------------------
# pairing into a product crossed module


def pair_cocycle(a: Cocycle1, b: Cocycle1, prod: CrossedModule) -> Cocycle1:
    """The product cocycle into prod = product_xmod(a.target, b.target)."""
    if a.gamma != b.gamma:
        raise CheckError("DomainMismatch", (), "different base groups")
    n0 = b.target.g0.order
    n1 = b.target.g1.order
    gam = a.gamma
    x = tuple(a.x[i] * n0 + b.x[i] for i in gam.indices())
    g = tuple(
        tuple(a.g[i][j] * n1 + b.g[i][j] for j in gam.indices())
        for i in gam.indices()
    )
    return cocycle_validate(Cocycle1(gam, prod, x, g))


# ---------------------------------------------------------------------------
# lifting along a butterfly


@dataclass(frozen=True)
class LiftResult:
    result: Cocycle1  # with values in the codomain G*
    middle: Cocycle1  # with values in the diagonal crossed module [H1xG1 -> E]
    diagonal: DiagonalResult


def canonical_lift_choice(xi: Cocycle1, b: Butterfly) -> tuple[int, ...]:
    """Index-least preimage of x under pi per fiber, with e(1) = 1."""
    e = []
    for a in xi.gamma.indices():
        if a == xi.gamma.identity:
            e.append(b.e.identity)
            continue
        target = xi.x[a]
        e.append(b.pi.map.index(target))
    return tuple(e)


def lift_along_butterfly(
    xi: Cocycle1, b: Butterfly, lift_choice: Optional[Sequence[int]] = None
) -> LiftResult:
    """Push the cocycle xi along the butterfly b.

    Chooses a pointwise lift e: Gamma -> E of x through pi, reads off the
    G1-valued correction from e(ab) = e(a) e(b) kappa(h(a,b)) iota(g(a,b)),
    and returns both the codomain-valued cocycle (jay . e, g) and the middle
    cocycle (e, (h, g)) with values in the diagonal crossed module.
    """
    cocycle_validate(xi)
    if b.domain != xi.target:
        raise CheckError("DomainMismatch", (), "butterfly domain is not the coefficient")
    gam = xi.gamma
    eg = b.e
    if lift_choice is None:
        e = canonical_lift_choice(xi, b)
    else:
        e = tuple(lift_choice)
        if len(e) != gam.order:
            raise CheckError("LiftChoiceInvalid", (), "wrong length")
        if e[gam.identity] != eg.identity:
            raise CheckError("LiftChoiceInvalid", ("e(1)",))
        for a in gam.indices():
            if b.pi.map[e[a]] != xi.x[a]:
                raise CheckError("LiftChoiceInvalid", (gam.label(a),))

    iota_pos = {v: i for i, v in enumerate(b.iota.map)}
    xg = tuple(b.jay.map[e[a]] for a in gam.indices())
    g_out = []
    for a in gam.indices():
        row = []
        for bb in gam.indices():
            bracket = eg.mul(
                eg.inv(b.kappa.map[xi.g[a][bb]]),
                eg.mul(eg.inv(eg.mul(e[a], e[bb])), e[gam.mul(a, bb)]),
            )
            if bracket not in iota_pos:
                raise InternalDefect("lift bracket escaped the image of iota")
            row.append(iota_pos[bracket])
        g_out.append(tuple(row))

    result = Cocycle1(gam, b.codomain, xg, tuple(g_out))
    try:
        cocycle_validate(result)
    except CheckError as exc:
        raise InternalDefect(f"lifted cocycle invalid: {exc}")

    diag = diagonal_xmod(b)
    n1 = b.codomain.g1.order
    middle = Cocycle1(
        gam,
        diag.exmod,
        e,
        tuple(
            tuple(xi.g[a][bb] * n1 + g_out[a][bb] for bb in gam.indices())
            for a in gam.indices()
        ),
    )
    try:
        cocycle_validate(middle)
    except CheckError as exc:
        raise InternalDefect(f"middle cocycle invalid: {exc}")
    return LiftResult(result, middle, diag)


def lift_choices(xi: Cocycle1, b: Butterfly, want: int = 3) -> list[tuple[int, ...]]:
    """A deterministic list of distinct valid lift choices (at most `want`).

    Varies the canonical choice fiberwise by iota-translates, which exhausts
    each fiber; instances with a trivial kernel admit only one choice.
    """
    base = canonical_lift_choice(xi, b)
    gam = xi.gamma
    out = [base]
    free = [a for a in gam.indices() if a != gam.identity]
    for a in free:
        for k in b.iota.map:
            if len(out) >= want:
                return out
            cand = list(base)
            cand[a] = b.e.mul(cand[a], k)
            cand = tuple(cand)
            if cand not in out:
                out.append(cand)
    return out


# ---------------------------------------------------------------------------
# degree-zero descent data over a one-level cover of finite sets


@dataclass(frozen=True)
class Descent0:
    """Descent data (u, g) for the cover p: V ->> X of finite sets.

    p[v] is the fiber id of element v; u: V -> G0; g[v0][v1] in G1 for pairs
    in the same fiber (entries for cross-fiber pairs are -1 and unused).
    Conventions: u(v0) = u(v1) delta(g(v0,v1)), reflexivity g(v,v) = 1, and
    the untwisted chain rule g(v0,v2) = g(v1,v2) g(v0,v1).
    """

    p: tuple[int, ...]
    target: CrossedModule
    u: tuple[int, ...]
    g: tuple[tuple[int, ...], ...]


def descent0_validate(d: Descent0) -> Descent0:
    xm = d.target
    nv = len(d.p)
    if sorted(set(d.p)) != list(range(max(d.p) + 1 if d.p else 0)):
        raise CheckError("NotSurjective", (), "fiber ids must cover 0..k")
    if len(d.u) != nv or len(d.g) != nv or any(len(r) != nv for r in d.g):
        raise CheckError("GlueFail", (), "map shapes do not match the cover")
    for v in range(nv):
        if d.g[v][v] != xm.g1.identity:
            raise CheckError("NotReflexive", (v,))
    for v0 in range(nv):
        for v1 in range(nv):
            if d.p[v0] != d.p[v1]:
                continue
            if d.u[v0] != xm.g0.mul(d.u[v1], xm.delta.map[d.g[v0][v1]]):
                raise CheckError("GlueFail", (v0, v1))
    for v0 in range(nv):
        for v1 in range(nv):
            for v2 in range(nv):
                if not (d.p[v0] == d.p[v1] == d.p[v2]):
                    continue
                if d.g[v0][v2] != xm.g1.mul(d.g[v1][v2], d.g[v0][v1]):
                    raise CheckError("CocycleFail", (v0, v1, v2))
    return d


# ---------------------------------------------------------------------------
# the Wbar simplicial-map checker


@dataclass(frozen=True)
class WbarFailure:
    kind: str  # "face" | "degeneracy" | "homotopy-face" | "homotopy-degeneracy"
    degree: int
    index: int
    simplex: tuple[str, ...]

    def __repr__(self) -> str:
        return f"{self.kind} identity d/s_{self.index} at degree {self.degree}, simplex {self.simplex}"


@dataclass(frozen=True)
class WbarReport:
    ok: bool
    failures: tuple[WbarFailure, ...]
    homotopy_checked: bool = False
    homotopy_consistent: Optional[bool] = None


def _nerve_face(gam: FiniteGroup, n: int, i: int, s: tuple[int, ...]) -> tuple[int, ...]:
    if i == 0:
        return s[1:]
    if i == n:
        return s[:-1]
    return s[: i - 1] + (gam.mul(s[i - 1], s[i]),) + s[i + 1 :]


def _nerve_degen(gam: FiniteGroup, i: int, s: tuple[int, ...]) -> tuple[int, ...]:
    return s[:i] + (gam.identity,) + s[i:]


def _xi_maps(c: Cocycle1):
    """The truncated simplicial maps xi_0..xi_3 of a (raw) cocycle."""
    gam, xm = c.gamma, c.target
    g1 = xm.g1

    def xi(n: int, s: tuple[int, ...]) -> simplicial.WElt:
        if n == 0:
            return ()
        if n == 1:
            return ((c.x[s[0]],),)
        if n == 2:
            a, b = s
            return ((c.x[a],), (c.x[b], c.g[a][b]))
        a, b, cc = s
        return (
            (c.x[a],),
            (c.x[b], c.g[a][b]),
            (
                c.x[cc],
                c.g[b][cc],
                g1.mul(g1.inv(c.g[b][cc]), c.g[gam.mul(a, b)][cc]),
            ),
        )

    return xi


def wbar_check(
    c: Cocycle1,
    homotopy_raw: Optional[tuple[int, Sequence[int], Sequence[int]]] = None,
    other: Optional[Cocycle1] = None,
) -> WbarReport:
    """Materialize xi_0..xi_3: B Gamma -> Wbar and check all simplicial
    identities d_i xi_n = xi_{n-1} d_i (n <= 3) and s_i xi_n = xi_{n+1} s_i
    (n <= 2) exhaustively.

    With homotopy_raw = (y, a0, a1), also instantiate the homotopy maps and
    check the simplicial homotopy identities against the transported cocycle
    (or `other` if given), plus consistency with the (y, a1 a0^-1) homotopy.
    """
    gam, xm = c.gamma, c.target
    xi = _xi_maps(c)
    failures: list[WbarFailure] = []

    def simplices(n: int):
        return itertools.product(gam.indices(), repeat=n)

    for n in (1, 2, 3):
        for s in simplices(n):
            for i in range(n + 1):
                lhs = simplicial.wbar_face(xm, n, i, xi(n, s))
                rhs = xi(n - 1, _nerve_face(gam, n, i, s))
                if lhs != rhs:
                    failures.append(
                        WbarFailure("face", n, i, tuple(gam.label(v) for v in s))
                    )
    for n in (0, 1, 2):
        for s in simplices(n):
            for i in range(n + 1):
                lhs = simplicial.wbar_degen(xm, n, i, xi(n, s))
                rhs = xi(n + 1, _nerve_degen(gam, i, s))
                if lhs != rhs:
                    failures.append(
                        WbarFailure("degeneracy", n, i, tuple(gam.label(v) for v in s))
                    )

    if homotopy_raw is None:
        return WbarReport(not failures, tuple(failures))

    y, a0, a1 = homotopy_raw
    g0, g1 = xm.g0, xm.g1
    b = tuple(g1.mul(a1[i], g1.inv(a0[i])) for i in gam.indices())
    if other is None:
        other = transport_cocycle(c, y, b)
    xi2 = _xi_maps(other)

    h_consistent = is_homotopy(c, other, Homotopy1(y, b))

    def hmap(n: int, j: int, s: tuple[int, ...]) -> simplicial.WElt:
        """alpha^n_j as an element of Wbar_{n+1}."""
        xp, gp = other.x, other.g
        if n == 0:
            return ((y,),)
        if n == 1:
            (a,) = s
            if j == 0:
                return ((y,), (xp[a], a0[a]))
            return ((c.x[a],), (y, a1[a]))
        a, bb = s
        ab = gam.mul(a, bb)
        if j == 0:
            tail = g1.mul(
                g1.inv(gp[a][bb]),
                g1.mul(
                    xm.act(g1.inv(a0[a]), xp[bb]),
                    g1.mul(gp[a][bb], a0[ab]),
                ),
            )
            return ((y,), (xp[a], a0[a]), (xp[bb], gp[a][bb], tail))
        if j == 1:
            tail = g1.mul(
                g1.inv(a0[bb]),
                g1.mul(
                    xm.act(g1.inv(a0[a]), xp[bb]),
                    g1.mul(gp[a][bb], a0[ab]),
                ),
            )
            return ((c.x[a],), (y, a1[a]), (xp[bb], a0[bb], tail))
        return (
            (c.x[a],),
            (c.x[bb], c.g[a][bb]),
            (y, a1[bb], g1.mul(g1.inv(a1[bb]), a1[ab])),
        )

    def fail(kind: str, n: int, idx: int, s) -> None:
        failures.append(WbarFailure(kind, n, idx, tuple(gam.label(v) for v in s)))

    for n in (0, 1, 2):
        for s in simplices(n):
            hs = [hmap(n, j, s) for j in range(n + 1)]
            # boundary identities: d_0 h_0 = xi', d_{n+1} h_n = xi
            if simplicial.wbar_face(xm, n + 1, 0, hs[0]) != xi2(n, s):
                fail("homotopy-face", n, 0, s)
            if simplicial.wbar_face(xm, n + 1, n + 1, hs[n]) != xi(n, s):
                fail("homotopy-face", n, n + 1, s)
            # d_{j+1} h_{j+1} = d_{j+1} h_j
            for j in range(n):
                if simplicial.wbar_face(xm, n + 1, j + 1, hs[j + 1]) != simplicial.wbar_face(
                    xm, n + 1, j + 1, hs[j]
                ):
                    fail("homotopy-face", n, j + 1, s)
            # d_i h_j = h_{j-1} d_i (i < j), d_i h_j = h_j d_{i-1} (i > j+1)
            for j in range(n + 1):
                for i in range(n + 2):
                    if i < j:
                        lhs = simplicial.wbar_face(xm, n + 1, i, hs[j])
                        rhs = hmap(n - 1, j - 1, _nerve_face(gam, n, i, s))
                        if lhs != rhs:
                            fail("homotopy-face", n, i, s)
                    elif i > j + 1:
                        lhs = simplicial.wbar_face(xm, n + 1, i, hs[j])
                        rhs = hmap(n - 1, j, _nerve_face(gam, n, i - 1, s))
                        if lhs != rhs:
                            fail("homotopy-face", n, i, s)
    # degeneracy identities, checkable where no level-3 homotopy data is needed
    for n in (0, 1):
        for s in simplices(n):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = simplicial.wbar_degen(xm, n + 1, i, hmap(n, j, s))
                    if i <= j:
                        rhs = hmap(n + 1, j + 1, _nerve_degen(gam, i, s))
                    else:
                        rhs = hmap(n + 1, j, _nerve_degen(gam, i - 1, s))
                    if lhs != rhs:
                        fail("homotopy-degeneracy", n, i, s)

    return WbarReport(not failures, tuple(failures), True, h_consistent)
