"""Braided crossed modules via their multiplication butterfly.

A braiding map c: G0 x G0 -> G1 (normalized so c(1,y) = c(x,1) = 1) is
accepted exactly when the butterfly it induces from G* x G* to G* validates.
The center P is G0 x G0 x G1 with the group law

    (x0,y0,g0)(x1,y1,g1) = (x0 x1, y0 y1, c(x1,y0)^y1 g0^(y0 y1) g1)

with legs rho(x,y,g) = (x,y) and sigma(x,y,g) = x y delta(g), the iota-wing
beta(g) = (1,1,g), and the kappa-wing

    alpha(g0,g1) = (delta g0, delta g1, (g0 g1)^-1).

The correction term (g0 g1)^-1 is pinned by requiring the restrictions of the
multiplication along (id,1) and (1,id) to be the identity morphism; with it,
lifting a pair of cocycles through this butterfly reproduces the explicit
degree-one product formula implemented in h1_product.

Rejection (code "BraidingInvalid") is the normal outcome for a map c that is
not a braiding; the report carries the first failed axiom and witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CheckError
from . import fgroup
from .fgroup import FiniteGroup, Homomorphism, make_hom
from .xmod import CrossedModule, homotopy_invariants, product_xmod
from .butterfly import Butterfly, butterfly_validate
from .cocycle import Cocycle1, Descent0, cocycle_validate, descent0_validate


@dataclass(frozen=True)
class BraidedCrossedModule:
    base: CrossedModule
    c: tuple[tuple[int, ...], ...]  # c[x][y] in G1
    name: str = ""


def braiding_from_fn(base: CrossedModule, fn, name: str = "") -> BraidedCrossedModule:
    return BraidedCrossedModule(
        base,
        tuple(tuple(fn(x, y) for y in base.g0.indices()) for x in base.g0.indices()),
        name,
    )


def trivial_braiding(base: CrossedModule, name: str = "") -> BraidedCrossedModule:
    return braiding_from_fn(
        base, lambda x, y: base.g1.identity, name or f"triv({base.name})"
    )


def _reject(exc: CheckError) -> CheckError:
    return CheckError("BraidingInvalid", exc.witness, f"{exc.code}: bad braiding map")


def braiding_butterfly(br: BraidedCrossedModule) -> Butterfly:
    """Build and validate the multiplication butterfly G* x G* -> G*.

    Any axiom failure (the law on P not a group, a wing not a homomorphism,
    a butterfly condition) rejects the braiding with code BraidingInvalid.
    """
    xm = br.base
    g0, g1 = xm.g0, xm.g1
    n0, n1 = g0.order, g1.order
    for x in g0.indices():
        if br.c[x][g0.identity] != g1.identity or br.c[g0.identity][x] != g1.identity:
            raise CheckError("BraidingInvalid", (g0.label(x),), "c not normalized")

    labels = [
        f"({g0.label(x)}|{g0.label(y)}|{g1.label(g)})"
        for x in g0.indices()
        for y in g0.indices()
        for g in g1.indices()
    ]

    def mul(i: int, j: int) -> int:
        x0, r = divmod(i, n0 * n1)
        y0, a = divmod(r, n1)
        x1, r = divmod(j, n0 * n1)
        y1, b = divmod(r, n1)
        gpart = g1.mul(
            g1.mul(xm.act(br.c[x1][y0], y1), xm.act(a, g0.mul(y0, y1))), b
        )
        return (g0.mul(x0, x1) * n0 + g0.mul(y0, y1)) * n1 + gpart

    try:
        p = fgroup.group_from_mul(labels, mul, f"P({br.name or xm.name})")
    except CheckError as exc:
        raise _reject(exc)

    prod = product_xmod(xm, xm)
    try:
        rho = make_hom(p, prod.g0, [i // n1 for i in range(len(labels))])
        sigma = make_hom(
            p,
            g0,
            [
                g0.mul(g0.mul(i // (n0 * n1), (i // n1) % n0), xm.delta.map[i % n1])
                for i in range(len(labels))
            ],
        )
        beta = make_hom(
            g1,
            p,
            [(g0.identity * n0 + g0.identity) * n1 + g for g in g1.indices()],
        )
        alpha = make_hom(
            prod.g1,
            p,
            [
                (xm.delta.map[i // n1] * n0 + xm.delta.map[i % n1]) * n1
                + g1.inv(g1.mul(i // n1, i % n1))
                for i in prod.g1.indices()
            ],
        )
    except CheckError as exc:
        raise _reject(exc)

    try:
        return butterfly_validate(
            prod, xm, p, alpha, beta, rho, sigma, f"braid({br.name or xm.name})"
        )
    except CheckError as exc:
        raise _reject(exc)


def tau_section(br: BraidedCrossedModule) -> list[int]:
    """The strong set-theoretic section tau(x,y) = (x,y,1) of rho."""
    n0, n1 = br.base.g0.order, br.base.g1.order
    return [(x * n0 + y) * n1 + br.base.g1.identity for x in range(n0) for y in range(n0)]


@dataclass(frozen=True)
class BraidingAnalysis:
    symmetric: bool
    picard: bool


def braiding_analyze(br: BraidedCrossedModule) -> BraidingAnalysis:
    """symmetric iff c(x,y) = c(y,x)^-1 everywhere; picard adds c(x,x) = 1."""
    g0, g1 = br.base.g0, br.base.g1
    symmetric = all(
        br.c[x][y] == g1.inv(br.c[y][x]) for x in g0.indices() for y in g0.indices()
    )
    picard = symmetric and all(br.c[x][x] == g1.identity for x in g0.indices())
    return BraidingAnalysis(symmetric, picard)


# ---------------------------------------------------------------------------
# products on cohomology


def h1_product(a: Cocycle1, b: Cocycle1, br: BraidedCrossedModule) -> Cocycle1:
    """The explicit degree-one product

        x''(t)    = x(t) x'(t)
        g''(s,t)  = (c(x(t), x'(s))^x'(t))^-1  g(s,t)^(x'(s)x'(t))  g'(s,t)

    The result is validated; failure means the braiding was not valid.
    """
    if a.gamma != b.gamma or a.target != br.base or b.target != br.base:
        raise CheckError("DomainMismatch", (), "cocycles/braiding not aligned")
    xm = br.base
    g0, g1 = xm.g0, xm.g1
    gam = a.gamma
    x = tuple(g0.mul(a.x[t], b.x[t]) for t in gam.indices())
    g = []
    for s in gam.indices():
        row = []
        for t in gam.indices():
            twist = g1.inv(xm.act(br.c[a.x[t]][b.x[s]], b.x[t]))
            mid = xm.act(a.g[s][t], g0.mul(b.x[s], b.x[t]))
            row.append(g1.mul(g1.mul(twist, mid), b.g[s][t]))
        g.append(tuple(row))
    out = Cocycle1(gam, xm, x, tuple(g))
    try:
        return cocycle_validate(out)
    except CheckError as exc:
        raise CheckError(
            "BraidingInvalid", exc.witness, f"product not a cocycle ({exc.code})"
        )


def h0_product(u: int, uprime: int, br: BraidedCrossedModule) -> tuple[FiniteGroup, int]:
    """The class of u u' in pi0; for a valid braiding pi0 is abelian."""
    inv = homotopy_invariants(br.base)
    return inv.pi0, inv.pi0_projection.map[br.base.g0.mul(u, uprime)]


def descent0_product(a: Descent0, b: Descent0, br: BraidedCrossedModule) -> Descent0:
    """Componentwise product of degree-zero descent data:

        u''(v) = u(v) u'(v),   g''(v0,v1) = g(v0,v1)^(u'(v1)) g'(v0,v1).
    """
    if a.p != b.p or a.target != br.base or b.target != br.base:
        raise CheckError("DomainMismatch", (), "descent data not aligned")
    xm = br.base
    nv = len(a.p)
    u = tuple(xm.g0.mul(a.u[v], b.u[v]) for v in range(nv))
    g = []
    for v0 in range(nv):
        row = []
        for v1 in range(nv):
            if a.p[v0] != a.p[v1]:
                row.append(-1)
                continue
            row.append(xm.g1.mul(xm.act(a.g[v0][v1], b.u[v1]), b.g[v0][v1]))
        g.append(tuple(row))
    return descent0_validate(Descent0(a.p, xm, u, tuple(g)))
