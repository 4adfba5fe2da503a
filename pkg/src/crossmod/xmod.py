"""Crossed modules over finite groups.

A crossed module is delta: G1 -> G0 with a right G0-action on G1 satisfying

* equivariance  delta(g^x) = x^-1 delta(g) x,
* Peiffer       g^(delta h) = h^-1 g h.

Both are checked exhaustively; a CrossedModule value cannot exist
unvalidated.  Homotopy invariants are pi0 = G0/im(delta) and
pi1 = ker(delta), an abelian group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CheckError, InternalDefect
from . import fgroup
from .fgroup import (
    FiniteGroup,
    Homomorphism,
    RightAction,
    aut_action,
    automorphism_group,
    compose_homs,
    conjugation_action,
    find_isomorphism,
    make_hom,
    quotient_group,
    subgroup_group,
    trivial_action,
    trivial_group,
    trivial_hom,
    validate_action,
)


@dataclass(frozen=True)
class CrossedModule:
    g1: FiniteGroup
    g0: FiniteGroup
    delta: Homomorphism
    action: RightAction
    name: str = ""

    def act(self, g: int, x: int) -> int:
        """g^x for g in G1, x in G0."""
        return self.action.act[g][x]

    def __repr__(self) -> str:
        return f"CrossedModule({self.name or '?'}: |G1|={self.g1.order} -> |G0|={self.g0.order})"


def xmod_validate(
    g1: FiniteGroup,
    g0: FiniteGroup,
    delta: Homomorphism,
    action: RightAction,
    name: str = "",
) -> CrossedModule:
    """Check both crossed-module axioms; first failure wins.

    Raises EquivarianceFail(g, x) or PeifferFail(g, h).  Also asserts the
    consequences (im delta normal, ker delta central and abelian), which
    follow from the axioms; their failure indicates a defect.
    """
    if delta.source != g1 or delta.target != g0:
        raise CheckError("DomainMismatch", (), "delta endpoints mismatch")
    if action.group != g0 or action.space != g1:
        raise CheckError("DomainMismatch", (), "action endpoints mismatch")
    validate_action(g0, g1, action.act)
    make_hom(g1, g0, delta.map)

    for g in g1.indices():
        for x in g0.indices():
            if delta.map[action(g, x)] != g0.conj(delta.map[g], x):
                raise CheckError("EquivarianceFail", (g1.label(g), g0.label(x)))
    for g in g1.indices():
        for h in g1.indices():
            if action(g, delta.map[h]) != g1.conj(g, h):
                raise CheckError("PeifferFail", (g1.label(g), g1.label(h)))

    xm = CrossedModule(g1, g0, delta, action, name)
    img = set(delta.map)
    for x in g0.indices():
        for u in img:
            if g0.conj(u, x) not in img:
                raise InternalDefect("im delta not normal despite axioms")
    ker = delta.kernel()
    for k in ker:
        for g in g1.indices():
            if g1.mul(k, g) != g1.mul(g, k):
                raise InternalDefect("ker delta not central despite axioms")
    return xm


def discrete_xmod(g0: FiniteGroup, name: str = "") -> CrossedModule:
    """[1 -> G0]."""
    one = trivial_group()
    return xmod_validate(
        one, g0, trivial_hom(one, g0), trivial_action(g0, one), name or f"disc({g0.name})"
    )


def shifted_xmod(a: FiniteGroup, name: str = "") -> CrossedModule:
    """[A -> 1] for abelian A; Peiffer forces abelianness when delta is trivial."""
    one = trivial_group()
    return xmod_validate(
        a, one, trivial_hom(a, one), trivial_action(one, a), name or f"shift({a.name})"
    )


def inclusion_xmod(g: FiniteGroup, members, name: str = "") -> CrossedModule:
    """[N -> G] for N normal in G, with the conjugation action."""
    sub, incl = subgroup_group(g, members)
    ms = set(incl.map)
    for x in g.indices():
        for nn in incl.map:
            if g.conj(nn, x) not in ms:
                raise CheckError("NotNormal", (g.label(x), g.label(nn)))
    pos = {a: i for i, a in enumerate(incl.map)}
    act = fgroup.action_from_fn(g, sub, lambda s, x: pos[g.conj(incl.map[s], x)])
    return xmod_validate(sub, g, incl, act, name or f"incl({sub.name})")


def inner_xmod(g: FiniteGroup, max_order: int = fgroup.MAX_AUT_ORDER) -> CrossedModule:
    """The inner crossed module [G -> Aut(G)], delta = conjugation."""
    ag = automorphism_group(g, max_order)
    return xmod_validate(g, ag.group, ag.inner, aut_action(ag, g), f"inner({g.name})")


def standard_xmod(kind: str, data, name: str = "") -> CrossedModule:
    """kind in {"inner", "inclusion", "discrete", "shifted"}."""
    if kind == "inner":
        return inner_xmod(data)
    if kind == "discrete":
        return discrete_xmod(data, name)
    if kind == "shifted":
        return shifted_xmod(data, name)
    if kind == "inclusion":
        g, members = data
        return inclusion_xmod(g, members, name)
    raise CheckError("UnknownKind", (kind,))


@dataclass(frozen=True)
class HomotopyInvariants:
    pi0: FiniteGroup
    pi0_projection: Homomorphism  # G0 -> pi0
    pi1: FiniteGroup
    pi1_inclusion: Homomorphism  # pi1 -> G1


def homotopy_invariants(xm: CrossedModule) -> HomotopyInvariants:
    """pi0 = G0/im delta, pi1 = ker delta (abelian, asserted)."""
    img = fgroup.check_subgroup(xm.g0, sorted(set(xm.delta.map)))
    pi0, proj = quotient_group(xm.g0, img, f"pi0({xm.name})")
    pi1, incl = subgroup_group(xm.g1, xm.delta.kernel(), f"pi1({xm.name})")
    if not pi1.is_abelian():
        raise InternalDefect("pi1 not abelian despite crossed module axioms")
    return HomotopyInvariants(pi0, proj, pi1, incl)


@dataclass(frozen=True)
class StrictMorphism:
    """A strict morphism of crossed modules: a commuting square (f1, f0)."""

    source: CrossedModule
    target: CrossedModule
    f1: Homomorphism
    f0: Homomorphism


def strict_validate(
    source: CrossedModule,
    target: CrossedModule,
    f1: Homomorphism,
    f0: Homomorphism,
) -> StrictMorphism:
    """Check f0 . delta_H = delta_G . f1 and f1(h^x) = f1(h)^f0(x)."""
    if f1.source != source.g1 or f1.target != target.g1:
        raise CheckError("DomainMismatch", (), "f1 endpoints mismatch")
    if f0.source != source.g0 or f0.target != target.g0:
        raise CheckError("DomainMismatch", (), "f0 endpoints mismatch")
    for h in source.g1.indices():
        if f0.map[source.delta.map[h]] != target.delta.map[f1.map[h]]:
            raise CheckError("SquareNotCommuting", (source.g1.label(h),))
    for h in source.g1.indices():
        for x in source.g0.indices():
            if f1.map[source.act(h, x)] != target.act(f1.map[h], f0.map[x]):
                raise CheckError(
                    "NotEquivariant", (source.g1.label(h), source.g0.label(x))
                )
    return StrictMorphism(source, target, f1, f0)


def identity_morphism(xm: CrossedModule) -> StrictMorphism:
    return StrictMorphism(
        xm, xm, fgroup.identity_hom(xm.g1), fgroup.identity_hom(xm.g0)
    )


@dataclass(frozen=True)
class QuasiIsoReport:
    is_quasi_iso: bool
    pi0_map: Homomorphism
    pi1_map: Homomorphism


def is_quasi_iso(m: StrictMorphism) -> QuasiIsoReport:
    """Induced maps on pi0 and pi1; quasi-iso iff both are bijective."""
    hs = homotopy_invariants(m.source)
    ht = homotopy_invariants(m.target)
    pi0_map = make_hom(
        hs.pi0,
        ht.pi0,
        _induced_on_quotient(hs, ht, m.f0),
    )
    pi1_map = make_hom(
        hs.pi1,
        ht.pi1,
        _induced_on_kernel(hs, ht, m.f1),
    )
    ok = pi0_map.is_bijective() and pi1_map.is_bijective()
    return QuasiIsoReport(ok, pi0_map, pi1_map)


def _induced_on_quotient(hs: HomotopyInvariants, ht: HomotopyInvariants, f0) -> list[int]:
    out = []
    proj_s, proj_t = hs.pi0_projection, ht.pi0_projection
    for c in hs.pi0.indices():
        rep = proj_s.map.index(c)
        out.append(proj_t.map[f0.map[rep]])
    return out


def _induced_on_kernel(hs: HomotopyInvariants, ht: HomotopyInvariants, f1) -> list[int]:
    out = []
    incl_t = list(ht.pi1_inclusion.map)
    for k in hs.pi1.indices():
        v = f1.map[hs.pi1_inclusion.map[k]]
        if v not in incl_t:
            raise InternalDefect("f1 does not restrict to kernels")
        out.append(incl_t.index(v))
    return out


def product_xmod(a: CrossedModule, b: CrossedModule, name: str = "") -> CrossedModule:
    """Componentwise product crossed module; element order matches direct_product."""
    g1 = fgroup.direct_product(a.g1, b.g1)
    g0 = fgroup.direct_product(a.g0, b.g0)
    n1, n0 = b.g1.order, b.g0.order

    delta = make_hom(
        g1,
        g0,
        [
            a.delta.map[i // n1] * n0 + b.delta.map[i % n1]
            for i in g1.indices()
        ],
    )
    act = fgroup.RightAction(
        g0,
        g1,
        tuple(
            tuple(
                a.act(s // n1, x // n0) * n1 + b.act(s % n1, x % n0)
                for x in g0.indices()
            )
            for s in g1.indices()
        ),
    )
    return xmod_validate(g1, g0, delta, act, name or f"{a.name}x{b.name}")


def xmods_isomorphic_invariants(a: CrossedModule, b: CrossedModule) -> bool:
    """Weak sanity check: pi0 and pi1 are isomorphic groups."""
    ha, hb = homotopy_invariants(a), homotopy_invariants(b)
    return (
        find_isomorphism(ha.pi0, hb.pi0) is not None
        and find_isomorphism(ha.pi1, hb.pi1) is not None
    )
