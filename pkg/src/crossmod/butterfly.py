"""Butterfly diagrams: weak morphisms of 2-groups in concrete form.

A butterfly from H* to G* is a group E with four wings

    kappa: H1 -> E,  iota: G1 -> E,  pi: E -> H0,  jay: E -> G0

such that the NE-SW sequence 1 -> G1 -> E -> H0 -> 1 is a short exact
sequence, the NW-SE sequence H1 -> E -> G0 is a complex with pi.kappa and
jay.iota equal to the structure maps, and the two equivariance conditions

    iota(g^jay(e)) = e^-1 iota(g) e,    kappa(h^pi(e)) = e^-1 kappa(h) e

hold.  A consequence (checked as well) is that the images of iota and kappa
commute elementwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CheckError, InternalDefect, SizeGuardExceeded
from . import fgroup
from .fgroup import FiniteGroup, Homomorphism, iter_homomorphisms, make_hom
from . import xmod as xmod_mod
from .xmod import CrossedModule, StrictMorphism

MAX_SPLIT_H0 = 12
MAX_ISO_E = 48


@dataclass(frozen=True)
class Butterfly:
    domain: CrossedModule  # H*
    codomain: CrossedModule  # G*
    e: FiniteGroup
    kappa: Homomorphism  # H1 -> E
    iota: Homomorphism  # G1 -> E
    pi: Homomorphism  # E -> H0
    jay: Homomorphism  # E -> G0
    name: str = ""

    def __repr__(self) -> str:
        return f"Butterfly({self.name or '?'}: |E|={self.e.order})"


def butterfly_validate(
    domain: CrossedModule,
    codomain: CrossedModule,
    e: FiniteGroup,
    kappa: Homomorphism,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
    name: str = "",
) -> Butterfly:
    """Exhaustively check every butterfly axiom; first failure wins."""
    h1, h0 = domain.g1, domain.g0
    g1, g0 = codomain.g1, codomain.g0
    for hom, src, tgt, what in (
        (kappa, h1, e, "kappa"),
        (iota, g1, e, "iota"),
        (pi, e, h0, "pi"),
        (jay, e, g0, "jay"),
    ):
        if hom.source != src or hom.target != tgt:
            raise CheckError("DomainMismatch", (what,))
        make_hom(src, tgt, hom.map)

    for h in h1.indices():
        if pi.map[kappa.map[h]] != domain.delta.map[h]:
            raise CheckError("PiKappaFail", (h1.label(h),))
    for g in g1.indices():
        if jay.map[iota.map[g]] != codomain.delta.map[g]:
            raise CheckError("JayIotaFail", (g1.label(g),))
    for h in h1.indices():
        if jay.map[kappa.map[h]] != g0.identity:
            raise CheckError("ComplexFail", (h1.label(h),))

    if not iota.is_injective():
        raise CheckError("IotaNotInjective", ())
    if not pi.is_surjective():
        raise CheckError("PiNotSurjective", ())
    if set(pi.kernel()) != set(iota.map):
        raise CheckError("ExactnessFail", ())

    for ee in e.indices():
        je = jay.map[ee]
        pe = pi.map[ee]
        for g in g1.indices():
            if iota.map[codomain.act(g, je)] != e.conj(iota.map[g], ee):
                raise CheckError(
                    "EquivarianceFailIota", (g1.label(g), e.label(ee))
                )
        for h in h1.indices():
            if kappa.map[domain.act(h, pe)] != e.conj(kappa.map[h], ee):
                raise CheckError(
                    "EquivarianceFailKappa", (h1.label(h), e.label(ee))
                )

    for h in h1.indices():
        for g in g1.indices():
            kh, ig = kappa.map[h], iota.map[g]
            if e.mul(kh, ig) != e.mul(ig, kh):
                raise CheckError("ImagesDontCommute", (h1.label(h), g1.label(g)))

    return Butterfly(domain, codomain, e, kappa, iota, pi, jay, name)


def from_strict(m: StrictMorphism, name: str = "") -> Butterfly:
    """The split butterfly of a strict morphism.

    E = H0 |x G1 (H0 acting on G1 through f0), with

        pi(x,g) = x,  jay(x,g) = f0(x) dG(g),  iota(g) = (1,g),
        kappa(h) = (dH(h), f1(h)^-1).

    The inverse twist on kappa is what makes it a homomorphism; the whole
    construction must validate, so any failure here is a defect.
    """
    src, tgt = m.source, m.target
    act = fgroup.action_through_hom(m.f0, tgt.action)
    e = fgroup.semidirect_product(src.g0, tgt.g1, act, name and name + "-E")
    n1 = tgt.g1.order

    pi = make_hom(e, src.g0, [i // n1 for i in e.indices()])
    jay = make_hom(
        e,
        tgt.g0,
        [
            tgt.g0.mul(m.f0.map[i // n1], tgt.delta.map[i % n1])
            for i in e.indices()
        ],
    )
    iota = make_hom(tgt.g1, e, [src.g0.identity * n1 + g for g in tgt.g1.indices()])
    kappa = make_hom(
        src.g1,
        e,
        [
            src.delta.map[h] * n1 + tgt.g1.inv(m.f1.map[h])
            for h in src.g1.indices()
        ],
    )
    try:
        return butterfly_validate(src, tgt, e, kappa, iota, pi, jay, name)
    except CheckError as exc:  # pragma: no cover - theorem
        raise InternalDefect(f"from_strict produced an invalid butterfly: {exc}")


def identity_butterfly(xm: CrossedModule) -> Butterfly:
    return from_strict(xmod_mod.identity_morphism(xm), f"id({xm.name})")


def one_winged(
    gamma_xmod: CrossedModule,
    codomain: CrossedModule,
    e: FiniteGroup,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
    name: str = "",
) -> Butterfly:
    """Butterfly from a discrete crossed module [1 -> Gamma]; kappa is trivial."""
    kappa = fgroup.trivial_hom(gamma_xmod.g1, e)
    return butterfly_validate(gamma_xmod, codomain, e, kappa, iota, pi, jay, name)


def compose(first: Butterfly, second: Butterfly, name: str = "") -> Butterfly:
    """Juxtaposition: fiber product of the centers over H0, mod H1.

    For first = [K*, F, H*] and second = [H*, E, G*], the center is

        { (f,e) : jay_F(f) = pi_E(e) }  /  { (iota_F(h), kappa_E(h)) : h in H1 }.

    The displayed diagonal is the only embedding of H1 that lands in the
    fiber product; its normality there is checked, not assumed.
    """
    if first.codomain != second.domain:
        raise CheckError("DomainMismatch", (), "middle crossed modules differ")
    f_grp, e_grp = first.e, second.e
    dp = fgroup.direct_product(f_grp, e_grp)
    ne = e_grp.order
    members = [
        f * ne + ee
        for f in f_grp.indices()
        for ee in e_grp.indices()
        if first.jay.map[f] == second.pi.map[ee]
    ]
    fp, incl = fgroup.subgroup_group(dp, members, "FP")
    pos = {p: i for i, p in enumerate(incl.map)}

    h1 = first.codomain.g1
    diag = sorted(
        {
            pos[first.iota.map[h] * ne + second.kappa.map[h]]
            for h in h1.indices()
        }
    )
    try:
        center, proj = fgroup.quotient_group(fp, diag, name and name + "-E")
    except CheckError as exc:
        raise InternalDefect(f"composition diagonal not normal: {exc}")

    def cls(f: int, ee: int) -> int:
        return proj.map[pos[f * ne + ee]]

    k1 = first.domain.g1
    g1 = second.codomain.g1
    kappa = make_hom(
        k1, center, [cls(first.kappa.map[k], e_grp.identity) for k in k1.indices()]
    )
    iota = make_hom(
        g1, center, [cls(f_grp.identity, second.iota.map[g]) for g in g1.indices()]
    )
    rep_of = [incl.map[proj.map.index(c)] for c in center.indices()]
    pi_vals = [first.pi.map[p // ne] for p in rep_of]
    jay_vals = [second.jay.map[p % ne] for p in rep_of]
    for i, p in enumerate(incl.map):
        c = proj.map[i]
        if first.pi.map[p // ne] != pi_vals[c] or second.jay.map[p % ne] != jay_vals[c]:
            raise InternalDefect("composite wings not constant on classes")
    pi = make_hom(center, first.domain.g0, pi_vals)
    jay = make_hom(center, second.codomain.g0, jay_vals)
    try:
        return butterfly_validate(
            first.domain, second.codomain, center, kappa, iota, pi, jay, name
        )
    except CheckError as exc:
        raise InternalDefect(f"composite butterfly invalid: {exc}")


@dataclass(frozen=True)
class DiagonalResult:
    exmod: CrossedModule  # [H1 x G1 -> E]
    left: StrictMorphism  # exmod -> H*
    right: StrictMorphism  # exmod -> G*
    left_is_quasi_iso: bool


def diagonal_xmod(b: Butterfly) -> DiagonalResult:
    """The diagonal crossed module [H1 x G1 -> E], d(h,g) = kappa(h) iota(g),
    with its two strict legs; the left leg is a quasi-isomorphism."""
    h1, g1 = b.domain.g1, b.codomain.g1
    e1 = fgroup.direct_product(h1, g1)
    n = g1.order
    delta = make_hom(
        e1,
        b.e,
        [b.e.mul(b.kappa.map[i // n], b.iota.map[i % n]) for i in e1.indices()],
    )
    act = fgroup.RightAction(
        b.e,
        e1,
        tuple(
            tuple(
                b.domain.act(i // n, b.pi.map[ee]) * n
                + b.codomain.act(i % n, b.jay.map[ee])
                for ee in b.e.indices()
            )
            for i in e1.indices()
        ),
    )
    try:
        exmod = xmod_mod.xmod_validate(e1, b.e, delta, act, f"diag({b.name})")
    except CheckError as exc:
        raise InternalDefect(f"diagonal crossed module invalid: {exc}")

    pr1 = make_hom(e1, h1, [i // n for i in e1.indices()])
    pr2 = make_hom(e1, g1, [i % n for i in e1.indices()])
    left = xmod_mod.strict_validate(exmod, b.domain, pr1, b.pi)
    right = xmod_mod.strict_validate(exmod, b.codomain, pr2, b.jay)
    report = xmod_mod.is_quasi_iso(left)
    return DiagonalResult(exmod, left, right, report.is_quasi_iso)


@dataclass(frozen=True)
class ButterflyAnalysis:
    split: Optional[Homomorphism]  # section H0 -> E of pi, if one exists
    flippable: bool


def analyze(b: Butterfly, max_h0: int = MAX_SPLIT_H0) -> ButterflyAnalysis:
    """Search for a homomorphic section of pi (guarded) and decide flippability."""
    h0 = b.domain.g0
    if h0.order > max_h0:
        raise SizeGuardExceeded("split_search", h0.order, max_h0)

    fibers: dict[int, list[int]] = {}
    for ee in b.e.indices():
        fibers.setdefault(b.pi.map[ee], []).append(ee)

    section = None
    for f in iter_homomorphisms(h0, b.e, lambda s, y: y in fibers[s]):
        if all(b.pi.map[f[x]] == x for x in h0.indices()):
            section = Homomorphism(h0, b.e, f)
            break

    flippable = (
        b.kappa.is_injective()
        and b.jay.is_surjective()
        and set(b.jay.kernel()) == set(b.kappa.map)
    )
    return ButterflyAnalysis(section, flippable)


@dataclass(frozen=True)
class ButterflyIso:
    source: Butterfly
    target: Butterfly
    phi: Homomorphism  # E -> E', bijective


def butterfly_iso_search(
    a: Butterfly, b: Butterfly, max_e: int = MAX_ISO_E
) -> Optional[ButterflyIso]:
    """First bijective phi: E -> E' with phi.kappa = kappa', phi.iota = iota',
    pi'.phi = pi and jay'.phi = jay, scanning generator images in index order."""
    if a.domain != b.domain or a.codomain != b.codomain:
        raise CheckError("DomainMismatch", (), "butterflies not parallel")
    if a.e.order > max_e or b.e.order > max_e:
        raise SizeGuardExceeded("butterfly_iso_search", max(a.e.order, b.e.order), max_e)
    if a.e.order != b.e.order:
        return None

    def compatible(s: int, y: int) -> bool:
        return (
            a.e.element_order(s) == b.e.element_order(y)
            and b.pi.map[y] == a.pi.map[s]
            and b.jay.map[y] == a.jay.map[s]
        )

    h1 = a.domain.g1
    g1 = a.codomain.g1
    for f in iter_homomorphisms(a.e, b.e, compatible):
        if len(set(f)) != a.e.order:
            continue
        if any(f[a.kappa.map[h]] != b.kappa.map[h] for h in h1.indices()):
            continue
        if any(f[a.iota.map[g]] != b.iota.map[g] for g in g1.indices()):
            continue
        if any(b.pi.map[f[x]] != a.pi.map[x] for x in a.e.indices()):
            continue
        if any(b.jay.map[f[x]] != a.jay.map[x] for x in a.e.indices()):
            continue
        return ButterflyIso(a, b, Homomorphism(a.e, b.e, f))
    return None
