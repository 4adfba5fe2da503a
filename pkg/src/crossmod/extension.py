"""Extensions of a finite group by a crossed module, and their Baer sums.

An extension of Gamma by G* is a short exact sequence 1 -> G1 -> E -> Gamma -> 1
together with j: E -> G0 such that j.iota = delta and

    e^-1 iota(g) e = iota(g^j(e)).

Equivalently, a one-winged butterfly from [1 -> Gamma] to G*; that equivalence
is exercised by the test suite.  The dictionary with 1-cocycles on B Gamma is
ext_to_cocycle / cocycle_to_ext; the Schreier multiplication used by the
latter,

    (a, m)(b, n) = (ab, g(a,b)^-1 m^x(b) n),

is the unique law making the round trip with the canonical section exact.
Baer sums are computed purely by butterfly composition: pull the product
extension back along the diagonal and push it out along the braiding
butterfly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CheckError, InternalDefect
from . import fgroup
from .fgroup import FiniteGroup, Homomorphism, make_hom, trivial_hom
from .xmod import CrossedModule, discrete_xmod, product_xmod, strict_validate
from . import butterfly as bf
from .butterfly import Butterfly, butterfly_iso_search, compose, from_strict, one_winged
from .cocycle import Cocycle1, H1Result, cocycle_validate, enumerate_h1
from .braiding import BraidedCrossedModule, braiding_butterfly


@dataclass(frozen=True)
class DedeckerExtension:
    gamma: FiniteGroup
    target: CrossedModule
    e: FiniteGroup
    iota: Homomorphism  # G1 -> E
    pi: Homomorphism  # E -> Gamma
    jay: Homomorphism  # E -> G0
    name: str = ""

    def __repr__(self) -> str:
        return f"DedeckerExtension({self.name or '?'}: |E|={self.e.order} over {self.gamma.name})"


def ext_validate(
    gamma: FiniteGroup,
    target: CrossedModule,
    e: FiniteGroup,
    iota: Homomorphism,
    pi: Homomorphism,
    jay: Homomorphism,
    name: str = "",
) -> DedeckerExtension:
    """Exhaustively check exactness, j.iota = delta, and the conjugation rule."""
    g1, g0 = target.g1, target.g0
    for hom, src, tgt, what in (
        (iota, g1, e, "iota"),
        (pi, e, gamma, "pi"),
        (jay, e, g0, "jay"),
    ):
        if hom.source != src or hom.target != tgt:
            raise CheckError("DomainMismatch", (what,))
        make_hom(src, tgt, hom.map)
    if not iota.is_injective():
        raise CheckError("IotaNotInjective", ())
    if not pi.is_surjective():
        raise CheckError("PiNotSurjective", ())
    if set(pi.kernel()) != set(iota.map):
        raise CheckError("ExactnessFail", ())
    for g in g1.indices():
        if jay.map[iota.map[g]] != target.delta.map[g]:
            raise CheckError("JayIotaFail", (g1.label(g),))
    for ee in e.indices():
        je = jay.map[ee]
        for g in g1.indices():
            if e.conj(iota.map[g], ee) != iota.map[target.act(g, je)]:
                raise CheckError("ConjugationFail", (e.label(ee), g1.label(g)))
    return DedeckerExtension(gamma, target, e, iota, pi, jay, name)


def induced_butterfly(ext: DedeckerExtension) -> Butterfly:
    """The one-winged butterfly [1 -> Gamma] -> G* of an extension."""
    return one_winged(
        discrete_xmod(ext.gamma),
        ext.target,
        ext.e,
        ext.iota,
        ext.pi,
        ext.jay,
        ext.name,
    )


def ext_from_butterfly(b: Butterfly, name: str = "") -> DedeckerExtension:
    """Read an extension off a butterfly whose domain is discrete."""
    if b.domain.g1.order != 1:
        raise CheckError("DomainMismatch", (), "butterfly domain is not discrete")
    return ext_validate(
        b.domain.g0, b.codomain, b.e, b.iota, b.pi, b.jay, name or b.name
    )


def trivial_extension(
    xi_hom: Homomorphism, target: CrossedModule, name: str = ""
) -> DedeckerExtension:
    """E = Gamma |x G1 with Gamma acting through xi and j(x,g) = xi(x) delta(g)."""
    if xi_hom.target != target.g0:
        raise CheckError("DomainMismatch", (), "xi must land in G0")
    gamma = xi_hom.source
    act = fgroup.action_through_hom(xi_hom, target.action)
    e = fgroup.semidirect_product(gamma, target.g1, act)
    n1 = target.g1.order
    iota = make_hom(
        target.g1, e, [gamma.identity * n1 + g for g in target.g1.indices()]
    )
    pi = make_hom(e, gamma, [i // n1 for i in e.indices()])
    jay = make_hom(
        e,
        target.g0,
        [
            target.g0.mul(xi_hom.map[i // n1], target.delta.map[i % n1])
            for i in e.indices()
        ],
    )
    try:
        return ext_validate(gamma, target, e, iota, pi, jay, name)
    except CheckError as exc:  # pragma: no cover - theorem
        raise InternalDefect(f"trivial extension invalid: {exc}")


def canonical_section(ext: DedeckerExtension) -> tuple[int, ...]:
    """e(1) = 1 and otherwise the index-least preimage per fiber."""
    out = []
    for a in ext.gamma.indices():
        if a == ext.gamma.identity:
            out.append(ext.e.identity)
        else:
            out.append(ext.pi.map.index(a))
    return tuple(out)


def ext_to_cocycle(
    ext: DedeckerExtension, section: Optional[Sequence[int]] = None
) -> Cocycle1:
    """x = j . e and g(a,b) = iota^-1((e(a)e(b))^-1 e(ab)) for a section e."""
    gam, eg = ext.gamma, ext.e
    if section is None:
        sec = canonical_section(ext)
    else:
        sec = tuple(section)
        if len(sec) != gam.order or sec[gam.identity] != eg.identity:
            raise CheckError("SectionInvalid", ("e(1)",))
        for a in gam.indices():
            if ext.pi.map[sec[a]] != a:
                raise CheckError("SectionInvalid", (gam.label(a),))
    iota_pos = {v: i for i, v in enumerate(ext.iota.map)}
    x = tuple(ext.jay.map[sec[a]] for a in gam.indices())
    g = []
    for a in gam.indices():
        row = []
        for b in gam.indices():
            val = eg.mul(eg.inv(eg.mul(sec[a], sec[b])), sec[gam.mul(a, b)])
            if val not in iota_pos:
                raise InternalDefect("section defect escaped the image of iota")
            row.append(iota_pos[val])
        g.append(tuple(row))
    out = Cocycle1(gam, ext.target, x, tuple(g))
    try:
        return cocycle_validate(out)
    except CheckError as exc:  # pragma: no cover - theorem
        raise InternalDefect(f"extension cocycle invalid: {exc}")


def cocycle_to_ext(xi: Cocycle1, name: str = "") -> DedeckerExtension:
    """Schreier construction on Gamma x G1; exact inverse of ext_to_cocycle.

    G1 is enumerated identity-first so that the canonical section of the
    result is precisely e(a) = (a, 1), which makes the round trip exact.
    """
    cocycle_validate(xi)
    gam, xm = xi.gamma, xi.target
    g0, g1 = xm.g0, xm.g1
    order1 = [g1.identity] + [m for m in g1.indices() if m != g1.identity]
    pos1 = {m: i for i, m in enumerate(order1)}
    n1 = g1.order
    labels = [
        f"({gam.label(a)}|{g1.label(m)})" for a in gam.indices() for m in order1
    ]

    def mul(i: int, j: int) -> int:
        a, m = i // n1, order1[i % n1]
        b, n = j // n1, order1[j % n1]
        val = g1.mul(
            g1.mul(g1.inv(xi.g[a][b]), xm.act(m, xi.x[b])), n
        )
        return gam.mul(a, b) * n1 + pos1[val]

    try:
        e = fgroup.group_from_mul(labels, mul, name and name + "-E")
    except CheckError as exc:  # pragma: no cover - theorem
        raise InternalDefect(f"Schreier table not a group: {exc}")

    iota = make_hom(g1, e, [gam.identity * n1 + pos1[m] for m in g1.indices()])
    pi = make_hom(e, gam, [i // n1 for i in e.indices()])
    jay = make_hom(
        e,
        g0,
        [
            g0.mul(xi.x[i // n1], xm.delta.map[order1[i % n1]])
            for i in e.indices()
        ],
    )
    try:
        return ext_validate(gam, xm, e, iota, pi, jay, name)
    except CheckError as exc:  # pragma: no cover - theorem
        raise InternalDefect(f"Schreier extension invalid: {exc}")


def ext_equivalent(
    a: DedeckerExtension, b: DedeckerExtension, max_e: int = bf.MAX_ISO_E
) -> Optional[Homomorphism]:
    """Isomorphism of one-winged butterflies fixing Gamma and G*, or None."""
    if a.gamma != b.gamma or a.target != b.target:
        raise CheckError("DomainMismatch", (), "extensions not comparable")
    iso = butterfly_iso_search(induced_butterfly(a), induced_butterfly(b), max_e)
    return None if iso is None else iso.phi


@dataclass(frozen=True)
class ClassifyResult:
    h1: H1Result
    extensions: tuple[DedeckerExtension, ...]

    @property
    def count(self) -> int:
        return len(self.extensions)


def classify_ext(gamma: FiniteGroup, target: CrossedModule, **guards) -> ClassifyResult:
    """Extension classes via the cocycle dictionary: one extension per H^1 class."""
    h1 = enumerate_h1(gamma, target, **guards)
    exts = tuple(
        cocycle_to_ext(rep, f"ext{i}") for i, rep in enumerate(h1.representatives)
    )
    return ClassifyResult(h1, exts)


def diagonal_hom(gamma: FiniteGroup, prod: FiniteGroup) -> Homomorphism:
    """Gamma -> Gamma x Gamma, for the direct_product index convention."""
    n = gamma.order
    return make_hom(gamma, prod, [a * n + a for a in gamma.indices()])


def product_extension_butterfly(
    a: DedeckerExtension, b: DedeckerExtension, prod_target: CrossedModule
) -> Butterfly:
    """E x E' as a one-winged butterfly [1 -> Gamma x Gamma] -> G* x G*."""
    gg = fgroup.direct_product(a.gamma, b.gamma)
    ee = fgroup.direct_product(a.e, b.e)
    ne, ng = b.e.order, b.gamma.order
    n1 = b.target.g1.order
    n0 = b.target.g0.order
    iota = make_hom(
        prod_target.g1,
        ee,
        [
            a.iota.map[i // n1] * ne + b.iota.map[i % n1]
            for i in prod_target.g1.indices()
        ],
    )
    pi = make_hom(
        ee, gg, [a.pi.map[i // ne] * ng + b.pi.map[i % ne] for i in ee.indices()]
    )
    jay = make_hom(
        ee,
        prod_target.g0,
        [a.jay.map[i // ne] * n0 + b.jay.map[i % ne] for i in ee.indices()],
    )
    return one_winged(discrete_xmod(gg), prod_target, ee, iota, pi, jay, "ExE'")


def baer_sum(
    a: DedeckerExtension,
    b: DedeckerExtension,
    braid: BraidedCrossedModule,
    name: str = "",
) -> DedeckerExtension:
    """Baer sum by butterfly composition:

        [1->Gamma] --diag--> [1->GxG] --ExE'--> G* x G* --braiding--> G*

    then read the composite one-winged butterfly as an extension.
    """
    if a.gamma != b.gamma or a.target != b.target or braid.base != a.target:
        raise CheckError("DomainMismatch", (), "summands/braiding not aligned")
    gamma = a.gamma
    prod_target = product_xmod(a.target, b.target)
    bprod = product_extension_butterfly(a, b, prod_target)

    dg = discrete_xmod(gamma)
    dgg = bprod.domain
    delta_m = strict_validate(
        dg,
        dgg,
        trivial_hom(dg.g1, dgg.g1),
        diagonal_hom(gamma, dgg.g0),
    )
    bdiag = from_strict(delta_m, "diag")

    bbraid = braiding_butterfly(braid)
    total = compose(compose(bdiag, bprod), bbraid, name and name + "-B")
    return ext_from_butterfly(total, name)
