"""Shared builders: the programmatic test corpus.

Groups, crossed modules, butterflies, cocycle families and braidings used
across the suite.  Everything is small enough for exhaustive checking.
"""

from __future__ import annotations

import pytest


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid:
                name = nodeid.split("::")[-1]
                lines.append((name, status.upper()))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status:4s}  {name}")

from crossmod import fgroup
from crossmod.fgroup import (
    cyclic,
    direct_product,
    klein_four,
    make_hom,
    subgroup_closure,
    symmetric,
    trivial_hom,
)
from crossmod import xmod as xm
from crossmod import butterfly as bf
from crossmod import braiding as br


@pytest.fixture(scope="session")
def z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic(4)


@pytest.fixture(scope="session")
def z6():
    return cyclic(6)


@pytest.fixture(scope="session")
def v4():
    return klein_four()


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def a3_in_s3(s3):
    three_cycle = next(i for i in s3.indices() if s3.element_order(i) == 3)
    return subgroup_closure(s3, [three_cycle])


@pytest.fixture(scope="session")
def sign_hom(s3, z2, a3_in_s3):
    return make_hom(s3, z2, [0 if i in a3_in_s3 else 1 for i in s3.indices()])


# -- crossed modules --------------------------------------------------------


@pytest.fixture(scope="session")
def shift_z2(z2):
    return xm.shifted_xmod(z2)


@pytest.fixture(scope="session")
def shift_z3(z3):
    return xm.shifted_xmod(z3)


@pytest.fixture(scope="session")
def disc_z2(z2):
    return xm.discrete_xmod(z2)


@pytest.fixture(scope="session")
def disc_s3(s3):
    return xm.discrete_xmod(s3)


@pytest.fixture(scope="session")
def inner_z3(z3):
    return xm.inner_xmod(z3)


@pytest.fixture(scope="session")
def inner_z4(z4):
    return xm.inner_xmod(z4)


@pytest.fixture(scope="session")
def inner_s3(s3):
    return xm.inner_xmod(s3)


@pytest.fixture(scope="session")
def incl_a3(s3, a3_in_s3):
    return xm.inclusion_xmod(s3, a3_in_s3)


@pytest.fixture(scope="session")
def pair_z2():
    """G0 = G1 = Z2, trivial delta and action; carries the pairing braiding."""
    g = cyclic(2)
    h = cyclic(2)
    return xm.xmod_validate(
        h, g, trivial_hom(h, g), fgroup.trivial_action(g, h), "pairZ2"
    )


# -- butterflies ------------------------------------------------------------


@pytest.fixture(scope="session")
def z4_wing(disc_z2, shift_z2, z4, z2):
    """The non-split, non-flippable one-winged butterfly with E = Z4."""
    iota = make_hom(z2, z4, [0, 2])
    pi = make_hom(z4, z2, [0, 1, 0, 1])
    jay = trivial_hom(z4, shift_z2.g0)
    return bf.one_winged(disc_z2, shift_z2, z4, iota, pi, jay, "z4wing")


@pytest.fixture(scope="session")
def s3_wing(disc_z2, inner_z3, s3, z2, z3, sign_hom, a3_in_s3):
    """S3 as a one-winged butterfly from [1 -> Z2] to inner(Z3)."""
    three = next(i for i in s3.indices() if s3.element_order(i) == 3)
    iota = make_hom(z3, s3, [s3.identity, three, s3.mul(three, three)])
    ag = fgroup.automorphism_group(z3)
    jmap = []
    for e in s3.indices():
        imgs = tuple(
            iota.map.index(s3.conj(iota.map[r], e)) for r in z3.indices()
        )
        jmap.append(ag.automorphisms.index(imgs))
    jay = make_hom(s3, inner_z3.g0, jmap)
    return bf.one_winged(disc_z2, inner_z3, s3, iota, sign_hom, jay, "s3wing")


@pytest.fixture(scope="session")
def flip_z3(shift_z3, z3):
    """from_strict of the inversion automorphism of [Z3 -> 1]; flippable."""
    m = xm.strict_validate(
        shift_z3, shift_z3, make_hom(z3, z3, [0, 2, 1]), fgroup.identity_hom(shift_z3.g0)
    )
    return bf.from_strict(m, "flipZ3")


@pytest.fixture(scope="session")
def sign_disc_butterfly(disc_s3, disc_z2, sign_hom):
    m = xm.strict_validate(
        disc_s3, disc_z2, trivial_hom(disc_s3.g1, disc_z2.g1), sign_hom
    )
    return bf.from_strict(m, "sgn")


# -- braidings ---------------------------------------------------------------


@pytest.fixture(scope="session")
def braid_shift_z2(shift_z2):
    return br.trivial_braiding(shift_z2)


@pytest.fixture(scope="session")
def braid_shift_z3(shift_z3):
    return br.trivial_braiding(shift_z3)


@pytest.fixture(scope="session")
def braid_pairing(pair_z2):
    return br.braiding_from_fn(
        pair_z2, lambda x, y: 1 if (x == 1 and y == 1) else 0, "pairing"
    )
