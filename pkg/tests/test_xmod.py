"""Crossed module axioms, standard constructions, homotopy invariants."""

import pytest

from crossmod.errors import CheckError
from crossmod.fgroup import (
    cyclic,
    find_isomorphism,
    identity_hom,
    make_hom,
    trivial_hom,
    trivial_action,
)
from crossmod.xmod import (
    homotopy_invariants,
    identity_morphism,
    inclusion_xmod,
    is_quasi_iso,
    product_xmod,
    shifted_xmod,
    standard_xmod,
    strict_validate,
    xmod_validate,
)


class TestValidation:
    def test_inner_s3_valid(self, inner_s3):
        assert inner_s3.g1.order == 6 and inner_s3.g0.order == 6

    def test_inclusion_a3_valid(self, incl_a3):
        assert incl_a3.g1.order == 3 and incl_a3.g0.order == 6

    def test_shifted_z3_valid(self, z3):
        xm = shifted_xmod(z3)
        assert xm.g0.order == 1

    def test_shifted_s3_peiffer_fail(self, s3):
        with pytest.raises(CheckError) as e:
            shifted_xmod(s3)
        assert e.value.code == "PeifferFail"

    def test_equivariance_witness(self, z3, s3):
        # delta: Z3 -> S3 embedding a 3-cycle, trivial action: conjugation by
        # a transposition moves the image, so equivariance must fail
        three = next(i for i in s3.indices() if s3.element_order(i) == 3)
        delta = make_hom(z3, s3, [s3.identity, three, s3.mul(three, three)])
        with pytest.raises(CheckError) as e:
            xmod_validate(z3, s3, delta, trivial_action(s3, z3))
        assert e.value.code == "EquivarianceFail"

    def test_peiffer_witness_nonabelian_kernel(self, s3, z2, sign_hom):
        # delta = sign with trivial action: Peiffer forces commutativity
        with pytest.raises(CheckError) as e:
            xmod_validate(s3, z2, sign_hom, trivial_action(z2, s3))
        assert e.value.code in ("EquivarianceFail", "PeifferFail")

    def test_consequences_checked(self, inner_s3, incl_a3):
        # im delta normal / ker delta central hold on every accepted value
        for xm in (inner_s3, incl_a3):
            img = set(xm.delta.map)
            for x in xm.g0.indices():
                for u in img:
                    assert xm.g0.conj(u, x) in img
            for k in xm.delta.kernel():
                for g in xm.g1.indices():
                    assert xm.g1.mul(k, g) == xm.g1.mul(g, k)


class TestStandard:
    def test_discrete(self, s3):
        xm = standard_xmod("discrete", s3)
        inv = homotopy_invariants(xm)
        assert inv.pi0.order == 6 and inv.pi1.order == 1

    def test_shifted(self, z2):
        xm = standard_xmod("shifted", z2)
        inv = homotopy_invariants(xm)
        assert inv.pi0.order == 1 and inv.pi1.order == 2

    def test_inner_z4_trivial_delta(self, inner_z4, z4):
        # Z4 abelian: conjugation is trivial, Aut(Z4) = Z2
        assert inner_z4.g0.order == 2
        assert all(v == inner_z4.g0.identity for v in inner_z4.delta.map)

    def test_unknown_kind(self, z2):
        with pytest.raises(CheckError):
            standard_xmod("mystery", z2)


class TestHomotopyInvariants:
    def test_inner_s3_trivial(self, inner_s3):
        inv = homotopy_invariants(inner_s3)
        assert inv.pi0.order == 1 and inv.pi1.order == 1

    def test_inner_z4(self, inner_z4, z2, z4):
        inv = homotopy_invariants(inner_z4)
        assert find_isomorphism(inv.pi0, z2) is not None
        assert find_isomorphism(inv.pi1, z4) is not None

    def test_inclusion_a3(self, incl_a3, z2):
        inv = homotopy_invariants(incl_a3)
        assert find_isomorphism(inv.pi0, z2) is not None
        assert inv.pi1.order == 1

    def test_inner_invariants_vs_center_and_out(self, z3, z4, s3):
        from crossmod.fgroup import automorphism_group, find_isomorphism, quotient_group
        from crossmod.xmod import inner_xmod

        for g in (z3, z4, cyclic(6), s3):
            xm = inner_xmod(g)
            inv = homotopy_invariants(xm)
            assert inv.pi1.order == len(g.center())
            # pi0 = Aut(G)/Inn(G), computed independently
            ag = automorphism_group(g)
            out, _ = quotient_group(ag.group, sorted(set(ag.inner.map)))
            assert find_isomorphism(inv.pi0, out) is not None


class TestStrictMorphisms:
    def test_identity_quasi_iso(self, inner_z3):
        rep = is_quasi_iso(identity_morphism(inner_z3))
        assert rep.is_quasi_iso

    def test_disc_inclusion_not_quasi_iso(self, s3, a3_in_s3, disc_s3):
        from crossmod.xmod import discrete_xmod
        from crossmod.fgroup import subgroup_group

        a3, incl = subgroup_group(s3, a3_in_s3)
        da3 = discrete_xmod(a3)
        m = strict_validate(da3, disc_s3, trivial_hom(da3.g1, disc_s3.g1), incl)
        rep = is_quasi_iso(m)
        assert not rep.is_quasi_iso
        assert not rep.pi0_map.is_surjective()

    def test_square_fail(self, pair_z2, z2):
        # [Z2 -> Z2, delta = id] receives no strict morphism from pair_z2
        # with identity components: the square cannot commute
        unit = xmod_validate(
            cyclic(2), cyclic(2), identity_hom(cyclic(2)), trivial_action(cyclic(2), cyclic(2))
        )
        with pytest.raises(CheckError) as e:
            strict_validate(
                pair_z2, unit, identity_hom(pair_z2.g1), identity_hom(pair_z2.g0)
            )
        assert e.value.code == "SquareNotCommuting"

    def test_quasi_iso_invariants_isomorphic(self, inner_z3):
        rep = is_quasi_iso(identity_morphism(inner_z3))
        assert rep.pi0_map.is_bijective() and rep.pi1_map.is_bijective()


class TestProduct:
    def test_product_invariants(self, shift_z2, inner_z3):
        p = product_xmod(shift_z2, inner_z3)
        inv = homotopy_invariants(p)
        assert inv.pi0.order == 2  # 1 x Z2
        assert inv.pi1.order == 2 * 3
