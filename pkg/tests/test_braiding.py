"""Braidings: the multiplication butterfly, products on H^0/H^1, oracles."""

import pytest

from crossmod.errors import CheckError
from crossmod.fgroup import cyclic, trivial_action, trivial_hom
from crossmod.xmod import homotopy_invariants, product_xmod, shifted_xmod, xmod_validate
from crossmod.butterfly import butterfly_validate
from crossmod.cocycle import (
    Descent0,
    are_equivalent,
    class_index,
    descent0_validate,
    enumerate_h1,
    lift_along_butterfly,
    pair_cocycle,
)
from crossmod.braiding import (
    braiding_analyze,
    braiding_butterfly,
    braiding_from_fn,
    descent0_product,
    h0_product,
    h1_product,
    tau_section,
    trivial_braiding,
)


class TestBraidingButterfly:
    def test_trivial_on_shifted_abelian(self, shift_z3, braid_shift_z3):
        b = braiding_butterfly(braid_shift_z3)
        assert b.e.order == 3  # P = G0 x G0 x G1 with trivial G0

    def test_pairing_valid(self, braid_pairing):
        b = braiding_butterfly(braid_pairing)
        assert b.e.order == 8

    def test_tau_is_section_of_rho(self, braid_pairing):
        b = braiding_butterfly(braid_pairing)
        tau = tau_section(braid_pairing)
        for i, p in enumerate(tau):
            assert b.pi.map[p] == i

    def test_broken_normalization_rejected(self, pair_z2):
        bad = braiding_from_fn(pair_z2, lambda x, y: 1 if y == 1 else 0)
        with pytest.raises(CheckError) as e:
            braiding_butterfly(bad)
        assert e.value.code == "BraidingInvalid"

    def test_nonbilinear_c_rejected(self):
        # c(s,s) = s on Z4 coefficients with trivial delta: the law on P is
        # not associative, so the braiding must be rejected
        z4a, z4b = cyclic(4), cyclic(4)
        xm = xmod_validate(z4b, z4a, trivial_hom(z4b, z4a), trivial_action(z4a, z4b))
        bad = braiding_from_fn(xm, lambda x, y: 1 if (x == 1 and y == 1) else 0)
        with pytest.raises(CheckError) as e:
            braiding_butterfly(bad)
        assert e.value.code == "BraidingInvalid"

    def test_discrete_abelian_degenerate_wing(self, z3):
        # [1 -> A] with A abelian and c = 1: P = A x A, G1-wing trivial
        from crossmod.xmod import discrete_xmod

        br = trivial_braiding(discrete_xmod(z3))
        b = braiding_butterfly(br)
        assert b.e.order == 9
        assert b.iota.source.order == 1

    def test_discrete_nonabelian_rejected(self, s3):
        # sigma(x, y) = xy is not a homomorphism when G0 is not abelian
        from crossmod.xmod import discrete_xmod

        br = trivial_braiding(discrete_xmod(s3))
        with pytest.raises(CheckError) as e:
            braiding_butterfly(br)
        assert e.value.code == "BraidingInvalid"

    def test_pi0_abelian_for_valid_braidings(self, braid_shift_z2, braid_shift_z3,
                                             braid_pairing):
        for br in (braid_shift_z2, braid_shift_z3, braid_pairing):
            braiding_butterfly(br)
            assert homotopy_invariants(br.base).pi0.is_abelian()


class TestAnalyze:
    def test_trivial_symmetric_picard(self, braid_shift_z3):
        an = braiding_analyze(braid_shift_z3)
        assert an.symmetric and an.picard

    def test_pairing_symmetric_not_picard(self, braid_pairing):
        an = braiding_analyze(braid_pairing)
        assert an.symmetric and not an.picard

    def test_nonsymmetric_witness(self):
        # biadditive c(x,y) = x*y mod 4 on Z4: c(1,3) = 3 but c(3,1)^-1 = 1
        z4a, z4b = cyclic(4), cyclic(4)
        xm = xmod_validate(z4b, z4a, trivial_hom(z4b, z4a), trivial_action(z4a, z4b))
        br = braiding_from_fn(xm, lambda x, y: (x * y) % 4)
        an = braiding_analyze(br)
        assert not an.symmetric


class TestH1Product:
    def test_unit_law_exact(self, z2, shift_z2, braid_shift_z2):
        h1 = enumerate_h1(z2, shift_z2)
        triv = h1.representatives[0]
        for rep in h1.representatives:
            out = h1_product(rep, triv, braid_shift_z2)
            assert out.x == rep.x and out.g == rep.g

    def test_z2_group_table(self, z2, shift_z2, braid_shift_z2):
        h1 = enumerate_h1(z2, shift_z2)
        reps = h1.representatives
        table = {
            (i, j): class_index(h1_product(a, b, braid_shift_z2), reps)
            for i, a in enumerate(reps)
            for j, b in enumerate(reps)
        }
        assert table == {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}

    def test_two_pipeline_oracle(self, z2, z3, shift_z2, shift_z3, pair_z2,
                                 braid_shift_z2, braid_shift_z3, braid_pairing):
        cases = (
            (z2, braid_shift_z2),
            (z3, braid_shift_z3),
            (z2, braid_pairing),
        )
        pairs = 0
        for gam, br in cases:
            xm = br.base
            bfly = braiding_butterfly(br)
            prod = product_xmod(xm, xm)
            reps = enumerate_h1(gam, xm).representatives
            for a in reps:
                for b in reps:
                    direct = h1_product(a, b, br)
                    lifted = lift_along_butterfly(pair_cocycle(a, b, prod), bfly).result
                    assert are_equivalent(direct, lifted) is not None
                    pairs += 1
        assert pairs >= 4 + 9 + 16

    def test_quadratic_braiding_two_pipeline(self, z2):
        # G0 = Z2, G1 = Z4, c(t,t) = 2: a pairing valued in the 2-torsion;
        # lifting fibers have four elements here
        z4 = cyclic(4)
        g0 = cyclic(2)
        xm = xmod_validate(z4, g0, trivial_hom(z4, g0), trivial_action(g0, z4))
        br = braiding_from_fn(xm, lambda x, y: 2 if (x == 1 and y == 1) else 0)
        bfly = braiding_butterfly(br)
        assert bfly.e.order == 16
        an = braiding_analyze(br)
        assert an.symmetric and not an.picard
        prod = product_xmod(xm, xm)
        reps = enumerate_h1(z2, xm).representatives
        for a in reps:
            for b in reps:
                direct = h1_product(a, b, br)
                lifted = lift_along_butterfly(pair_cocycle(a, b, prod), bfly).result
                assert are_equivalent(direct, lifted) is not None

    def test_symmetric_commutativity_classwise(self, z2, braid_pairing):
        reps = enumerate_h1(z2, braid_pairing.base).representatives
        for a in reps:
            for b in reps:
                assert are_equivalent(
                    h1_product(a, b, braid_pairing), h1_product(b, a, braid_pairing)
                ) is not None

    def test_associativity_classwise(self, z2, braid_pairing, braid_shift_z2):
        for br in (braid_pairing, braid_shift_z2):
            reps = enumerate_h1(z2, br.base).representatives
            for a in reps:
                for b in reps:
                    for c in reps:
                        lhs = h1_product(h1_product(a, b, br), c, br)
                        rhs = h1_product(a, h1_product(b, c, br), br)
                        assert are_equivalent(lhs, rhs) is not None


class TestDegreeZero:
    def test_h0_unit(self, braid_pairing):
        pi0, cls = h0_product(1, 0, braid_pairing)
        pi0_, cls_ = h0_product(0, 1, braid_pairing)
        assert cls == cls_

    def test_h0_abelian(self, braid_pairing, braid_shift_z3):
        for br in (braid_pairing, braid_shift_z3):
            g0 = br.base.g0
            for u in g0.indices():
                for v in g0.indices():
                    assert h0_product(u, v, br)[1] == h0_product(v, u, br)[1]

    def test_descent_product(self, shift_z2, braid_shift_z2):
        d = Descent0((0, 0), shift_z2, (0, 0), ((0, 1), (1, 0)))
        descent0_validate(d)
        out = descent0_product(d, d, braid_shift_z2)
        assert out.g[0][1] == 0  # tau * tau = 1

    def test_trivial_descent_product(self, shift_z2, braid_shift_z2):
        d = Descent0((0, 1), shift_z2, (0, 0), ((0, -1), (-1, 0)))
        out = descent0_product(d, d, braid_shift_z2)
        assert out.u == (0, 0)
