#include <doctest.h>

#include <algorithm>

#include "abelkit/classify.hpp"
#include "abelkit/endring.hpp"
#include "abelkit/errors.hpp"
#include "abelkit/homcalc.hpp"

using namespace abelkit;

namespace {

FgAbGroup G(const std::string& expr) { return parse_group(expr); }

bool squarefree_cyclic(const FgAbGroup& g) {
    if (g.is_zero()) return true;
    return g.free_rank == 0 && g.torsion.size() == 1 && is_squarefree(g.torsion[0]);
}

}  // namespace

TEST_CASE("ring tables reproduce morphism arithmetic") {
    FiniteRing r(G("Z/4"));
    CHECK(r.size() == 4);
    CHECK(r.is_commutative());
    CHECK(r.zero() == 0);
    // One additive generator (the identity), so index == coefficient.
    CHECK(r.one() == 1);
    CHECK(r.additive_generators() == std::vector<int>{1});
    for (int a = 0; a < r.size(); ++a) {
        for (int b = 0; b < r.size(); ++b) {
            CHECK(r.mul(a, b) == r.index_of(compose(r.element(a), r.element(b))));
            CHECK(r.add(a, b) == r.index_of(add_morphisms(r.element(a), r.element(b))));
        }
        CHECK(r.index_of(r.element(a)) == a);
        CHECK(r.add(a, r.neg(a)) == r.zero());
    }
    // Multiplication mod 4 in disguise.
    CHECK(r.mul(2, 2) == 0);
    CHECK(r.mul(3, 3) == 1);
    CHECK(r.add(3, 2) == 1);

    FiniteRing klein(G("Z/2 + Z/2"));
    CHECK(klein.size() == 16);
    CHECK_FALSE(klein.is_commutative());
    for (int a : klein.additive_generators())
        for (int b : klein.additive_generators()) {
            CHECK(klein.mul(a, b) == klein.index_of(compose(klein.element(a), klein.element(b))));
        }

    CHECK(FiniteRing(G("Z/2 + Z/4")).size() == 32);

    FiniteRing trivial(G("0"));
    CHECK(trivial.size() == 1);
    CHECK(trivial.one() == trivial.zero());

    CHECK_THROWS_AS(FiniteRing(G("Z")), InfiniteHomSetError);
    CHECK_THROWS_AS(FiniteRing(G("Z/2 + Z/4"), Int(10)), BudgetExceededError);
    CHECK_THROWS_AS(FiniteRing(G("Z/521")), BudgetExceededError);
    CHECK_THROWS_AS(FiniteRing(G("Z/4")).index_of(identity_morphism(G("Z/8"))),
                    InvalidMorphismError);
}

TEST_CASE("right annihilators come back sorted and closed") {
    FiniteRing r(G("Z/4"));
    CHECK(right_annihilator(r, 0).elements == std::vector<int>{0, 1, 2, 3});
    CHECK(right_annihilator(r, 1).elements == std::vector<int>{0});
    CHECK(right_annihilator(r, 2).elements == std::vector<int>{0, 2});
    CHECK(right_annihilator(r, 3).elements == std::vector<int>{0});
    CHECK(right_annihilator(r, 2).contains(2));
    CHECK_FALSE(right_annihilator(r, 2).contains(1));

    FiniteRing klein(G("Z/2 + Z/2"));
    for (int a = 0; a < klein.size(); ++a) {
        RightIdeal ann = right_annihilator(klein, a);
        CHECK(std::is_sorted(ann.elements.begin(), ann.elements.end()));
        CHECK(ann.contains(klein.zero()));
        // Spot check the definition itself.
        for (int s : ann.elements) CHECK(klein.mul(a, s) == klein.zero());
    }
    // A matrix ring over a field is semisimple: annihilator sizes multiply out
    // to |Hom(M, Ker a)|.
    CHECK(right_annihilator(klein, klein.one()).elements.size() == 1);
    CHECK(right_annihilator(klein, 0).elements.size() == 16);
}

TEST_CASE("ring-side strong self-Rickart verdicts") {
    CHECK(is_strongly_self_rickart_ring(FiniteRing(G("Z/2"))).holds);
    CHECK(is_strongly_self_rickart_ring(FiniteRing(G("0"))).holds);

    PropertyReport six = is_strongly_self_rickart_ring(FiniteRing(G("Z/6")));
    CHECK(six.holds);
    CHECK(six.work == 6);
    CHECK(six.subject == "End(Z/6)");

    // Multiplication by 2 on Z/4 annihilates {0, 2}, which contains no
    // idempotent acting as identity on it.
    FiniteRing four(G("Z/4"));
    PropertyReport r4 = is_strongly_self_rickart_ring(four);
    CHECK_FALSE(r4.holds);
    REQUIRE(r4.witness.has_value());
    CHECK(four.index_of(*r4.witness) == 2);
    CHECK(r4.witness->matrix.at(0, 0) == 2);
    CHECK(r4.witness_property == "annihilator-idempotent-generated");
    CHECK(r4.work == 3);

    // The 2x2 matrix ring over the field with two elements: annihilators are
    // idempotent generated (semisimple) but not two-sided.
    FiniteRing klein(G("Z/2 + Z/2"));
    PropertyReport rk = is_strongly_self_rickart_ring(klein);
    CHECK_FALSE(rk.holds);
    REQUIRE(rk.witness.has_value());
    CHECK(rk.witness_property == "annihilator-left-invariant");
    CHECK(rk.work == 2);
    CHECK(klein.index_of(*rk.witness) == 1);

    CHECK_FALSE(is_strongly_self_rickart_ring(FiniteRing(G("Z/2 + Z/4"))).holds);

    for (const FgAbGroup& m : enumerate_groups(Int(12))) {
        CHECK(is_strongly_self_rickart_ring(FiniteRing(m)).holds == squarefree_cyclic(m));
    }
}

TEST_CASE("semicentral classification matches the morphism path") {
    for (const char* expr : {"Z/6", "Z/12", "Z/2 + Z/4", "Z/2 + Z/2"}) {
        FiniteRing r(G(expr));
        std::vector<int> idem = r.idempotents();
        CHECK(idem.size() == idempotent_endomorphisms(r.module()).size());
        for (int e : idem) {
            Morphism em = r.element(e);
            CHECK(r.left_semicentral(e) == is_left_semicentral(em));
            CHECK(r.right_semicentral(e) == is_right_semicentral(em));
            CHECK(r.is_idempotent(e));
        }
        int non_idem = -1;
        for (int a = 0; a < r.size() && non_idem < 0; ++a)
            if (!r.is_idempotent(a)) non_idem = a;
        REQUIRE(non_idem >= 0);
        CHECK_THROWS_AS(r.left_semicentral(non_idem), InvalidMorphismError);
        CHECK_THROWS_AS(r.right_semicentral(non_idem), InvalidMorphismError);
    }
}

TEST_CASE("opposite ring reverses multiplication only") {
    FiniteRing six(G("Z/6"));
    FiniteRing six_op = six.opposite();
    CHECK(six_op.name() == "End(Z/6)^op");
    CHECK(six_op.opposite().name() == "End(Z/6)");
    for (int a = 0; a < six.size(); ++a)
        for (int b = 0; b < six.size(); ++b) {
            CHECK(six_op.mul(a, b) == six.mul(b, a));
            CHECK(six_op.add(a, b) == six.add(a, b));
        }
    CHECK(is_strongly_self_rickart_ring(six_op).holds);

    FiniteRing klein(G("Z/2 + Z/2"));
    FiniteRing klein_op = klein.opposite();
    for (int a = 0; a < klein.size(); ++a) {
        for (int b = 0; b < klein.size(); ++b) CHECK(klein_op.mul(a, b) == klein.mul(b, a));
        if (klein.is_idempotent(a)) {
            CHECK(klein.left_semicentral(a) == klein_op.right_semicentral(a));
            CHECK(klein.right_semicentral(a) == klein_op.left_semicentral(a));
        }
    }
}

TEST_CASE("module and ring routes to the strong verdict agree") {
    TransferReport six = verify_endring_transfer(G("Z/6"));
    CHECK(six.module_strongly);
    CHECK(six.ring_strongly);
    CHECK(six.kernels_cyclic);
    CHECK(six.quasi_retractable);
    CHECK(six.via_kernels);
    CHECK(six.via_retractability);
    CHECK(six.agree);
    REQUIRE(six.opposite_check.has_value());
    CHECK(*six.opposite_check);
    CHECK(six.ring_size == 6);

    TransferReport four = verify_endring_transfer(G("Z/4"));
    CHECK_FALSE(four.module_strongly);
    CHECK_FALSE(four.ring_strongly);
    CHECK(four.kernels_cyclic);       // every kernel of an endomorphism is cyclic here
    CHECK(four.quasi_retractable);    // finite groups always are
    CHECK_FALSE(four.via_kernels);    // the ring condition already fails
    CHECK(four.agree);

    TransferReport klein = verify_endring_transfer(G("Z/2 + Z/2"));
    CHECK_FALSE(klein.module_strongly);
    CHECK_FALSE(klein.ring_strongly);
    CHECK(klein.agree);
    CHECK_FALSE(klein.opposite_check.has_value());  // noncommutative: no opposite run

    for (const FgAbGroup& m : enumerate_groups(Int(16))) {
        TransferReport rep = verify_endring_transfer(m);
        CHECK(rep.agree);
        CHECK(rep.module_strongly == squarefree_cyclic(m));
        CHECK(rep.kernels_cyclic);
        CHECK(rep.quasi_retractable);
    }
}
