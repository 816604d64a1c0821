#include <doctest.h>

#include <algorithm>

#include "abelkit/deciders.hpp"
#include "abelkit/errors.hpp"

using namespace abelkit;

namespace {

FgAbGroup G(const char* expr) { return parse_group(expr); }

bool squarefree_cyclic(const FgAbGroup& g) {
    if (g.free_rank != 0 || g.torsion.size() > 1) return false;
    if (g.torsion.empty()) return true;
    Int n = g.torsion[0];
    for (Int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

bool finite_cyclic(const FgAbGroup& g) { return g.free_rank == 0 && g.torsion.size() <= 1; }

}  // namespace

TEST_CASE("self scans pin the classification witnesses") {
    SUBCASE("multiplication by two sinks Z/4") {
        auto r = is_rickart(G("Z/4"), G("Z/4"));
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->matrix.at(0, 0) == 2);
        CHECK(r.witness_property == "kernel-splits");
        CHECK(r.work == 3);  // after the zero morphism and the identity
        CHECK_FALSE(is_strongly_rickart(G("Z/4"), G("Z/4")).holds);
        CHECK_FALSE(is_dual_rickart(G("Z/4"), G("Z/4")).holds);
        CHECK(is_dual_rickart(G("Z/4"), G("Z/4")).witness_property == "image-splits");
    }
    SUBCASE("a squarefree cyclic group passes everything") {
        for (const char* e : {"Z/6", "Z/2", "Z/30", "0"}) {
            CHECK(is_rickart(G(e), G(e)).holds);
            CHECK(is_strongly_rickart(G(e), G(e)).holds);
            CHECK(is_dual_rickart(G(e), G(e)).holds);
            CHECK(is_dual_strongly_rickart(G(e), G(e)).holds);
        }
        CHECK(is_rickart(G("Z/6"), G("Z/6")).work == 6);  // full sweep of End
    }
    SUBCASE("an elementary square is plain but not strongly") {
        auto g = G("Z/2 + Z/2");
        CHECK(is_rickart(g, g).holds);
        CHECK(is_dual_rickart(g, g).holds);

        auto s = is_strongly_rickart(g, g);
        CHECK_FALSE(s.holds);
        CHECK(s.witness_property == "kernel-fully-invariant");
        REQUIRE(s.witness.has_value());
        CHECK(is_section(kernel(*s.witness).embedding).has_value());
        CHECK_FALSE(is_fully_invariant(kernel(*s.witness)));

        auto d = is_dual_strongly_rickart(g, g);
        CHECK_FALSE(d.holds);
        CHECK(d.witness_property == "image-fully-invariant");
        REQUIRE(d.witness.has_value());
        CHECK_FALSE(is_fully_invariant(image(*d.witness)));
    }
}

TEST_CASE("pair scans handle one-sided infinite groups") {
    SUBCASE("nothing maps out of torsion into free, so the scan is vacuous") {
        CHECK(is_rickart(G("Z/4"), G("Z")).holds);
        CHECK(is_strongly_rickart(G("Z/4"), G("Z")).holds);
        CHECK(is_dual_rickart(G("Z/4"), G("Z")).holds);
        CHECK(is_strongly_rickart(G("Z/4"), G("Z")).work == 1);
    }
    SUBCASE("kernels of maps out of Z are never summands") {
        auto r = is_rickart(G("Z"), G("Z/4"));
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->matrix.at(0, 0) == 1);  // kernel 4Z is not a summand of Z
        CHECK(r.work == 2);
    }
    SUBCASE("images inside Z/4 must avoid the middle") {
        auto d = is_dual_rickart(G("Z"), G("Z/4"));
        CHECK_FALSE(d.holds);
        REQUIRE(d.witness.has_value());
        CHECK(d.witness->matrix.at(0, 0) == 2);
        CHECK(d.witness_property == "image-splits");
        CHECK(d.work == 3);  // the full image at coefficient one still splits
    }
    SUBCASE("mixed targets go through the generic path") {
        CHECK(is_rickart(G("Z/2"), G("Z + Z/2")).holds);
        CHECK(is_dual_rickart(G("Z/2"), G("Z + Z/2")).holds);
        CHECK(is_dual_strongly_rickart(G("Z/2"), G("Z + Z/2")).holds);
    }
    SUBCASE("infinite endomorphism rings refuse enumeration") {
        CHECK_THROWS_AS(is_strongly_rickart(G("Z"), G("Z")), InfiniteHomSetError);
        CHECK_THROWS_AS(is_rickart(G("Z^2"), G("Z")), InfiniteHomSetError);
    }
    SUBCASE("tight budgets abort instead of truncating") {
        DeciderConfig cfg;
        cfg.hom_budget = 10;
        CHECK_THROWS_AS(is_rickart(G("Z/2 + Z/4"), G("Z/2 + Z/4"), cfg), BudgetExceededError);
    }
}

TEST_CASE("idempotent and summand inventories match the catalog") {
    SUBCASE("Z/2 + Z/4") {
        auto m = G("Z/2 + Z/4");
        CHECK(hom_group(m, m).size == 32);
        auto idem = idempotent_endomorphisms(m);
        CHECK(idem.size() == 10);
        CHECK(idem.front().matrix.is_zero());
        for (const auto& e : idem) CHECK(compose(e, e) == e);
        CHECK(direct_summands(m).size() == 6);
    }
    SUBCASE("Z/2 + Z/2") {
        auto m = G("Z/2 + Z/2");
        CHECK(hom_group(m, m).size == 16);
        CHECK(idempotent_endomorphisms(m).size() == 8);
        CHECK(direct_summands(m).size() == 5);
    }
    SUBCASE("summand embeddings split and come ordered") {
        auto sums = direct_summands(G("Z/12"));
        CHECK(sums.size() == 4);  // 0, Z/3, Z/4, Z/12
        for (std::size_t i = 0; i < sums.size(); ++i) {
            CHECK(is_section(sums[i].embedding).has_value());
            if (i > 0) CHECK(sums[i - 1].element_set.size() <= sums[i].element_set.size());
        }
    }
}

TEST_CASE("intersection and sum closure of summands") {
    SUBCASE("the mixed two-generator group fails both") {
        auto ssip = has_ssip(G("Z/2 + Z/4"));
        CHECK_FALSE(ssip.holds);
        REQUIRE(ssip.witness.has_value());
        CHECK(ssip.witness_property == "section");
        CHECK_FALSE(is_section(*ssip.witness).has_value());

        auto sssp = has_sssp(G("Z/2 + Z/4"));
        CHECK_FALSE(sssp.holds);
        REQUIRE(sssp.witness.has_value());
        CHECK_FALSE(is_section(*sssp.witness).has_value());
    }
    SUBCASE("semisimple and cyclic groups are closed both ways") {
        for (const char* e : {"Z/2 + Z/2", "Z/12", "Z/2^3", "Z/8", "0"}) {
            CHECK(has_ssip(G(e)).holds);
            CHECK(has_sssp(G(e)).holds);
        }
    }
}

TEST_CASE("semicentral and central idempotent checks") {
    SUBCASE("coprime projections are two-sided") {
        for (Int c : {Int(3), Int(4)}) {
            auto e = make_morphism(G("Z/6"), G("Z/6"), IntegerMatrix{{c}});
            CHECK(is_left_semicentral(e));
            CHECK(is_right_semicentral(e));
            CHECK(is_central_endomorphism(e));
        }
    }
    SUBCASE("a projection with entangled halves is neither") {
        auto e = make_morphism(G("Z/2 + Z/4"), G("Z/2 + Z/4"), IntegerMatrix{{1, 0}, {0, 0}});
        CHECK(compose(e, e) == e);
        CHECK_FALSE(is_left_semicentral(e));
        CHECK_FALSE(is_right_semicentral(e));
        CHECK_FALSE(is_central_endomorphism(e));
    }
    SUBCASE("trivial idempotents are always central") {
        auto m = G("Z/2 + Z/4");
        CHECK(is_central_endomorphism(identity_morphism(m)));
        CHECK(is_central_endomorphism(zero_morphism(m, m)));
        CHECK(is_left_semicentral(identity_morphism(m)));
        CHECK(is_right_semicentral(zero_morphism(m, m)));
    }
    SUBCASE("non-idempotents and non-endomorphisms are rejected") {
        auto f = make_morphism(G("Z/4"), G("Z/4"), IntegerMatrix{{2}});
        CHECK_THROWS_AS(is_left_semicentral(f), InvalidMorphismError);
        auto g = make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix{{2}});
        CHECK_THROWS_AS(is_right_semicentral(g), InvalidMorphismError);
    }
}

TEST_CASE("endomorphism ring commutativity") {
    SUBCASE("cyclic groups commute") {
        CHECK(is_end_ring_abelian(G("Z/8")).holds);
        CHECK(is_end_ring_abelian(G("Z/520")).holds);  // above table size
        CHECK(is_end_ring_abelian(G("0")).holds);
    }
    SUBCASE("a noncyclic finite group has a non-central projection") {
        for (const char* e : {"Z/2 + Z/2", "Z/2 + Z/4", "Z/3 + Z/3"}) {
            auto r = is_end_ring_abelian(G(e));
            CHECK_FALSE(r.holds);
            REQUIRE(r.witness.has_value());
            CHECK(compose(*r.witness, *r.witness) == *r.witness);
            CHECK_FALSE(is_central_endomorphism(*r.witness));
            CHECK(r.witness_property == "central");
        }
    }
    SUBCASE("infinite groups are settled structurally") {
        CHECK(is_end_ring_abelian(G("Z")).holds);
        for (const char* e : {"Z^2", "Z + Z/2", "Z^3 + Z/6"}) {
            auto r = is_end_ring_abelian(G(e));
            CHECK_FALSE(r.holds);
            REQUIRE(r.witness.has_value());
            CHECK_FALSE(is_central_endomorphism(*r.witness));
        }
    }
}

TEST_CASE("weak duo matches cyclicity at desk scale") {
    SUBCASE("finite sweep") {
        for (const FgAbGroup& m : enumerate_groups(12))
            CHECK(is_weak_duo(m).holds == finite_cyclic(m));
    }
    SUBCASE("failure witnesses are honest") {
        auto r = is_weak_duo(G("Z/2 + Z/4"));
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness.has_value());
        CHECK(compose(*r.witness, *r.witness) == *r.witness);
        CHECK_FALSE(is_fully_invariant(image(*r.witness)));
        CHECK(r.witness_property == "image-fully-invariant");
    }
    SUBCASE("infinite groups") {
        CHECK(is_weak_duo(G("Z")).holds);
        for (const char* e : {"Z^2", "Z + Z/2"}) {
            auto r = is_weak_duo(G(e));
            CHECK_FALSE(r.holds);
            REQUIRE(r.witness.has_value());
            CHECK_FALSE(is_fully_invariant(image(*r.witness)));
        }
    }
    SUBCASE("large cyclic group through the generic path") {
        CHECK(is_weak_duo(G("Z/520")).holds);
    }
}

TEST_CASE("quasi retractability of finite groups") {
    // Kernels embed back and quotients map back for every finite group here;
    // the point of the sweep is that the scans agree with that.
    for (const FgAbGroup& m : enumerate_groups(16)) {
        CHECK(is_k_quasi_retractable(m).holds);
        CHECK(is_c_quasi_coretractable(m).holds);
    }
    CHECK(is_k_quasi_retractable(G("Z/520")).holds);
    CHECK(is_c_quasi_coretractable(G("Z/520")).holds);
}

TEST_CASE("decider sweep stays consistent at paranoid settings") {
    auto groups = enumerate_groups(8);
    for (const FgAbGroup& m : groups) {
        for (const FgAbGroup& n : groups) {
            auto r = is_rickart(m, n);
            auto s = is_strongly_rickart(m, n);
            auto d = is_dual_rickart(m, n);
            auto ds = is_dual_strongly_rickart(m, n);
            if (s.holds) CHECK(r.holds);
            if (ds.holds) CHECK(d.holds);
            if (!r.holds) CHECK_FALSE(s.holds);
            if (!d.holds) CHECK_FALSE(ds.holds);
        }
        CHECK(is_strongly_rickart(m, m).holds == squarefree_cyclic(m));
    }
}

TEST_CASE("subgroup analyzer facts agree with the calculus") {
    auto m = G("Z/2 + Z/4");
    SubgroupAnalyzer analyzer(m);

    for (const Subobject& s : subgroups_of(m)) {
        SmallBitset bits = analyzer.bits_for(s.element_set);
        const auto& fx = analyzer.facts(bits);
        CHECK(subobjects_equal(fx.sub, s));
        CHECK(fx.summand == is_section(s.embedding).has_value());
        CHECK(fx.fully_invariant == is_fully_invariant(s));

        const auto& qf = analyzer.quotient_facts(bits);
        CHECK(qf.splits == fx.summand);
        CHECK(analyzer.quotient_fully_coinvariant(bits) ==
              is_fully_coinvariant(cokernel(s.embedding).projection));
    }

    // The socle is invariant but essential over the Z/4 half.
    std::vector<GroupElement> socle;
    for (const GroupElement& x : elements(m))
        if (add(x, x).is_zero()) socle.push_back(x);
    std::sort(socle.begin(), socle.end());
    SmallBitset bits = analyzer.bits_for(socle);
    CHECK(socle.size() == 4);
    CHECK(analyzer.facts(bits).fully_invariant);
    CHECK_FALSE(analyzer.facts(bits).summand);
    CHECK(analyzer.quotient_facts(bits).group == G("Z/2"));
    CHECK(analyzer.quotient_fully_coinvariant(bits));
}
