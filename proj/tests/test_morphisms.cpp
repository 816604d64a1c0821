#include <doctest.h>

#include <set>

#include "abelkit/morphism.hpp"

using namespace abelkit;

namespace {

FgAbGroup G(const char* expr) { return parse_group(expr); }

}  // namespace

TEST_CASE("morphism validation") {
    SUBCASE("well-defined maps pass and reduce") {
        auto f = make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix{{6}});
        CHECK(f.matrix.at(0, 0) == 2);
    }
    SUBCASE("order violations are rejected") {
        // Z/2 -> Z/4 sending the generator to an element of order 4
        CHECK_THROWS_AS(make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix{{1}}),
                        InvalidMorphismError);
        // torsion cannot map onto a free generator
        CHECK_THROWS_AS(make_morphism(G("Z/2"), G("Z"), IntegerMatrix{{1}}),
                        InvalidMorphismError);
    }
    SUBCASE("shape mismatches are rejected") {
        CHECK_THROWS_AS(make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix(2, 1)),
                        InvalidMorphismError);
    }
}

TEST_CASE("composition and arithmetic") {
    auto r = make_morphism(G("Z/4"), G("Z/2"), IntegerMatrix{{1}});  // reduction
    auto d = make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix{{2}});  // doubling section-like map
    auto rd = compose(r, d);
    CHECK(rd.source == G("Z/2"));
    CHECK(rd.target == G("Z/2"));
    CHECK(rd.is_zero());  // 2 reduces to 0 mod 2

    auto dr = compose(d, r);
    CHECK(dr.matrix.at(0, 0) == 2);

    CHECK_THROWS_AS(compose(d, d), SourceTargetMismatchError);

    auto id = identity_morphism(G("Z/4"));
    CHECK(compose(id, dr) == dr);
    CHECK(compose(dr, id) == dr);
    CHECK(add_morphisms(dr, negate_morphism(dr)).is_zero());
}

TEST_CASE("application to elements") {
    auto f = make_morphism(G("Z + Z/2"), G("Z/4"), IntegerMatrix{{1, 2}});
    auto x = make_element(G("Z + Z/2"), {3, 1});
    CHECK(apply(f, x) == make_element(G("Z/4"), {1}));

    auto zero = zero_morphism(G("Z + Z/2"), G("Z/4"));
    CHECK(apply(zero, x).is_zero());
}

TEST_CASE("injectivity and surjectivity are structural") {
    auto mul2 = make_morphism(G("Z"), G("Z"), IntegerMatrix{{2}});
    CHECK(is_injective(mul2));
    CHECK_FALSE(is_surjective(mul2));

    auto reduce = make_morphism(G("Z"), G("Z/6"), IntegerMatrix{{1}});
    CHECK_FALSE(is_injective(reduce));
    CHECK(is_surjective(reduce));

    auto embed = make_morphism(G("Z/2"), G("Z/4"), IntegerMatrix{{2}});
    CHECK(is_injective(embed));
    CHECK_FALSE(is_surjective(embed));

    auto iso = make_morphism(G("Z/6"), G("Z/6"), IntegerMatrix{{5}});
    CHECK(is_injective(iso));
    CHECK(is_surjective(iso));

    CHECK(is_injective(identity_morphism(G("0"))));
    CHECK(is_surjective(zero_morphism(G("Z/3"), G("0"))));
}

TEST_CASE("hom group structure") {
    SUBCASE("cyclic cases follow the gcd rule") {
        CHECK(hom_group(G("Z/2"), G("Z/3")).size == 1);
        CHECK(hom_group(G("Z/4"), G("Z/2")).size == 2);
        CHECK(hom_group(G("Z/12"), G("Z/18")).size == 6);
        CHECK(hom_group(G("Z"), G("Z/5")).size == 5);
        CHECK(hom_group(G("Z/5"), G("Z")).size == 1);
    }
    SUBCASE("products multiply") {
        CHECK(hom_group(G("Z^2"), G("Z/3")).size == 9);
        CHECK(hom_group(G("Z/2 + Z/4"), G("Z/2 + Z/8")).size == 32);
        CHECK(hom_group(G("Z/2 + Z/2"), G("Z/2 + Z/2")).size == 16);
        CHECK(hom_group(G("Z/2 + Z/4"), G("Z/4")).size == 8);
    }
    SUBCASE("infinite cases are flagged") {
        CHECK_FALSE(hom_group(G("Z"), G("Z")).finite);
        CHECK_FALSE(hom_group(G("Z + Z/2"), G("Z + Z/4")).finite);
        CHECK(hom_group(G("Z/2"), G("Z + Z/4")).finite);
    }
    SUBCASE("generator orders are exact") {
        auto desc = hom_group(G("Z/2 + Z/4"), G("Z/4"));
        REQUIRE(desc.generators.size() == 2);
        CHECK(desc.orders[0] == 2);
        CHECK(desc.orders[1] == 4);
        CHECK(desc.generators[0].matrix.at(0, 0) == 2);
        CHECK(desc.generators[1].matrix.at(0, 1) == 1);
    }
}

TEST_CASE("hom enumeration") {
    SUBCASE("enumerates exactly the hom set, zero first") {
        auto homs = all_homs(G("Z/2 + Z/2"), G("Z/2 + Z/2"), default_hom_budget());
        REQUIRE(homs.size() == 16);
        CHECK(homs[0].is_zero());
        std::set<std::string> unique;
        for (const auto& f : homs) unique.insert(f.matrix.to_string());
        CHECK(unique.size() == 16);
    }
    SUBCASE("streams restart deterministically") {
        HomStream a(G("Z/6"), G("Z/4"), default_hom_budget());
        HomStream b(G("Z/6"), G("Z/4"), default_hom_budget());
        while (!a.done()) {
            REQUIRE_FALSE(b.done());
            CHECK(a.current() == b.current());
            a.advance();
            b.advance();
        }
        CHECK(b.done());
    }
    SUBCASE("coefficient reconstruction matches the stream") {
        HomStream st(G("Z/2 + Z/4"), G("Z/4"), default_hom_budget());
        while (!st.done()) {
            CHECK(morphism_from_coefficients(st.description(), st.coefficients()) == st.current());
            st.advance();
        }
    }
    SUBCASE("budget and infinity errors") {
        CHECK_THROWS_AS(HomStream(G("Z"), G("Z"), default_hom_budget()), InfiniteHomSetError);
        CHECK_THROWS_AS(HomStream(G("Z/2 + Z/2"), G("Z/2 + Z/2"), Int(15)), BudgetExceededError);
        CHECK_NOTHROW(HomStream(G("Z/2 + Z/2"), G("Z/2 + Z/2"), Int(16)));
    }
    SUBCASE("a hom set of size one is just the zero morphism") {
        auto homs = all_homs(G("Z/2"), G("Z/3"), default_hom_budget());
        REQUIRE(homs.size() == 1);
        CHECK(homs[0].is_zero());
    }
}

TEST_CASE("direct sum maps form a biproduct") {
    auto maps = direct_sum_maps(G("Z/4"), G("Z/6"));
    CHECK(maps.sum == G("Z/2 + Z/12"));
    CHECK(is_injective(maps.inj_a));
    CHECK(is_injective(maps.inj_b));
    CHECK(is_surjective(maps.proj_a));
    CHECK(is_surjective(maps.proj_b));

    auto mixed = direct_sum_maps(G("Z + Z/2"), G("Z/2"));
    CHECK(mixed.sum == G("Z + Z/2 + Z/2"));
    CHECK(is_injective(mixed.inj_a));

    auto with_zero = direct_sum_maps(G("0"), G("Z/5"));
    CHECK(with_zero.sum == G("Z/5"));
}
