#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/roots.hpp"

#include <algorithm>
#include <set>

using namespace schur;

namespace {

Root simple_sum(const RootSystem& sys, std::initializer_list<int> nodes) {
    Root r;
    r.coeffs.assign(static_cast<std::size_t>(sys.rank()), 0);
    for (int j : nodes) r.coeffs[static_cast<std::size_t>(j) - 1] += 1;
    return r;
}

} // namespace

TEST_CASE("positive root counts match the closed formulas") {
    CHECK(RootSystem(Family::A, 3).positive_roots().size() == 6);
    CHECK(RootSystem(Family::A, 7).positive_roots().size() == 28);
    CHECK(RootSystem(Family::B, 4).positive_roots().size() == 16);
    CHECK(RootSystem(Family::C, 5).positive_roots().size() == 25);
    CHECK(RootSystem(Family::D, 6).positive_roots().size() == 30);
    CHECK(RootSystem(Family::E6, 6).positive_roots().size() == 36);
    CHECK(RootSystem(Family::E7, 7).positive_roots().size() == 63);
}

TEST_CASE("family and rank bounds are enforced") {
    CHECK_THROWS_AS(RootSystem(Family::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Family::E6, 7), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Family::E7, 6), std::invalid_argument);
}

TEST_CASE("root addition oracle") {
    RootSystem a3(Family::A, 3);
    auto s = a3.add_roots(a3.simple_root(1), a3.simple_root(2));
    REQUIRE(s.has_value());
    CHECK(s->coeffs == std::vector<int>{1, 1, 0});
    CHECK_FALSE(a3.add_roots(a3.simple_root(1), a3.simple_root(3)).has_value());

    RootSystem c2(Family::C, 2);
    auto t = c2.add_roots(c2.simple_root(1), simple_sum(c2, {1, 2}));
    REQUIRE(t.has_value());
    CHECK(t->coeffs == std::vector<int>{2, 1});

    // alpha + (-alpha) is not a root
    CHECK_FALSE(a3.add_roots(a3.simple_root(1), a3.simple_root(1).negated()).has_value());
}

TEST_CASE("entrywise sums agree with the oracle on every pair") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        RootSystem sys(f, f == Family::A ? 4 : 4);
        for (const Root& x : sys.positive_roots())
            for (const Root& y : sys.positive_roots()) {
                auto s = sys.add_roots(x, y);
                if (s) {
                    Root manual = x + y;
                    CHECK(s->coeffs == manual.coeffs);
                }
            }
    }
}

TEST_CASE("every positive non-simple root lowers to a positive root by a simple step") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 7},
                                                           {Family::B, 5},
                                                           {Family::C, 5},
                                                           {Family::D, 7},
                                                           {Family::E6, 6},
                                                           {Family::E7, 7}}) {
        RootSystem sys(f, n);
        for (const Root& alpha : sys.positive_roots()) {
            if (alpha.height() == 1) continue;
            bool found = false;
            for (int j = 1; j <= n && !found; ++j)
                if (sys.is_positive_root(alpha - sys.simple_root(j))) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("simple reflections") {
    RootSystem a2(Family::A, 2);
    CHECK(a2.reflect(1, a2.simple_root(1)) == a2.simple_root(1).negated());
    CHECK(a2.reflect(1, a2.simple_root(2)) == simple_sum(a2, {1, 2}));

    // involution, and permutation of the full root set
    for (Family f : {Family::B, Family::E6}) {
        RootSystem sys(f, f == Family::B ? 4 : 6);
        for (int j = 1; j <= sys.rank(); ++j) {
            std::set<std::vector<int>> all, image;
            for (const Root& r : sys.positive_roots()) {
                all.insert(r.coeffs);
                all.insert(r.negated().coeffs);
            }
            for (const auto& coeffs : all) {
                Root r{coeffs};
                Root s = sys.reflect(j, r);
                CHECK(sys.reflect(j, s) == r);
                image.insert(s.coeffs);
            }
            CHECK(all == image);
        }
    }
}

TEST_CASE("cominuscule nodes per family") {
    CHECK(RootSystem(Family::A, 3).cominuscule_nodes() == std::vector<int>{1, 2, 3});
    CHECK(RootSystem(Family::A, 8).cominuscule_nodes() ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    for (int n = 2; n <= 8; ++n)
        CHECK(RootSystem(Family::B, n).cominuscule_nodes() == std::vector<int>{1});
    for (int n = 2; n <= 8; ++n)
        CHECK(RootSystem(Family::C, n).cominuscule_nodes() == std::vector<int>{n});
    for (int n = 4; n <= 8; ++n)
        CHECK(RootSystem(Family::D, n).cominuscule_nodes() == std::vector<int>{1, n - 1, n});
    CHECK(RootSystem(Family::D, 3).cominuscule_nodes() == std::vector<int>{1, 2, 3});
    CHECK(RootSystem(Family::E6, 6).cominuscule_nodes() == std::vector<int>{1, 6});
    CHECK(RootSystem(Family::E7, 7).cominuscule_nodes() == std::vector<int>{7});
}

TEST_CASE("highest roots") {
    RootSystem c5(Family::C, 5);
    CHECK(c5.highest_root().coeffs == std::vector<int>{2, 2, 2, 2, 1});
    RootSystem e6(Family::E6, 6);
    CHECK(e6.highest_root().coeffs == std::vector<int>{1, 2, 2, 3, 2, 1});
    RootSystem e7(Family::E7, 7);
    CHECK(e7.highest_root().coeffs == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    RootSystem b4(Family::B, 4);
    CHECK(b4.highest_root().coeffs == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("stored roots are genuine and never mixed-sign") {
    RootSystem e7(Family::E7, 7);
    for (const Root& r : e7.positive_roots()) {
        CHECK(r.is_positive());
        CHECK(e7.is_root(r));
        CHECK(e7.is_root(r.negated()));
    }
}
