#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/space.hpp"
#include "schur/weyl.hpp"

#include <algorithm>
#include <set>

using namespace schur;

TEST_CASE("act: identity, single letter, group law") {
    RootSystem a3(Family::A, 3);
    Root a1 = a3.simple_root(1);

    CHECK(act(a3, WeylWord{}, a1) == a1);
    CHECK(act(a3, WeylWord{{1}}, a1) == a1.negated());

    WeylWord w{{2, 1, 3, 2}};
    for (const Root& r : a3.positive_roots())
        CHECK(act(a3, w, act(a3, inverse(w), r)) == r);
}

TEST_CASE("inversion sets of short words") {
    RootSystem a2(Family::A, 2);
    CHECK(inversion_set(a2, WeylWord{}).empty());

    auto single = inversion_set(a2, WeylWord{{2}});
    REQUIRE(single.size() == 1);
    CHECK(single.front() == a2.simple_root(2));

    // longest element of A2 inverts all three positive roots
    auto all = inversion_set(a2, WeylWord{{1, 2, 1}});
    CHECK(all.size() == 3);
}

TEST_CASE("word length equals inversion count for reduced words") {
    RootSystem b3(Family::B, 3);
    WeylWord w = word_from_inversions(b3, inversion_set(b3, WeylWord{{1, 2, 3, 2, 1}}));
    CHECK(w.length() == inversion_set(b3, w).size());
}

TEST_CASE("word_from_inversions round-trips on all ideals of Gr(2,4)") {
    CominusculeSpace X = build_space(Family::A, 3, 2);
    HassePoset poset = enumerate_classes(X);
    CHECK(poset.classes.size() == 6);
    for (const SchubertClass& w : poset.classes) {
        std::vector<Root> phi = ideal_roots(X, w);
        WeylWord word = word_from_inversions(X.sys(), phi);
        std::set<std::vector<int>> want, got;
        for (const Root& r : phi) want.insert(r.coeffs);
        for (const Root& r : inversion_set(X.sys(), word)) got.insert(r.coeffs);
        CHECK(want == got);
        CHECK(word.length() == phi.size());
    }
}

TEST_CASE("word_from_inversions round-trips on every ideal of every small space") {
    std::vector<std::tuple<Family, int, int>> spaces;
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) spaces.push_back({Family::A, n, k});
    for (int n = 2; n <= 7; ++n) spaces.push_back({Family::B, n, 1});
    for (int n = 2; n <= 7; ++n) spaces.push_back({Family::C, n, n});
    for (int n = 3; n <= 7; ++n) {
        spaces.push_back({Family::D, n, 1});
        spaces.push_back({Family::D, n, n});
    }
    spaces.push_back({Family::E6, 6, 6});
    spaces.push_back({Family::E7, 7, 7});

    for (auto [f, n, k] : spaces) {
        CominusculeSpace X = build_space(f, n, k);
        HassePoset poset = enumerate_classes(X);
        for (const SchubertClass& w : poset.classes) {
            std::vector<Root> phi = ideal_roots(X, w);
            WeylWord word = word_from_inversions(X.sys(), phi);
            REQUIRE(word.length() == phi.size());
            std::set<std::vector<int>> want, got;
            for (const Root& r : phi) want.insert(r.coeffs);
            for (const Root& r : inversion_set(X.sys(), word)) got.insert(r.coeffs);
            REQUIRE(want == got);
        }
    }
}

TEST_CASE("word_from_inversions rejects non-biclosed sets with a witness") {
    RootSystem a2(Family::A, 2);
    // {a1, a1+a2} without a2: complement {a2} is closed, the set itself is
    // closed, so this IS an inversion set; {a1, a2} is not (misses a1+a2).
    std::vector<Root> bad{a2.simple_root(1), a2.simple_root(2)};
    CHECK_THROWS_WITH_AS(word_from_inversions(a2, bad),
                         doctest::Contains("is a root outside the set"), std::invalid_argument);

    std::vector<Root> good{a2.simple_root(1), a2.simple_root(1) + a2.simple_root(2)};
    CHECK(word_from_inversions(a2, good).length() == 2);

    // {a1+a2} alone: the complement {a1, a2} sums back into the set
    std::vector<Root> bad2{a2.simple_root(1) + a2.simple_root(2)};
    CHECK_THROWS_WITH_AS(word_from_inversions(a2, bad2),
                         doctest::Contains("complement violates closure"),
                         std::invalid_argument);
}

TEST_CASE("longest elements of parabolic subgroups") {
    RootSystem a1(Family::A, 1);
    CHECK(longest_element(a1, {1}).letters == std::vector<int>{1});

    RootSystem a2(Family::A, 2);
    CHECK(longest_element(a2, {1, 2}).length() == 3);

    RootSystem a3(Family::A, 3);
    CHECK(longest_element(a3, {1, 3}).length() == 2);

    // full support: inversion set is the whole positive system
    RootSystem e6(Family::E6, 6);
    WeylWord w0 = longest_element(e6, {1, 2, 3, 4, 5, 6});
    CHECK(inversion_set(e6, w0).size() == e6.positive_roots().size());
}

TEST_CASE("reflection words act as the reflection they name") {
    RootSystem c3(Family::C, 3);
    for (const Root& alpha : c3.positive_roots()) {
        WeylWord r = reflection_word(c3, alpha);
        CHECK(act(c3, r, alpha) == alpha.negated());
        // involution
        for (const Root& beta : c3.positive_roots())
            CHECK(act(c3, r, act(c3, r, beta)) == beta);
    }
}

TEST_CASE("poincare_dual on LG(5,10): involution and dimension complement") {
    CominusculeSpace X = build_space(Family::C, 5, 5);
    HassePoset poset = enumerate_classes(X);
    REQUIRE(poset.classes.size() == 32);
    for (const SchubertClass& w : poset.classes) {
        SchubertClass dual = poincare_dual(X, w);
        CHECK(dual.dim() == X.dim() - w.dim());
        CHECK(poincare_dual(X, dual) == w);
    }
}

TEST_CASE("poincare_dual maps extremes to extremes") {
    CominusculeSpace X = build_space(Family::E6, 6, 6);
    SchubertClass bottom;
    SchubertClass dual = poincare_dual(X, bottom);
    CHECK(dual.dim() == X.dim());
}

TEST_CASE("dual of the dimension-1 class of LG(5,10) has dimension 14") {
    CominusculeSpace X = build_space(Family::C, 5, 5);
    HassePoset poset = enumerate_classes(X);
    for (const SchubertClass& w : poset.classes)
        if (w.dim() == 1) CHECK(poincare_dual(X, w).dim() == 14);
}
