#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/rigidity.hpp"
#include "schur/translate.hpp"

#include <algorithm>
#include <set>

using namespace schur;

namespace {

PartitionIndex gr(int i, int N, std::vector<int> parts) {
    return PartitionIndex{PartitionFamily::Gr, i, N, std::move(parts)};
}
PartitionIndex lg(int n, std::vector<int> parts) {
    return PartitionIndex{PartitionFamily::LG, n, 2 * n, std::move(parts)};
}
PartitionIndex sp(int n, std::vector<int> parts) {
    return PartitionIndex{PartitionFamily::Spinor, n, 2 * n, std::move(parts)};
}

} // namespace

TEST_CASE("validation names the violated rule") {
    CHECK_THROWS_WITH_AS(validate(gr(3, 8, {1, 1, 2})), doctest::Contains("strictly-increasing"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(gr(3, 8, {0, 1, 2})), doctest::Contains("range"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(gr(3, 8, {1, 2})), doctest::Contains("length"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(lg(3, {1, 2, 6})), doctest::Contains("symmetric-occupancy"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(sp(3, {1, 2, 6})), doctest::Contains("symmetric-occupancy"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(sp(3, {1, 2, 4})), doctest::Contains("even-parity"),
                         std::invalid_argument);
    CHECK_NOTHROW(validate(sp(3, {1, 4, 5})));
}

TEST_CASE("reference dictionary rows") {
    // Gr(5,13)
    AJInvariant aj = partition_to_aj(gr(5, 13, {3, 4, 7, 11, 12}));
    CHECK(aj == AJInvariant{2, {2, 3, 7, 9, 12}});
    CHECK(aj_to_partition(PartitionFamily::Gr, 5, 13, aj).parts ==
          std::vector<int>{3, 4, 7, 11, 12});

    // LG(5,10) rows
    CHECK(partition_to_aj(lg(5, {1, 3, 5, 7, 9})) == AJInvariant{3, {1, 2, 3, 4}});
    CHECK(partition_to_aj(lg(5, {2, 5, 7, 8, 10})) == AJInvariant{3, {1, 2, 4}});
    CHECK(aj_to_partition(PartitionFamily::LG, 5, 10, AJInvariant{1, {3}}).parts ==
          std::vector<int>{3, 4, 5, 9, 10});

    // S_6 rows
    CHECK(partition_to_aj(sp(6, {1, 3, 5, 6, 9, 11})) == AJInvariant{2, {1, 2, 4, 5}});
    CHECK(partition_to_aj(sp(6, {2, 4, 7, 8, 10, 12})) == AJInvariant{3, {1, 2, 4, 5}});
    CHECK(aj_to_partition(PartitionFamily::Spinor, 6, 12, AJInvariant{1, {4}}).parts ==
          std::vector<int>{3, 4, 5, 6, 11, 12});
    CHECK(aj_to_partition(PartitionFamily::Spinor, 6, 12, AJInvariant{0, {5}}).parts ==
          std::vector<int>{2, 3, 4, 5, 7, 12});
}

TEST_CASE("spinor block decomposition examples for n = 5") {
    auto blocks = spinor_blocks(sp(5, {2, 3, 4, 6, 10}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::pair<int, int>{0, 3}); // (2,3,4,6)
    CHECK(blocks[1] == std::pair<int, int>{4, 4}); // (10)

    blocks = spinor_blocks(sp(5, {1, 2, 5, 7, 8}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::pair<int, int>{0, 1}); // (1,2)
    CHECK(blocks[1] == std::pair<int, int>{2, 4}); // (5,7,8)
}

TEST_CASE("spinor r values") {
    CHECK(spinor_r(sp(6, {1, 2, 3, 5, 7, 9})) == 1);
    CHECK(spinor_r(sp(6, {2, 3, 4, 5, 7, 12})) == 1);
    CHECK(spinor_r(sp(6, {1, 2, 3, 6, 8, 9})) == 0);
    CHECK(spinor_r(sp(6, {2, 4, 7, 8, 10, 12})) == 2);
    CHECK(spinor_r(6, AJInvariant{0, {5}}) == 1);  // n-1 in J
    CHECK(spinor_r(6, AJInvariant{1, {4}}) == 1);
}

TEST_CASE("partition criteria on reference examples") {
    // flexible: nu gap 1 / interior count 1
    CHECK_FALSE(rigid_by_partition(gr(5, 13, {3, 4, 7, 11, 12})));
    CHECK_FALSE(rigid_by_partition(gr(2, 4, {2, 4})));
    // rigid rows
    CHECK(rigid_by_partition(lg(5, {1, 2, 3, 6, 7})));
    CHECK(rigid_by_partition(sp(6, {2, 3, 4, 5, 7, 12})));
    // flexible rows
    CHECK_FALSE(rigid_by_partition(lg(5, {2, 5, 7, 8, 10})));
    CHECK_FALSE(rigid_by_partition(sp(6, {1, 2, 3, 4, 7, 8})));
    // extremal partitions are rigid
    CHECK(rigid_by_partition(gr(2, 4, {1, 2})));
    CHECK(rigid_by_partition(gr(2, 4, {3, 4})));
    CHECK(rigid_by_partition(lg(5, {1, 2, 3, 4, 5})));
    CHECK(rigid_by_partition(sp(5, {5, 7, 8, 9, 10}))); // top of S_5 (odd n)
}

TEST_CASE("exhaustive round trips: partition <-> (a, J)") {
    auto sweep = [](PartitionFamily f, int length, int bound) {
        for (const PartitionIndex& p : all_partitions(f, length, bound)) {
            if (is_bottom(p) || is_top(p)) {
                CHECK_THROWS_AS(partition_to_aj(p), std::invalid_argument);
                continue;
            }
            AJInvariant aj = partition_to_aj(p);
            PartitionIndex back = aj_to_partition(f, length, bound, aj);
            CHECK(back == p);
        }
    };
    for (int n = 1; n <= 7; ++n)
        for (int i = 1; i <= n; ++i) sweep(PartitionFamily::Gr, i, n + 1);
    for (int n = 2; n <= 6; ++n) sweep(PartitionFamily::LG, n, 2 * n);
    for (int n = 3; n <= 7; ++n) sweep(PartitionFamily::Spinor, n, 2 * n);
}

TEST_CASE("dictionary count equals class count") {
    CHECK(all_partitions(PartitionFamily::Gr, 2, 4).size() == 6);
    CHECK(all_partitions(PartitionFamily::LG, 5, 10).size() == 32);
    CHECK(all_partitions(PartitionFamily::Spinor, 6, 12).size() == 32);
    CHECK(all_partitions(PartitionFamily::Spinor, 5, 10).size() == 16);
}

TEST_CASE("master cross-check: dictionary (a, J) equals the stabilizer computation") {
    for (auto [f, n, k] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 7, 3}, {Family::A, 6, 2}, {Family::C, 6, 6}, {Family::D, 7, 7}}) {
        CominusculeSpace X = build_space(f, n, k);
        HassePoset poset = enumerate_classes(X);
        for (std::size_t c = 0; c < poset.classes.size(); ++c) {
            if (poset.info[c].extremal) continue;
            auto p = partition_of_class(X, poset.classes[c]);
            REQUIRE(p.has_value());
            CHECK(partition_to_aj(*p) == compute_aj(X, poset.classes[c]));
            CHECK(class_of_partition(X, *p) == poset.classes[c]);
        }
    }
}

TEST_CASE("quadric criterion") {
    CHECK_FALSE(quadric_rigid(QuadricKind::odd, 5, 4));   // Q^9, d = 4
    CHECK(quadric_rigid(QuadricKind::even, 4, 4, QuadricBranch::plus));  // Q^8 middle
    CHECK(quadric_rigid(QuadricKind::even, 4, 4, QuadricBranch::minus));
    CHECK(quadric_rigid(QuadricKind::even, 4, 0));
    CHECK(quadric_rigid(QuadricKind::odd, 5, 9));
    CHECK_FALSE(quadric_rigid(QuadricKind::even, 4, 3));
    CHECK_THROWS_AS(quadric_rigid(QuadricKind::odd, 5, 10), std::invalid_argument);
}

TEST_CASE("criterion equivalence: partition rules against the root-level check") {
    for (auto [f, n, k] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 5, 2}, {Family::A, 7, 4}, {Family::C, 5, 5},
             {Family::D, 6, 6}, {Family::D, 7, 7}}) {
        CominusculeSpace X = build_space(f, n, k);
        HassePoset poset = enumerate_classes(X);
        classify(X, poset);
        for (std::size_t c = 0; c < poset.classes.size(); ++c) {
            auto p = partition_of_class(X, poset.classes[c]);
            REQUIRE(p.has_value());
            CHECK(rigid_by_partition(*p) == poset.info[c].rigid);
        }
    }
}

TEST_CASE("LG <-> spinor bijection preserves order and rigidity") {
    for (int n = 2; n <= 6; ++n) {
        CominusculeSpace S = build_space(Family::D, n + 1, n + 1);
        CominusculeSpace L = build_space(Family::C, n, n);
        HassePoset sp_poset = enumerate_classes(S);
        HassePoset lg_poset = enumerate_classes(L);
        classify(S, sp_poset);
        classify(L, lg_poset);
        REQUIRE(sp_poset.classes.size() == lg_poset.classes.size());

        std::vector<int> image(sp_poset.classes.size());
        std::set<int> hit;
        for (std::size_t c = 0; c < sp_poset.classes.size(); ++c) {
            auto p = partition_of_class(S, sp_poset.classes[c]);
            REQUIRE(p.has_value());
            // the block meeting {n, n+1} exists for every non-extremal class
            if (!is_bottom(*p) && !is_top(*p)) {
                auto blocks = spinor_blocks(*p);
                int r = spinor_r(*p);
                auto [first, last] = blocks[blocks.size() - 1 - static_cast<std::size_t>(r)];
                bool meets = false;
                for (int t = first; t <= last; ++t)
                    if (p->parts[static_cast<std::size_t>(t)] == n + 1 ||
                        p->parts[static_cast<std::size_t>(t)] == n + 2)
                        meets = true;
                CHECK(meets);
            }
            PartitionIndex q = lg_spinor_map(*p);
            int d = lg_poset.index_of(class_of_partition(L, q));
            REQUIRE(d >= 0);
            image[c] = d;
            hit.insert(d);
            CHECK(sp_poset.info[c].rigid == lg_poset.info[static_cast<std::size_t>(d)].rigid);
        }
        CHECK(hit.size() == sp_poset.classes.size()); // bijection

        // order embedding in both directions
        for (std::size_t a = 0; a < sp_poset.classes.size(); ++a)
            for (std::size_t b = 0; b < sp_poset.classes.size(); ++b) {
                const auto& ia = sp_poset.classes[a].ideal;
                const auto& ib = sp_poset.classes[b].ideal;
                bool le_sp = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
                const auto& ja = lg_poset.classes[static_cast<std::size_t>(image[a])].ideal;
                const auto& jb = lg_poset.classes[static_cast<std::size_t>(image[b])].ideal;
                bool le_lg = std::includes(jb.begin(), jb.end(), ja.begin(), ja.end());
                CHECK(le_sp == le_lg);
            }
    }
}

TEST_CASE("lg_spinor_map on the reference table rows") {
    CHECK(lg_spinor_map(sp(6, {2, 3, 4, 5, 7, 12})).parts == std::vector<int>{2, 3, 4, 5, 10});
    CHECK(lg_spinor_map(sp(6, {1, 2, 3, 4, 5, 6})).parts == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(lg_spinor_map(sp(6, {7, 8, 9, 10, 11, 12})).parts == std::vector<int>{6, 7, 8, 9, 10});
}

TEST_CASE("incidence descriptions") {
    {
        CominusculeSpace X = build_space(Family::A, 12, 5);
        SchubertClass w = class_of_partition(X, gr(5, 13, {3, 4, 7, 11, 12}));
        IncidenceDescription inc = incidence_description(X, w);
        REQUIRE(inc.conditions.size() == 4);
        std::vector<int> dims, jumps;
        for (const auto& c : inc.conditions) {
            dims.push_back(c.flag_dim);
            jumps.push_back(c.jump);
        }
        CHECK(dims == std::vector<int>{0, 4, 7, 12});
        CHECK(jumps == std::vector<int>{0, 2, 3, 5});
    }
    {
        CominusculeSpace X = build_space(Family::C, 5, 5);
        SchubertClass w = class_of_partition(X, lg(5, {2, 5, 7, 8, 10}));
        IncidenceDescription inc = incidence_description(X, w);
        REQUIRE(inc.conditions.size() == 3);
        std::vector<int> dims, jumps;
        for (const auto& c : inc.conditions) {
            dims.push_back(c.flag_dim);
            jumps.push_back(c.jump);
        }
        CHECK(dims == std::vector<int>{2, 5, 8});
        CHECK(jumps == std::vector<int>{1, 2, 4});
    }
    {
        // one-row Young diagram in Gr(2,4): a single non-trivial condition
        CominusculeSpace X = build_space(Family::A, 3, 2);
        SchubertClass w = class_of_partition(X, gr(2, 4, {1, 4}));
        IncidenceDescription inc = incidence_description(X, w);
        REQUIRE(inc.conditions.size() == 1);
        CHECK(inc.conditions.front().flag_dim == 1);
        CHECK(inc.conditions.front().jump == 1);
    }
    {
        CominusculeSpace X = build_space(Family::E6, 6, 6);
        HassePoset poset = enumerate_classes(X);
        CHECK_THROWS_AS(incidence_description(X, poset.classes[3]), std::invalid_argument);
    }
}

TEST_CASE("decreasing convention round trip and dimension consistency") {
    for (auto [f, n, k] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 5, 2}, {Family::C, 5, 5}, {Family::D, 6, 6}, {Family::D, 5, 5}}) {
        CominusculeSpace X = build_space(f, n, k);
        HassePoset poset = enumerate_classes(X);
        for (const SchubertClass& w : poset.classes) {
            auto p = partition_of_class(X, w);
            REQUIRE(p.has_value());
            auto young = to_decreasing_convention(*p);
            int total = 0;
            for (int v : young) total += v;
            CHECK(total == w.dim()); // |Young diagram| = class dimension
            CHECK(from_decreasing_convention(p->family, p->length, p->bound, young) == *p);
        }
    }
}

TEST_CASE("spinor model through the mirror node n-1") {
    CominusculeSpace X = build_space(Family::D, 5, 4);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    CHECK(poset.classes.size() == 16);
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        auto p = partition_of_class(X, poset.classes[c]);
        REQUIRE(p.has_value());
        CHECK(rigid_by_partition(*p) == poset.info[c].rigid);
        CHECK(class_of_partition(X, *p) == poset.classes[c]);
    }
}

TEST_CASE("invalid (a, J) pairs are rejected") {
    CHECK_THROWS_AS(aj_to_partition(PartitionFamily::LG, 5, 10, AJInvariant{3, {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(aj_to_partition(PartitionFamily::Gr, 3, 8, AJInvariant{0, {3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(aj_to_partition(PartitionFamily::Gr, 3, 8, AJInvariant{1, {1, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(aj_to_partition(PartitionFamily::Spinor, 6, 12, AJInvariant{0, {7}}),
                    std::invalid_argument);
}
