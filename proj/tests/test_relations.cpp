#include "oracles.hpp"

#include "tabalg/enumerate.hpp"
#include "tabalg/relations.hpp"

#include <doctest.h>

using namespace tabalg;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return validate(rows); }

using Pair = std::pair<Column, Column>;

Tableau product(const Column& a, const Column& b) { return star(column_tableau(a), column_tableau(b)); }

}  // namespace

TEST_CASE("col_fiber examples") {
    const auto f = col_fiber(tab({{1, 2}, {3}}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Pair(Column({1, 3}), Column({2})));
    CHECK(f[1] == Pair(Column({2, 3}), Column({1})));
    CHECK(col_fiber(tab({{1, 1}})) == std::vector<Pair>{{Column({1}), Column({1})}});
    CHECK(col_fiber(tab({{1, 2}, {2, 3}})).front() == Pair(Column({1, 2}), Column({2, 3})));
    CHECK_THROWS_AS(col_fiber(tab({{1}})), Error);
    CHECK_THROWS_AS(col_fiber(tab({{1, 1, 1}})), Error);
}

TEST_CASE("col_fiber matches a search over all column pairs") {
    const GeneratorSet g45 = generators(4, 5);
    for (int size = 2; size <= 8; ++size) {
        for (const auto& shape : partitions(size, 4)) {
            if (shape.part(0) != 2) continue;
            for (const auto& s : ssyt(shape, 5)) {
                std::vector<Pair> brute;
                for (const auto& a : g45.columns()) {
                    for (const auto& b : g45.columns()) {
                        if (a.height() >= b.height() && product(a, b) == s) brute.emplace_back(a, b);
                    }
                }
                std::sort(brute.begin(), brute.end());
                const auto fiber = col_fiber(s);
                CHECK(fiber == brute);
                CHECK(fiber.front() == Pair(s.column(0), s.column(1)));
            }
        }
    }
}

TEST_CASE("minimal relations on the small examples") {
    const Relation expected{{Column({2, 3}), Column({1})}, {Column({1, 3}), Column({2})}};
    CHECK(minimal_relations(2, 3) == std::vector<Relation>{expected});
    CHECK(minimal_relations(3, 3) == std::vector<Relation>{expected});
    CHECK(to_string(expected) == "[2,3]*[1] = [1,3]*[2]");
    for (int m = 1; m <= 6; ++m) CHECK(minimal_relations(1, m).empty());
    CHECK_THROWS_AS(minimal_relations(4, 3), Error);
}

TEST_CASE("minimal relations are genuine and minimal in their fibre") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= m; ++n) {
            const auto rels = minimal_relations(n, m);
            CHECK(std::is_sorted(rels.begin(), rels.end()));
            for (const auto& r : rels) {
                const Tableau s = product(r.lhs.first, r.lhs.second);
                CHECK(product(r.rhs.first, r.rhs.second) == s);
                CHECK(r.lhs != r.rhs);
                CHECK(col_fiber(s).front() == r.rhs);
                const bool taller = r.lhs.first.height() > r.lhs.second.height();
                const bool level = r.lhs.first.height() == r.lhs.second.height() && r.lhs.first < r.lhs.second;
                CHECK((taller || level));
            }
        }
    }
}

TEST_CASE("minimal relations equal incomparable pairs through meet_join, n <= m <= 6") {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            std::set<std::pair<std::set<Column>, Pair>> lattice_side, relation_side;
            for (const auto& [a, b] : incomparable_pairs(g)) {
                const ColumnPair lr = meet_join(a, b);
                lattice_side.insert({{a, b}, {lr.left, lr.right}});
            }
            for (const auto& r : minimal_relations(n, m)) relation_side.insert({{r.lhs.first, r.lhs.second}, r.rhs});
            CHECK(lattice_side == relation_side);
        }
    }
}

TEST_CASE("sigma on the small examples") {
    for (auto method : {SigmaMethod::DoubleSum, SigmaMethod::Closed, SigmaMethod::Brute}) {
        CHECK(sigma(2, 3, method) == 1);
        CHECK(sigma(3, 3, method) == 1);
        for (int m = 1; m <= 8; ++m) CHECK(sigma(1, m, method) == 0);
    }
    CHECK_THROWS_AS(sigma(3, 2, SigmaMethod::Brute), Error);
    CHECK(parse_sigma_method("closed") == SigmaMethod::Closed);
    CHECK(parse_sigma_method("double_sum") == SigmaMethod::DoubleSum);
    CHECK(parse_sigma_method("brute") == SigmaMethod::Brute);
    CHECK_FALSE(parse_sigma_method("fast").has_value());
}

TEST_CASE("sigma: three methods and the pair-count oracle agree for n <= m <= 6") {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= m; ++n) {
            const auto expected = oracle::relation_count(n, m);
            CHECK(sigma(n, m, SigmaMethod::DoubleSum) == expected);
            CHECK(sigma(n, m, SigmaMethod::Closed) == expected);
            CHECK(sigma(n, m, SigmaMethod::Brute) == expected);
        }
    }
}

TEST_CASE("the two formulas agree further out") {
    for (int m = 7; m <= 8; ++m) {
        for (int n = 1; n <= m; ++n) {
            CHECK(sigma(n, m, SigmaMethod::DoubleSum) == sigma(n, m, SigmaMethod::Closed));
            CHECK(sigma(n, m, SigmaMethod::Closed) == oracle::relation_count(n, m));
        }
    }
}

TEST_CASE("sigma(n-1, n) == sigma(n, n)") {
    for (int n = 2; n <= 6; ++n) CHECK(sigma(n - 1, n, SigmaMethod::Closed) == sigma(n, n, SigmaMethod::Closed));
}

TEST_CASE("Plucker slices") {
    const PluckerCounts c23 = plucker_counts(2, 3);
    CHECK(c23.grassmann == std::vector<std::uint64_t>{0, 0});
    CHECK(c23.incidence == 1);
    CHECK(c23.total() == 1);
    const PluckerCounts c24 = plucker_counts(2, 4);
    CHECK(c24.grassmann == std::vector<std::uint64_t>{0, 1});
    CHECK(c24.total() == sigma(2, 4, SigmaMethod::Brute));
    for (int m = 1; m <= 6; ++m) {
        CHECK(plucker_counts(1, m).total() == 0);
        for (int n = 1; n <= m; ++n) {
            const PluckerCounts c = plucker_counts(n, m);
            CHECK(c.total() == sigma(n, m, SigmaMethod::Brute));
            // Equal-height relations, counted by the lattice.
            for (int h = 1; h <= n; ++h) {
                std::uint64_t level = 0;
                for (const auto& r : minimal_relations(n, m)) {
                    if (r.lhs.first.height() == h && r.lhs.second.height() == h) ++level;
                }
                CHECK(c.grassmann[static_cast<std::size_t>(h - 1)] == level);
            }
        }
    }
}

TEST_CASE("straighten examples") {
    CHECK(straighten({Column({2, 3}), Column({1})}, Bound{2, 3}) == tab({{1, 2}, {3}}));
    CHECK(straighten({Column({1, 3})}, Bound{2, 3}) == tab({{1}, {3}}));
    CHECK(straighten({}, Bound{2, 3}) == Tableau{});
    CHECK_THROWS_AS(straighten({Column({1, 4})}, Bound{2, 3}), Error);
    CHECK_THROWS_AS(straighten({Column({1, 2, 3})}, Bound{2, 3}), Error);
    const auto stats = straighten_with_stats({Column({2, 3}), Column({1})}, Bound{2, 3});
    CHECK(stats.steps == 1);
}

TEST_CASE("straightening is confluent and equals the star product") {
    oracle::Rng rng(2024);
    for (int k = 0; k < 500; ++k) {
        const int m = oracle::uniform(rng, 1, 5);
        const Bound b{oracle::uniform(rng, 1, m), m};
        MonomialWord w;
        const int len = oracle::uniform(rng, 0, 6);
        std::vector<Tableau> factors;
        for (int i = 0; i < len; ++i) {
            w.push_back(oracle::random_column(rng, b));
            factors.push_back(column_tableau(w.back()));
        }
        const Tableau expected = star_all(factors);
        CHECK(straighten(w, b) == expected);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto r = straighten_with_stats(w, b, seed * 7919 + static_cast<std::uint64_t>(k));
            CHECK(r.tableau == expected);
            CHECK(r.steps <= w.size() * w.size() * static_cast<std::size_t>(b.n * b.m));
        }
    }
}
