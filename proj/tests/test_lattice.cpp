#include "oracles.hpp"

#include "tabalg/lattice.hpp"
#include "tabalg/relations.hpp"

#include <doctest.h>

using namespace tabalg;

namespace {

std::vector<Column> cols(std::initializer_list<std::vector<int>> list) {
    std::vector<Column> out;
    for (const auto& c : list) out.emplace_back(c);
    return out;
}

std::vector<Column> pick(const GeneratorSet& g, const std::vector<std::size_t>& idx) {
    std::vector<Column> out;
    for (auto i : idx) out.push_back(g.columns()[i]);
    return out;
}

}  // namespace

TEST_CASE("generators on the small examples") {
    const GeneratorSet g33 = generators(3, 3);
    CHECK(g33.size() == 7);
    CHECK(pick(g33, g33.f_part()) == cols({{3}, {1, 2}, {1, 2, 3}}));
    CHECK(g33.columns() == cols({{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));

    const GeneratorSet g23 = generators(2, 3);
    CHECK(g23.size() == 6);
    CHECK(pick(g23, g23.f_part()) == cols({{3}, {1, 2}}));
    CHECK(pick(g23, g23.e_part()) == cols({{1}, {2}, {1, 3}, {2, 3}}));
    CHECK(g23.point_order() == cols({{1}, {2}, {1, 3}, {2, 3}, {3}, {1, 2}}));
    CHECK(g23.is_free(Column({3})));
    CHECK_FALSE(g23.is_free(Column({1})));
    CHECK(g23.index_of(Column({1, 3})) == 4u);
    CHECK_FALSE(g23.index_of(Column({1, 4})).has_value());
    CHECK(g23.krull_dimension() == 6);

    const GeneratorSet g11 = generators(1, 1);
    CHECK(g11.columns() == cols({{1}}));
    CHECK(g11.f_part() == std::vector<std::size_t>{0});
    CHECK(g11.e_part().empty());

    CHECK_THROWS_AS(generators(3, 2), Error);
    CHECK_THROWS_AS(generators(0, 2), Error);
}

TEST_CASE("generator counts, order and E/F split for n <= m <= 8") {
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            std::uint64_t expected = 0;
            for (int k = 1; k <= n; ++k) expected += oracle::binomial(m, k);
            CHECK(g.size() == expected);
            CHECK(oracle::all_columns(n, m).size() == expected);
            CHECK(std::is_sorted(g.columns().begin(), g.columns().end()));
            CHECK(std::adjacent_find(g.columns().begin(), g.columns().end()) == g.columns().end());
            const std::size_t f = g.f_part().size();
            if (n == 1 && m == 1) {
                CHECK(f == 1);
            } else {
                CHECK(f == (m == n ? 3u : 2u));
            }
            CHECK(f + g.e_part().size() == g.size());
            std::vector<std::size_t> all = g.e_part();
            all.insert(all.end(), g.f_part().begin(), g.f_part().end());
            std::sort(all.begin(), all.end());
            for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
        }
    }
}

TEST_CASE("meet and join examples") {
    const ColumnPair a = meet_join(Column({2, 3}), Column({1}));
    CHECK(a.meet() == Column({1, 3}));
    CHECK(a.join() == Column({2}));
    const ColumnPair b = meet_join(Column({1, 3}), Column({1, 3}));
    CHECK(b.meet() == Column({1, 3}));
    CHECK(b.join() == Column({1, 3}));
    const ColumnPair c = meet_join(Column({1, 2}), Column({1, 3}));
    CHECK(c.meet() == Column({1, 2}));
    CHECK(c.join() == Column({1, 3}));
}

TEST_CASE("leq examples") {
    CHECK(leq(Column({1, 2, 3}), Column({1, 2})));
    CHECK_FALSE(leq(Column({1, 2}), Column({1, 2, 3})));
    CHECK(leq(Column({2, 4}), Column({2, 4})));
    CHECK_FALSE(comparable(Column({2, 3}), Column({1})));
    CHECK(leq(Column({1, 3}), Column({2})));
}

TEST_CASE("meet and join are the lattice operations of leq for n <= m <= 5") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            const auto& all = g.columns();
            for (const auto& t : all) {
                for (const auto& u : all) {
                    const ColumnPair lr = meet_join(t, u);
                    CHECK(lr.left.height() >= lr.right.height());
                    CHECK(oracle::brute_glb(all, t, u) == lr.meet());
                    CHECK(oracle::brute_lub(all, t, u) == lr.join());
                    CHECK(meet_join(u, t) == lr);
                    if (leq(t, u)) {
                        CHECK(lr.meet() == t);
                        CHECK(lr.join() == u);
                    }
                    // Absorption.
                    CHECK(meet_join(t, lr.join()).meet() == t);
                    CHECK(meet_join(t, lr.meet()).join() == t);
                }
            }
        }
    }
}

TEST_CASE("meet and join agree with the entrywise min/max description") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            const auto& all = g.columns();
            for (const auto& t : all) {
                for (const auto& u : all) {
                    const auto& a = t.height() >= u.height() ? t.entries() : u.entries();
                    const auto& b = t.height() >= u.height() ? u.entries() : t.entries();
                    std::vector<int> lo = a, hi(b.size());
                    for (std::size_t i = 0; i < b.size(); ++i) {
                        lo[i] = std::min(a[i], b[i]);
                        hi[i] = std::max(a[i], b[i]);
                    }
                    const ColumnPair lr = meet_join(t, u);
                    CHECK(lr.meet().entries() == lo);
                    CHECK(lr.join().entries() == hi);
                }
            }
        }
    }
}

TEST_CASE("lattice laws: associativity and distributivity for n <= m <= 5") {
    const auto meet = [](const Column& a, const Column& b) { return meet_join(a, b).meet(); };
    const auto join = [](const Column& a, const Column& b) { return meet_join(a, b).join(); };
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            const auto& all = g.columns();
            for (const auto& x : all) {
                for (const auto& y : all) {
                    for (const auto& z : all) {
                        CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
                        CHECK(join(join(x, y), z) == join(x, join(y, z)));
                        CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
                    }
                }
            }
        }
    }
}

TEST_CASE("leq is a partial order") {
    const GeneratorSet g = generators(4, 5);
    const auto& all = g.columns();
    for (const auto& x : all) {
        CHECK(leq(x, x));
        for (const auto& y : all) {
            if (leq(x, y) && leq(y, x)) CHECK(x == y);
            for (const auto& z : all) {
                if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
            }
        }
    }
}

TEST_CASE("incomparable pairs") {
    const auto p23 = incomparable_pairs(generators(2, 3));
    REQUIRE(p23.size() == 1);
    CHECK(p23.front() == std::make_pair(Column({1}), Column({2, 3})));
    for (int m = 1; m <= 6; ++m) CHECK(incomparable_pairs(generators(1, m)).empty());
    CHECK(incomparable_pairs(generators(2, 4)).size() == oracle::relation_count(2, 4));
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= m; ++n) {
            const auto pairs = incomparable_pairs(generators(n, m));
            CHECK(pairs.size() == oracle::relation_count(n, m));
            for (const auto& [a, b] : pairs) {
                CHECK(a < b);
                CHECK_FALSE(comparable(a, b));
            }
        }
    }
}

TEST_CASE("the meet and join sides of a relation need not be incomparable pairs") {
    std::set<Column> in_pairs;
    for (const auto& [a, b] : incomparable_pairs(generators(2, 3))) in_pairs.insert({a, b});
    CHECK(in_pairs == std::set<Column>{Column({1}), Column({2, 3})});
    CHECK(generators(2, 3).e_part().size() == 4);
}

TEST_CASE("a column is in the E-part iff it lies in a product relation, for 2 <= n <= m <= 6") {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= m; ++n) {
            const GeneratorSet g = generators(n, m);
            std::set<Column> in_pairs;
            std::set<Column> support;
            for (const auto& [a, b] : incomparable_pairs(g)) {
                in_pairs.insert(a);
                in_pairs.insert(b);
                const ColumnPair lr = meet_join(a, b);
                support.insert({a, b, lr.meet(), lr.join()});
            }
            std::set<Column> brute;
            for (const auto& c : oracle::columns_in_relations(n, m)) brute.insert(Column(c));
            CHECK(support == brute);
            const auto e = pick(g, g.e_part());
            CHECK(std::set<Column>(e.begin(), e.end()) == brute);
            CHECK(std::includes(brute.begin(), brute.end(), in_pairs.begin(), in_pairs.end()));
        }
    }
}

TEST_CASE("one-row bounds have no relations, so the E-part is not the relation support") {
    // With n = 1 every product is a sorted row with a unique factorization,
    // while the free part is still {[m], [1]}; for m >= 3 the middle
    // entries form a nonempty E-part that meets no relation.
    for (int m = 1; m <= 6; ++m) {
        const GeneratorSet g = generators(1, m);
        CHECK(incomparable_pairs(g).empty());
        CHECK(oracle::columns_in_relations(1, m).empty());
        CHECK(g.e_part().size() == static_cast<std::size_t>(std::max(0, m - 2)));
    }
}
