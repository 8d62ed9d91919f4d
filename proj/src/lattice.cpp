#include "tabalg/lattice.hpp"

#include <algorithm>

namespace tabalg {

namespace {

void subsets_rec(int next, int m, int k, std::vector<int>& cur, std::vector<Column>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(cur);
        return;
    }
    for (int v = next; v <= m; ++v) {
        cur.push_back(v);
        subsets_rec(v + 1, m, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GeneratorSet::GeneratorSet(Bound bound) : bound_(bound) {
    check_bound(bound);
    std::vector<int> cur;
    for (int k = 1; k <= bound.n; ++k) subsets_rec(1, bound.m, k, cur, columns_);
    std::sort(columns_.begin(), columns_.end());

    std::vector<Column> free;
    if (bound.m == bound.n) {
        free.push_back(Column({bound.n}));
        if (bound.n > 1) free.push_back(standard_column(bound.n - 1));
        free.push_back(standard_column(bound.n));
    } else {
        free.push_back(Column({bound.m}));
        free.push_back(standard_column(bound.n));
    }
    // For n = m = 1 the listed columns coincide.
    std::sort(free.begin(), free.end());
    free.erase(std::unique(free.begin(), free.end()), free.end());

    for (std::size_t i = 0; i < columns_.size(); ++i) {
        const bool is_f = std::binary_search(free.begin(), free.end(), columns_[i]);
        (is_f ? f_part_ : e_part_).push_back(i);
    }
}

bool GeneratorSet::is_free(const Column& c) const {
    const auto idx = index_of(c);
    return idx && std::binary_search(f_part_.begin(), f_part_.end(), *idx);
}

std::optional<std::size_t> GeneratorSet::index_of(const Column& c) const {
    const auto it = std::lower_bound(columns_.begin(), columns_.end(), c);
    if (it == columns_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<Column> GeneratorSet::point_order() const {
    std::vector<Column> out;
    out.reserve(columns_.size());
    for (auto i : e_part_) out.push_back(columns_[i]);
    for (auto i : f_part_) out.push_back(columns_[i]);
    return out;
}

GeneratorSet generators(int n, int m) { return GeneratorSet(Bound{n, m}); }

ColumnPair meet_join(const Column& t, const Column& u) {
    const Tableau s = star(column_tableau(t), column_tableau(u));
    return ColumnPair{s.column(0), s.column(1)};
}

bool leq(const Column& t, const Column& u) {
    if (t.height() < u.height()) return false;
    for (int i = 0; i < u.height(); ++i) {
        if (t.entries()[static_cast<std::size_t>(i)] > u.entries()[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::vector<std::pair<Column, Column>> incomparable_pairs(const GeneratorSet& gens) {
    std::vector<std::pair<Column, Column>> out;
    const auto& cols = gens.columns();
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            if (!comparable(cols[a], cols[b])) out.emplace_back(cols[a], cols[b]);
        }
    }
    return out;
}

}  // namespace tabalg
