#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's enumeration and lattice code so that agreement means something.

#include "tabalg/algebra.hpp"
#include "tabalg/enumerate.hpp"
#include "tabalg/lattice.hpp"
#include "tabalg/spectra.hpp"
#include "tabalg/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using namespace tabalg;

inline std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int k = 1; k <= b; ++k) r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
    return r;
}

inline bool is_ssyt(const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0 && rows[i][j - 1] > rows[i][j]) return false;
            if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
        }
    }
    return true;
}

/// Every filling of the shape by {1..k}, filtered by the SSYT conditions.
inline std::vector<std::vector<std::vector<int>>> all_ssyt(const std::vector<int>& shape, int k) {
    int cells = 0;
    for (int p : shape) cells += p;
    std::vector<int> digits(static_cast<std::size_t>(cells), 1);
    std::vector<std::vector<std::vector<int>>> out;
    if (k < 1 && cells > 0) return out;
    while (true) {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int p : shape) {
            rows.emplace_back(digits.begin() + static_cast<long>(pos), digits.begin() + static_cast<long>(pos + p));
            pos += static_cast<std::size_t>(p);
        }
        if (is_ssyt(rows)) out.push_back(rows);
        std::size_t d = 0;
        while (d < digits.size() && digits[d] == k) digits[d++] = 1;
        if (d == digits.size()) break;
        ++digits[d];
    }
    return out;
}

/// Number of SSYT of the shape with entries <= n: prod (n + c) / h.
inline std::uint64_t hook_content(const std::vector<int>& shape, int n) {
    std::vector<int> conj;
    for (std::size_t j = 0; !shape.empty() && j < static_cast<std::size_t>(shape.front()); ++j) {
        int h = 0;
        for (int p : shape) h += p > static_cast<int>(j) ? 1 : 0;
        conj.push_back(h);
    }
    mpq_class value = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(shape[i]); ++j) {
            const int arm = shape[i] - static_cast<int>(j) - 1;
            const int leg = conj[j] - static_cast<int>(i) - 1;
            value *= mpq_class(n + static_cast<int>(j) - static_cast<int>(i), arm + leg + 1);
        }
    }
    value.canonicalize();
    return value.get_num().get_ui();
}

/// Subsets of {1..m} of size 1..n as sorted entry lists, by bitmask.
inline std::vector<std::vector<int>> all_columns(int n, int m) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
        std::vector<int> c;
        for (int b = 0; b < m; ++b) {
            if (mask >> b & 1U) c.push_back(b + 1);
        }
        if (static_cast<int>(c.size()) <= n) out.push_back(c);
    }
    return out;
}

/// Two columns multiplied row by row: sort the pair in each shared row.
inline std::vector<std::vector<int>> two_column_product(const std::vector<int>& t, const std::vector<int>& u) {
    const std::size_t h = std::max(t.size(), u.size());
    std::vector<std::vector<int>> rows(h);
    for (std::size_t i = 0; i < h; ++i) {
        if (i < t.size()) rows[i].push_back(t[i]);
        if (i < u.size()) rows[i].push_back(u[i]);
        std::sort(rows[i].begin(), rows[i].end());
    }
    return rows;
}

/// Number of binomial relations needed: unordered pairs minus products.
inline std::uint64_t relation_count(int n, int m) {
    const auto cols = all_columns(n, m);
    std::set<std::vector<std::vector<int>>> products;
    std::uint64_t pairs = 0;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a; b < cols.size(); ++b) {
            ++pairs;
            products.insert(two_column_product(cols[a], cols[b]));
        }
    }
    return pairs - products.size();
}

/// Columns that occur in some product with more than one factorization.
inline std::set<std::vector<int>> columns_in_relations(int n, int m) {
    const auto cols = all_columns(n, m);
    std::map<std::vector<std::vector<int>>, std::vector<std::pair<std::size_t, std::size_t>>> fibers;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a; b < cols.size(); ++b) fibers[two_column_product(cols[a], cols[b])].emplace_back(a, b);
    }
    std::set<std::vector<int>> out;
    for (const auto& [s, pairs] : fibers) {
        if (pairs.size() < 2) continue;
        for (auto [a, b] : pairs) {
            out.insert(cols[a]);
            out.insert(cols[b]);
        }
    }
    return out;
}

/// Greatest lower bound under `leq` by scanning every generator.
inline std::optional<Column> brute_glb(const std::vector<Column>& all, const Column& t, const Column& u) {
    std::vector<Column> lower;
    for (const auto& c : all) {
        if (leq(c, t) && leq(c, u)) lower.push_back(c);
    }
    for (const auto& c : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](const Column& d) { return leq(d, c); })) return c;
    }
    return std::nullopt;
}

inline std::optional<Column> brute_lub(const std::vector<Column>& all, const Column& t, const Column& u) {
    std::vector<Column> upper;
    for (const auto& c : all) {
        if (leq(t, c) && leq(u, c)) upper.push_back(c);
    }
    for (const auto& c : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](const Column& d) { return leq(c, d); })) return c;
    }
    return std::nullopt;
}

/// Every partition of `size` with parts <= `max_part` and at most `max_len` parts.
inline void partitions_into(int size, int max_part, int max_len, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
    if (size == 0) {
        out.push_back(prefix);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(size, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_into(size - p, p, max_len - 1, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int size, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_into(size, size, max_len, prefix, out);
    return out;
}

/// Searches every tableau U of the right size for s * U == t.
inline std::optional<Tableau> brute_divide(const Tableau& t, const Tableau& s) {
    const int cells = t.size() - s.size();
    if (cells < 0) return std::nullopt;
    const int k = std::max(1, t.max_entry());
    std::optional<Tableau> found;
    for (const auto& shape : all_partitions(cells, static_cast<int>(t.num_rows()))) {
        for (const auto& rows : all_ssyt(shape, k)) {
            Tableau u = validate(rows);
            if (star(s, u) == t) {
                if (found) return std::nullopt;  // would contradict cancellativity
                found = u;
            }
        }
    }
    return found;
}

// Random inputs.

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Column random_column(Rng& rng, Bound b) {
    const int h = uniform(rng, 1, b.n);
    std::vector<int> pool(static_cast<std::size_t>(b.m));
    for (int i = 0; i < b.m; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(h));
    std::sort(pool.begin(), pool.end());
    return Column(pool);
}

inline Tableau random_tableau(Rng& rng, Bound b, int max_columns) {
    std::vector<Tableau> cols;
    const int k = uniform(rng, 0, max_columns);
    for (int i = 0; i < k; ++i) cols.push_back(column_tableau(random_column(rng, b)));
    return star_all(cols);
}

inline Rational random_rational(Rng& rng, bool nonzero) {
    while (true) {
        Rational q(uniform(rng, -6, 6), uniform(rng, 1, 4));
        q.canonicalize();
        if (!nonzero || q != 0) return q;
    }
}

inline AlgebraElement random_element(Rng& rng, Bound b, int max_terms, int max_columns) {
    AlgebraElement f;
    const int k = uniform(rng, 0, max_terms);
    for (int i = 0; i < k; ++i) f.add_term(random_tableau(rng, b, max_columns), random_rational(rng, true));
    return f;
}

inline EvaluationPoint random_alpha(Rng& rng, Bound b, bool ordinary) {
    EvaluationPoint a(b);
    for (std::size_t i = 0; i < static_cast<std::size_t>(b.n); ++i) {
        for (int e = 1; e <= b.m; ++e) a.set(i, e, random_rational(rng, ordinary));
    }
    return a;
}

}  // namespace oracle
