#include "tabalg/relations.hpp"

#include "tabalg/rational.hpp"

#include <algorithm>
#include <random>

namespace tabalg {

std::string to_string(const Relation& r) {
    return to_string(r.lhs.first) + "*" + to_string(r.lhs.second) + " = " + to_string(r.rhs.first) + "*" +
           to_string(r.rhs.second);
}

std::vector<std::pair<Column, Column>> col_fiber(const Tableau& s) {
    if (s.num_columns() != 2) {
        throw Error(Errc::NotTwoColumns, to_string(s) + " has " + std::to_string(s.num_columns()) + " columns");
    }
    const std::size_t h = s.num_rows();
    std::size_t k = 0;
    while (k < h && s.rows()[k].size() == 2) ++k;

    std::vector<std::pair<Column, Column>> out;
    // Each doubled row sends one entry to each factor; single rows go to the
    // taller factor. Bit i of mask picks which entry of row i goes to T.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> t, u;
        for (std::size_t i = 0; i < h; ++i) {
            const auto& row = s.rows()[i];
            if (i < k) {
                const bool swap = (mask >> i) & 1U;
                t.push_back(row[swap ? 1 : 0]);
                u.push_back(row[swap ? 0 : 1]);
            } else {
                t.push_back(row[0]);
            }
        }
        const auto strictly_increasing = [](const std::vector<int>& v) {
            return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
        };
        if (!strictly_increasing(t) || !strictly_increasing(u)) continue;
        out.emplace_back(Column(t), Column(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Relation> minimal_relations(int n, int m) {
    const GeneratorSet gens = generators(n, m);
    std::vector<Relation> out;
    for (const auto& t : gens.columns()) {
        for (const auto& u : gens.columns()) {
            const bool taller = t.height() > u.height();
            if (!taller && !(t.height() == u.height() && t < u)) continue;
            ColumnPair lr = meet_join(t, u);
            if (lr.left == t) continue;
            out.push_back(Relation{{t, u}, {std::move(lr.left), std::move(lr.right)}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Integer binom(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

std::uint64_t to_count(const Rational& value, const char* what) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() != 1 || v < 0) {
        throw Error(Errc::NonIntegralResult, std::string(what) + " evaluated to " + to_string(v));
    }
    return v.get_num().get_ui();
}

// One (i, k, j) term of the triple sum.
Rational triple_sum_term(int m, int i, int k, int j) {
    const int delta = j == 0 ? 1 : 0;
    Rational term = Rational(binom(m, k)) * (Rational(1) - Rational(delta, 2)) *
                    Rational(i - k - delta, i + j - k + 1) * Rational(binom(m - k, 2 * i + j - 2 * k)) *
                    Rational(binom(2 * i + j - 2 * k, i - k));
    term.canonicalize();
    return term;
}

template <typename Visit>
void for_each_triple(int n, int m, Visit&& visit) {
    for (int i = 1; i <= n; ++i) {
        for (int k = std::max(0, 2 * i - m); k <= i - 1; ++k) {
            const int j_max = std::min(n - i, m - 2 * i + k);
            for (int j = 0; j <= j_max; ++j) visit(i, k, j);
        }
    }
}

Rational sigma_double_sum(int n, int m) {
    Rational total = 0;
    for_each_triple(n, m, [&](int i, int k, int j) { total += triple_sum_term(m, i, k, j); });
    return total;
}

Rational sigma_closed(int n, int m) {
    Rational total = 0;
    for (int i = 1; i <= n; ++i) {
        Rational inner = 0;
        for (int k = 1; k <= std::min(i, m - i); ++k) {
            Rational bracket = -Rational(binom(m - i, k)) / 2;
            for (int j = k; j <= std::min(n + k - i, m - i); ++j) {
                bracket += Rational(k, j + 1) * Rational(binom(m - i, j));
            }
            inner += Rational(binom(i, k)) * bracket;
        }
        total += Rational(binom(m, i)) * inner;
    }
    total.canonicalize();
    return total;
}

std::uint64_t sigma_brute(int n, int m) {
    const GeneratorSet gens = generators(n, m);
    std::uint64_t count = 0;
    for (const auto& t : gens.columns()) {
        for (const auto& u : gens.columns()) {
            const bool taller = t.height() > u.height();
            const bool level = t.height() == u.height() && t < u;
            if ((taller || level) && meet_join(t, u).left != t) ++count;
        }
    }
    return count;
}

}  // namespace

std::uint64_t sigma(int n, int m, SigmaMethod method) {
    check_bound(Bound{n, m});
    switch (method) {
        case SigmaMethod::DoubleSum: return to_count(sigma_double_sum(n, m), "double sum");
        case SigmaMethod::Closed: return to_count(sigma_closed(n, m), "closed sum");
        case SigmaMethod::Brute: return sigma_brute(n, m);
    }
    throw Error(Errc::InternalError, "unknown sigma method");
}

std::optional<SigmaMethod> parse_sigma_method(const std::string& name) {
    if (name == "double_sum") return SigmaMethod::DoubleSum;
    if (name == "closed") return SigmaMethod::Closed;
    if (name == "brute") return SigmaMethod::Brute;
    return std::nullopt;
}

std::uint64_t PluckerCounts::total() const {
    std::uint64_t t = incidence;
    for (auto g : grassmann) t += g;
    return t;
}

PluckerCounts plucker_counts(int n, int m) {
    check_bound(Bound{n, m});
    std::vector<Rational> grassmann(static_cast<std::size_t>(n), Rational(0));
    Rational incidence = 0;
    for_each_triple(n, m, [&](int i, int k, int j) {
        const Rational term = triple_sum_term(m, i, k, j);
        if (j == 0) {
            grassmann[static_cast<std::size_t>(i - 1)] += term;
        } else {
            incidence += term;
        }
    });
    PluckerCounts out;
    for (const auto& g : grassmann) out.grassmann.push_back(to_count(g, "Grassmann slice"));
    out.incidence = to_count(incidence, "incidence slice");
    return out;
}

StraightenResult straighten_with_stats(const MonomialWord& word, Bound bound, std::optional<std::uint64_t> seed) {
    check_bound(bound);
    for (const auto& c : word) {
        if (!c.fits(bound)) throw Error(Errc::BoundExceeded, "column " + to_string(c) + " outside bound");
    }
    MonomialWord w = word;
    const std::size_t limit = w.size() * w.size() * static_cast<std::size_t>(bound.n) * static_cast<std::size_t>(bound.m);
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);

    StraightenResult result;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    while (true) {
        candidates.clear();
        for (std::size_t a = 0; a < w.size() && (rng || candidates.empty()); ++a) {
            for (std::size_t b = a + 1; b < w.size(); ++b) {
                if (!comparable(w[a], w[b])) {
                    candidates.emplace_back(a, b);
                    if (!rng) break;
                }
            }
        }
        if (candidates.empty()) break;
        if (result.steps == limit) {
            throw Error(Errc::InternalError, "straightening exceeded " + std::to_string(limit) + " steps");
        }
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng);
        const auto [a, b] = candidates[pick];
        ColumnPair lr = meet_join(w[a], w[b]);
        w[a] = std::move(lr.left);
        w[b] = std::move(lr.right);
        ++result.steps;
    }
    std::sort(w.begin(), w.end(), [](const Column& x, const Column& y) { return x != y && leq(x, y); });
    result.tableau = from_columns(w);
    return result;
}

Tableau straighten(const MonomialWord& word, Bound bound, std::optional<std::uint64_t> seed) {
    return straighten_with_stats(word, bound, seed).tableau;
}

}  // namespace tabalg
