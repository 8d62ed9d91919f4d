#pragma once

#include "tabalg/lattice.hpp"
#include "tabalg/tableau.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tabalg {

/// The binomial lhs.first * lhs.second - rhs.first * rhs.second.
struct Relation {
    std::pair<Column, Column> lhs;
    std::pair<Column, Column> rhs;

    friend bool operator==(const Relation&, const Relation&) = default;
    friend auto operator<=>(const Relation&, const Relation&) = default;
};

std::string to_string(const Relation& r);

/// A multiset of columns; order carries no meaning.
using MonomialWord = std::vector<Column>;

/// All factorizations S = T * T' into two columns with ht(T) >= ht(T'),
/// sorted so that longer T comes first and equal heights follow the column
/// order on T. The first entry is always (left column, right column) of S.
/// Throws NotTwoColumns unless S has exactly two columns.
std::vector<std::pair<Column, Column>> col_fiber(const Tableau& s);

/// The minimal generating set of the relation ideal: every (T, T') with
/// either ht(T) > ht(T') and T not the left column of T*T', or equal heights,
/// T before T', and T not the left column; each paired with its (L, R).
/// Sorted by lhs in column order.
std::vector<Relation> minimal_relations(int n, int m);

enum class SigmaMethod { DoubleSum, Closed, Brute };

/// Cardinality of the minimal relation set, via the triple sum with Kronecker
/// deltas, the rearranged single-delta sum, or direct enumeration of column
/// pairs. Throws NonIntegralResult if a formula does not land on an integer.
std::uint64_t sigma(int n, int m, SigmaMethod method);

std::optional<SigmaMethod> parse_sigma_method(const std::string& name);

struct PluckerCounts {
    /// grassmann[i - 1]: relations among height-i columns, i = 1..n.
    std::vector<std::uint64_t> grassmann;
    /// Relations between columns of different heights.
    std::uint64_t incidence = 0;

    [[nodiscard]] std::uint64_t total() const;
};

/// The j = 0 and j >= 1 slices of the triple sum.
PluckerCounts plucker_counts(int n, int m);

struct StraightenResult {
    Tableau tableau;
    std::size_t steps = 0;
};

/// Rewrites incomparable pairs {x, y} -> {x meet y, x join y} until the
/// multiset is a chain and returns the tableau with that chain as columns.
/// Without a seed the first incomparable pair (in multiset position order) is
/// rewritten; with a seed pairs are chosen uniformly at random. Throws
/// InternalError past |w|^2 * n * m steps.
StraightenResult straighten_with_stats(const MonomialWord& word, Bound bound,
                                       std::optional<std::uint64_t> seed = std::nullopt);

Tableau straighten(const MonomialWord& word, Bound bound, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace tabalg
