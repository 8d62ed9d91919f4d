#pragma once

#include "tabalg/tableau.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tabalg {

/// The column generators of the monoid in a bound, sorted by the column
/// order, with the split into E (columns in some product relation) and
/// F (free columns).
class GeneratorSet {
public:
    explicit GeneratorSet(Bound bound);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] const std::vector<Column>& columns() const noexcept { return columns_; }
    [[nodiscard]] std::size_t size() const noexcept { return columns_.size(); }
    /// Indices into columns(), ascending.
    [[nodiscard]] const std::vector<std::size_t>& e_part() const noexcept { return e_part_; }
    [[nodiscard]] const std::vector<std::size_t>& f_part() const noexcept { return f_part_; }
    [[nodiscard]] bool is_free(const Column& c) const;
    [[nodiscard]] std::optional<std::size_t> index_of(const Column& c) const;

    /// Coordinate order for positional spectrum points: E-part then F-part,
    /// each in column order.
    [[nodiscard]] std::vector<Column> point_order() const;

    /// Equals the number of generators.
    [[nodiscard]] std::size_t krull_dimension() const noexcept { return columns_.size(); }

private:
    Bound bound_;
    std::vector<Column> columns_;
    std::vector<std::size_t> e_part_;
    std::vector<std::size_t> f_part_;
};

/// Throws InvalidBounds unless 1 <= n <= m.
GeneratorSet generators(int n, int m);

/// left = first column of T*U (the meet), right = second (the join).
struct ColumnPair {
    Column left;
    Column right;

    [[nodiscard]] const Column& meet() const noexcept { return left; }
    [[nodiscard]] const Column& join() const noexcept { return right; }
    friend bool operator==(const ColumnPair&, const ColumnPair&) = default;
};

ColumnPair meet_join(const Column& t, const Column& u);

/// Lattice order: t <= u iff t is at least as tall and, aligning both at the
/// top, every entry of u is >= the entry of t in the same row.
bool leq(const Column& t, const Column& u);

inline bool comparable(const Column& t, const Column& u) { return leq(t, u) || leq(u, t); }

/// Unordered incomparable pairs {T, U}, emitted once with T before U in
/// column order, sorted.
std::vector<std::pair<Column, Column>> incomparable_pairs(const GeneratorSet& gens);

}  // namespace tabalg
