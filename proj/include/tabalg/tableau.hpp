#pragma once

#include "tabalg/error.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tabalg {

/// The (n, m) context: at most n rows, entries in {1..m}, 1 <= n <= m.
struct Bound {
    int n = 1;
    int m = 1;

    friend bool operator==(const Bound&, const Bound&) = default;
    friend auto operator<=>(const Bound&, const Bound&) = default;
};

/// Throws InvalidBounds unless 1 <= n <= m.
void check_bound(Bound bound);

/// A partition: weakly decreasing positive parts, no trailing zeros.
class Shape {
public:
    Shape() = default;
    /// Trailing zeros are dropped; any other violation throws ShapeNotPartition.
    explicit Shape(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// The i-th part, or 0 past the end.
    [[nodiscard]] int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] Shape conjugate() const;

    friend Shape operator+(const Shape& a, const Shape& b);
    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Shape& shape);

/// A strictly increasing, nonempty list of entries, read top to bottom.
class Column {
public:
    /// Throws InvalidColumn if empty, not strictly increasing, or has an entry < 1.
    explicit Column(std::vector<int> entries);

    [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
    [[nodiscard]] int height() const noexcept { return static_cast<int>(entries_.size()); }
    [[nodiscard]] int top() const noexcept { return entries_.front(); }
    [[nodiscard]] int bottom() const noexcept { return entries_.back(); }
    /// Entries read bottom to top.
    [[nodiscard]] std::vector<int> reading_word() const;
    [[nodiscard]] bool fits(Bound bound) const noexcept;

    friend bool operator==(const Column&, const Column&) = default;
    /// Shorter columns first; equal heights compare by reading word.
    friend std::strong_ordering operator<=>(const Column& a, const Column& b);

private:
    std::vector<int> entries_;
};

std::string to_string(const Column& column);

/// The column [1, 2, ..., k].
Column standard_column(int k);

/// A semistandard Young tableau, stored as its rows. Always valid once built.
class Tableau {
public:
    /// The empty tableau, the monoid identity.
    Tableau() = default;

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t num_rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t num_columns() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int max_entry() const noexcept;
    [[nodiscard]] Shape shape() const;
    [[nodiscard]] bool fits(Bound bound) const noexcept;

    /// Columns left to right.
    [[nodiscard]] std::vector<Column> columns() const;
    [[nodiscard]] Column column(std::size_t j) const;

    /// Container ordering on the row grid. Not the tableau order of
    /// compare_tableaux; use that for anything mathematical.
    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    friend Tableau validate(const std::vector<std::vector<int>>& rows, std::optional<Bound> bound);
    friend Tableau star(const Tableau& t, const Tableau& u);
    friend Tableau from_columns(std::span<const Column> columns);

    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);

/// Checks the shape, row and column conditions (and the bound, if given).
Tableau validate(const std::vector<std::vector<int>>& rows, std::optional<Bound> bound = std::nullopt);

/// Tableau whose columns are `columns`, left to right. Throws if they do not
/// form a valid tableau.
Tableau from_columns(std::span<const Column> columns);

Tableau column_tableau(const Column& column);

/// Row-wise concatenation followed by sorting each row.
Tableau star(const Tableau& t, const Tableau& u);
/// As star, throwing BoundExceeded if the product leaves the bound.
Tableau star(const Tableau& t, const Tableau& u, Bound bound);
Tableau star_all(std::span<const Tableau> factors);

/// counts(i, j) = number of j's in row i. Rows are 0-based, entries 1..m.
class WeightMatrix {
public:
    explicit WeightMatrix(Bound bound);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] int count(std::size_t row, int entry) const;
    void set(std::size_t row, int entry, int value);
    [[nodiscard]] int row_sum(std::size_t row) const;
    /// Column sums: the crystal weight (number of j's in T for each j).
    [[nodiscard]] std::vector<int> content() const;

    friend WeightMatrix operator+(const WeightMatrix& a, const WeightMatrix& b);
    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    Bound bound_;
    std::vector<int> counts_;
};

WeightMatrix weight_matrix(const Tableau& t, Bound bound);

enum class ReadingKind { Column, Row };

struct ReadingWord {
    std::vector<int> letters;
    ReadingKind kind = ReadingKind::Column;

    friend bool operator==(const ReadingWord&, const ReadingWord&) = default;
};

/// Column kind: up each column, columns left to right.
/// Row kind: each row right to left, rows top to bottom.
ReadingWord reading_word(const Tableau& t, ReadingKind kind);
/// Inverse of reading_word given the shape.
Tableau from_reading_word(const ReadingWord& word, const Shape& shape);

/// Fewer columns first, then columns compared left to right.
std::strong_ordering compare_tableaux(const Tableau& t, const Tableau& u);

/// Row variant of the tableau order, compatible with the monomial order on
/// Omega images: fewer cells first, then the longer leading rows first, then
/// the concatenated rows lexicographically.
std::strong_ordering compare_tableaux_by_rows(const Tableau& t, const Tableau& u);

/// The unique U with star(s, U) == t, if any.
std::optional<Tableau> try_divide(const Tableau& t, const Tableau& s);

/// Monomial parts of the filtration projections: T survives when it has no
/// cell in row n (resp. no entry m), otherwise it maps to zero (nullopt).
std::optional<Tableau> project_rows(const Tableau& t, int n_target);
std::optional<Tableau> project_entries(const Tableau& t, int m_target);

}  // namespace tabalg
