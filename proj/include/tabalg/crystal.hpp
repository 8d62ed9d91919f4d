#pragma once

#include "tabalg/tableau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tabalg {

/// f_i by the signature rule on the column reading word: each i+1 opens a
/// bracket, each i closes one; f_i raises the rightmost unmatched i.
std::optional<Tableau> crystal_f(const Tableau& t, int i);
/// Lowers the leftmost unmatched i+1.
std::optional<Tableau> crystal_e(const Tableau& t, int i);

/// Row r filled with r. Throws TooManyParts if lambda has more than n parts.
Tableau highest_weight(const Shape& lambda, int n);
/// Column j filled with n - h_j + 1, ..., n. Throws TooManyParts.
Tableau lowest_weight(const Shape& lambda, int n);

struct CrystalEdge {
    std::size_t from = 0;
    int color = 0;
    std::size_t to = 0;

    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

/// The crystal graph on SSYT_n(lambda). Edges are f-arrows, sorted by
/// (from, color).
class CrystalGraph {
public:
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const Shape& lambda() const noexcept { return lambda_; }
    [[nodiscard]] const std::vector<Tableau>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t source() const noexcept { return source_; }
    [[nodiscard]] std::size_t sink() const noexcept { return sink_; }
    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Tableau& t) const;

private:
    friend CrystalGraph build_crystal(const Shape& lambda, int n);

    int n_ = 1;
    Shape lambda_;
    std::vector<Tableau> vertices_;
    std::vector<CrystalEdge> edges_;
    std::map<Tableau, std::size_t> index_;
    std::size_t source_ = 0;
    std::size_t sink_ = 0;
};

/// Enumerates SSYT_n(lambda), adds every f_i edge and checks the graph
/// invariants (e/f inverse, unique source and sink, connected), throwing
/// InternalError on a violation. Throws TooManyParts.
CrystalGraph build_crystal(const Shape& lambda, int n);

/// Vertices reachable from `start` by raising (resp. lowering) operators.
std::set<Tableau> raising_closure(const std::set<Tableau>& start, int n);
std::set<Tableau> lowering_closure(const std::set<Tableau>& start, int n);

/// T' -> T' * t_fixed over SSYT_n(lambda). Throws ShapeMismatch if t_fixed
/// has an entry above n.
std::map<Tableau, Tableau> phi_embed(const Tableau& t_fixed, const Shape& lambda, int n);

struct EmbeddingReport {
    std::size_t vertices = 0;
    bool injective = false;
    /// (x, i, direction) triples where x has an e_i (or f_i) neighbour.
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;

    [[nodiscard]] bool is_embedding() const noexcept { return injective && failures == 0; }
};

/// Checks, for every x and colour i, that e_i(x) defined implies
/// Phi(e_i x) == e_i(Phi x), and the same for f_i.
EmbeddingReport check_embedding(const Tableau& t_fixed, const Shape& lambda, int n);

/// One letter at a time, left to right: the letter bumps the leftmost entry
/// of the row that is strictly larger.
Tableau rsk_row_insert(const Tableau& t, const std::vector<int>& word);
/// The letter bumps the topmost entry of the column that is >= it.
Tableau rsk_col_insert(const Tableau& t, const std::vector<int>& word);

/// g[i - 1][j - 1] = number of entries <= i in row j, for 1 <= j <= i <= n.
class GTPattern {
public:
    /// Throws InterlacingViolated unless rows are triangular, nonnegative and
    /// interlacing.
    explicit GTPattern(std::vector<std::vector<int>> rows);

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    [[nodiscard]] int n() const noexcept { return static_cast<int>(rows_.size()); }

    /// Throws IndexMismatch for patterns of different size.
    friend GTPattern operator+(const GTPattern& a, const GTPattern& b);
    friend bool operator==(const GTPattern&, const GTPattern&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Throws BoundExceeded if t does not fit in n rows with entries <= n.
GTPattern to_gt(const Tableau& t, int n);
Tableau from_gt(const GTPattern& g);

}  // namespace tabalg
