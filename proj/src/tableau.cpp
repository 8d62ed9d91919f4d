#include "tabalg/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tabalg {

namespace {

std::string join(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string grid_to_string(const std::vector<std::vector<int>>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += "[" + join(rows[i], ',') + "]";
    }
    return out + "]";
}

}  // namespace

void check_bound(Bound bound) {
    if (bound.n < 1 || bound.n > bound.m) {
        throw Error(Errc::InvalidBounds,
                    "need 1 <= n <= m, got n=" + std::to_string(bound.n) + " m=" + std::to_string(bound.m));
    }
}

// Shape

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
            throw Error(Errc::ShapeNotPartition, "(" + join(parts_, ',') + ")");
        }
    }
}

int Shape::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Shape Shape::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Shape{};
    for (int j = 0; j < parts_.front(); ++j) {
        int h = 0;
        while (h < static_cast<int>(parts_.size()) && parts_[h] > j) ++h;
        out.push_back(h);
    }
    return Shape(std::move(out));
}

Shape operator+(const Shape& a, const Shape& b) {
    std::vector<int> out(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.part(i) + b.part(i);
    return Shape(std::move(out));
}

std::string to_string(const Shape& shape) { return "(" + join(shape.parts(), ',') + ")"; }

// Column

Column::Column(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(Errc::InvalidColumn, "empty column");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || (i > 0 && entries_[i - 1] >= entries_[i])) {
            throw Error(Errc::InvalidColumn, "[" + join(entries_, ',') + "]");
        }
    }
}

std::vector<int> Column::reading_word() const { return {entries_.rbegin(), entries_.rend()}; }

bool Column::fits(Bound bound) const noexcept { return height() <= bound.n && bottom() <= bound.m; }

std::strong_ordering operator<=>(const Column& a, const Column& b) {
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.rbegin(), a.entries_.rend(), b.entries_.rbegin(),
                                                  b.entries_.rend());
}

std::string to_string(const Column& column) { return "[" + join(column.entries(), ',') + "]"; }

Column standard_column(int k) {
    std::vector<int> e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), 1);
    return Column(std::move(e));
}

// Tableau

int Tableau::size() const noexcept {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

int Tableau::max_entry() const noexcept {
    int mx = 0;
    for (const auto& r : rows_) {
        if (!r.empty()) mx = std::max(mx, r.back());
    }
    return mx;
}

Shape Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Shape(std::move(parts));
}

bool Tableau::fits(Bound bound) const noexcept {
    return static_cast<int>(rows_.size()) <= bound.n && max_entry() <= bound.m;
}

Column Tableau::column(std::size_t j) const {
    std::vector<int> e;
    for (const auto& r : rows_) {
        if (j >= r.size()) break;
        e.push_back(r[j]);
    }
    return Column(std::move(e));
}

std::vector<Column> Tableau::columns() const {
    std::vector<Column> out;
    out.reserve(num_columns());
    for (std::size_t j = 0; j < num_columns(); ++j) out.push_back(column(j));
    return out;
}

std::string to_string(const Tableau& t) { return grid_to_string(t.rows()); }

Tableau validate(const std::vector<std::vector<int>>& rows, std::optional<Bound> bound) {
    if (bound) check_bound(*bound);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty() || (i > 0 && rows[i].size() > rows[i - 1].size())) {
            throw Error(Errc::ShapeNotPartition, grid_to_string(rows));
        }
    }
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] < 1 || (bound && r[j] > bound->m)) {
                throw Error(Errc::EntryOutOfRange, "entry " + std::to_string(r[j]) + " in " + grid_to_string(rows));
            }
            if (j > 0 && r[j - 1] > r[j]) throw Error(Errc::RowNotWeaklyIncreasing, grid_to_string(rows));
        }
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i - 1][j] >= rows[i][j]) throw Error(Errc::ColumnNotStrictlyIncreasing, grid_to_string(rows));
        }
    }
    if (bound && static_cast<int>(rows.size()) > bound->n) {
        throw Error(Errc::EntryOutOfRange, "more than n=" + std::to_string(bound->n) + " rows in " + grid_to_string(rows));
    }
    Tableau t;
    t.rows_ = rows;
    return t;
}

Tableau from_columns(std::span<const Column> columns) {
    std::vector<std::vector<int>> rows;
    for (const auto& c : columns) {
        const auto& e = c.entries();
        if (rows.size() < e.size()) rows.resize(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) rows[i].push_back(e[i]);
    }
    // Rows are filled without gaps, so validate alone would miss a rising height.
    for (std::size_t j = 1; j < columns.size(); ++j) {
        if (columns[j].height() > columns[j - 1].height()) {
            throw Error(Errc::ShapeNotPartition, "column heights not weakly decreasing");
        }
    }
    return validate(rows);
}

Tableau column_tableau(const Column& column) {
    const Column one[] = {column};
    return from_columns(one);
}

Tableau star(const Tableau& t, const Tableau& u) {
    Tableau out;
    out.rows_.resize(std::max(t.num_rows(), u.num_rows()));
    for (std::size_t i = 0; i < out.rows_.size(); ++i) {
        auto& row = out.rows_[i];
        if (i < t.num_rows()) row.insert(row.end(), t.rows_[i].begin(), t.rows_[i].end());
        if (i < u.num_rows()) {
            const auto mid = row.size();
            row.insert(row.end(), u.rows_[i].begin(), u.rows_[i].end());
            std::inplace_merge(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(mid), row.end());
        }
    }
    return out;
}

Tableau star(const Tableau& t, const Tableau& u, Bound bound) {
    Tableau out = star(t, u);
    if (!out.fits(bound)) throw Error(Errc::BoundExceeded, to_string(out));
    return out;
}

Tableau star_all(std::span<const Tableau> factors) {
    Tableau acc;
    for (const auto& f : factors) acc = star(acc, f);
    return acc;
}

// WeightMatrix

WeightMatrix::WeightMatrix(Bound bound)
    : bound_(bound), counts_(static_cast<std::size_t>(bound.n) * static_cast<std::size_t>(bound.m), 0) {}

int WeightMatrix::count(std::size_t row, int entry) const {
    return counts_.at(row * static_cast<std::size_t>(bound_.m) + static_cast<std::size_t>(entry - 1));
}

void WeightMatrix::set(std::size_t row, int entry, int value) {
    counts_.at(row * static_cast<std::size_t>(bound_.m) + static_cast<std::size_t>(entry - 1)) = value;
}

int WeightMatrix::row_sum(std::size_t row) const {
    int s = 0;
    for (int j = 1; j <= bound_.m; ++j) s += count(row, j);
    return s;
}

std::vector<int> WeightMatrix::content() const {
    std::vector<int> out(static_cast<std::size_t>(bound_.m), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(bound_.n); ++i) {
        for (int j = 1; j <= bound_.m; ++j) out[static_cast<std::size_t>(j - 1)] += count(i, j);
    }
    return out;
}

WeightMatrix operator+(const WeightMatrix& a, const WeightMatrix& b) {
    if (!(a.bound_ == b.bound_)) throw Error(Errc::IndexMismatch, "weight matrices of different bounds");
    WeightMatrix out(a.bound_);
    for (std::size_t k = 0; k < a.counts_.size(); ++k) out.counts_[k] = a.counts_[k] + b.counts_[k];
    return out;
}

WeightMatrix weight_matrix(const Tableau& t, Bound bound) {
    if (!t.fits(bound)) throw Error(Errc::BoundExceeded, to_string(t));
    WeightMatrix w(bound);
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (int x : t.rows()[i]) w.set(i, x, w.count(i, x) + 1);
    }
    return w;
}

// Reading words

ReadingWord reading_word(const Tableau& t, ReadingKind kind) {
    ReadingWord w{{}, kind};
    w.letters.reserve(static_cast<std::size_t>(t.size()));
    if (kind == ReadingKind::Column) {
        for (std::size_t j = 0; j < t.num_columns(); ++j) {
            for (std::size_t i = t.num_rows(); i-- > 0;) {
                if (j < t.rows()[i].size()) w.letters.push_back(t.rows()[i][j]);
            }
        }
    } else {
        for (const auto& r : t.rows()) w.letters.insert(w.letters.end(), r.rbegin(), r.rend());
    }
    return w;
}

Tableau from_reading_word(const ReadingWord& word, const Shape& shape) {
    if (static_cast<int>(word.letters.size()) != shape.size()) {
        throw Error(Errc::ShapeMismatch, "word length does not match shape " + to_string(shape));
    }
    std::vector<std::vector<int>> rows(shape.length());
    std::size_t k = 0;
    if (word.kind == ReadingKind::Column) {
        const Shape heights = shape.conjugate();
        for (int h : heights.parts()) {
            for (int i = h - 1; i >= 0; --i) rows[static_cast<std::size_t>(i)].push_back(word.letters[k++]);
        }
    } else {
        for (std::size_t i = 0; i < shape.length(); ++i) {
            const auto len = static_cast<std::size_t>(shape.part(i));
            rows[i].assign(word.letters.begin() + static_cast<std::ptrdiff_t>(k),
                           word.letters.begin() + static_cast<std::ptrdiff_t>(k + len));
            std::reverse(rows[i].begin(), rows[i].end());
            k += len;
        }
    }
    return validate(rows);
}

// Orders

std::strong_ordering compare_tableaux(const Tableau& t, const Tableau& u) {
    if (auto c = t.num_columns() <=> u.num_columns(); c != 0) return c;
    for (std::size_t j = 0; j < t.num_columns(); ++j) {
        if (auto c = t.column(j) <=> u.column(j); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_tableaux_by_rows(const Tableau& t, const Tableau& u) {
    if (auto c = t.size() <=> u.size(); c != 0) return c;
    if (auto c = u.shape().parts() <=> t.shape().parts(); c != 0) return c;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        if (auto c = t.rows()[i] <=> u.rows()[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// Division and projections

std::optional<Tableau> try_divide(const Tableau& t, const Tableau& s) {
    if (s.num_rows() > t.num_rows()) return std::nullopt;
    std::vector<std::vector<int>> rows(t.num_rows());
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        const auto& tr = t.rows()[i];
        static const std::vector<int> none;
        const auto& sr = i < s.num_rows() ? s.rows()[i] : none;
        // Rows are sorted, so the multiset difference is a sorted set difference.
        if (!std::includes(tr.begin(), tr.end(), sr.begin(), sr.end())) return std::nullopt;
        std::set_difference(tr.begin(), tr.end(), sr.begin(), sr.end(), std::back_inserter(rows[i]));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    try {
        Tableau q = validate(rows);
        if (star(s, q) != t) return std::nullopt;
        return q;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<Tableau> project_rows(const Tableau& t, int n_target) {
    if (static_cast<int>(t.num_rows()) > n_target) return std::nullopt;
    return t;
}

std::optional<Tableau> project_entries(const Tableau& t, int m_target) {
    if (t.max_entry() > m_target) return std::nullopt;
    return t;
}

}  // namespace tabalg
