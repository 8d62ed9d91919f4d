#include "tabalg/crystal.hpp"

#include "tabalg/enumerate.hpp"

#include <algorithm>
#include <deque>

namespace tabalg {

namespace {

struct Cell {
    std::size_t row;
    std::size_t col;
};

// Cells in column reading order: up each column, columns left to right.
std::vector<Cell> reading_cells(const Tableau& t) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(t.size()));
    const auto& rows = t.rows();
    for (std::size_t j = 0; j < t.num_columns(); ++j) {
        std::size_t h = 0;
        while (h < rows.size() && rows[h].size() > j) ++h;
        for (std::size_t r = h; r-- > 0;) cells.push_back({r, j});
    }
    return cells;
}

struct Signature {
    std::vector<Cell> unmatched_i;       // left to right
    std::vector<Cell> unmatched_i_plus;  // left to right
};

Signature signature(const Tableau& t, int i) {
    Signature sig;
    for (const Cell& c : reading_cells(t)) {
        const int x = t.rows()[c.row][c.col];
        if (x == i + 1) {
            sig.unmatched_i_plus.push_back(c);
        } else if (x == i) {
            if (sig.unmatched_i_plus.empty()) {
                sig.unmatched_i.push_back(c);
            } else {
                sig.unmatched_i_plus.pop_back();
            }
        }
    }
    return sig;
}

Tableau with_entry(const Tableau& t, Cell c, int value) {
    auto rows = t.rows();
    rows[c.row][c.col] = value;
    return validate(rows);
}

void require_parts(const Shape& lambda, int n) {
    if (n < 1) throw Error(Errc::InvalidBounds, "n must be at least 1");
    if (static_cast<int>(lambda.length()) > n) {
        throw Error(Errc::TooManyParts, to_string(lambda) + " has more than " + std::to_string(n) + " parts");
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::InternalError, what);
}

std::set<Tableau> closure(const std::set<Tableau>& start, int n, bool raising) {
    std::set<Tableau> seen = start;
    std::deque<Tableau> queue(start.begin(), start.end());
    while (!queue.empty()) {
        const Tableau t = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i < n; ++i) {
            auto next = raising ? crystal_e(t, i) : crystal_f(t, i);
            if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
        }
    }
    return seen;
}

}  // namespace

std::optional<Tableau> crystal_f(const Tableau& t, int i) {
    const Signature sig = signature(t, i);
    if (sig.unmatched_i.empty()) return std::nullopt;
    return with_entry(t, sig.unmatched_i.back(), i + 1);
}

std::optional<Tableau> crystal_e(const Tableau& t, int i) {
    const Signature sig = signature(t, i);
    if (sig.unmatched_i_plus.empty()) return std::nullopt;
    return with_entry(t, sig.unmatched_i_plus.front(), i);
}

Tableau highest_weight(const Shape& lambda, int n) {
    require_parts(lambda, n);
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        rows.emplace_back(static_cast<std::size_t>(lambda.part(r)), static_cast<int>(r) + 1);
    }
    return validate(rows);
}

Tableau lowest_weight(const Shape& lambda, int n) {
    require_parts(lambda, n);
    const Shape heights = lambda.conjugate();
    std::vector<Column> cols;
    for (int h : heights.parts()) {
        std::vector<int> entries;
        for (int k = n - h + 1; k <= n; ++k) entries.push_back(k);
        cols.emplace_back(std::move(entries));
    }
    return from_columns(cols);
}

std::optional<std::size_t> CrystalGraph::index_of(const Tableau& t) const {
    const auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CrystalGraph build_crystal(const Shape& lambda, int n) {
    require_parts(lambda, n);
    CrystalGraph g;
    g.n_ = n;
    g.lambda_ = lambda;
    g.vertices_ = ssyt(lambda, n);
    for (std::size_t v = 0; v < g.vertices_.size(); ++v) g.index_.emplace(g.vertices_[v], v);

    const std::size_t count = g.vertices_.size();
    std::vector<bool> has_in(count, false), has_out(count, false);
    std::vector<std::vector<std::size_t>> adjacent(count);
    for (std::size_t v = 0; v < count; ++v) {
        const Tableau& t = g.vertices_[v];
        for (int i = 1; i < n; ++i) {
            if (auto e = crystal_e(t, i)) {
                const auto back = crystal_f(*e, i);
                require(back && *back == t, "e_" + std::to_string(i) + " not inverted by f at " + to_string(t));
            }
            auto f = crystal_f(t, i);
            if (!f) continue;
            const auto to = g.index_of(*f);
            require(to.has_value(), "f_" + std::to_string(i) + " leaves the crystal at " + to_string(t));
            const auto back = crystal_e(*f, i);
            require(back && *back == t, "f_" + std::to_string(i) + " not inverted by e at " + to_string(t));
            g.edges_.push_back(CrystalEdge{v, i, *to});
            has_out[v] = true;
            has_in[*to] = true;
            adjacent[v].push_back(*to);
            adjacent[*to].push_back(v);
        }
    }

    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < count; ++v) {
        if (!has_in[v]) sources.push_back(v);
        if (!has_out[v]) sinks.push_back(v);
    }
    require(sources.size() == 1, std::to_string(sources.size()) + " highest weight vertices");
    require(sinks.size() == 1, std::to_string(sinks.size()) + " lowest weight vertices");
    g.source_ = sources.front();
    g.sink_ = sinks.front();
    require(g.vertices_[g.source_] == highest_weight(lambda, n), "source is not the highest weight tableau");
    require(g.vertices_[g.sink_] == lowest_weight(lambda, n), "sink is not the lowest weight tableau");

    std::vector<bool> seen(count, false);
    std::deque<std::size_t> queue{g.source_};
    seen[g.source_] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adjacent[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            queue.push_back(w);
        }
    }
    require(reached == count, "crystal graph is not connected");
    return g;
}

std::set<Tableau> raising_closure(const std::set<Tableau>& start, int n) { return closure(start, n, true); }

std::set<Tableau> lowering_closure(const std::set<Tableau>& start, int n) { return closure(start, n, false); }

std::map<Tableau, Tableau> phi_embed(const Tableau& t_fixed, const Shape& lambda, int n) {
    if (!t_fixed.fits(Bound{n, n})) {
        throw Error(Errc::ShapeMismatch, to_string(t_fixed) + " is not in SSYT_" + std::to_string(n));
    }
    require_parts(lambda, n);
    std::map<Tableau, Tableau> phi;
    for (const auto& t : ssyt(lambda, n)) phi.emplace(t, star(t, t_fixed));
    return phi;
}

EmbeddingReport check_embedding(const Tableau& t_fixed, const Shape& lambda, int n) {
    const auto phi = phi_embed(t_fixed, lambda, n);
    EmbeddingReport report;
    report.vertices = phi.size();
    std::set<Tableau> images;
    for (const auto& kv : phi) images.insert(kv.second);
    report.injective = images.size() == phi.size();

    const auto check = [&](const Tableau& x, int i, bool raising) {
        const auto step = [&](const Tableau& t) { return raising ? crystal_e(t, i) : crystal_f(t, i); };
        const auto moved = step(x);
        if (!moved) return;
        ++report.checked;
        const auto image_step = step(phi.at(x));
        if (image_step && *image_step == star(*moved, t_fixed)) return;
        ++report.failures;
        if (!report.first_failure) {
            report.first_failure = std::string(raising ? "e_" : "f_") + std::to_string(i) + " at " + to_string(x);
        }
    };
    for (const auto& kv : phi) {
        for (int i = 1; i < n; ++i) {
            check(kv.first, i, true);
            check(kv.first, i, false);
        }
    }
    return report;
}

Tableau rsk_row_insert(const Tableau& t, const std::vector<int>& word) {
    auto rows = t.rows();
    for (int letter : word) {
        int x = letter;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto& row = rows[r];
            const auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    return validate(rows);
}

Tableau rsk_col_insert(const Tableau& t, const std::vector<int>& word) {
    auto rows = t.rows();
    for (int letter : word) {
        int x = letter;
        for (std::size_t j = 0;; ++j) {
            std::size_t h = 0;
            while (h < rows.size() && rows[h].size() > j) ++h;
            std::size_t r = 0;
            while (r < h && rows[r][j] < x) ++r;
            if (r == h) {
                if (h == rows.size()) rows.emplace_back();
                rows[h].push_back(x);
                break;
            }
            std::swap(x, rows[r][j]);
        }
    }
    return validate(rows);
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1) {
            throw Error(Errc::InterlacingViolated, "row " + std::to_string(i + 1) + " of a pattern needs " +
                                                       std::to_string(i + 1) + " entries");
        }
        for (std::size_t j = 0; j <= i; ++j) {
            if (rows_[i][j] < 0) throw Error(Errc::InterlacingViolated, "negative pattern entry");
            if (i == 0) continue;
            const auto& above = rows_[i - 1];
            const bool left_ok = j == i || rows_[i][j] >= above[j];
            const bool right_ok = j == 0 || above[j - 1] >= rows_[i][j];
            if (!left_ok || !right_ok) {
                throw Error(Errc::InterlacingViolated,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") breaks interlacing");
            }
        }
    }
}

GTPattern operator+(const GTPattern& a, const GTPattern& b) {
    if (a.rows_.size() != b.rows_.size()) throw Error(Errc::IndexMismatch, "patterns of different size");
    auto rows = a.rows_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] += b.rows_[i][j];
    }
    return GTPattern(std::move(rows));
}

GTPattern to_gt(const Tableau& t, int n) {
    if (n < 1 || t.max_entry() > n || static_cast<int>(t.num_rows()) > n) {
        throw Error(Errc::BoundExceeded, to_string(t) + " is not in SSYT_" + std::to_string(n));
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto& g = rows[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
            if (j >= t.num_rows()) {
                g.push_back(0);
                continue;
            }
            const auto& row = t.rows()[j];
            g.push_back(static_cast<int>(std::upper_bound(row.begin(), row.end(), i) - row.begin()));
        }
    }
    return GTPattern(std::move(rows));
}

Tableau from_gt(const GTPattern& g) {
    const auto& p = g.rows();
    std::vector<std::vector<int>> rows;
    for (std::size_t j = 0; j < p.size(); ++j) {
        std::vector<int> row;
        for (std::size_t i = j; i < p.size(); ++i) {
            const int below = i > j ? p[i - 1][j] : 0;
            row.insert(row.end(), static_cast<std::size_t>(p[i][j] - below), static_cast<int>(i) + 1);
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return validate(rows);
}

}  // namespace tabalg
