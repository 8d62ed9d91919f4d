#include "tabalg/enumerate.hpp"

#include <algorithm>

namespace tabalg {

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur, std::vector<Shape>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

struct Filler {
    const Shape& shape;
    Shape heights;
    int max_entry;
    std::vector<std::vector<int>> rows;
    std::vector<Tableau>& out;

    void fill(std::size_t i, std::size_t j) {
        if (i == shape.length()) {
            out.push_back(validate(rows));
            return;
        }
        if (j == static_cast<std::size_t>(shape.part(i))) {
            fill(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        // Cells below still need strictly larger entries.
        const int hi = max_entry - (heights.part(j) - 1 - static_cast<int>(i));
        for (int v = lo; v <= hi; ++v) {
            rows[i].push_back(v);
            fill(i, j + 1);
            rows[i].pop_back();
        }
    }
};

}  // namespace

std::vector<Shape> partitions(int size, int max_parts) {
    std::vector<Shape> out;
    std::vector<int> cur;
    partitions_rec(size, size, max_parts, cur, out);
    return out;
}

std::vector<Shape> partitions_up_to(int max_size, int max_parts) {
    std::vector<Shape> out;
    for (int k = 0; k <= max_size; ++k) {
        auto p = partitions(k, max_parts);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::vector<Tableau> ssyt(const Shape& shape, int max_entry) {
    std::vector<Tableau> out;
    if (static_cast<int>(shape.length()) > max_entry) return out;
    Filler f{shape, shape.conjugate(), max_entry, std::vector<std::vector<int>>(shape.length()), out};
    f.fill(0, 0);
    return out;
}

std::vector<Tableau> ssyt_up_to(Bound bound, int max_cells) {
    check_bound(bound);
    std::vector<Tableau> out;
    for (const auto& shape : partitions_up_to(max_cells, bound.n)) {
        auto part = ssyt(shape, bound.m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace tabalg
