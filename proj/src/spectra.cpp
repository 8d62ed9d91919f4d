#include "tabalg/spectra.hpp"

#include <algorithm>

namespace tabalg {

namespace {

std::size_t flat_index(Bound b, std::size_t row, int entry) {
    if (row >= static_cast<std::size_t>(b.n) || entry < 1 || entry > b.m) {
        throw Error(Errc::IndexMismatch, "position (" + std::to_string(row) + "," + std::to_string(entry) +
                                             ") outside " + std::to_string(b.n) + "x" + std::to_string(b.m));
    }
    return row * static_cast<std::size_t>(b.m) + static_cast<std::size_t>(entry - 1);
}

}  // namespace

// ExponentMatrix

ExponentMatrix::ExponentMatrix(Bound bound)
    : bound_(bound), exps_(static_cast<std::size_t>(bound.n) * static_cast<std::size_t>(bound.m), 0) {}

int ExponentMatrix::at(std::size_t row, int entry) const { return exps_[flat_index(bound_, row, entry)]; }

void ExponentMatrix::set(std::size_t row, int entry, int value) { exps_[flat_index(bound_, row, entry)] = value; }

int ExponentMatrix::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool ExponentMatrix::divides(const ExponentMatrix& other) const {
    if (!(bound_ == other.bound_)) return false;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
}

ExponentMatrix operator+(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (!(a.bound_ == b.bound_)) throw Error(Errc::IndexMismatch, "exponent matrices of different bounds");
    ExponentMatrix out(a.bound_);
    for (std::size_t k = 0; k < a.exps_.size(); ++k) out.exps_[k] = a.exps_[k] + b.exps_[k];
    return out;
}

std::strong_ordering compare_monomials(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const auto variables = [](const ExponentMatrix& e) {
        std::pair<std::vector<int>, std::vector<int>> seq;
        for (std::size_t i = 0; i < static_cast<std::size_t>(e.bound().n); ++i) {
            for (int j = 1; j <= e.bound().m; ++j) {
                for (int r = 0; r < e.at(i, j); ++r) {
                    seq.first.push_back(static_cast<int>(i));
                    seq.second.push_back(j);
                }
            }
        }
        return seq;
    };
    const auto va = variables(a);
    const auto vb = variables(b);
    if (auto c = va.first <=> vb.first; c != 0) return c;
    return va.second <=> vb.second;
}

ExponentMatrix omega(const Tableau& t, Bound bound) {
    if (!t.fits(bound)) throw Error(Errc::BoundExceeded, to_string(t));
    ExponentMatrix e(bound);
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (int x : t.rows()[i]) e.set(i, x, e.at(i, x) + 1);
    }
    return e;
}

Polynomial omega_elem(const AlgebraElement& f, Bound bound) {
    Polynomial p;
    for (const auto& [t, c] : f.terms()) p.emplace(omega(t, bound), c);
    return p;
}

// EvaluationPoint

EvaluationPoint::EvaluationPoint(Bound bound)
    : bound_(bound), alpha_(static_cast<std::size_t>(bound.n) * static_cast<std::size_t>(bound.m), Rational(1)) {
    check_bound(bound);
}

EvaluationPoint::EvaluationPoint(Bound bound, std::vector<std::vector<Rational>> rows) : EvaluationPoint(bound) {
    if (rows.size() != static_cast<std::size_t>(bound.n)) {
        throw Error(Errc::IndexMismatch, "alpha needs " + std::to_string(bound.n) + " rows");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != static_cast<std::size_t>(bound.m)) {
            throw Error(Errc::IndexMismatch, "alpha rows need " + std::to_string(bound.m) + " entries");
        }
        for (int j = 1; j <= bound.m; ++j) set(i, j, std::move(rows[i][static_cast<std::size_t>(j - 1)]));
    }
}

const Rational& EvaluationPoint::at(std::size_t row, int entry) const { return alpha_[flat_index(bound_, row, entry)]; }

void EvaluationPoint::set(std::size_t row, int entry, Rational value) {
    alpha_[flat_index(bound_, row, entry)] = std::move(value);
}

bool EvaluationPoint::is_ordinary() const {
    return std::none_of(alpha_.begin(), alpha_.end(), [](const Rational& a) { return a == 0; });
}

Rational evaluate(const Polynomial& p, const EvaluationPoint& alpha) {
    Rational total = 0;
    for (const auto& [e, c] : p) {
        if (!(e.bound() == alpha.bound())) throw Error(Errc::IndexMismatch, "polynomial and point bounds differ");
        Rational v = c;
        for (std::size_t i = 0; i < static_cast<std::size_t>(e.bound().n); ++i) {
            for (int j = 1; j <= e.bound().m; ++j) {
                for (int r = 0; r < e.at(i, j); ++r) v *= alpha.at(i, j);
            }
        }
        total += v;
    }
    return total;
}

// SpectrumPoint

SpectrumPoint::SpectrumPoint(Bound bound, std::map<Column, Rational> coords) : bound_(bound), coords_(std::move(coords)) {
    const GeneratorSet gens(bound);
    bool same = coords_.size() == gens.size();
    if (same) {
        std::size_t k = 0;
        for (const auto& kv : coords_) same = same && kv.first == gens.columns()[k++];
    }
    if (!same) throw Error(Errc::IndexMismatch, "spectrum point coordinates must be exactly the generators");
}

SpectrumPoint SpectrumPoint::from_point_order(Bound bound, const std::vector<Rational>& values) {
    const auto order = GeneratorSet(bound).point_order();
    if (order.size() != values.size()) {
        throw Error(Errc::IndexMismatch, "expected " + std::to_string(order.size()) + " coordinates");
    }
    std::map<Column, Rational> coords;
    for (std::size_t k = 0; k < order.size(); ++k) coords.emplace(order[k], values[k]);
    return SpectrumPoint(bound, std::move(coords));
}

const Rational& SpectrumPoint::at(const Column& c) const {
    const auto it = coords_.find(c);
    if (it == coords_.end()) throw Error(Errc::IndexMismatch, "no coordinate for column " + to_string(c));
    return it->second;
}

std::vector<Rational> SpectrumPoint::in_point_order() const {
    std::vector<Rational> out;
    for (const auto& c : GeneratorSet(bound_).point_order()) out.push_back(at(c));
    return out;
}

bool SpectrumPoint::is_ordinary() const {
    return std::none_of(coords_.begin(), coords_.end(), [](const auto& kv) { return kv.second == 0; });
}

RelationViolatedError::RelationViolatedError(Relation relation)
    : Error(Errc::RelationViolated, to_string(relation)), relation_(std::move(relation)) {}

std::optional<Relation> first_violated_relation(const SpectrumPoint& t) {
    for (auto& r : minimal_relations(t.bound().n, t.bound().m)) {
        if (t.at(r.lhs.first) * t.at(r.lhs.second) != t.at(r.rhs.first) * t.at(r.rhs.second)) return r;
    }
    return std::nullopt;
}

SpectrumPoint validate_spectrum_point(const std::map<Column, Rational>& coords, Bound bound) {
    SpectrumPoint t(bound, coords);
    if (auto r = first_violated_relation(t)) throw RelationViolatedError(*r);
    return t;
}

SpectrumPoint psi(const EvaluationPoint& alpha) {
    const GeneratorSet gens(alpha.bound());
    std::map<Column, Rational> coords;
    for (const auto& c : gens.columns()) {
        Rational v = 1;
        for (std::size_t i = 0; i < c.entries().size(); ++i) v *= alpha.at(i, c.entries()[i]);
        coords.emplace(c, std::move(v));
    }
    return SpectrumPoint(alpha.bound(), std::move(coords));
}

bool in_image_psi(const SpectrumPoint& t) {
    if (t.is_ordinary()) return true;
    // Omega(C) divides Omega(C') iff C is a top segment of C'.
    const auto is_top_segment = [](const Column& c, const Column& d) {
        return c.height() <= d.height() && std::equal(c.entries().begin(), c.entries().end(), d.entries().begin());
    };
    for (const auto& [c, v] : t.coords()) {
        if (v != 0) continue;
        for (const auto& [d, w] : t.coords()) {
            if (w != 0 && is_top_segment(c, d)) return false;
        }
    }
    return true;
}

EvaluationPoint psi_preimage(const SpectrumPoint& t) {
    if (!t.is_ordinary()) throw Error(Errc::NotOrdinary, "psi_preimage needs every coordinate nonzero");
    const Bound b = t.bound();
    EvaluationPoint beta(b);
    std::vector<bool> assigned(static_cast<std::size_t>(b.n) * static_cast<std::size_t>(b.m), false);
    // Coordinates iterate in column order, so every shorter column is done first.
    for (const auto& [c, value] : t.coords()) {
        const auto& e = c.entries();
        const std::size_t h = e.size() - 1;
        Rational prefix = 1;
        for (std::size_t i = 0; i < h; ++i) prefix *= beta.at(i, e[i]);
        Rational entry = value / prefix;
        const std::size_t slot = h * static_cast<std::size_t>(b.m) + static_cast<std::size_t>(e[h] - 1);
        if (assigned[slot]) {
            if (beta.at(h, e[h]) != entry) {
                throw Error(Errc::InternalError, "inconsistent preimage at column " + to_string(c) +
                                                     "; the point is not on the variety");
            }
            continue;
        }
        beta.set(h, e[h], std::move(entry));
        assigned[slot] = true;
    }
    return beta;
}

SpectrumPoint ordinary_group_op(const SpectrumPoint& t, const SpectrumPoint& s) {
    if (!t.is_ordinary() || !s.is_ordinary()) throw Error(Errc::NotOrdinary, "group operation needs ordinary points");
    if (!(t.bound() == s.bound())) throw Error(Errc::IndexMismatch, "points of different bounds");
    std::map<Column, Rational> coords;
    for (const auto& [c, v] : t.coords()) coords.emplace(c, v * s.at(c));
    return SpectrumPoint(t.bound(), std::move(coords));
}

SpectrumPoint ordinary_inverse(const SpectrumPoint& t) {
    if (!t.is_ordinary()) throw Error(Errc::NotOrdinary, "only ordinary points are invertible");
    std::map<Column, Rational> coords;
    for (const auto& [c, v] : t.coords()) coords.emplace(c, 1 / v);
    return SpectrumPoint(t.bound(), std::move(coords));
}

SpectrumPoint ones_point(Bound bound) { return psi(EvaluationPoint(bound)); }

bool basic_open_member(const AlgebraElement& f, const SpectrumPoint& t) { return eval_element(f, t) != 0; }

bool basic_open_member_poly(const AlgebraElement& f, const EvaluationPoint& alpha) {
    return evaluate(omega_elem(f, alpha.bound()), alpha) != 0;
}

}  // namespace tabalg
