#include "tabalg/algebra.hpp"

#include "tabalg/crystal.hpp"
#include "tabalg/enumerate.hpp"
#include "tabalg/spectra.hpp"

#include <algorithm>

namespace tabalg {

AlgebraElement AlgebraElement::one() { return monomial(Tableau{}); }

AlgebraElement AlgebraElement::monomial(Tableau t, Rational coeff) {
    AlgebraElement f;
    f.add_term(t, coeff);
    return f;
}

Rational AlgebraElement::coefficient(const Tableau& t) const {
    const auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::fits(Bound bound) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first.fits(bound); });
}

void AlgebraElement::add_term(const Tableau& t, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    for (const auto& [t, c] : other.terms_) add_term(t, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= scalar;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [t, c] : a.terms_) {
        for (const auto& [u, d] : b.terms_) out.add_term(star(t, u), c * d);
    }
    return out;
}

AlgebraElement scale(const AlgebraElement& f, const Rational& scalar) { return f * scalar; }

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) { return f * g; }

std::string to_string(const AlgebraElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [t, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + to_string(t);
    }
    return out;
}

AlgebraElement project_rows(const AlgebraElement& f, int n_target) {
    AlgebraElement out;
    for (const auto& [t, c] : f.terms()) {
        if (auto p = project_rows(t, n_target)) out.add_term(*p, c);
    }
    return out;
}

AlgebraElement project_entries(const AlgebraElement& f, int m_target) {
    AlgebraElement out;
    for (const auto& [t, c] : f.terms()) {
        if (auto p = project_entries(t, m_target)) out.add_term(*p, c);
    }
    return out;
}

namespace {

bool is_single_column(const Shape& lambda) { return !lambda.empty() && lambda.part(0) == 1; }

void check_spec(const CrystalIdealSpec& spec, Bound bound) {
    check_bound(bound);
    if (static_cast<int>(spec.lambda.length()) > bound.n) {
        throw Error(Errc::TooManyParts, to_string(spec.lambda) + " has more than n=" + std::to_string(bound.n) + " parts");
    }
}

}  // namespace

bool has_divisor_of_shape(const Tableau& t, const Shape& lambda, int max_entry) {
    const Shape mu = t.shape();
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (lambda.part(i) > mu.part(i)) return false;
    }
    // A divisor only uses entries that occur in t.
    const int top = std::min(max_entry, t.max_entry());
    for (const auto& s : ssyt(lambda, top)) {
        if (try_divide(t, s)) return true;
    }
    return false;
}

bool crystal_ideal_member(const Tableau& t, const CrystalIdealSpec& spec, Bound bound) {
    check_spec(spec, bound);
    if (spec.lambda.empty()) return true;
    if (is_single_column(spec.lambda)) {
        const int k = static_cast<int>(spec.lambda.length());
        const auto heights = t.shape().conjugate().parts();
        return std::find(heights.begin(), heights.end(), k) != heights.end();
    }
    return has_divisor_of_shape(t, spec.lambda, bound.m);
}

bool crystal_ideal_member(const AlgebraElement& f, const CrystalIdealSpec& spec, Bound bound) {
    check_spec(spec, bound);
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& kv) { return crystal_ideal_member(kv.first, spec, bound); });
}

NonPrimalityWitness non_primality_witness(const CrystalIdealSpec& spec, Bound bound) {
    check_spec(spec, bound);
    if (spec.lambda.empty() || is_single_column(spec.lambda)) {
        throw Error(Errc::ShapeIsColumn, to_string(spec.lambda) + " generates a prime ideal");
    }
    const Tableau top = highest_weight(spec.lambda, bound.n);
    auto cols = top.columns();
    Column first = cols.front();
    cols.erase(cols.begin());
    return NonPrimalityWitness{std::move(first), from_columns(cols)};
}

Rational eval_element(const AlgebraElement& f, const SpectrumPoint& t) {
    Rational total = 0;
    for (const auto& [tab, c] : f.terms()) {
        Rational v = c;
        for (const auto& col : tab.columns()) v *= t.at(col);
        total += v;
    }
    return total;
}

}  // namespace tabalg
