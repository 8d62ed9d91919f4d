#pragma once

#include "tabalg/rational.hpp"
#include "tabalg/tableau.hpp"

#include <map>

namespace tabalg {

class SpectrumPoint;

/// A finite formal sum of tableaux with nonzero rational coefficients.
/// The empty sum is zero; {empty tableau -> 1} is the unit.
class AlgebraElement {
public:
    using Terms = std::map<Tableau, Rational>;

    AlgebraElement() = default;

    static AlgebraElement one();
    static AlgebraElement monomial(Tableau t, Rational coeff = 1);

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t num_terms() const noexcept { return terms_.size(); }
    [[nodiscard]] Rational coefficient(const Tableau& t) const;
    [[nodiscard]] bool fits(Bound bound) const;

    /// Adds coeff * t, dropping the term if it cancels.
    void add_term(const Tableau& t, const Rational& coeff);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& scalar);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    /// Bilinear extension of the star product.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    Terms terms_;
};

AlgebraElement scale(const AlgebraElement& f, const Rational& scalar);
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

std::string to_string(const AlgebraElement& f);

/// Linear extensions of the monomial filtration projections.
AlgebraElement project_rows(const AlgebraElement& f, int n_target);
AlgebraElement project_entries(const AlgebraElement& f, int m_target);

/// The ideal generated by SSYT_m(lambda).
struct CrystalIdealSpec {
    Shape lambda;
};

/// Membership in I(lambda): every monomial is divisible by some tableau of
/// shape lambda. Single-column shapes (1^k) reduce to "every monomial has a
/// column of height exactly k".
bool crystal_ideal_member(const AlgebraElement& f, const CrystalIdealSpec& spec, Bound bound);

/// True if the monomial t lies in I(lambda).
bool crystal_ideal_member(const Tableau& t, const CrystalIdealSpec& spec, Bound bound);

/// Some S in SSYT_max_entry(lambda) divides t. The general membership test,
/// used for every shape with more than one column.
bool has_divisor_of_shape(const Tableau& t, const Shape& lambda, int max_entry);

/// column * cofactor lies in I(lambda) although neither factor does.
struct NonPrimalityWitness {
    Column column;
    Tableau cofactor;
};

/// Splits the first column off the highest weight tableau of shape lambda.
/// Throws ShapeIsColumn when lambda has a single column (the ideal is prime),
/// TooManyParts when lambda has more than n parts.
NonPrimalityWitness non_primality_witness(const CrystalIdealSpec& spec, Bound bound);

/// pi_t(f): each monomial evaluates to the product of the coordinates of its
/// columns. Throws IndexMismatch if a column is not a coordinate of t.
Rational eval_element(const AlgebraElement& f, const SpectrumPoint& t);

}  // namespace tabalg
