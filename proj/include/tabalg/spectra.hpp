#pragma once

#include "tabalg/algebra.hpp"
#include "tabalg/lattice.hpp"
#include "tabalg/rational.hpp"
#include "tabalg/relations.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace tabalg {

/// Exponents of a monomial in the variables x_j^(i): exps(i, j) for rows
/// i = 0..n-1 and entries j = 1..m.
class ExponentMatrix {
public:
    explicit ExponentMatrix(Bound bound);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] int at(std::size_t row, int entry) const;
    void set(std::size_t row, int entry, int value);
    [[nodiscard]] int degree() const;
    /// Entrywise <=.
    [[nodiscard]] bool divides(const ExponentMatrix& other) const;

    friend ExponentMatrix operator+(const ExponentMatrix& a, const ExponentMatrix& b);
    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
    /// Container ordering only; see compare_monomials for the monomial order.
    friend auto operator<=>(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
    Bound bound_;
    std::vector<int> exps_;
};

/// Monomial order on k[X]: variables ordered by (row, entry); monomials are
/// compared by degree, then by the sorted sequence of rows of their
/// variables, then by the matching sequence of entries.
std::strong_ordering compare_monomials(const ExponentMatrix& a, const ExponentMatrix& b);

using Polynomial = std::map<ExponentMatrix, Rational>;

ExponentMatrix omega(const Tableau& t, Bound bound);
Polynomial omega_elem(const AlgebraElement& f, Bound bound);

/// An n x m grid alpha(i, j) of rationals, rows 0-based, entries 1..m.
class EvaluationPoint {
public:
    explicit EvaluationPoint(Bound bound);
    /// rows.size() == n and each row has m values; otherwise IndexMismatch.
    EvaluationPoint(Bound bound, std::vector<std::vector<Rational>> rows);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] const Rational& at(std::size_t row, int entry) const;
    void set(std::size_t row, int entry, Rational value);
    [[nodiscard]] bool is_ordinary() const;

    friend bool operator==(const EvaluationPoint&, const EvaluationPoint&) = default;

private:
    Bound bound_;
    std::vector<Rational> alpha_;
};

/// ev_alpha on k[X].
Rational evaluate(const Polynomial& p, const EvaluationPoint& alpha);

/// A coordinate for every generator column. Construction only checks the
/// index set; use validate_spectrum_point for the relation check.
class SpectrumPoint {
public:
    /// Throws IndexMismatch unless the keys are exactly the generators.
    SpectrumPoint(Bound bound, std::map<Column, Rational> coords);

    /// Values listed in GeneratorSet::point_order().
    static SpectrumPoint from_point_order(Bound bound, const std::vector<Rational>& values);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] const std::map<Column, Rational>& coords() const noexcept { return coords_; }
    /// Throws IndexMismatch for a column outside the generator set.
    [[nodiscard]] const Rational& at(const Column& c) const;
    [[nodiscard]] std::vector<Rational> in_point_order() const;
    [[nodiscard]] bool is_ordinary() const;

    friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;

private:
    Bound bound_;
    std::map<Column, Rational> coords_;
};

/// Thrown by validate_spectrum_point; carries the first violated relation.
class RelationViolatedError : public Error {
public:
    explicit RelationViolatedError(Relation relation);
    [[nodiscard]] const Relation& relation() const noexcept { return relation_; }

private:
    Relation relation_;
};

/// The first relation t_T t_U != t_L t_R of the minimal set, if any.
std::optional<Relation> first_violated_relation(const SpectrumPoint& t);

/// Returns the point if it lies on the variety; throws RelationViolatedError.
SpectrumPoint validate_spectrum_point(const std::map<Column, Rational>& coords, Bound bound);

/// coords[C] = prod_i alpha(i, c_i).
SpectrumPoint psi(const EvaluationPoint& alpha);

/// Ordinary, or zero coordinates closed under Omega-divisibility.
bool in_image_psi(const SpectrumPoint& t);

/// Some beta with psi(beta) == t, built column by column in column order;
/// entries below the diagonal (entry < row + 1) are set to 1. Throws
/// NotOrdinary.
EvaluationPoint psi_preimage(const SpectrumPoint& t);

/// Entrywise product of ordinary points. Throws NotOrdinary.
SpectrumPoint ordinary_group_op(const SpectrumPoint& t, const SpectrumPoint& s);
/// Entrywise reciprocal. Throws NotOrdinary.
SpectrumPoint ordinary_inverse(const SpectrumPoint& t);
SpectrumPoint ones_point(Bound bound);

/// M_t in D(f): pi_t(f) != 0.
bool basic_open_member(const AlgebraElement& f, const SpectrumPoint& t);
/// N_alpha in D(Omega(f)): ev_alpha(Omega(f)) != 0.
bool basic_open_member_poly(const AlgebraElement& f, const EvaluationPoint& alpha);

}  // namespace tabalg
