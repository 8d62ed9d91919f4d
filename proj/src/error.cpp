#include "tabalg/error.hpp"

#include "tabalg/rational.hpp"

#include <cctype>

namespace tabalg {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::ShapeNotPartition: return "ShapeNotPartition";
        case Errc::RowNotWeaklyIncreasing: return "RowNotWeaklyIncreasing";
        case Errc::ColumnNotStrictlyIncreasing: return "ColumnNotStrictlyIncreasing";
        case Errc::EntryOutOfRange: return "EntryOutOfRange";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::InvalidBounds: return "InvalidBounds";
        case Errc::InvalidColumn: return "InvalidColumn";
        case Errc::NotTwoColumns: return "NotTwoColumns";
        case Errc::NonIntegralResult: return "NonIntegralResult";
        case Errc::IndexMismatch: return "IndexMismatch";
        case Errc::ShapeIsColumn: return "ShapeIsColumn";
        case Errc::RelationViolated: return "RelationViolated";
        case Errc::NotOrdinary: return "NotOrdinary";
        case Errc::TooManyParts: return "TooManyParts";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::InterlacingViolated: return "InterlacingViolated";
        case Errc::ParseError: return "ParseError";
        case Errc::InternalError: return "InternalError";
    }
    return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
        throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    std::string num_s(num);
    if (num_s[0] == '+') num_s.erase(0, 1);
    const Integer d{std::string(den)};
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(num_s), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

}  // namespace tabalg
