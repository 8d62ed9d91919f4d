#include "tabalg/json_io.hpp"

#include <algorithm>

namespace tabalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
    return j.get<int>();
}

std::vector<int> int_list(const Json& j) {
    if (!j.is_array()) bad("expected an integer list, got " + j.dump());
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("expected a rational \"p/q\", got " + j.dump());
}

Json rows_json(const std::vector<std::vector<int>>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(e.what());
    }
}

Json to_json(const Tableau& t) { return Json{{"rows", rows_json(t.rows())}}; }

Tableau tableau_from_json(const Json& j, std::optional<Bound> bound) {
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) bad("\"rows\" must be a list of rows");
    std::vector<std::vector<int>> grid;
    for (const auto& r : rows) grid.push_back(int_list(r));
    return validate(grid, bound);
}

Json to_json(const Column& c) { return Json(c.entries()); }

Column column_from_json(const Json& j) { return Column(int_list(j)); }

Json to_json(const GeneratorSet& gens) {
    Json cols = Json::array();
    for (const auto& c : gens.columns()) cols.push_back(to_json(c));
    return Json{{"n", gens.bound().n},
                {"m", gens.bound().m},
                {"columns", cols},
                {"e_part", gens.e_part()},
                {"f_part", gens.f_part()}};
}

Json to_json(const Relation& r) {
    return Json{{"lhs", {to_json(r.lhs.first), to_json(r.lhs.second)}},
                {"rhs", {to_json(r.rhs.first), to_json(r.rhs.second)}}};
}

Json to_json(const AlgebraElement& f) {
    Json out = Json::array();
    for (const auto& [t, c] : f.terms()) out.push_back(Json{{"coeff", to_string(c)}, {"tableau", to_json(t)}});
    return out;
}

AlgebraElement element_from_json(const Json& j) {
    if (!j.is_array()) bad("an algebra element is a list of {coeff, tableau} terms");
    AlgebraElement f;
    for (const auto& term : j) f.add_term(tableau_from_json(field(term, "tableau")), rational_from_json(field(term, "coeff")));
    return f;
}

Json to_json(const SpectrumPoint& t) {
    Json coords = Json::array();
    for (const auto& [c, v] : t.coords()) coords.push_back(Json{{"column", to_json(c)}, {"value", to_string(v)}});
    return Json{{"coords", coords}};
}

SpectrumPoint spectrum_point_from_json(const Json& j, std::optional<Bound> bound) {
    const Json& coords = field(j, "coords");
    if (!coords.is_array()) bad("\"coords\" must be a list");
    std::map<Column, Rational> values;
    Bound inferred{0, 0};
    for (const auto& entry : coords) {
        Column c = column_from_json(field(entry, "column"));
        inferred.n = std::max(inferred.n, c.height());
        inferred.m = std::max(inferred.m, c.bottom());
        if (!values.emplace(std::move(c), rational_from_json(field(entry, "value"))).second) {
            bad("duplicate column in coords");
        }
    }
    return SpectrumPoint(bound.value_or(inferred), std::move(values));
}

Json to_json(const EvaluationPoint& alpha) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < static_cast<std::size_t>(alpha.bound().n); ++i) {
        Json row = Json::array();
        for (int e = 1; e <= alpha.bound().m; ++e) row.push_back(to_string(alpha.at(i, e)));
        rows.push_back(row);
    }
    return Json{{"alpha", rows}};
}

EvaluationPoint evaluation_point_from_json(const Json& j) {
    const Json& grid = field(j, "alpha");
    if (!grid.is_array() || grid.empty() || !grid.front().is_array()) bad("\"alpha\" must be a nonempty grid");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : grid) {
        if (!r.is_array()) bad("\"alpha\" rows must be lists");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    const Bound bound{static_cast<int>(rows.size()), static_cast<int>(rows.front().size())};
    return EvaluationPoint(bound, std::move(rows));
}

Json to_json(const CrystalGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) vertices.push_back(rows_json(v.rows()));
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json{e.from, e.color, e.to});
    return Json{{"n", g.n()},
                {"lambda", g.lambda().parts()},
                {"vertices", vertices},
                {"edges", edges},
                {"source", g.source()},
                {"sink", g.sink()}};
}

std::string to_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + to_string(g.vertices()[v]) + "\"];\n";
    }
    for (const auto& e : g.edges()) {
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
               std::to_string(e.color) + "\"];\n";
    }
    return out + "}\n";
}

Json to_json(const GTPattern& g) { return Json{{"pattern", rows_json(g.rows())}}; }

GTPattern gt_from_json(const Json& j) {
    const Json& rows = field(j, "pattern");
    if (!rows.is_array()) bad("\"pattern\" must be a list of rows");
    std::vector<std::vector<int>> grid;
    for (const auto& r : rows) grid.push_back(int_list(r));
    return GTPattern(std::move(grid));
}

MonomialWord word_from_json(const Json& j) {
    if (!j.is_array()) bad("a monomial word is a list of columns");
    MonomialWord w;
    for (const auto& c : j) w.push_back(column_from_json(c));
    return w;
}

}  // namespace tabalg::io
