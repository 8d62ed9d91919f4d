#include "tabalg/algebra.hpp"
#include "tabalg/crystal.hpp"
#include "tabalg/enumerate.hpp"
#include "tabalg/json_io.hpp"
#include "tabalg/lattice.hpp"
#include "tabalg/relations.hpp"
#include "tabalg/spectra.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace {

using namespace tabalg;
using io::Json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Options {
    std::string in_path;
    bool json = false;
    bool dot = false;
    std::optional<std::uint64_t> seed;
};

Json read_input(const Options& opt) {
    std::string text;
    if (opt.in_path.empty() || opt.in_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(opt.in_path);
        if (!f) throw Error(Errc::ParseError, "cannot open " + opt.in_path);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return io::parse(text);
}

Shape parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(Errc::ParseError, "bad shape '" + text + "'");
        parts.push_back(v);
    }
    return Shape(std::move(parts));
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_tableau(const Tableau& t, const Options& opt) {
    if (opt.json) {
        std::cout << io::to_json(t).dump() << "\n";
    } else {
        std::cout << to_string(t) << "\n";
    }
}

void print_point(const SpectrumPoint& t, const Options& opt) {
    if (opt.json) {
        std::cout << io::to_json(t).dump() << "\n";
        return;
    }
    for (const auto& c : GeneratorSet(t.bound()).point_order()) std::cout << to_string(c) << " " << to_string(t.at(c)) << "\n";
}

void print_alpha(const EvaluationPoint& a, const Options& opt) {
    if (opt.json) {
        std::cout << io::to_json(a).dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.bound().n); ++i) {
        for (int e = 1; e <= a.bound().m; ++e) std::cout << (e > 1 ? " " : "") << to_string(a.at(i, e));
        std::cout << "\n";
    }
}

SpectrumPoint read_valid_point(const Json& j) {
    const SpectrumPoint t = io::spectrum_point_from_json(j);
    return validate_spectrum_point(t.coords(), t.bound());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableaux algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::uint64_t seed_value = 0;
    app.add_option("--in", opt.in_path, "JSON input file (default: standard input)");
    auto* json_flag = app.add_flag("--json", opt.json, "JSON output");
    auto* dot_flag = app.add_flag("--dot", opt.dot, "DOT output");
    json_flag->excludes(dot_flag);
    auto* seed_opt = app.add_option("--seed", seed_value, "Seed for randomized choices");

    int n = 0, m = 0;
    const auto add_bound = [&](CLI::App* sub) {
        sub->add_option("n", n, "Maximum number of rows")->required();
        sub->add_option("m", m, "Maximum entry")->required();
    };
    std::string lambda_text, mu_text;

    auto* gens = app.add_subcommand("gens", "List the column generators with the E/F split");
    add_bound(gens);

    auto* star_cmd = app.add_subcommand("star", "Star product of a JSON list of tableaux");

    std::string method_name = "double_sum";
    auto* sigma_cmd = app.add_subcommand("sigma", "Size of the minimal relation set");
    add_bound(sigma_cmd);
    sigma_cmd->add_option("--method", method_name, "double_sum, closed or brute")
        ->check(CLI::IsMember({"double_sum", "closed", "brute"}));

    auto* relations_cmd = app.add_subcommand("relations", "List the minimal relations");
    add_bound(relations_cmd);

    auto* straighten_cmd = app.add_subcommand("straighten", "Straighten a JSON list of columns");
    add_bound(straighten_cmd);

    auto* psi_cmd = app.add_subcommand("psi", "Push an evaluation point {\"alpha\": ...} to a spectrum point");
    auto* preimage_cmd = app.add_subcommand("psi-preimage", "Preimage of an ordinary spectrum point");
    auto* variety_cmd = app.add_subcommand("variety-check", "Check a spectrum point against the relations");
    auto* open_cmd = app.add_subcommand("open-member", "Basic open membership of {\"element\", \"point\"|\"alpha\"}");
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate {\"element\", \"point\"}");

    bool witness = false;
    auto* ideal_cmd = app.add_subcommand("ideal-member", "Crystal ideal membership of a JSON element");
    add_bound(ideal_cmd);
    ideal_cmd->add_option("lambda", lambda_text, "Shape, e.g. 2,1")->required();
    ideal_cmd->add_flag("--witness", witness, "Print a non-primality witness instead");

    auto* crystal_cmd = app.add_subcommand("crystal", "Crystal graph on SSYT_n(lambda)");
    crystal_cmd->add_option("n", n, "Rank")->required();
    crystal_cmd->add_option("lambda", lambda_text, "Shape, e.g. 2,1")->required();

    std::string mode = "highest";
    auto* embed_cmd = app.add_subcommand("embed-check", "Check the star-product map as a crystal embedding");
    embed_cmd->add_option("n", n, "Rank")->required();
    embed_cmd->add_option("lambda", lambda_text, "Source shape")->required();
    embed_cmd->add_option("mu", mu_text, "Shape of the fixed factor")->required();
    embed_cmd->add_option("--mode", mode, "highest, lowest or generic")
        ->check(CLI::IsMember({"highest", "lowest", "generic"}));

    bool inverse = false;
    auto* gt_cmd = app.add_subcommand("gt", "Gelfand-Tsetlin pattern of a JSON tableau");
    gt_cmd->add_option("n", n, "Rank")->required();
    gt_cmd->add_flag("--inverse", inverse, "Read {\"pattern\": ...} and print the tableau");

    auto* divide_cmd = app.add_subcommand("divide", "Quotient of {\"t\", \"s\"}: U with s * U = t");

    auto* plucker_cmd = app.add_subcommand("plucker-counts", "Grassmann and incidence slices of the count");
    add_bound(plucker_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }
    if (seed_opt->count() > 0) opt.seed = seed_value;

    try {
        if (gens->parsed()) {
            const GeneratorSet g = generators(n, m);
            if (opt.json) {
                std::cout << io::to_json(g).dump() << "\n";
            } else {
                for (const auto& c : g.columns()) std::cout << to_string(c) << (g.is_free(c) ? " F" : " E") << "\n";
            }
        } else if (star_cmd->parsed()) {
            const Json in = read_input(opt);
            if (!in.is_array()) throw Error(Errc::ParseError, "star expects a list of tableaux");
            std::vector<Tableau> factors;
            for (const auto& t : in) factors.push_back(io::tableau_from_json(t));
            print_tableau(star_all(factors), opt);
        } else if (sigma_cmd->parsed()) {
            std::cout << sigma(n, m, *parse_sigma_method(method_name)) << "\n";
        } else if (relations_cmd->parsed()) {
            const auto rels = minimal_relations(n, m);
            if (opt.json) {
                Json out = Json::array();
                for (const auto& r : rels) out.push_back(io::to_json(r));
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& r : rels) std::cout << to_string(r) << "\n";
            }
        } else if (straighten_cmd->parsed()) {
            const auto word = io::word_from_json(read_input(opt));
            print_tableau(straighten(word, Bound{n, m}, opt.seed), opt);
        } else if (psi_cmd->parsed()) {
            print_point(psi(io::evaluation_point_from_json(read_input(opt))), opt);
        } else if (preimage_cmd->parsed()) {
            print_alpha(psi_preimage(read_valid_point(read_input(opt))), opt);
        } else if (variety_cmd->parsed()) {
            const SpectrumPoint t = io::spectrum_point_from_json(read_input(opt));
            const auto violated = first_violated_relation(t);
            const bool image = !violated && in_image_psi(t);
            if (opt.json) {
                Json out = {{"valid", !violated}};
                if (violated) out["violated"] = io::to_json(*violated);
                out["in_image_psi"] = image;
                std::cout << out.dump() << "\n";
            } else if (violated) {
                std::cout << "violated " << to_string(*violated) << "\n";
            } else {
                std::cout << "valid\nin_image_psi " << bool_text(image) << "\n";
            }
        } else if (open_cmd->parsed()) {
            const Json in = read_input(opt);
            const AlgebraElement f = io::element_from_json(member(in, "element"));
            const bool result = in.contains("alpha")
                                    ? basic_open_member_poly(f, io::evaluation_point_from_json(in))
                                    : basic_open_member(f, read_valid_point(member(in, "point")));
            std::cout << bool_text(result) << "\n";
        } else if (eval_cmd->parsed()) {
            const Json in = read_input(opt);
            const AlgebraElement f = io::element_from_json(member(in, "element"));
            std::cout << to_string(eval_element(f, read_valid_point(member(in, "point")))) << "\n";
        } else if (ideal_cmd->parsed()) {
            const CrystalIdealSpec spec{parse_shape(lambda_text)};
            const Bound bound{n, m};
            if (witness) {
                const auto w = non_primality_witness(spec, bound);
                if (opt.json) {
                    std::cout << Json{{"column", io::to_json(w.column)}, {"cofactor", io::to_json(w.cofactor)}}.dump()
                              << "\n";
                } else {
                    std::cout << "column " << to_string(w.column) << "\ncofactor " << to_string(w.cofactor) << "\n";
                }
            } else {
                const AlgebraElement f = io::element_from_json(read_input(opt));
                if (!f.fits(bound)) throw Error(Errc::BoundExceeded, "element outside the bound");
                std::cout << bool_text(crystal_ideal_member(f, spec, bound)) << "\n";
            }
        } else if (crystal_cmd->parsed()) {
            const CrystalGraph g = build_crystal(parse_shape(lambda_text), n);
            if (opt.json) {
                std::cout << io::to_json(g).dump() << "\n";
            } else if (opt.dot) {
                std::cout << io::to_dot(g);
            } else {
                std::cout << "vertices " << g.size() << "\nedges " << g.edges().size() << "\nsource "
                          << to_string(g.vertices()[g.source()]) << "\nsink " << to_string(g.vertices()[g.sink()])
                          << "\n";
                for (const auto& e : g.edges()) {
                    std::cout << to_string(g.vertices()[e.from]) << " -" << e.color << "-> "
                              << to_string(g.vertices()[e.to]) << "\n";
                }
            }
        } else if (embed_cmd->parsed()) {
            const Shape lambda = parse_shape(lambda_text);
            const Shape mu = parse_shape(mu_text);
            Tableau fixed;
            if (mode == "highest") {
                fixed = highest_weight(mu, n);
            } else if (mode == "lowest") {
                fixed = lowest_weight(mu, n);
            } else if (!opt.in_path.empty()) {
                fixed = io::tableau_from_json(read_input(opt), Bound{n, n});
                if (fixed.shape() != mu) throw Error(Errc::ShapeMismatch, to_string(fixed) + " does not have shape " + to_string(mu));
            } else {
                const auto pool = ssyt(mu, n);
                if (pool.empty()) throw Error(Errc::TooManyParts, to_string(mu) + " has no tableaux for n=" + std::to_string(n));
                std::mt19937_64 rng(opt.seed.value_or(0));
                fixed = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            }
            const EmbeddingReport r = check_embedding(fixed, lambda, n);
            if (opt.json) {
                Json out = {{"fixed", io::to_json(fixed)}, {"vertices", r.vertices},   {"injective", r.injective},
                            {"checked", r.checked},        {"failures", r.failures}, {"embedding", r.is_embedding()}};
                if (r.first_failure) out["first_failure"] = *r.first_failure;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "fixed " << to_string(fixed) << "\nvertices " << r.vertices << "\ninjective "
                          << bool_text(r.injective) << "\nchecked " << r.checked << "\nfailures " << r.failures
                          << "\nembedding " << bool_text(r.is_embedding()) << "\n";
                if (r.first_failure) std::cout << "first_failure " << *r.first_failure << "\n";
            }
        } else if (gt_cmd->parsed()) {
            if (inverse) {
                const GTPattern g = io::gt_from_json(read_input(opt));
                if (g.n() != n) throw Error(Errc::IndexMismatch, "pattern has " + std::to_string(g.n()) + " rows");
                print_tableau(from_gt(g), opt);
            } else {
                const GTPattern g = to_gt(io::tableau_from_json(read_input(opt)), n);
                if (opt.json) {
                    std::cout << io::to_json(g).dump() << "\n";
                } else {
                    for (const auto& row : g.rows()) {
                        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
                        std::cout << "\n";
                    }
                }
            }
        } else if (divide_cmd->parsed()) {
            const Json in = read_input(opt);
            const auto q = try_divide(io::tableau_from_json(member(in, "t")), io::tableau_from_json(member(in, "s")));
            if (!q) {
                std::cout << (opt.json ? "null" : "absent") << "\n";
            } else {
                print_tableau(*q, opt);
            }
        } else if (plucker_cmd->parsed()) {
            const PluckerCounts c = plucker_counts(n, m);
            if (opt.json) {
                std::cout << Json{{"grassmann", c.grassmann}, {"incidence", c.incidence}, {"total", c.total()}}.dump()
                          << "\n";
            } else {
                std::cout << "grassmann";
                for (auto g : c.grassmann) std::cout << " " << g;
                std::cout << "\nincidence " << c.incidence << "\ntotal " << c.total() << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == Errc::ParseError ? kUsageError : kDomainError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}
