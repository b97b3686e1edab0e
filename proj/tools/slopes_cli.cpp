#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "slopes/bijections.hpp"
#include "slopes/complex.hpp"
#include "slopes/enumeration.hpp"
#include "slopes/groebner.hpp"
#include "slopes/polynomial.hpp"
#include "slopes/shelling.hpp"
#include "slopes/treepoly.hpp"

using namespace slopes;

namespace {

const char* case_name(LeadingTreeCase c) {
    switch (c) {
        case LeadingTreeCase::CenterMin: return "center-min";
        case LeadingTreeCase::CenterMax: return "center-max";
        case LeadingTreeCase::CriticalEdge: return "critical-edge";
        case LeadingTreeCase::SetScan: return "set-scan";
    }
    return "?";
}

std::string one_line(const EdgeSet& E) {
    std::string out;
    for (const Edge& e : E) {
        if (!out.empty()) out += ' ';
        out += e.str();
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Desk-scale toolkit for tree polynomials, wheel leading trees, "
                 "the associated simplicial complex, and its enumerative shadows"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    std::string wheel_spec, order_name = "glex", method_name, family;
    int n = 0, k = -1;
    bool verify = false, certify = false, k4probe = false, minimal = false, decomp = false;

    auto* treepoly_cmd = app.add_subcommand("treepoly", "tree polynomial of a wheel");
    treepoly_cmd->add_option("--wheel", wheel_spec, "c;s1,...,sk")->required();
    treepoly_cmd->add_option("--order", order_name)->check(CLI::IsMember({"glex", "grevlex"}));

    auto* lt_cmd = app.add_subcommand("leading-tree", "leading coupled tree of a wheel");
    lt_cmd->add_option("--wheel", wheel_spec)->required();
    lt_cmd->add_option("--order", order_name)->check(CLI::IsMember({"glex", "grevlex"}));

    auto* facets_cmd = app.add_subcommand("facets", "facets of the complex on [1,n]");
    facets_cmd->add_option("-n", n)->required();
    facets_cmd->add_flag("--decomp", decomp, "include decomposition trees");

    auto* hv_cmd = app.add_subcommand("hvector", "h-vector rows n,k,h(n,k)");
    hv_cmd->add_option("-n", n)->required();
    hv_cmd->add_option("--method", method_name)
        ->check(CLI::IsMember({"shelling", "recurrence", "matchings", "ftransform"}));

    auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    hil_cmd->add_option("-n", n)->required();

    auto* shell_cmd = app.add_subcommand("shelling", "shelling order and certificate");
    shell_cmd->add_option("-n", n)->required();
    shell_cmd->add_flag("--verify", verify);

    auto* count_cmd = app.add_subcommand("count", "enumeration families as CSV");
    count_cmd->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"matchings", "btp", "dpt", "e"}));
    count_cmd->add_option("-n", n)->required();
    count_cmd->add_option("-k", k);

    auto* gb_cmd = app.add_subcommand("groebner", "Groebner certificates");
    gb_cmd->add_option("-n", n)->required();
    gb_cmd->add_flag("--certify", certify);
    gb_cmd->add_flag("--k4-probe", k4probe);
    gb_cmd->add_option("--order", order_name)->check(CLI::IsMember({"glex", "grevlex"}));

    auto* forb_cmd = app.add_subcommand("forbidden", "minimal forbidden paths");
    forb_cmd->add_option("-n", n)->required();
    forb_cmd->add_flag("--minimal", minimal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (treepoly_cmd->parsed()) {
            TermOrder ord = parse_term_order(order_name);
            Wheel W = Wheel::parse(wheel_spec);
            std::cout << wheel_polynomial(W).sign_normalized(ord).str(ord) << "\n";
        } else if (lt_cmd->parsed()) {
            TermOrder ord = parse_term_order(order_name);
            Wheel W = Wheel::parse(wheel_spec);
            auto res = leading_tree(W, ord);
            std::cout << one_line(res.tree) << "\n" << case_name(res.which) << "\n";
        } else if (facets_cmd->parsed()) {
            auto fs = facets(n);
            if (format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const EdgeSet& F : fs) {
                    nlohmann::json item;
                    item["edges"] = one_line(F);
                    if (decomp)
                        item["tree"] =
                            nlohmann::json::parse(decomposition_tree(F)->json());
                    out.push_back(item);
                }
                std::cout << out.dump() << "\n";
            } else {
                for (const EdgeSet& F : fs) {
                    std::cout << one_line(F);
                    if (decomp) std::cout << "  " << decomposition_tree(F)->str();
                    std::cout << "\n";
                }
            }
        } else if (hv_cmd->parsed()) {
            std::vector<std::vector<Int>> results;
            if (method_name.empty()) {
                // all methods that run at this n must agree
                results.push_back(h_vector(n, HVectorMethod::Recurrence));
                results.push_back(h_vector(n, HVectorMethod::Matchings));
                if (n <= 7) results.push_back(h_vector(n, HVectorMethod::Shelling));
                if (n <= 6) results.push_back(h_vector(n, HVectorMethod::FTransform));
                for (const auto& r : results)
                    if (r != results.front()) {
                        std::cerr << "h-vector methods disagree at n=" << n << "\n";
                        return 1;
                    }
            } else {
                results.push_back(h_vector(n, parse_hvector_method(method_name)));
            }
            for (std::size_t i = 0; i < results.front().size(); ++i)
                std::cout << n << "," << i << "," << results.front()[i] << "\n";
        } else if (hil_cmd->parsed()) {
            std::cout << hilbert_series(n).str() << "\n";
        } else if (shell_cmd->parsed()) {
            if (!verify) {
                for (const EdgeSet& F : facets(n)) std::cout << one_line(F) << "\n";
                return 0;
            }
            try {
                auto cert = verify_shelling(n);
                std::size_t w = 0;
                for (const auto& m : cert.witnesses) w += m.size();
                std::cout << "facets=" << cert.facets.size() << " witnesses=" << w
                          << " verified\n";
            } catch (const ShellingViolation& v) {
                std::cerr << v.what() << "\n";
                return 1;
            }
        } else if (count_cmd->parsed()) {
            auto emit = [&](int kk, const Int& v) {
                std::cout << family << "," << n << "," << kk << "," << v << "\n";
            };
            if (family == "matchings") {
                if (k >= 0)
                    emit(k, matching_count(n, k));
                else
                    for (int kk = 0; kk <= n; ++kk) emit(kk, matching_count(n, kk));
            } else if (family == "btp") {
                std::vector<Vertex> V(n);
                for (int i = 0; i < n; ++i) V[i] = i + 1;
                emit(-1, Int(enumerate_btp(V).size()));
            } else if (family == "dpt") {
                if (k >= 0)
                    emit(k, dpt(n, k));
                else
                    for (int kk = 1; kk <= n; ++kk) emit(kk, dpt(n, kk));
            } else {
                if (k >= 0)
                    emit(k, degree_lower_bound(n, k));
                else
                    for (int kk = 1; kk <= n; ++kk) emit(kk, degree_lower_bound(n, kk));
            }
        } else if (gb_cmd->parsed()) {
            if (k4probe) {
                auto rep = k4_generation_probe(n);
                std::cout << rep.json() << "\n";
                if (!rep.conclusive) return 1;
                return rep.generated ? 0 : 1;
            }
            if (!certify) {
                std::cerr << "choose --certify or --k4-probe\n";
                return 2;
            }
            try {
                auto cert = certify_groebner(n, parse_term_order(order_name));
                std::cout << cert.json() << "\n";
            } catch (const ReductionFailure& f) {
                std::cerr << f.what() << "\n";
                return 1;
            }
        } else if (forb_cmd->parsed()) {
            auto paths = minimal_forbidden_paths(n);
            for (const auto& p : paths) std::cout << p.str() << "\n";
            std::cout << "b(" << n << ")=" << paths.size() << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const OutOfRange& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ScaleLimit& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
