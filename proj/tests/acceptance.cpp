// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything here is exact arithmetic; no tolerances.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "slopes/bijections.hpp"
#include "slopes/complex.hpp"
#include "slopes/enumeration.hpp"
#include "slopes/groebner.hpp"
#include "slopes/shelling.hpp"
#include "slopes/treepoly.hpp"

using namespace slopes;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << note << "\n" << std::flush;
    if (!ok) ++failures;
}

bool facet_counts() {
    long long expected[] = {3, 15, 105, 945, 10395};
    for (int n = 4; n <= 8; ++n)
        if (facets(n).size() != std::size_t(expected[n - 4])) return false;
    for (int n = 4; n <= 6; ++n)
        if (facets(n) != facets_brute_force(n)) return false;
    return true;
}

bool small_facets() {
    auto fs = facets(4);
    std::set<EdgeSet> got(fs.begin(), fs.end());
    std::set<EdgeSet> want{
        EdgeSet{Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4), Edge(3, 4)},
        EdgeSet{Edge(1, 2), Edge(1, 4), Edge(2, 3), Edge(2, 4), Edge(3, 4)},
        EdgeSet{Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(3, 4)}};
    return got == want;
}

bool purity() {
    for (int n = 4; n <= 7; ++n)
        for (const EdgeSet& F : facets(n)) {
            if (F.size() != std::size_t(2 * n - 3)) return false;
            if (!F.contains(Edge(1, n)) || !F.contains(Edge(n - 1, n))) return false;
        }
    return true;
}

bool h_vectors() {
    for (int n = 3; n <= 6; ++n) {
        auto ref = h_vector(n, HVectorMethod::Recurrence);
        if (h_vector(n, HVectorMethod::Shelling) != ref) return false;
        if (h_vector(n, HVectorMethod::Matchings) != ref) return false;
        if (h_vector(n, HVectorMethod::FTransform) != ref) return false;
    }
    if (h_vector(7, HVectorMethod::Shelling) != h_vector(7, HVectorMethod::Recurrence))
        return false;
    if (h_vector(4) != std::vector<Int>{1, 1, 1}) return false;
    if (h_vector(5) != std::vector<Int>{1, 3, 6, 5}) return false;
    for (int n = 4; n <= 8; ++n) {
        Int sum = 0;
        for (const Int& h : h_vector(n)) sum += h;
        if (sum != Int(facets(n).size())) return false;
    }
    return true;
}

bool shelling_certificates() {
    for (int n = 3; n <= 6; ++n) {
        auto cert = verify_shelling(n);  // throws on any SH1/SH2 violation
        for (std::size_t i = 0; i < cert.facets.size(); ++i)
            for (const Edge& e : cert.gammas[i])
                if (!cert.witnesses[i].count(e)) return false;
    }
    return true;
}

bool groebner_certificates() {
    for (int n : {4, 5}) {
        auto cert = certify_groebner(n, TermOrder::GradedLex);  // throws on failure
        if (cert.skipped + cert.reduced_to_zero != cert.pairs.size()) return false;
        auto gs = wheel_generators(n, TermOrder::GradedLex);
        for (std::size_t i = 0; i < gs.polys.size(); ++i) {
            EdgeSet lead =
                gs.polys[i].leading_term(TermOrder::GradedLex).first.to_edge_set();
            if (lead != leading_tree(gs.wheels[i], TermOrder::GradedLex).tree)
                return false;
            if (!contains_forbidden_path(lead).has_value()) return false;
        }
    }
    return true;
}

bool tree_polynomials() {
    std::mt19937 rng(20240815);
    for (int n = 4; n <= 6; ++n) {
        std::vector<std::map<Edge, Rational>> configs;
        int trials = std::max(100 / (7 - n), 34);
        for (int t = 0; t < trials; ++t)
            configs.push_back(random_slope_configuration(n, rng));
        for (const Wheel& W : wheels_in_complete_graph(n)) {
            Polynomial closed = wheel_polynomial(W);
            Polynomial det = tree_polynomial(W.edge_set());
            if (closed != det && closed != -det) return false;
            if (closed.term_count() != (std::size_t{2} << W.k()) - 4) return false;
            if (closed.homogeneous_degree() != int(W.edge_set().support().size()) - 1)
                return false;
            for (const auto& [m, c] : closed.terms())
                if (c != 1 && c != -1) return false;
            for (const auto& cfg : configs)
                if (closed.evaluate(cfg) != 0) return false;
        }
    }
    return true;
}

bool leading_trees() {
    for (auto ord : {TermOrder::GradedLex, TermOrder::GradedRevLex})
        for (const Wheel& W : wheels_in_complete_graph(7)) {
            Polynomial p = wheel_polynomial(W);
            if (leading_tree(W, ord).tree != p.leading_term(ord).first.to_edge_set())
                return false;
        }
    return true;
}

bool forbidden_counts() {
    int expected[] = {1, 2, 5, 16, 61, 272};
    for (int n = 4; n <= 9; ++n)
        if (minimal_forbidden_paths(n).size() != std::size_t(expected[n - 4]))
            return false;
    return true;
}

bool theta_bijection() {
    // the worked straightening example first
    auto mk = [](std::vector<Vertex> l) {
        auto t = std::make_unique<BtpNode>();
        t->label = std::move(l);
        return t;
    };
    auto nd = [&](std::vector<Vertex> l, BtpPtr a, BtpPtr b) {
        auto t = mk(std::move(l));
        t->older = std::move(a);
        t->younger = std::move(b);
        return t;
    };
    auto ex = nd({1, 2, 3, 4, 5}, mk({4}),
                 nd({1, 2, 5}, mk({1}), nd({2, 5}, mk({2}), mk({5}))));
    if (straighten(*ex)->str() != "(12345 (4) (235 (2) (35 (3) (5))))") return false;

    for (int n = 4; n <= 7; ++n) {
        std::vector<Vertex> V, full;
        for (Vertex v = 2; v <= n; ++v) V.push_back(v);
        for (Vertex v = 1; v <= n; ++v) full.push_back(v);
        std::set<std::string> image;
        for (const auto& t : enumerate_btp(V)) {
            auto d = theta(*t);
            if (!(*theta_inverse(*d) == *t)) return false;
            image.insert(d->str());
        }
        std::set<std::string> adm;
        for (const auto& d : admissible_trees(full)) adm.insert(d->str());
        if (image != adm) return false;
    }
    return true;
}

bool enumeration_identities() {
    Int table[][6] = {{1, 1, 0, 0, 0, 0},
                      {1, 3, 3, 0, 0, 0},
                      {1, 7, 15, 15, 0, 0},
                      {1, 15, 57, 105, 105, 0},
                      {1, 31, 195, 561, 945, 945}};
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            if (dpt(n, k) != table[n - 2][k - 1]) return false;
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            if (dpt(n, k, DptMethod::Enumerate) != dpt(n, k, DptMethod::Recurrence))
                return false;
    if (dpt_identity_checks(8) <= 0) return false;
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k)
            if (degree_lower_bound(n, k) != dpt(n - 1, n - k)) return false;
        if (degree_lower_bound(n, n) != 1) return false;
    }
    return true;
}

bool triple_coincidence() {
    for (int n = 4; n <= 8; ++n) {
        Int want = double_factorial_odd(n - 2);
        if (Int(enumerate_matchings(n - 2).size()) != want) return false;
        std::vector<Vertex> V;
        for (Vertex v = 2; v <= n; ++v) V.push_back(v);
        if (Int(enumerate_btp(V).size()) != want) return false;
        if (Int(enumerate_dpt(n - 1).size()) != want) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion("01 facet counts match the odd double factorials", facet_counts);
    criterion("02 smallest complex has exactly the three known facets", small_facets);
    criterion("03 purity and forced extremal edges", purity);
    criterion("04 four h-vector methods agree", h_vectors);
    criterion("05 shelling certificate with full witnesses", shelling_certificates);
    criterion("06 wheel generators form a Groebner basis at small n",
              groebner_certificates);
    criterion("07 tree polynomial integrity and slope vanishing", tree_polynomials);
    criterion("08 leading trees match leading terms under both orders", leading_trees);
    criterion("09 minimal forbidden path counts", forbidden_counts);
    criterion("10 theta bijection with explicit inverse", theta_bijection);
    criterion("11 enumeration identities and the dpt table", enumeration_identities);
    criterion("12 matchings, partitions, trees share one census", triple_coincidence);
    return failures == 0 ? 0 : 1;
}
