#include "slopes/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "slopes/complex.hpp"

namespace slopes {

GeneratorSet wheel_generators(int n, TermOrder ord) {
    if (n < 4) throw OutOfRange("wheel generators need n >= 4");
    GeneratorSet gs;
    gs.order = ord;
    for (const Wheel& W : wheels_in_complete_graph(n)) {
        gs.wheels.push_back(W);
        gs.polys.push_back(wheel_polynomial(W).sign_normalized(ord));
    }
    return gs;
}

namespace {

std::string order_name(TermOrder ord) {
    return ord == TermOrder::GradedLex ? "glex" : "grevlex";
}

}  // namespace

std::string GroebnerCertificate::json() const {
    nlohmann::json j;
    j["n"] = n;
    j["order"] = order_name(order);
    j["generators"] = generator_count;
    j["pairs"] = pairs.size();
    j["skipped_coprime"] = skipped;
    j["reduced_to_zero"] = reduced_to_zero;
    j["max_intermediate_terms"] = max_intermediate_terms;
    j["verified"] = true;
    return j.dump();
}

GroebnerCertificate certify_groebner(int n, TermOrder ord) {
    GeneratorSet gs = wheel_generators(n, ord);
    GroebnerCertificate cert;
    cert.n = n;
    cert.order = ord;
    cert.generator_count = gs.polys.size();
    cert.skipped = 0;
    cert.reduced_to_zero = 0;
    cert.max_intermediate_terms = 0;

    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < gs.polys.size(); ++i)
        for (std::size_t j = i + 1; j < gs.polys.size(); ++j) order.emplace_back(i, j);
    auto lcm_degree = [&](std::size_t i, std::size_t j) {
        return Monomial::lcm(gs.polys[i].leading_term(ord).first,
                             gs.polys[j].leading_term(ord).first)
            .degree();
    };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return lcm_degree(a.first, a.second) < lcm_degree(b.first, b.second);
    });

    for (auto [i, j] : order) {
        const Monomial& mi = gs.polys[i].leading_term(ord).first;
        const Monomial& mj = gs.polys[j].leading_term(ord).first;
        if (Monomial::lcm(mi, mj).degree() == mi.degree() + mj.degree()) {
            // coprime leading monomials: S-pair reduces by the first criterion
            cert.pairs.push_back({i, j, true, 0, 0});
            ++cert.skipped;
            continue;
        }
        Polynomial sp = s_polynomial(gs.polys[i], gs.polys[j], ord);
        ReductionResult rr = reduce(sp, gs.polys, ord);
        if (!rr.remainder.is_zero()) {
            std::ostringstream os;
            os << "S-pair (" << gs.wheels[i].str() << ", " << gs.wheels[j].str()
               << ") does not reduce to zero";
            throw ReductionFailure(os.str());
        }
        cert.pairs.push_back({i, j, false, rr.steps, rr.max_terms});
        ++cert.reduced_to_zero;
        cert.max_intermediate_terms = std::max(cert.max_intermediate_terms, rr.max_terms);
    }
    return cert;
}

Int standard_monomial_degree(int n) {
    if (n > 8) throw ScaleLimit("facet enumeration kept to n <= 8");
    return Int(facets(n).size());
}

namespace {

Int content(const Polynomial& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, abs(c));
    return g == 0 ? Int(1) : g;
}

Polynomial primitive_part(const Polynomial& p, TermOrder ord) {
    Int g = content(p);
    if (g == 1) return p.sign_normalized(ord);
    Polynomial q;
    for (const auto& [m, c] : p.terms()) q = q + Polynomial::term(m, c / g);
    return q.sign_normalized(ord);
}

// Pseudo-reduction over the integers: eliminating a term may scale the whole
// polynomial, so the result is only determined up to a positive rational
// factor.  Zero remainders are still meaningful.
Polynomial pseudo_reduce(Polynomial p, const std::vector<Polynomial>& basis, TermOrder ord,
                         std::size_t term_budget, bool& within_budget) {
    within_budget = true;
    bool changed = true;
    while (changed && !p.is_zero()) {
        if (p.term_count() > term_budget) {
            within_budget = false;
            return p;
        }
        changed = false;
        for (const auto& [mon, coeff] : p.terms()) {
            for (const Polynomial& g : basis) {
                auto [gm, gc] = g.leading_term(ord);
                if (!gm.divides(mon)) continue;
                Int d = boost::multiprecision::gcd(abs(coeff), abs(gc));
                Polynomial scaled = p * (gc / d);
                Polynomial sub = g * (coeff / d);
                Monomial quot = mon.divided_by(gm);
                for (const auto& [e, x] : quot.exponents())
                    for (int t = 0; t < x; ++t) sub = sub * Polynomial::variable(e);
                p = primitive_part(scaled - sub, ord);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return p;
}

}  // namespace

std::string K4ProbeReport::json() const {
    nlohmann::json j;
    j["n"] = n;
    j["conclusive"] = conclusive;
    j["generated"] = generated;
    j["basis_size"] = basis_size;
    j["pairs_processed"] = pairs_processed;
    j["nonzero_wheels"] = nonzero_wheels;
    return j.dump();
}

K4ProbeReport k4_generation_probe(int n, std::size_t pair_budget, std::size_t term_budget) {
    const TermOrder ord = TermOrder::GradedLex;
    K4ProbeReport rep;
    rep.n = n;
    rep.conclusive = true;
    rep.generated = true;
    rep.pairs_processed = 0;

    // K4 generators: the tree polynomial of every 4-clique.
    std::vector<Polynomial> basis;
    std::vector<Vertex> V(n);
    for (int i = 0; i < n; ++i) V[i] = i + 1;
    std::vector<int> idx{0, 1, 2, 3};
    std::function<void(int, int)> choose = [&](int start, int pos) {
        if (pos == 4) {
            std::vector<Vertex> sub;
            for (int t = 0; t < 4; ++t) sub.push_back(V[idx[t]]);
            basis.push_back(
                primitive_part(tree_polynomial(complete_graph_edges(sub)), ord));
            return;
        }
        for (int i = start; i <= n - (4 - pos); ++i) {
            idx[pos] = i;
            choose(i + 1, pos + 1);
        }
    };
    choose(0, 0);

    // Buchberger completion with budgets.
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);
    while (!queue.empty()) {
        if (rep.pairs_processed >= pair_budget) {
            rep.conclusive = false;
            break;
        }
        auto [i, j] = queue.front();
        queue.pop_front();
        ++rep.pairs_processed;
        const Monomial& mi = basis[i].leading_term(ord).first;
        const Monomial& mj = basis[j].leading_term(ord).first;
        if (Monomial::lcm(mi, mj).degree() == mi.degree() + mj.degree()) continue;
        bool ok = true;
        Polynomial r = pseudo_reduce(s_polynomial(basis[i], basis[j], ord), basis, ord,
                                     term_budget, ok);
        if (!ok) {
            rep.conclusive = false;
            break;
        }
        if (!r.is_zero()) {
            basis.push_back(primitive_part(r, ord));
            for (std::size_t t = 0; t + 1 < basis.size(); ++t)
                queue.emplace_back(t, basis.size() - 1);
        }
    }
    rep.basis_size = basis.size();

    if (rep.conclusive) {
        for (const Wheel& W : wheels_in_complete_graph(n)) {
            bool ok = true;
            Polynomial r = pseudo_reduce(wheel_polynomial(W), basis, ord, term_budget, ok);
            if (!ok) {
                rep.conclusive = false;
                break;
            }
            if (!r.is_zero()) {
                rep.generated = false;
                rep.nonzero_wheels.push_back(W.str());
            }
        }
    }
    return rep;
}

std::map<Edge, Rational> random_slope_configuration(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-50, 50);
    std::vector<int> xs, ys;
    while (static_cast<int>(xs.size()) < n) {
        int x = coord(rng);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    for (int i = 0; i < n; ++i) ys.push_back(coord(rng));
    std::map<Edge, Rational> m;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            m.emplace(Edge(i, j), Rational(ys[j - 1] - ys[i - 1]) /
                                      Rational(xs[j - 1] - xs[i - 1]));
    return m;
}

std::vector<Int> standard_monomial_counts(int n, int max_degree, TermOrder ord) {
    GeneratorSet gs = wheel_generators(n, ord);
    std::vector<EdgeSet> leads;
    for (const Polynomial& p : gs.polys)
        leads.push_back(p.leading_term(ord).first.to_edge_set());

    // A monomial avoids every leading monomial iff its support does; count
    // supports, then compositions of the degree over each support.
    EdgeSet full = complete_graph_edges(n);
    const auto& all = full.edges();
    const std::size_t m = all.size();
    std::vector<Int> support_by_size;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        EdgeSet S(es);
        bool standard = true;
        for (const EdgeSet& L : leads)
            if (S.contains_all(L)) {
                standard = false;
                break;
            }
        if (!standard) continue;
        if (support_by_size.size() <= S.size()) support_by_size.resize(S.size() + 1, 0);
        ++support_by_size[S.size()];
    }

    auto binom = [](int a, int b) {
        if (b < 0 || b > a) return Int(0);
        Int r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<Int> counts;
    for (int d = 0; d <= max_degree; ++d) {
        Int c = 0;
        for (std::size_t s = 0; s < support_by_size.size(); ++s) {
            if (d == 0 && s == 0) c += support_by_size[0];
            if (s >= 1 && static_cast<int>(s) <= d)
                c += support_by_size[s] * binom(d - 1, static_cast<int>(s) - 1);
        }
        counts.push_back(c);
    }
    return counts;
}

}  // namespace slopes
