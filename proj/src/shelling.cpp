#include "slopes/shelling.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace slopes {

namespace {

// X beats Y among equal-pedigree node labels.
int label_compare(const std::vector<Vertex>& X, const std::vector<Vertex>& Y) {
    if (X == Y) return 0;
    if (X.size() != Y.size()) return X.size() > Y.size() ? 1 : -1;
    std::vector<Vertex> sd;
    std::set_symmetric_difference(X.begin(), X.end(), Y.begin(), Y.end(),
                                  std::back_inserter(sd));
    bool in_y = std::binary_search(Y.begin(), Y.end(), sd.front());
    return in_y ? 1 : -1;
}

}  // namespace

int facet_compare(const EdgeSet& F, const EdgeSet& G) {
    if (F.support() != G.support()) throw DifferentComplex{};
    if (F == G) return 0;
    auto tf = decomposition_tree(F);
    auto tg = decomposition_tree(G);
    auto xs = tf->traversal();
    auto ys = tg->traversal();
    for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
        int c = label_compare(xs[i]->label, ys[i]->label);
        if (c != 0) return c;
    }
    return 0;
}

EdgeSet ell_edges(const DecompositionTree& T) {
    std::vector<Edge> es{edg(T.label)};
    std::function<void(const DecompositionTree&)> firstborns =
        [&](const DecompositionTree& t) {
            if (t.is_leaf()) return;
            es.push_back(edg(t.older->label));
            firstborns(*t.older);
            firstborns(*t.younger);
        };
    firstborns(T);
    return EdgeSet(std::move(es));
}

EdgeSet shelling_set(const DecompositionTree& T) {
    if (T.label.size() <= 3) return {};
    std::vector<Vertex> two_smallest{T.label[0], T.label[1]};
    if (T.older->label == two_smallest) return shelling_set(*T.younger);
    return shelling_set(*T.younger).united(ell_edges(*T.older));
}

EdgeSet shelling_set(const EdgeSet& F) { return shelling_set(*decomposition_tree(F)); }

ShellingCertificate verify_shelling(int n) {
    ShellingCertificate cert;
    cert.facets = facets(n);
    std::sort(cert.facets.begin(), cert.facets.end(),
              [](const EdgeSet& a, const EdgeSet& b) { return facet_compare(a, b) < 0; });
    for (const EdgeSet& F : cert.facets) cert.gammas.push_back(shelling_set(F));
    cert.witnesses.resize(cert.facets.size());

    for (std::size_t i = 0; i < cert.facets.size(); ++i) {
        const EdgeSet& F = cert.facets[i];
        // SH1: Gamma(F) is not contained in any earlier facet.
        for (std::size_t j = 0; j < i; ++j) {
            if (cert.facets[j].contains_all(cert.gammas[i]))
                throw ShellingViolation("SH1 fails: facet " + F.str() +
                                        " has Gamma inside " + cert.facets[j].str());
        }
        // SH2: each e in Gamma(F) is the sole difference with some earlier facet.
        for (const Edge& e : cert.gammas[i]) {
            bool found = false;
            for (std::size_t j = 0; j < i && !found; ++j) {
                EdgeSet diff = F.minus(cert.facets[j]);
                if (diff.size() == 1 && diff.contains(e)) {
                    cert.witnesses[i][e] = j;
                    found = true;
                }
            }
            if (!found)
                throw ShellingViolation("SH2 fails: no witness for edge " + e.str() +
                                        " of facet " + F.str());
        }
    }
    return cert;
}

int Matching::long_pairs() const {
    int k = 0;
    for (auto& [a, b] : pairs)
        if (b - a > 1) ++k;
    return k;
}

std::string Matching::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ',';
        os << '{' << pairs[i].first << ',' << pairs[i].second << '}';
    }
    os << '}';
    return os.str();
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    std::vector<int> elems(2 * n);
    for (int i = 0; i < 2 * n; ++i) elems[i] = i + 1;
    Matching cur;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) {
            out.push_back(cur);
            return;
        }
        int a = rest.front();
        for (std::size_t i = 1; i < rest.size(); ++i) {
            int b = rest[i];
            std::vector<int> next;
            for (std::size_t j = 1; j < rest.size(); ++j)
                if (j != i) next.push_back(rest[j]);
            cur.pairs.emplace_back(a, b);
            rec(next);
            cur.pairs.pop_back();
        }
    };
    if (n == 0) {
        out.push_back(cur);
        return out;
    }
    rec(elems);
    return out;
}

Matching insert_pair(const Matching& X, int p) {
    int two_n = static_cast<int>(X.pairs.size()) * 2 + 2;
    if (p < 2 || p > two_n) throw OutOfRange("insertion position out of range");
    Matching Y;
    for (auto [a, b] : X.pairs) {
        a = a < p - 1 ? a + 1 : a + 2;
        b = b < p - 1 ? b + 1 : b + 2;
        Y.pairs.emplace_back(a, b);
    }
    Y.pairs.emplace_back(1, p);
    std::sort(Y.pairs.begin(), Y.pairs.end());
    return Y;
}

HVectorMethod parse_hvector_method(const std::string& name) {
    if (name == "shelling") return HVectorMethod::Shelling;
    if (name == "recurrence") return HVectorMethod::Recurrence;
    if (name == "matchings") return HVectorMethod::Matchings;
    if (name == "ftransform") return HVectorMethod::FTransform;
    throw std::invalid_argument("unknown h-vector method: " + name);
}

Int matching_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k == 0) return 1;
    // m(n,k) = m(n-1,k) + (n+k-2) m(n-1,k-1) + (n-k+1) m(n-1,k-2)
    static std::map<std::pair<int, int>, Int> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    Int v = matching_count(n - 1, k) + (n + k - 2) * matching_count(n - 1, k - 1) +
            (n - k + 1) * matching_count(n - 1, k - 2);
    memo[{n, k}] = v;
    return v;
}

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<Int> h_vector(int n, HVectorMethod method) {
    if (n < 2) throw OutOfRange("h-vector needs n >= 2");
    const int len = n - 1;  // entries h(n,0) .. h(n,n-2)
    std::vector<Int> h(len, 0);
    switch (method) {
        case HVectorMethod::Recurrence:
            for (int k = 0; k < len; ++k) h[k] = matching_count(n - 2, k);
            break;
        case HVectorMethod::Matchings:
            for (const Matching& X : enumerate_matchings(n - 2)) ++h[X.long_pairs()];
            break;
        case HVectorMethod::Shelling: {
            if (n > 7) throw ScaleLimit("shelling h-vector is limited to n <= 7");
            if (n == 2) {
                h[0] = 1;
                break;
            }
            for (const EdgeSet& F : facets(n)) {
                std::size_t g = shelling_set(F).size();
                ++h[g];
            }
            break;
        }
        case HVectorMethod::FTransform: {
            auto f = f_vector(n);  // throws ScaleLimit above n = 6
            const int d = 2 * n - 3;
            // h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}, with f_{-1} = 1
            for (int k = 0; k <= d; ++k) {
                Int hk = 0;
                for (int i = 0; i <= k; ++i) {
                    Int fi = i == 0 ? Int(1)
                                    : (i - 1 < static_cast<int>(f.size()) ? Int(f[i - 1])
                                                                          : Int(0));
                    Int term = binom(d - i, k - i) * fi;
                    hk += (k - i) % 2 == 0 ? term : -term;
                }
                if (k < len)
                    h[k] = hk;
                else if (hk != 0)
                    throw std::logic_error("nonzero h beyond expected range");
            }
            break;
        }
    }
    return h;
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (numerator[k] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (k == 0)
            os << numerator[k];
        else {
            if (numerator[k] != 1) os << numerator[k] << '*';
            os << 't';
            if (k > 1) os << '^' << k;
        }
    }
    if (first) os << '0';
    os << ")/(1-t)^" << denominator_exponent;
    return os.str();
}

HilbertSeries hilbert_series(int n) {
    HilbertSeries s;
    s.numerator = h_vector(n, HVectorMethod::Recurrence);
    while (s.numerator.size() > 1 && s.numerator.back() == 0) s.numerator.pop_back();
    s.denominator_exponent = 2 * n - 3;
    return s;
}

}  // namespace slopes
