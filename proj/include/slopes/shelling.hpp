#pragma once

#include <map>

#include "slopes/complex.hpp"
#include "slopes/polynomial.hpp"

namespace slopes {

struct DifferentComplex : std::runtime_error {
    DifferentComplex() : std::runtime_error("facets belong to different complexes") {}
};
struct ShellingViolation : std::runtime_error {
    explicit ShellingViolation(const std::string& what) : std::runtime_error(what) {}
};
/// -1, 0, +1 as F is below, equal to, above G in the facet order: compare
/// decomposition-tree traversals at the first differing node X vs Y, where
/// X beats Y when |X| > |Y|, or sizes tie and min(X sym-diff Y) lies in Y.
int facet_compare(const EdgeSet& F, const EdgeSet& G);

/// edg over the root and all firstborn nodes; a spanning tree of the label.
EdgeSet ell_edges(const DecompositionTree& T);

/// Shelling set Gamma(F): empty for |V| <= 3; Gamma(F2) when V(F1) is the
/// two smallest vertices; otherwise Gamma(F2) + edg(L(F1)).
EdgeSet shelling_set(const DecompositionTree& T);
EdgeSet shelling_set(const EdgeSet& F);

struct ShellingCertificate {
    std::vector<EdgeSet> facets;  // ascending facet order (shelling order)
    std::vector<EdgeSet> gammas;  // Gamma(F) per facet
    // witnesses[i][e] = index j < i with facets[i] \ facets[j] = {e}
    std::vector<std::map<Edge, std::size_t>> witnesses;
};

/// Exhaustive SH1/SH2 check over all facets of the complex on [1,n].
/// Throws ShellingViolation on failure.
ShellingCertificate verify_shelling(int n);

/// Perfect matching on [1,2n].
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each lo < hi, sorted by lo

    int long_pairs() const;  // pairs {i,j} with |i-j| > 1
    std::string str() const;
    auto operator<=>(const Matching&) const = default;
};

std::vector<Matching> enumerate_matchings(int n);  // all of Match(n)

/// Insert the pair {1,p} into a matching on [1,2n-2], p in [2,2n]: relabel
/// x -> x+1 for x < p-1, x -> x+2 for x >= p-1, then adjoin {1,p}.
Matching insert_pair(const Matching& X, int p);

enum class HVectorMethod { Shelling, Recurrence, Matchings, FTransform };
HVectorMethod parse_hvector_method(const std::string& name);

/// h(n,k) for k = 0..n-2.  All methods agree where defined: the Gamma-size
/// histogram over a shelling (n <= 7), the three-term recurrence, the census
/// of matchings on [1,2n-4] by long pairs, and the f-to-h transform of the
/// exhaustive face counts (n <= 6).
std::vector<Int> h_vector(int n, HVectorMethod method = HVectorMethod::Recurrence);

/// m(n,k): matchings on [1,2n] with k long pairs, by recurrence.
Int matching_count(int n, int k);

struct HilbertSeries {
    std::vector<Int> numerator;  // coefficients of 1, t, t^2, ...
    int denominator_exponent;

    std::string str() const;  // e.g. (1+t+t^2)/(1-t)^5
};

HilbertSeries hilbert_series(int n);

}  // namespace slopes
