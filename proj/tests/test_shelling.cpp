#include <doctest.h>

#include <map>
#include <set>

#include "slopes/enumeration.hpp"
#include "slopes/shelling.hpp"

using namespace slopes;

TEST_SUITE("shelling") {

TEST_CASE("facet order is a total order") {
    auto fs = facets(5);
    for (const EdgeSet& F : fs) {
        CHECK(facet_compare(F, F) == 0);
        for (const EdgeSet& G : fs) {
            int c = facet_compare(F, G);
            CHECK(c == -facet_compare(G, F));
            if (&F != &G) CHECK(c != 0);
            for (const EdgeSet& H : fs)
                if (c > 0 && facet_compare(G, H) > 0) CHECK(facet_compare(F, H) > 0);
        }
    }
}

TEST_CASE("facets of different complexes do not compare") {
    CHECK_THROWS_AS(facet_compare(facets(4).front(), facets(5).front()),
                    DifferentComplex);
}

TEST_CASE("ell edges form a spanning tree of the facet support") {
    for (int n = 4; n <= 6; ++n) {
        for (const EdgeSet& F : facets(n)) {
            EdgeSet L = ell_edges(*decomposition_tree(F));
            CHECK(is_tree(L));
            CHECK(L.support() == F.support());
            for (const Edge& e : L) CHECK(F.contains(e));
        }
    }
}

TEST_CASE("shelling sets of the smallest complexes") {
    // one facet on 3 vertices, Gamma empty
    CHECK(shelling_set(EdgeSet{Edge(1, 2), Edge(1, 3), Edge(2, 3)}).empty());
    // the n=4 complex: Gamma sizes over the shelling order are 0,1,2
    auto cert = verify_shelling(4);
    std::vector<std::size_t> sizes;
    for (const EdgeSet& g : cert.gammas) sizes.push_back(g.size());
    CHECK(sizes == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("the facet order is a shelling order") {
    for (int n = 3; n <= 6; ++n) {
        auto cert = verify_shelling(n);
        CHECK(cert.facets.size() == (n <= 3 ? 1 : facets(n).size()));
        // SH2 witnesses cover every element of Gamma(F_i)
        for (std::size_t i = 0; i < cert.facets.size(); ++i)
            for (const Edge& e : cert.gammas[i]) CHECK(cert.witnesses[i].count(e));
        // order really is ascending
        for (std::size_t i = 0; i + 1 < cert.facets.size(); ++i)
            CHECK(facet_compare(cert.facets[i], cert.facets[i + 1]) < 0);
    }
}

TEST_CASE("h vector methods agree") {
    for (int n = 3; n <= 6; ++n) {
        auto ref = h_vector(n, HVectorMethod::Recurrence);
        CHECK(h_vector(n, HVectorMethod::Shelling) == ref);
        CHECK(h_vector(n, HVectorMethod::Matchings) == ref);
        CHECK(h_vector(n, HVectorMethod::FTransform) == ref);
    }
    CHECK(h_vector(7, HVectorMethod::Shelling) ==
          h_vector(7, HVectorMethod::Matchings));
}

TEST_CASE("pinned h vectors") {
    CHECK(h_vector(4) == std::vector<Int>{1, 1, 1});
    CHECK(h_vector(5) == std::vector<Int>{1, 3, 6, 5});
    for (int n = 3; n <= 8; ++n) {
        Int sum = 0;
        for (const Int& h : h_vector(n)) sum += h;
        CHECK(sum == double_factorial_odd(n - 2));
    }
}

TEST_CASE("matching census") {
    // m(n,0) = 1: the unique matching with no long pair is all short pairs
    for (int n = 0; n <= 10; ++n) CHECK(matching_count(n, 0) == 1);
    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_matchings(n);
        Int total = 1;
        for (int i = 1; i <= n; ++i) total *= 2 * i - 1;
        CHECK(Int(all.size()) == total);
        std::map<int, Int> hist;
        for (const Matching& X : all) hist[X.long_pairs()] += 1;
        for (const auto& [k, c] : hist) CHECK(c == matching_count(n, k));
    }
}

TEST_CASE("pair insertion") {
    Matching one{{{1, 2}}};
    CHECK(insert_pair(one, 2).pairs ==
          std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    Matching m3 = insert_pair(one, 3);
    CHECK(m3.pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(m3.long_pairs() == 2);
    CHECK_THROWS_AS(insert_pair(one, 1), OutOfRange);
    CHECK_THROWS_AS(insert_pair(one, 5), OutOfRange);
}

TEST_CASE("pair insertion is a bijection onto the next level") {
    for (int n = 2; n <= 6; ++n) {
        std::set<Matching> image;
        for (const Matching& X : enumerate_matchings(n - 1))
            for (int p = 2; p <= 2 * n; ++p) image.insert(insert_pair(X, p));
        auto next = enumerate_matchings(n);
        CHECK(image.size() == next.size());  // injective
        CHECK(image == std::set<Matching>(next.begin(), next.end()));
    }
}

TEST_CASE("hilbert series") {
    CHECK(hilbert_series(4).str() == "(1+t+t^2)/(1-t)^5");
    auto h5 = hilbert_series(5);
    CHECK(h5.numerator == std::vector<Int>{1, 3, 6, 5});
    CHECK(h5.denominator_exponent == 7);
    CHECK(h5.str() == "(1+3*t+6*t^2+5*t^3)/(1-t)^7");
}

}  // TEST_SUITE
