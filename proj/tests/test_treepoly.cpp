#include <doctest.h>

#include <set>

#include "slopes/treepoly.hpp"

using namespace slopes;

TEST_SUITE("treepoly") {

TEST_CASE("valence functions") {
    CHECK_THROWS_AS(ValenceFunction({1, 1, 1}), ConstantValence);
    CHECK_THROWS_AS(ValenceFunction({1, 3}), std::invalid_argument);
    ValenceFunction d({1, 2, 2});
    CHECK(d(1) == 1);
    CHECK(d(4) == 1);   // cyclic
    CHECK(d(0) == 2);   // d(k)
    CHECK(ValenceFunction::all_nonconstant(3).size() == 6);
    CHECK(ValenceFunction::all_nonconstant(5).size() == 30);
}

TEST_CASE("K4 tree polynomial") {
    Polynomial p = tree_polynomial(complete_graph_edges(4));
    CHECK(p.term_count() == 12);
    CHECK(p.homogeneous_degree() == 3);
    for (const auto& [m, c] : p.terms()) {
        CHECK((c == 1 || c == -1));
        CHECK(m.is_squarefree());
        CHECK(is_tree(m.to_edge_set()));
    }
}

TEST_CASE("tree polynomial independent of spanning tree up to sign") {
    EdgeSet C = complete_graph_edges(4);
    Polynomial ref;
    bool first = true;
    for (const EdgeSet& T : coupled_trees(C)) {
        Polynomial p = tree_polynomial(C, T).sign_normalized(TermOrder::GradedLex);
        if (first) {
            ref = p;
            first = false;
        }
        CHECK(p == ref);
    }
}

TEST_CASE("closed wheel form matches the determinant") {
    for (const char* spec : {"4;1,2,3", "1;2,3,4", "2;1,3,4", "1;2,3,4,5", "3;1,2,5,4",
                             "5;1,2,3,4", "6;1,3,5,2,4"}) {
        Wheel W = Wheel::parse(spec);
        Polynomial closed = wheel_polynomial(W);
        Polynomial det = tree_polynomial(W.edge_set());
        bool same = closed == det || closed == -det;
        CHECK(same);
        CHECK(closed.term_count() == (std::size_t{2} << W.k()) - 4);
    }
}

TEST_CASE("support of the wheel polynomial is the coupled trees") {
    Wheel W = Wheel::parse("1;2,3,4,5");
    std::set<EdgeSet> support;
    Polynomial p = wheel_polynomial(W);
    for (const auto& [m, c] : p.terms()) support.insert(m.to_edge_set());
    auto ct = coupled_trees(W.edge_set());
    CHECK(support == std::set<EdgeSet>(ct.begin(), ct.end()));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(tree_polynomial(EdgeSet{Edge(1, 2), Edge(2, 3)}), NotPseudocircuit);
    CHECK_THROWS_AS(tree_polynomial(complete_graph_edges(4),
                                    EdgeSet{Edge(1, 2), Edge(1, 3), Edge(2, 3)}),
                    NotSpanningTree);
}

TEST_CASE("coupled trees by valence") {
    Wheel W = Wheel::parse("1;2,3,4,5");
    std::set<EdgeSet> seen;
    for (const auto& d : ValenceFunction::all_nonconstant(4)) {
        auto [t1, t2] = coupled_trees_by_valence(W, d);
        CHECK(t1 != t2);
        for (const EdgeSet& T : {t1, t2}) {
            CHECK(is_tree(T));
            CHECK(is_tree(W.edge_set().minus(T)));
            // the valences on the cycle must match d
            for (int i = 1; i <= 4; ++i) CHECK(T.valence(W.spoke(i)) == d(i));
            seen.insert(T);
        }
    }
    // every coupled tree arises from exactly one valence function
    CHECK(seen.size() == coupled_trees(W.edge_set()).size());
}

TEST_CASE("edge types") {
    Wheel W = Wheel::parse("1;2,3,4,5");
    ValenceFunction d({1, 2, 1, 2});
    auto et = edge_types(W, d);
    CHECK(et.chord_types.at(Edge(2, 3)).is12());
    CHECK(et.radius_types.at(Edge(1, 3)).is11());  // (d(1), d(3)) = (1,1)
    CHECK(et.radius_types.at(Edge(1, 2)).is22());  // (d(4), d(2)) = (2,2)
}

TEST_CASE("glex leading tree cases") {
    // center is the smallest vertex
    auto r1 = leading_tree(Wheel::parse("1;4,3,2"), TermOrder::GradedLex);
    CHECK(r1.which == LeadingTreeCase::CenterMin);
    CHECK(r1.tree == EdgeSet{Edge(1, 2), Edge(1, 3), Edge(2, 4)});
    // center is the largest vertex
    auto r2 = leading_tree(Wheel::parse("4;1,2,3"), TermOrder::GradedLex);
    CHECK(r2.which == LeadingTreeCase::CenterMax);
    CHECK(r2.tree == EdgeSet{Edge(1, 2), Edge(1, 3), Edge(2, 4)});
    // center in the middle
    auto r3 = leading_tree(Wheel::parse("3;1,2,4,5"), TermOrder::GradedLex);
    CHECK(r3.which == LeadingTreeCase::CriticalEdge);
}

TEST_CASE("leading tree equals the polynomial leading term") {
    for (auto ord : {TermOrder::GradedLex, TermOrder::GradedRevLex}) {
        for (const Wheel& W : wheels_in_complete_graph(5)) {
            Polynomial p = wheel_polynomial(W);
            EdgeSet lead = p.leading_term(ord).first.to_edge_set();
            auto res = leading_tree(W, ord);
            CHECK(res.tree == lead);
        }
    }
}

TEST_CASE("valences on spokes recovers the valence function") {
    Wheel W = Wheel::parse("1;2,3,4,5");
    ValenceFunction d({2, 1, 2, 1});
    auto [t1, t2] = coupled_trees_by_valence(W, d);
    CHECK(valences_on_spokes(W, t1).values() == d.values());
}

}  // TEST_SUITE
