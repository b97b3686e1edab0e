#include <doctest.h>

#include "slopes/polynomial.hpp"

using namespace slopes;

namespace {

Monomial mono(std::initializer_list<Edge> es) { return Monomial(EdgeSet(es)); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("variable order is lexicographic on endpoint pairs") {
    CHECK(variable_greater(Edge(1, 2), Edge(1, 3)));
    CHECK(variable_greater(Edge(1, 9), Edge(2, 3)));
    CHECK(!variable_greater(Edge(2, 3), Edge(1, 9)));
}

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({Edge(1, 2), Edge(3, 4)});
    Monomial b = mono({Edge(1, 2)});
    CHECK(a.degree() == 2);
    CHECK(b.divides(a));
    CHECK(!a.divides(b));
    CHECK(a.divided_by(b) == mono({Edge(3, 4)}));
    CHECK((b * b).exponent(Edge(1, 2)) == 2);
    CHECK(!(b * b).is_squarefree());
    CHECK(Monomial::lcm(a, b * b).degree() == 3);
    CHECK(a.to_edge_set() == EdgeSet{Edge(1, 2), Edge(3, 4)});
}

TEST_CASE("graded lex compare") {
    auto ord = TermOrder::GradedLex;
    // degree first
    CHECK(compare(mono({Edge(1, 2), Edge(1, 3)}), mono({Edge(1, 2)}), ord) > 0);
    // same degree: the greatest variable where exponents differ decides
    CHECK(compare(mono({Edge(1, 2), Edge(3, 4)}), mono({Edge(1, 3), Edge(2, 4)}), ord) > 0);
    CHECK(compare(mono({Edge(1, 3)}), mono({Edge(1, 4)}), ord) > 0);
    CHECK(compare(mono({Edge(1, 2)}), mono({Edge(1, 2)}), ord) == 0);
}

TEST_CASE("graded revlex compare") {
    auto ord = TermOrder::GradedRevLex;
    CHECK(compare(mono({Edge(1, 2), Edge(1, 3)}), mono({Edge(1, 2)}), ord) > 0);
    // same degree: the smallest variable in the symmetric difference loses
    CHECK(compare(mono({Edge(1, 2), Edge(3, 4)}), mono({Edge(1, 3), Edge(2, 4)}), ord) < 0);
    CHECK(compare(mono({Edge(1, 3)}), mono({Edge(1, 4)}), ord) > 0);
}

TEST_CASE("edge set compare matches monomial compare on squarefree sets") {
    std::vector<EdgeSet> sets = {
        {Edge(1, 2)}, {Edge(3, 4)}, {Edge(1, 2), Edge(3, 4)},
        {Edge(1, 3), Edge(2, 4)}, {Edge(1, 4), Edge(2, 3)},
        {Edge(1, 2), Edge(1, 3), Edge(2, 4)}};
    for (auto ord : {TermOrder::GradedLex, TermOrder::GradedRevLex})
        for (const auto& a : sets)
            for (const auto& b : sets)
                CHECK(edge_set_compare(a, b, ord) ==
                      compare(Monomial(a), Monomial(b), ord));
}

TEST_CASE("polynomial ring operations") {
    Polynomial x = Polynomial::variable(Edge(1, 2));
    Polynomial y = Polynomial::variable(Edge(1, 3));
    Polynomial p = (x - y) * (x + y);
    Polynomial q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.term_count() == 2);
    CHECK(p.homogeneous_degree() == 2);
    CHECK((p - q).is_zero());
    CHECK((p * Int(0)).is_zero());
    CHECK((x * y).coefficient(mono({Edge(1, 2), Edge(1, 3)})) == 1);
}

TEST_CASE("leading terms under both orders") {
    // p = m12*m34 + m13*m24: glex leader holds m12, grevlex leader avoids m34
    Polynomial p = Polynomial::variable(Edge(1, 2)) * Polynomial::variable(Edge(3, 4)) +
                   Polynomial::variable(Edge(1, 3)) * Polynomial::variable(Edge(2, 4));
    CHECK(p.leading_term(TermOrder::GradedLex).first == mono({Edge(1, 2), Edge(3, 4)}));
    CHECK(p.leading_term(TermOrder::GradedRevLex).first ==
          mono({Edge(1, 3), Edge(2, 4)}));
}

TEST_CASE("string form round trips") {
    Polynomial p = Polynomial::variable(Edge(1, 2)) * Polynomial::variable(Edge(1, 2)) *
                       Int(3) -
                   Polynomial::variable(Edge(2, 3)) + Polynomial(Int(7));
    for (auto ord : {TermOrder::GradedLex, TermOrder::GradedRevLex})
        CHECK(Polynomial::parse(p.str(ord)) == p);
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse("+m[1,2]^2*m[2,3]-2*m[1,3]").term_count() == 2);
}

TEST_CASE("evaluation is exact") {
    Polynomial p = Polynomial::variable(Edge(1, 2)) - Polynomial::variable(Edge(1, 3));
    std::map<Edge, Rational> vals{{Edge(1, 2), Rational(1, 3)},
                                  {Edge(1, 3), Rational(1, 3)}};
    CHECK(p.evaluate(vals) == 0);
    vals[Edge(1, 2)] = Rational(2, 7);
    CHECK(p.evaluate(vals) == Rational(-1, 21));
}

TEST_CASE("determinant") {
    Polynomial x = Polynomial::variable(Edge(1, 2));
    Polynomial y = Polynomial::variable(Edge(1, 3));
    std::vector<std::vector<Polynomial>> M{{x, y}, {y, x}};
    CHECK(determinant(M) == x * x - y * y);
    CHECK_THROWS_AS(determinant({{x, y}}), NonSquare);
}

TEST_CASE("division with remainder") {
    auto ord = TermOrder::GradedLex;
    Polynomial x = Polynomial::variable(Edge(1, 2));
    Polynomial y = Polynomial::variable(Edge(1, 3));
    Polynomial g = x - y;
    Polynomial p = x * x - y * y;
    auto rr = reduce(p, {g}, ord);
    CHECK(rr.remainder.is_zero());
    CHECK(rr.quotients[0] == x + y);
    // remainder terms must avoid the leading monomial of g
    auto rr2 = reduce(x * y + y * y, {g}, ord);
    for (const auto& [m, c] : rr2.remainder.terms())
        CHECK(!g.leading_term(ord).first.divides(m));
    // p = sum q_i g_i + r
    CHECK(rr2.quotients[0] * g + rr2.remainder == x * y + y * y);
}

TEST_CASE("s polynomial cancels leading terms") {
    auto ord = TermOrder::GradedLex;
    Polynomial x = Polynomial::variable(Edge(1, 2));
    Polynomial y = Polynomial::variable(Edge(1, 3));
    Polynomial z = Polynomial::variable(Edge(2, 3));
    Polynomial f = x * y - z * z;
    Polynomial g = x * z - y;
    Polynomial sp = s_polynomial(f, g, ord);
    CHECK(!sp.is_zero());
    CHECK(compare(sp.leading_term(ord).first,
                  Monomial::lcm(f.leading_term(ord).first, g.leading_term(ord).first),
                  ord) < 0);
}

}  // TEST_SUITE
