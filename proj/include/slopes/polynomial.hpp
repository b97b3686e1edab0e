#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopes/graph.hpp"

namespace slopes {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Term orders on edge monomials.  The variable order is
/// m_12 > m_13 > ... > m_1n > m_23 > ..., i.e. the variable for edge (i,j)
/// outranks the one for (k,l) exactly when (i,j) precedes (k,l)
/// lexicographically as integer pairs.  This single rule drives both orders.
enum class TermOrder { GradedLex, GradedRevLex };

TermOrder parse_term_order(const std::string& name);  // "glex" | "grevlex"

/// True when the variable for a outranks the variable for b.
inline bool variable_greater(const Edge& a, const Edge& b) { return a < b; }

/// Exponent map over edge variables; zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const EdgeSet& squarefree);

    static Monomial variable(const Edge& e) { return Monomial(EdgeSet{e}); }

    int exponent(const Edge& e) const;
    int degree() const;
    bool is_one() const { return exp_.empty(); }
    bool is_squarefree() const;

    /// Squarefree monomial back to its edge set (requires squarefree).
    EdgeSet to_edge_set() const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// this / other; requires other.divides(*this).
    Monomial divided_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    const std::map<Edge, int>& exponents() const { return exp_; }

    /// Container ordering only (not a term order).
    auto operator<=>(const Monomial&) const = default;

    std::string str() const;

private:
    std::map<Edge, int> exp_;
};

/// -1, 0, +1 as a is below, equal to, above b in the given term order.
int compare(const Monomial& a, const Monomial& b, TermOrder ord);

/// Same order restricted to squarefree monomials, computed on edge sets
/// directly: larger cardinality wins, ties by the extremal edge of the
/// symmetric difference.
int edge_set_compare(const EdgeSet& E, const EdgeSet& F, TermOrder ord);

struct NonSquare : std::runtime_error {
    NonSquare() : std::runtime_error("matrix is not square") {}
};

/// Integer-coefficient multivariate polynomial in the edge variables.
/// Terms are stored in descending graded-lex order; leading terms for
/// other orders are found by scan.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Int constant);
    static Polynomial term(const Monomial& m, Int coeff);
    static Polynomial variable(const Edge& e) { return term(Monomial::variable(e), 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 when not homogeneous, otherwise the common degree (0 for the zero
    /// polynomial).
    int homogeneous_degree() const;

    Int coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Int& c) const;
    bool operator==(const Polynomial&) const = default;

    std::pair<Monomial, Int> leading_term(TermOrder ord) const;  // requires nonzero

    /// Multiplies by -1 if needed so the leading coefficient under ord is
    /// positive.
    Polynomial sign_normalized(TermOrder ord) const;

    /// Substitute exact rational values for the variables (absent edges read
    /// as 0) and evaluate.
    Rational evaluate(const std::map<Edge, Rational>& values) const;

    /// Terms in descending order `ord`, each "{+|-}[c*]m[i,j]*..."; "0" for
    /// the zero polynomial.  parse() inverts str() for either order.
    std::string str(TermOrder ord = TermOrder::GradedLex) const;
    static Polynomial parse(const std::string& text);

    const std::vector<std::pair<Monomial, Int>>& terms() const { return terms_; }

private:
    // Descending graded lex; no zero coefficients.
    std::vector<std::pair<Monomial, Int>> terms_;
    void normalize();
    friend Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>&);
};

/// Exact determinant by cofactor expansion; dimensions here stay small.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& M);

struct ReductionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
    long steps = 0;
    std::size_t max_terms = 0;  // largest intermediate term count
};

/// Multivariate division: p = sum q_i g_i + r with no term of r divisible by
/// any leading monomial of the basis.  Ties go to the first basis element.
ReductionResult reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                       TermOrder ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder ord);

}  // namespace slopes
