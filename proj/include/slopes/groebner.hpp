#pragma once

#include <random>

#include "slopes/polynomial.hpp"
#include "slopes/treepoly.hpp"

namespace slopes {

struct ReductionFailure : std::runtime_error {
    explicit ReductionFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Wheel tree polynomials, one per distinct wheel edge set, sign-normalized
/// for the chosen order.
struct GeneratorSet {
    std::vector<Wheel> wheels;
    std::vector<Polynomial> polys;
    TermOrder order;
};

GeneratorSet wheel_generators(int n, TermOrder ord);

struct SPairOutcome {
    std::size_t i;
    std::size_t j;
    bool skipped_coprime;
    long steps;
    std::size_t max_terms;
};

struct GroebnerCertificate {
    int n;
    TermOrder order;
    std::size_t generator_count;
    std::vector<SPairOutcome> pairs;
    std::size_t skipped;
    std::size_t reduced_to_zero;
    std::size_t max_intermediate_terms;

    std::string json() const;
};

/// Buchberger criterion for the wheel generators: every S-pair either has
/// coprime leading monomials (skipped, and logged) or reduces to zero.
/// Throws ReductionFailure otherwise.
GroebnerCertificate certify_groebner(int n, TermOrder ord = TermOrder::GradedLex);

/// Degree of the initial ideal = facet count of the complex, via admissible
/// tree enumeration.
Int standard_monomial_degree(int n);  // n <= 8

struct K4ProbeReport {
    int n;
    bool conclusive;     // false when a budget was exhausted
    bool generated;      // all wheel polynomials reduce to zero
    std::size_t basis_size;
    std::size_t pairs_processed;
    std::vector<std::string> nonzero_wheels;  // wheels with nonzero remainder

    std::string json() const;
};

/// Complete the K4 tree polynomials to a Groebner basis (budgeted Buchberger
/// over the integers with pseudo-reduction), then reduce every wheel
/// polynomial of K_n against it.
K4ProbeReport k4_generation_probe(int n, std::size_t pair_budget = 20000,
                                  std::size_t term_budget = 200000);

/// Slopes of n random points with distinct x-coordinates, exact rationals.
std::map<Edge, Rational> random_slope_configuration(int n, std::mt19937& rng);

/// Count monomials of each degree 0..max_degree not divisible by any leading
/// monomial of the generators (standard monomials).
std::vector<Int> standard_monomial_counts(int n, int max_degree, TermOrder ord);

}  // namespace slopes
