#pragma once

#include <map>
#include <utility>

#include "slopes/graph.hpp"
#include "slopes/polynomial.hpp"

namespace slopes {

struct NotPseudocircuit : std::runtime_error {
    NotPseudocircuit() : std::runtime_error("edge set is not a rigidity pseudocircuit") {}
};
struct NotSpanningTree : std::runtime_error {
    NotSpanningTree() : std::runtime_error("given tree does not span the circuit") {}
};
struct ConstantValence : std::runtime_error {
    ConstantValence() : std::runtime_error("valence function must be nonconstant") {}
};

/// Spoke valences of a coupled tree: a nonconstant map [1,k] -> {1,2}.
class ValenceFunction {
public:
    explicit ValenceFunction(std::vector<int> values);

    int k() const { return static_cast<int>(values_.size()); }
    /// Value at cyclic spoke index i (1-based, taken mod k).
    int operator()(int i) const;

    const std::vector<int>& values() const { return values_; }

    /// All 2^k - 2 nonconstant valence functions for a k-wheel.
    static std::vector<ValenceFunction> all_nonconstant(int k);

private:
    std::vector<int> values_;
};

/// Pair of valences attached to a wheel edge: chord v_i v_{i+1} gets
/// (d(i), d(i+1)); radius v_0 v_i gets (d(i-1), d(i+1)).
struct EdgeType {
    int a;
    int b;
    bool is11() const { return a == 1 && b == 1; }
    bool is22() const { return a == 2 && b == 2; }
    bool is12() const { return !is11() && !is22(); }
};

/// Tree polynomial of a rigidity pseudocircuit via the cycle matrix of the
/// spanning tree T.  Homogeneous of degree |V(C)|-1; support is the set of
/// coupled trees; coefficients are all +-1; independent of T up to sign.
Polynomial tree_polynomial(const EdgeSet& C, const EdgeSet& T);

/// Default tree choice: radii for a wheel, a depth-first tree otherwise.
Polynomial tree_polynomial(const EdgeSet& C);

/// Closed two-product form for a wheel:
///   prod(m_{0,i} - m_{i,i+1}) - prod(m_{0,i+1} - m_{i,i+1}).
Polynomial wheel_polynomial(const Wheel& W);

struct WheelEdgeTypes {
    std::map<Edge, EdgeType> chord_types;
    std::map<Edge, EdgeType> radius_types;
};

WheelEdgeTypes edge_types(const Wheel& W, const ValenceFunction& d);

/// The exactly two coupled trees of W whose spoke valences equal d.
std::pair<EdgeSet, EdgeSet> coupled_trees_by_valence(const Wheel& W,
                                                     const ValenceFunction& d);

/// Which branch of the leading-tree computation applied.
enum class LeadingTreeCase { CenterMin, CenterMax, CriticalEdge, SetScan };

struct LeadingTreeResult {
    EdgeSet tree;
    LeadingTreeCase which;
};

/// The coupled tree whose monomial leads wheel_polynomial(W) under ord.
/// Graded lex uses the combinatorial case split (center min / center max /
/// critical edge); graded revlex scans the coupled trees under the edge-set
/// order.  Neither expands the polynomial.
LeadingTreeResult leading_tree(const Wheel& W, TermOrder ord);

/// Spoke valences of a coupled tree of W, indexed by cyclic position.
ValenceFunction valences_on_spokes(const Wheel& W, const EdgeSet& T);

}  // namespace slopes
