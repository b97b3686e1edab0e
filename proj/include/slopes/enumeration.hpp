#pragma once

#include <string>
#include <vector>

#include "slopes/complex.hpp"
#include "slopes/polynomial.hpp"

namespace slopes {

struct LabelClash : std::runtime_error {
    LabelClash() : std::runtime_error("trees share a label") {}
};
struct OrderViolation : std::runtime_error {
    OrderViolation() : std::runtime_error("grafted root is not below its new parent") {}
};
struct IdentityViolation : std::runtime_error {
    explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Rooted tree with ordered children ("birth order" = list order).
struct RootedPlanarTree {
    Vertex label;
    std::vector<RootedPlanarTree> children;

    bool operator==(const RootedPlanarTree&) const = default;

    std::vector<Vertex> labels() const;  // sorted
    std::size_t size() const;
    std::string str() const;  // e.g. 3(1,2)
};

/// Largest label among the leaves.
Vertex largest_leaf(const RootedPlanarTree& T);

bool is_decreasing(const RootedPlanarTree& T);

/// Attach T1 as the oldest (first) subtree of the node of T2 labeled x.
RootedPlanarTree graft(const RootedPlanarTree& T1, const RootedPlanarTree& T2, Vertex x);

/// All decreasing planar trees on [1,n]; count (2n-3)!!.
std::vector<RootedPlanarTree> enumerate_dpt(int n);  // n <= 9

enum class DptMethod { Enumerate, Recurrence };

/// dpt(n,k) = number of decreasing planar trees on [1,n] with largest leaf
/// at most k.  dpt(0,k) = 1 by convention.
Int dpt(int n, int k, DptMethod method = DptMethod::Recurrence);

/// Verify the displayed dpt identities (the grafting lemma, the surgery
/// identity, the delete-the-root lemma, the four derived forms, and the
/// final two-sum recurrence) exactly over 1 < k <= n <= n_max.
/// Returns the number of (identity, n, k) instances checked.
long dpt_identity_checks(int n_max);

/// e(n,k): recursive lower bound for the degree of the flattened variety;
/// equals dpt(n-1, n-k).
Int degree_lower_bound(int n, int k);

Int double_factorial_odd(int m);  // (2m-1)!! = 1*3*...*(2m-1), 1 for m <= 0

}  // namespace slopes
