#pragma once

#include <memory>

#include "slopes/complex.hpp"
#include "slopes/graph.hpp"

namespace slopes {

struct ElementPresent : std::runtime_error {
    ElementPresent() : std::runtime_error("element already present in the root label") {}
};
struct NotProper : std::runtime_error {
    NotProper() : std::runtime_error("augmented element is not below the root minimum") {}
};

/// Binary total partition, possibly augmented: the root label may carry one
/// extra element that appears in no child.
struct BtpNode {
    std::vector<Vertex> label;  // sorted
    std::unique_ptr<BtpNode> older;
    std::unique_ptr<BtpNode> younger;

    bool is_leaf() const { return older == nullptr; }
    std::unique_ptr<BtpNode> clone() const;

    /// Root = label; leaves singletons; each internal node the disjoint union
    /// of its children with the maximum in the younger child.
    bool is_valid() const;

    /// Nested parenthesized labels, e.g. (12345 (4) (125 (1) (25 (2) (5)))).
    std::string str() const;

    bool operator==(const BtpNode& other) const;
};

using BtpPtr = std::unique_ptr<BtpNode>;

/// All binary total partitions of V, sorted by preorder label sequence.
std::vector<BtpPtr> enumerate_btp(const std::vector<Vertex>& V);

/// Aug_j: add j to the root label only.
BtpPtr augment(const BtpNode& T, Vertex j);

/// The element of the root not covered by the children (the augmented j);
/// for a 2-element leaf root this is taken to be the minimum.
Vertex augmented_element(const BtpNode& T);

/// A tree in BT(S,j) is proper when j < min(S), i.e. j = min(root).
bool is_proper(const BtpNode& T);

/// Straightening psi: every k in S with k < j, in non-root labels only, is
/// replaced by its successor in S + {j}.  Root label unchanged.
BtpPtr straighten(const BtpNode& T);

/// Inverse of straighten for the subscript pair determined by j (the element
/// that was augmented before straightening).
BtpPtr straighten_inverse(const BtpNode& T, Vertex j);

/// phi: proper augmented trees to admissible decomposition trees, preserving
/// shape.  Older child phi(Aug_j(T1)); younger phi(psi(Aug_m(T2))) with
/// m = max(label(T1)).
DecompTreePtr phi(const BtpNode& T);
BtpPtr phi_inverse(const DecompositionTree& U);

/// theta = phi after Aug_1; bijection BT([2,n]) -> Adm([1,n]).
DecompTreePtr theta(const BtpNode& T);
BtpPtr theta_inverse(const DecompositionTree& U);

}  // namespace slopes
