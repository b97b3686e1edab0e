#pragma once

#include <memory>
#include <optional>

#include "slopes/graph.hpp"

namespace slopes {

/// A simple path given by its vertex sequence.
struct PathSeq {
    std::vector<Vertex> vertices;

    EdgeSet edge_set() const;
    std::string str() const;  // vertex labels joined by '-'
};

/// A path v1..vk (in some orientation) is forbidden when k >= 4, v1 is its
/// maximum, vk is the maximum of the rest, and v2 > v_{k-1}.
bool is_forbidden(const PathSeq& p);

/// Some forbidden path contained in E, if any.  Absence certifies that E is
/// a face of the complex.
std::optional<PathSeq> contains_forbidden_path(const EdgeSet& E);

bool is_face(const EdgeSet& E);

/// Forbidden paths on vertex set exactly [1,n] with no forbidden consecutive
/// subpath; their counts b(4..9) are 1,2,5,16,61,272.
std::vector<PathSeq> minimal_forbidden_paths(int n);

struct NotAFacet : std::runtime_error {
    NotAFacet() : std::runtime_error("edge set is not a facet of the complex") {}
};
struct ScaleLimit : std::runtime_error {
    explicit ScaleLimit(const std::string& what) : std::runtime_error(what) {}
};
struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Binary tree of vertex-set labels; admissible trees encode facets.
struct DecompositionTree {
    std::vector<Vertex> label;  // sorted
    std::unique_ptr<DecompositionTree> older;    // first child
    std::unique_ptr<DecompositionTree> younger;  // second child

    bool is_leaf() const { return older == nullptr; }
    std::unique_ptr<DecompositionTree> clone() const;

    /// Admissibility: leaves are exactly the 2-sets; internal labels satisfy
    /// min in older only, max in younger only, union is the label, and the
    /// children overlap in exactly max(older).
    bool is_admissible() const;

    /// Nodes in depth-first preorder (root, older subtree, younger subtree).
    std::vector<const DecompositionTree*> traversal() const;

    /// Nested parenthesized label sets, labels space-free.
    std::string str() const;
    /// JSON-style nested arrays of vertex labels.
    std::string json() const;

    bool operator==(const DecompositionTree& other) const;
};

using DecompTreePtr = std::unique_ptr<DecompositionTree>;

/// All facets of the complex on the given vertex set, via admissible-tree
/// enumeration, sorted.
std::vector<EdgeSet> facets(const std::vector<Vertex>& V);
std::vector<EdgeSet> facets(int n);

/// All admissible trees with the given root label.
std::vector<DecompTreePtr> admissible_trees(const std::vector<Vertex>& V);

/// Facet -> decomposition tree (recursive cut-vertex splitting).
DecompTreePtr decomposition_tree(const EdgeSet& F);

/// Decomposition tree -> facet: edg(X) = {min X, max X} over all nodes.
EdgeSet edg_expand(const DecompositionTree& T);

inline Edge edg(const std::vector<Vertex>& label) {
    return Edge(label.front(), label.back());
}

/// Brute-force facet enumeration by face scan; oracle for small n.
std::vector<EdgeSet> facets_brute_force(int n);  // n <= 6

/// f_i = number of faces of cardinality i+1 (f_vector()[0] = f_0).
std::vector<long long> f_vector(int n);  // n <= 6

}  // namespace slopes
