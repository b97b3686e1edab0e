#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace slopes {

using Vertex = int;

/// An unordered pair of distinct vertices, stored as lo < hi.
struct Edge {
    Vertex lo;
    Vertex hi;

    Edge(Vertex a, Vertex b) {
        if (a == b) throw std::invalid_argument("Edge endpoints must differ");
        lo = a < b ? a : b;
        hi = a < b ? b : a;
    }

    auto operator<=>(const Edge&) const = default;

    bool has_endpoint(Vertex v) const { return lo == v || hi == v; }
    Vertex other(Vertex v) const { return lo == v ? hi : lo; }

    std::string str() const;
};

/// A set of edges, kept sorted and duplicate-free.  Doubles as a
/// squarefree monomial in the edge variables.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> es) : edges_(es) { normalize(); }
    explicit EdgeSet(std::vector<Edge> es) : edges_(std::move(es)) { normalize(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool contains(const Edge& e) const;
    bool contains_all(const EdgeSet& other) const;

    void insert(const Edge& e);
    void erase(const Edge& e);

    EdgeSet united(const EdgeSet& other) const;
    EdgeSet minus(const EdgeSet& other) const;
    EdgeSet intersect(const EdgeSet& other) const;
    EdgeSet sym_diff(const EdgeSet& other) const;

    /// Support: all vertices incident to at least one edge, sorted.
    std::vector<Vertex> support() const;
    int valence(Vertex v) const;

    auto operator<=>(const EdgeSet&) const = default;

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    std::string str() const;

private:
    void normalize();
    std::vector<Edge> edges_;
};

/// Center plus cyclically ordered spokes; k >= 3.
class Wheel {
public:
    Wheel(Vertex center, std::vector<Vertex> spokes);

    Vertex center() const { return center_; }
    const std::vector<Vertex>& spokes() const { return spokes_; }
    int k() const { return static_cast<int>(spokes_.size()); }

    /// Spoke by cyclic index; spoke(1) .. spoke(k), indices taken mod k.
    Vertex spoke(int i) const;

    EdgeSet chords() const;
    EdgeSet radii() const;
    EdgeSet edge_set() const;

    /// Parse "c;s1,s2,...,sk".
    static Wheel parse(const std::string& spec);
    std::string str() const;

private:
    Vertex center_;
    std::vector<Vertex> spokes_;
};

struct DisconnectedInput : std::runtime_error {
    DisconnectedInput() : std::runtime_error("input edge set is not connected") {}
};

/// Connected components as edge sets (vertex-sharing edges grouped).
std::vector<EdgeSet> components(const EdgeSet& E);

bool is_connected(const EdgeSet& E);
bool is_tree(const EdgeSet& E);

/// All spanning trees T of E with V(T) = V(E).
std::vector<EdgeSet> spanning_trees(const EdgeSet& E);

/// Some spanning tree of E (depth-first), or nullopt if E is disconnected.
std::optional<EdgeSet> dfs_spanning_tree(const EdgeSet& E);

struct BlockDecomposition {
    std::vector<EdgeSet> blocks;
    std::set<Vertex> cut_vertices;
};

/// Block/cut-vertex decomposition of a connected edge set.  A single edge
/// counts as 2-connected.
BlockDecomposition blocks_and_cut_vertices(const EdgeSet& E);

bool is_two_connected(const EdgeSet& E);

/// The v-lobes of a connected edge set with cut vertex v: maximal connected
/// subgraphs not having v as a cut vertex.
std::vector<EdgeSet> lobes(const EdgeSet& E, Vertex v);

/// All T subset of E such that T and E \ T are both spanning trees of V(E).
std::vector<EdgeSet> coupled_trees(const EdgeSet& E);

/// All wheel subgraphs of K_n, one representative per distinct edge set.
/// For a 3-wheel (edge set K4) the representative has the smallest center.
std::vector<Wheel> wheels_in_complete_graph(int n);

EdgeSet complete_graph_edges(int n);
EdgeSet complete_graph_edges(const std::vector<Vertex>& V);

/// Edge-list text format: one "i j" line per edge, sorted; '#' comments and
/// blank lines ignored on input.
std::string to_edge_list(const EdgeSet& E);
EdgeSet parse_edge_list(const std::string& text);

}  // namespace slopes
