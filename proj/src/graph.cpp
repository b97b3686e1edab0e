#include "slopes/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace slopes {

std::string Edge::str() const {
    return std::to_string(lo) + "-" + std::to_string(hi);
}

void EdgeSet::normalize() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::contains_all(const EdgeSet& other) const {
    return std::includes(edges_.begin(), edges_.end(), other.begin(), other.end());
}

void EdgeSet::insert(const Edge& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void EdgeSet::erase(const Edge& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) edges_.erase(it);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    EdgeSet r;
    r.edges_ = std::move(out);
    return r;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    EdgeSet r;
    r.edges_ = std::move(out);
    return r;
}

EdgeSet EdgeSet::intersect(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    EdgeSet r;
    r.edges_ = std::move(out);
    return r;
}

EdgeSet EdgeSet::sym_diff(const EdgeSet& other) const {
    std::vector<Edge> out;
    std::set_symmetric_difference(begin(), end(), other.begin(), other.end(),
                                  std::back_inserter(out));
    EdgeSet r;
    r.edges_ = std::move(out);
    return r;
}

std::vector<Vertex> EdgeSet::support() const {
    std::vector<Vertex> vs;
    for (const Edge& e : edges_) {
        vs.push_back(e.lo);
        vs.push_back(e.hi);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int EdgeSet::valence(Vertex v) const {
    int c = 0;
    for (const Edge& e : edges_)
        if (e.has_endpoint(v)) ++c;
    return c;
}

std::string EdgeSet::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Edge& e : edges_) {
        if (!first) os << ',';
        os << e.lo << '-' << e.hi;
        first = false;
    }
    os << '}';
    return os.str();
}

Wheel::Wheel(Vertex center, std::vector<Vertex> spokes)
    : center_(center), spokes_(std::move(spokes)) {
    if (spokes_.size() < 3) throw std::invalid_argument("wheel needs at least 3 spokes");
    std::vector<Vertex> all = spokes_;
    all.push_back(center_);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("wheel vertices must be distinct");
}

Vertex Wheel::spoke(int i) const {
    int k_ = k();
    int idx = ((i - 1) % k_ + k_) % k_;
    return spokes_[idx];
}

EdgeSet Wheel::chords() const {
    std::vector<Edge> es;
    for (int i = 1; i <= k(); ++i) es.emplace_back(spoke(i), spoke(i + 1));
    return EdgeSet(std::move(es));
}

EdgeSet Wheel::radii() const {
    std::vector<Edge> es;
    for (Vertex s : spokes_) es.emplace_back(center_, s);
    return EdgeSet(std::move(es));
}

EdgeSet Wheel::edge_set() const { return chords().united(radii()); }

Wheel Wheel::parse(const std::string& spec) {
    auto semi = spec.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("wheel spec must look like \"c;s1,s2,...,sk\"");
    Vertex center = std::stoi(spec.substr(0, semi));
    std::vector<Vertex> spokes;
    std::stringstream ss(spec.substr(semi + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) spokes.push_back(std::stoi(tok));
    return Wheel(center, std::move(spokes));
}

std::string Wheel::str() const {
    std::ostringstream os;
    os << center_ << ';';
    for (std::size_t i = 0; i < spokes_.size(); ++i) {
        if (i) os << ',';
        os << spokes_[i];
    }
    return os.str();
}

namespace {

// Union-find over the support of E.
struct Dsu {
    std::map<Vertex, Vertex> parent;
    Vertex find(Vertex v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent[v] = v;
            return v;
        }
        if (it->second == v) return v;
        return it->second = find(it->second);
    }
    void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<EdgeSet> components(const EdgeSet& E) {
    Dsu dsu;
    for (const Edge& e : E) dsu.unite(e.lo, e.hi);
    std::map<Vertex, std::vector<Edge>> groups;
    for (const Edge& e : E) groups[dsu.find(e.lo)].push_back(e);
    std::vector<EdgeSet> out;
    for (auto& [root, edges] : groups) out.emplace_back(std::move(edges));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const EdgeSet& E) { return components(E).size() <= 1; }

bool is_tree(const EdgeSet& E) {
    if (E.empty()) return false;
    return is_connected(E) && E.size() == E.support().size() - 1;
}

std::vector<EdgeSet> spanning_trees(const EdgeSet& E) {
    const auto V = E.support();
    if (V.empty()) return {};
    const auto& edges = E.edges();
    const std::size_t need = V.size() - 1;
    std::vector<EdgeSet> out;
    if (need > edges.size()) return out;
    std::vector<Edge> cur;
    // Choose edges in index order; prune on cycle creation via union-find rebuilt
    // per branch (sizes here are tiny).
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == need) {
            EdgeSet T(cur);
            if (is_tree(T) && T.support() == V) out.push_back(std::move(T));
            return;
        }
        if (edges.size() - start < need - cur.size()) return;
        for (std::size_t i = start; i < edges.size(); ++i) {
            cur.push_back(edges[i]);
            Dsu dsu;
            bool acyclic = true;
            for (const Edge& e : cur) {
                if (dsu.find(e.lo) == dsu.find(e.hi)) {
                    acyclic = false;
                    break;
                }
                dsu.unite(e.lo, e.hi);
            }
            if (acyclic) rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<EdgeSet> dfs_spanning_tree(const EdgeSet& E) {
    auto V = E.support();
    if (V.empty()) return EdgeSet{};
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : E) {
        adj[e.lo].push_back(e.hi);
        adj[e.hi].push_back(e.lo);
    }
    std::set<Vertex> seen;
    std::vector<Edge> tree;
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        seen.insert(v);
        for (Vertex w : adj[v]) {
            if (!seen.count(w)) {
                tree.emplace_back(v, w);
                dfs(w);
            }
        }
    };
    dfs(V.front());
    if (seen.size() != V.size()) return std::nullopt;
    return EdgeSet(std::move(tree));
}

BlockDecomposition blocks_and_cut_vertices(const EdgeSet& E) {
    if (!is_connected(E)) throw DisconnectedInput{};
    BlockDecomposition result;
    if (E.empty()) return result;

    // Hopcroft-Tarjan lowpoint algorithm on the support.
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : E) {
        adj[e.lo].push_back(e.hi);
        adj[e.hi].push_back(e.lo);
    }
    std::map<Vertex, int> disc, low;
    std::vector<Edge> stack;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (Vertex w : adj[v]) {
            if (w == parent) {
                parent = -1;  // consume the tree edge back-reference once
                continue;
            }
            if (!disc.count(w)) {
                ++children;
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<Edge> block;
                    Edge top(v, w);
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == top) break;
                    }
                    result.blocks.emplace_back(std::move(block));
                    bool is_root = (disc[v] == 1);
                    if ((!is_root) || children > 1) result.cut_vertices.insert(v);
                }
            } else if (disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    Vertex root = E.support().front();
    dfs(root, -1);
    std::sort(result.blocks.begin(), result.blocks.end());
    return result;
}

bool is_two_connected(const EdgeSet& E) {
    if (E.empty()) return false;
    if (!is_connected(E)) return false;
    auto bd = blocks_and_cut_vertices(E);
    return bd.blocks.size() == 1;
}

std::vector<EdgeSet> lobes(const EdgeSet& E, Vertex v) {
    // Components of E - v, each together with the v-edges attached to it.
    std::vector<Edge> rest, incident;
    for (const Edge& e : E)
        (e.has_endpoint(v) ? incident : rest).push_back(e);
    Dsu dsu;
    for (const Edge& e : rest) dsu.unite(e.lo, e.hi);
    std::map<Vertex, std::vector<Edge>> groups;
    for (const Edge& e : rest) groups[dsu.find(e.lo)].push_back(e);
    for (const Edge& e : incident) groups[dsu.find(e.other(v))].push_back(e);
    std::vector<EdgeSet> out;
    for (auto& [root, edges] : groups) out.emplace_back(std::move(edges));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> coupled_trees(const EdgeSet& E) {
    std::vector<EdgeSet> out;
    auto V = E.support();
    if (V.size() < 2 || E.size() != 2 * (V.size() - 1)) return out;
    for (const EdgeSet& T : spanning_trees(E)) {
        EdgeSet comp = E.minus(T);
        if (is_tree(comp) && comp.support() == V) out.push_back(T);
    }
    return out;
}

std::vector<Wheel> wheels_in_complete_graph(int n) {
    std::vector<Wheel> out;
    std::set<EdgeSet> seen;
    if (n < 4) return out;
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    // Choose k+1 vertices, a center, and a cyclic order of the rest.
    for (int k = 3; k <= n - 1; ++k) {
        std::vector<int> idx(k + 1);
        std::function<void(int, int)> choose = [&](int pos, int start) {
            if (pos == k + 1) {
                for (int c = 0; c <= k; ++c) {
                    std::vector<Vertex> rest;
                    for (int i = 0; i <= k; ++i)
                        if (i != c) rest.push_back(all[idx[i]]);
                    // Cycles on `rest`: fix the first element, permute the tail;
                    // reflections give the same edge set and are caught by dedupe.
                    std::sort(rest.begin() + 1, rest.end());
                    do {
                        Wheel w(all[idx[c]], rest);
                        EdgeSet es = w.edge_set();
                        if (seen.insert(es).second) out.push_back(w);
                    } while (std::next_permutation(rest.begin() + 1, rest.end()));
                }
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[pos] = i;
                choose(pos + 1, i + 1);
            }
        };
        choose(0, 0);
    }
    // A wheel's edge set determines its vertex subset, and centers are tried in
    // ascending order within each subset, so the retained representative of a
    // 3-wheel already has the smallest center.
    return out;
}

EdgeSet complete_graph_edges(int n) {
    std::vector<Vertex> V(n);
    for (int i = 0; i < n; ++i) V[i] = i + 1;
    return complete_graph_edges(V);
}

EdgeSet complete_graph_edges(const std::vector<Vertex>& V) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) es.emplace_back(V[i], V[j]);
    return EdgeSet(std::move(es));
}

std::string to_edge_list(const EdgeSet& E) {
    std::ostringstream os;
    for (const Edge& e : E) os << e.lo << ' ' << e.hi << '\n';
    return os.str();
}

EdgeSet parse_edge_list(const std::string& text) {
    std::vector<Edge> es;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        Vertex a, b;
        if (ls >> a >> b) es.emplace_back(a, b);
    }
    return EdgeSet(std::move(es));
}

}  // namespace slopes
