#include "slopes/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace slopes {

EdgeSet PathSeq::edge_set() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        es.emplace_back(vertices[i], vertices[i + 1]);
    return EdgeSet(std::move(es));
}

std::string PathSeq::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << '-';
        os << vertices[i];
    }
    return os.str();
}

namespace {

bool forbidden_oriented(const std::vector<Vertex>& v) {
    const std::size_t k = v.size();
    if (k < 4) return false;
    Vertex m1 = *std::max_element(v.begin(), v.end());
    if (v.front() != m1) return false;
    Vertex m2 = *std::max_element(v.begin() + 1, v.end());
    if (v.back() != m2) return false;
    return v[1] > v[k - 2];
}

}  // namespace

bool is_forbidden(const PathSeq& p) {
    if (forbidden_oriented(p.vertices)) return true;
    std::vector<Vertex> rev(p.vertices.rbegin(), p.vertices.rend());
    return forbidden_oriented(rev);
}

std::optional<PathSeq> contains_forbidden_path(const EdgeSet& E) {
    if (E.size() < 3) return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : E) {
        adj[e.lo].push_back(e.hi);
        adj[e.hi].push_back(e.lo);
    }
    // Search paths whose first vertex dominates the rest; the forbidden
    // conditions are then checked as the path grows.
    std::vector<Vertex> path;
    std::optional<PathSeq> found;
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        path.push_back(v);
        if (path.size() >= 4 && forbidden_oriented(path)) {
            found = PathSeq{path};
            path.pop_back();
            return true;
        }
        for (Vertex w : adj[v]) {
            if (w >= path.front()) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (extend(w)) {
                path.pop_back();
                return true;
            }
        }
        path.pop_back();
        return false;
    };
    for (auto& [v, nbrs] : adj) {
        path.clear();
        if (extend(v)) return found;
    }
    return std::nullopt;
}

bool is_face(const EdgeSet& E) { return !contains_forbidden_path(E).has_value(); }

std::vector<PathSeq> minimal_forbidden_paths(int n) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    std::vector<PathSeq> out;
    // A forbidden path on exactly [1,n] starts (in the right orientation) at
    // n and ends at n-1; the middle is any arrangement of the rest.
    std::vector<Vertex> middle;
    for (Vertex v = 1; v <= n - 2; ++v) middle.push_back(v);
    std::sort(middle.begin(), middle.end());
    do {
        std::vector<Vertex> p;
        p.push_back(n);
        p.insert(p.end(), middle.begin(), middle.end());
        p.push_back(n - 1);
        if (!forbidden_oriented(p)) continue;
        // Minimality: no proper consecutive subpath is forbidden.
        bool minimal = true;
        for (std::size_t i = 0; i < p.size() && minimal; ++i) {
            for (std::size_t len = 4; len <= p.size() - i; ++len) {
                if (i == 0 && len == p.size()) continue;
                std::vector<Vertex> sub(p.begin() + i, p.begin() + i + len);
                if (is_forbidden(PathSeq{sub})) {
                    minimal = false;
                    break;
                }
            }
        }
        if (minimal) out.push_back(PathSeq{p});
    } while (std::next_permutation(middle.begin(), middle.end()));
    return out;
}

DecompTreePtr DecompositionTree::clone() const {
    auto t = std::make_unique<DecompositionTree>();
    t->label = label;
    if (older) t->older = older->clone();
    if (younger) t->younger = younger->clone();
    return t;
}

bool DecompositionTree::is_admissible() const {
    if (label.size() < 2) return false;
    if (is_leaf()) return label.size() == 2 && younger == nullptr;
    if (!younger) return false;
    const auto& a = older->label;
    const auto& b = younger->label;
    Vertex mn = label.front(), mx = label.back();
    auto in = [](const std::vector<Vertex>& s, Vertex v) {
        return std::binary_search(s.begin(), s.end(), v);
    };
    if (!in(a, mn) || in(b, mn)) return false;
    if (!in(b, mx) || in(a, mx)) return false;
    std::vector<Vertex> uni;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    if (uni != label) return false;
    std::vector<Vertex> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (inter.size() != 1 || inter.front() != a.back()) return false;
    return older->is_admissible() && younger->is_admissible();
}

std::vector<const DecompositionTree*> DecompositionTree::traversal() const {
    std::vector<const DecompositionTree*> out;
    std::function<void(const DecompositionTree*)> walk = [&](const DecompositionTree* t) {
        out.push_back(t);
        if (t->older) walk(t->older.get());
        if (t->younger) walk(t->younger.get());
    };
    walk(this);
    return out;
}

std::string DecompositionTree::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i && label[i - 1] > 9) os << ',';
        os << label[i];
    }
    if (older) os << ' ' << older->str();
    if (younger) os << ' ' << younger->str();
    os << ')';
    return os.str();
}

std::string DecompositionTree::json() const {
    std::ostringstream os;
    os << "[[";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) os << ',';
        os << label[i];
    }
    os << ']';
    if (older) os << ',' << older->json();
    if (younger) os << ',' << younger->json();
    os << ']';
    return os.str();
}

bool DecompositionTree::operator==(const DecompositionTree& other) const {
    if (label != other.label) return false;
    if ((older == nullptr) != (other.older == nullptr)) return false;
    if ((younger == nullptr) != (other.younger == nullptr)) return false;
    if (older && !(*older == *other.older)) return false;
    if (younger && !(*younger == *other.younger)) return false;
    return true;
}

std::vector<DecompTreePtr> admissible_trees(const std::vector<Vertex>& V) {
    std::vector<DecompTreePtr> out;
    if (V.size() < 2) return out;
    if (V.size() == 2) {
        auto leaf = std::make_unique<DecompositionTree>();
        leaf->label = V;
        out.push_back(std::move(leaf));
        return out;
    }
    // Older child: any X1 containing min(V), omitting max(V), |X1| >= 2.
    // The younger child is then forced: (V \ X1) + max(X1).
    std::vector<Vertex> middle(V.begin() + 1, V.end() - 1);
    const std::size_t m = middle.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Vertex> x1{V.front()};
        std::vector<Vertex> rest;
        for (std::size_t i = 0; i < m; ++i)
            ((mask >> i & 1) ? x1 : rest).push_back(middle[i]);
        if (x1.size() < 2) continue;
        std::vector<Vertex> x2 = rest;
        x2.push_back(V.back());
        x2.push_back(x1.back());
        std::sort(x2.begin(), x2.end());
        for (auto& left : admissible_trees(x1)) {
            for (auto& right : admissible_trees(x2)) {
                auto t = std::make_unique<DecompositionTree>();
                t->label = V;
                t->older = left->clone();
                t->younger = right->clone();
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

EdgeSet edg_expand(const DecompositionTree& T) {
    std::vector<Edge> es;
    for (const auto* node : T.traversal()) es.push_back(edg(node->label));
    return EdgeSet(std::move(es));
}

std::vector<EdgeSet> facets(const std::vector<Vertex>& V) {
    std::vector<EdgeSet> out;
    for (auto& t : admissible_trees(V)) out.push_back(edg_expand(*t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> facets(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (n > 9) throw ScaleLimit("facet enumeration is limited to n <= 9");
    std::vector<Vertex> V(n);
    for (int i = 0; i < n; ++i) V[i] = i + 1;
    return facets(V);
}

DecompTreePtr decomposition_tree(const EdgeSet& F) {
    auto V = F.support();
    if (V.size() < 2 || F.size() != 2 * V.size() - 3 || !is_face(F)) throw NotAFacet{};
    auto t = std::make_unique<DecompositionTree>();
    t->label = V;
    if (V.size() == 2) return t;

    Vertex vmin = V.front(), vmax = V.back();
    Edge top(vmin, vmax);
    if (!F.contains(top)) throw NotAFacet{};
    EdgeSet hat = F;
    hat.erase(top);
    if (!is_connected(hat)) throw NotAFacet{};

    // The split vertex: the cut vertex of F-hat sharing a block with min(V).
    auto bd = blocks_and_cut_vertices(hat);
    std::optional<Vertex> a;
    for (Vertex c : bd.cut_vertices) {
        for (const EdgeSet& b : bd.blocks) {
            auto bs = b.support();
            bool has_min = std::binary_search(bs.begin(), bs.end(), vmin);
            bool has_c = std::binary_search(bs.begin(), bs.end(), c);
            if (has_min && has_c) {
                // Must also separate min from max.
                for (const EdgeSet& lobe : lobes(hat, c)) {
                    auto ls = lobe.support();
                    bool lm = std::binary_search(ls.begin(), ls.end(), vmin);
                    bool lx = std::binary_search(ls.begin(), ls.end(), vmax);
                    if (lm && !lx) a = c;
                }
            }
        }
    }
    if (!a) throw NotAFacet{};

    EdgeSet f1;
    for (const EdgeSet& lobe : lobes(hat, *a)) {
        auto ls = lobe.support();
        if (std::binary_search(ls.begin(), ls.end(), vmin)) f1 = lobe;
    }
    EdgeSet f2 = hat.minus(f1);
    t->older = decomposition_tree(f1);
    t->younger = decomposition_tree(f2);
    if (!t->is_admissible()) throw NotAFacet{};
    return t;
}

std::vector<EdgeSet> facets_brute_force(int n) {
    if (n > 6) throw ScaleLimit("brute-force facet scan is limited to n <= 6");
    EdgeSet full = complete_graph_edges(n);
    const auto& all = full.edges();
    const std::size_t m = all.size();
    std::vector<EdgeSet> out;
    const std::size_t want = n >= 2 ? 2 * n - 3 : 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != want) continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        EdgeSet E(es);
        if (!is_face(E)) continue;
        // Maximality: adding any absent edge must break facehood.
        bool maximal = true;
        for (const Edge& e : all) {
            if (E.contains(e)) continue;
            EdgeSet bigger = E;
            bigger.insert(e);
            if (is_face(bigger)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(std::move(E));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> f_vector(int n) {
    if (n > 6) throw ScaleLimit("face scan is limited to n <= 6");
    EdgeSet full = complete_graph_edges(n);
    const auto& all = full.edges();
    const std::size_t m = all.size();
    std::vector<long long> f;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        EdgeSet E(es);
        if (!is_face(E)) continue;
        std::size_t card = E.size();
        if (f.size() < card) f.resize(card, 0);
        ++f[card - 1];
    }
    return f;
}

}  // namespace slopes
