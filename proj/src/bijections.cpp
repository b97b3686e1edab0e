#include "slopes/bijections.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace slopes {

namespace {

void relabel(BtpNode& T, const std::map<Vertex, Vertex>& m, bool root) {
    if (!root) {
        for (Vertex& v : T.label) {
            auto it = m.find(v);
            if (it != m.end()) v = it->second;
        }
        std::sort(T.label.begin(), T.label.end());
    }
    if (T.older) relabel(*T.older, m, false);
    if (T.younger) relabel(*T.younger, m, false);
}

}  // namespace

BtpPtr BtpNode::clone() const {
    auto t = std::make_unique<BtpNode>();
    t->label = label;
    if (older) t->older = older->clone();
    if (younger) t->younger = younger->clone();
    return t;
}

bool BtpNode::is_valid() const {
    if (label.empty()) return false;
    if (is_leaf()) return label.size() == 1 && younger == nullptr;
    if (!younger) return false;
    const auto& a = older->label;
    const auto& b = younger->label;
    std::vector<Vertex> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (!inter.empty()) return false;
    std::vector<Vertex> uni;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    if (uni != label) return false;
    if (!std::binary_search(b.begin(), b.end(), label.back())) return false;
    return older->is_valid() && younger->is_valid();
}

std::string BtpNode::str() const {
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

bool BtpNode::operator==(const BtpNode& other) const {
    if (label != other.label) return false;
    if ((older == nullptr) != (other.older == nullptr)) return false;
    if ((younger == nullptr) != (other.younger == nullptr)) return false;
    if (older && !(*older == *other.older)) return false;
    if (younger && !(*younger == *other.younger)) return false;
    return true;
}

std::vector<BtpPtr> enumerate_btp(const std::vector<Vertex>& V) {
    std::vector<BtpPtr> out;
    if (V.empty()) return out;
    if (V.size() == 1) {
        auto leaf = std::make_unique<BtpNode>();
        leaf->label = V;
        out.push_back(std::move(leaf));
        return out;
    }
    // The younger child keeps max(V); the older child is any nonempty subset
    // of the rest.
    std::vector<Vertex> rest(V.begin(), V.end() - 1);
    const std::size_t m = rest.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Vertex> a, b;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i & 1) ? a : b).push_back(rest[i]);
        b.push_back(V.back());
        for (auto& left : enumerate_btp(a)) {
            for (auto& right : enumerate_btp(b)) {
                auto t = std::make_unique<BtpNode>();
                t->label = V;
                t->older = left->clone();
                t->younger = right->clone();
                out.push_back(std::move(t));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BtpPtr& x, const BtpPtr& y) { return x->str() < y->str(); });
    return out;
}

BtpPtr augment(const BtpNode& T, Vertex j) {
    if (std::binary_search(T.label.begin(), T.label.end(), j)) throw ElementPresent{};
    auto t = T.clone();
    t->label.push_back(j);
    std::sort(t->label.begin(), t->label.end());
    return t;
}

Vertex augmented_element(const BtpNode& T) {
    if (T.is_leaf()) return T.label.front();
    std::vector<Vertex> child;
    std::set_union(T.older->label.begin(), T.older->label.end(), T.younger->label.begin(),
                   T.younger->label.end(), std::back_inserter(child));
    std::vector<Vertex> extra;
    std::set_difference(T.label.begin(), T.label.end(), child.begin(), child.end(),
                        std::back_inserter(extra));
    if (extra.size() != 1) throw std::invalid_argument("tree is not singly augmented");
    return extra.front();
}

bool is_proper(const BtpNode& T) { return augmented_element(T) == T.label.front(); }

namespace {

std::map<Vertex, Vertex> straightening_map(const std::vector<Vertex>& root, Vertex j) {
    // k in S with k < j goes to the next largest member of S + {j}.
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i + 1 < root.size(); ++i)
        if (root[i] < j && root[i] != j) m[root[i]] = root[i + 1];
    return m;
}

}  // namespace

BtpPtr straighten(const BtpNode& T) {
    Vertex j = augmented_element(T);
    auto t = T.clone();
    relabel(*t, straightening_map(T.label, j), true);
    return t;
}

BtpPtr straighten_inverse(const BtpNode& T, Vertex j) {
    auto fwd = straightening_map(T.label, j);
    std::map<Vertex, Vertex> inv;
    for (auto& [k, v] : fwd) inv[v] = k;
    auto t = T.clone();
    relabel(*t, inv, true);
    return t;
}

DecompTreePtr phi(const BtpNode& T) {
    if (!is_proper(T)) throw NotProper{};
    auto out = std::make_unique<DecompositionTree>();
    out->label = T.label;
    if (T.label.size() == 2) return out;  // |S| = 1
    Vertex j = T.label.front();
    Vertex m = T.older->label.back();
    out->older = phi(*augment(*T.older, j));
    out->younger = phi(*straighten(*augment(*T.younger, m)));
    return out;
}

BtpPtr phi_inverse(const DecompositionTree& U) {
    auto out = std::make_unique<BtpNode>();
    out->label = U.label;
    if (U.is_leaf()) return out;
    Vertex j = U.label.front();
    Vertex m = U.older->label.back();

    auto t1 = phi_inverse(*U.older);
    t1->label.erase(std::find(t1->label.begin(), t1->label.end(), j));

    auto t2 = straighten_inverse(*phi_inverse(*U.younger), m);
    t2->label.erase(std::find(t2->label.begin(), t2->label.end(), m));

    out->older = std::move(t1);
    out->younger = std::move(t2);
    return out;
}

DecompTreePtr theta(const BtpNode& T) { return phi(*augment(T, 1)); }

BtpPtr theta_inverse(const DecompositionTree& U) {
    auto t = phi_inverse(U);
    if (t->label.empty() || t->label.front() != 1)
        throw std::invalid_argument("tree is not over [1,n]");
    t->label.erase(t->label.begin());
    return t;
}

}  // namespace slopes
