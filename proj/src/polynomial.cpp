#include "slopes/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slopes {

TermOrder parse_term_order(const std::string& name) {
    if (name == "glex") return TermOrder::GradedLex;
    if (name == "grevlex") return TermOrder::GradedRevLex;
    throw std::invalid_argument("unknown term order: " + name);
}

Monomial::Monomial(const EdgeSet& squarefree) {
    for (const Edge& e : squarefree) exp_[e] = 1;
}

int Monomial::exponent(const Edge& e) const {
    auto it = exp_.find(e);
    return it == exp_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [e, a] : exp_) d += a;
    return d;
}

bool Monomial::is_squarefree() const {
    for (auto& [e, a] : exp_)
        if (a > 1) return false;
    return true;
}

EdgeSet Monomial::to_edge_set() const {
    if (!is_squarefree()) throw std::logic_error("monomial is not squarefree");
    std::vector<Edge> es;
    for (auto& [e, a] : exp_) es.push_back(e);
    return EdgeSet(std::move(es));
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (auto& [e, a] : other.exp_) r.exp_[e] += a;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (auto& [e, a] : exp_)
        if (other.exponent(e) < a) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial r;
    for (auto& [e, a] : exp_) {
        int b = a - other.exponent(e);
        if (b < 0) throw std::logic_error("monomial division is inexact");
        if (b > 0) r.exp_[e] = b;
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (auto& [e, x] : b.exp_) r.exp_[e] = std::max(r.exp_[e], x);
    return r;
}

std::string Monomial::str() const {
    if (exp_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, a] : exp_) {
        if (!first) os << '*';
        os << "m[" << e.lo << ',' << e.hi << ']';
        if (a > 1) os << '^' << a;
        first = false;
    }
    return os.str();
}

int compare(const Monomial& a, const Monomial& b, TermOrder ord) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ord == TermOrder::GradedLex) {
        // Natural ascending edge order is descending variable rank: the first
        // differing position is the greatest differing variable.
        auto ia = ea.begin(), ib = eb.begin();
        while (ia != ea.end() || ib != eb.end()) {
            if (ia == ea.end()) return -1;  // b has a high variable a lacks
            if (ib == eb.end()) return 1;
            if (ia->first != ib->first)
                return variable_greater(ia->first, ib->first) ? 1 : -1;
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
        return 0;
    }
    // GradedRevLex: scan from the smallest variable (largest edge pair);
    // the monomial with the smaller exponent there is greater.
    auto ia = ea.rbegin(), ib = eb.rbegin();
    while (ia != ea.rend() || ib != eb.rend()) {
        if (ia == ea.rend()) return 1;   // b alone holds the smallest differing variable
        if (ib == eb.rend()) return -1;
        if (ia->first != ib->first) {
            // The natural-larger of the two edges is the smaller variable and
            // is held by exactly one side; that side loses.
            return variable_greater(ia->first, ib->first) ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

int edge_set_compare(const EdgeSet& E, const EdgeSet& F, TermOrder ord) {
    if (E.size() != F.size()) return E.size() < F.size() ? -1 : 1;
    EdgeSet sd = E.sym_diff(F);
    if (sd.empty()) return 0;
    if (ord == TermOrder::GradedLex) {
        // Greatest variable in the symmetric difference = smallest edge pair.
        const Edge& top = sd.edges().front();
        return E.contains(top) ? 1 : -1;
    }
    // Smallest variable = largest edge pair; the set NOT containing it wins.
    const Edge& bottom = sd.edges().back();
    return E.contains(bottom) ? -1 : 1;
}

namespace {
bool glex_desc(const std::pair<Monomial, Int>& a, const std::pair<Monomial, Int>& b) {
    return compare(a.first, b.first, TermOrder::GradedLex) > 0;
}
}  // namespace

Polynomial::Polynomial(Int constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, std::move(constant));
}

Polynomial Polynomial::term(const Monomial& m, Int coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace_back(m, std::move(coeff));
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), glex_desc);
    std::vector<std::pair<Monomial, Int>> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

int Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().first.degree();
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return -1;
    return d;
}

Int Polynomial::coefficient(const Monomial& m) const {
    for (auto& [mm, c] : terms_)
        if (mm == m) return c;
    return 0;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + other.terms_.size());
    // Both inputs are sorted descending; merge.
    auto ia = terms_.begin(), ib = other.terms_.begin();
    while (ia != terms_.end() || ib != other.terms_.end()) {
        if (ib == other.terms_.end() || (ia != terms_.end() && glex_desc(*ia, *ib))) {
            r.terms_.push_back(*ia++);
        } else if (ia == terms_.end() || glex_desc(*ib, *ia)) {
            r.terms_.push_back(*ib++);
        } else {
            Int c = ia->second + ib->second;
            if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::map<Monomial, Int> acc;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : other.terms_) acc[ma * mb] += ca * cb;
    Polynomial r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), glex_desc);
    return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

std::pair<Monomial, Int> Polynomial::leading_term(TermOrder ord) const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    if (ord == TermOrder::GradedLex) return terms_.front();
    const std::pair<Monomial, Int>* best = &terms_.front();
    for (auto& t : terms_)
        if (compare(t.first, best->first, ord) > 0) best = &t;
    return *best;
}

Polynomial Polynomial::sign_normalized(TermOrder ord) const {
    if (is_zero()) return *this;
    return leading_term(ord).second < 0 ? -*this : *this;
}

Rational Polynomial::evaluate(const std::map<Edge, Rational>& values) const {
    Rational total = 0;
    for (auto& [m, c] : terms_) {
        Rational prod = Rational(c);
        for (auto& [e, a] : m.exponents()) {
            auto it = values.find(e);
            Rational v = it == values.end() ? Rational(0) : it->second;
            for (int i = 0; i < a; ++i) prod *= v;
        }
        total += prod;
    }
    return total;
}

std::string Polynomial::str(TermOrder ord) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Int>> sorted = terms_;
    std::sort(sorted.begin(), sorted.end(),
              [ord](const auto& a, const auto& b) { return compare(a.first, b.first, ord) > 0; });
    std::ostringstream os;
    for (auto& [m, c] : sorted) {
        Int a = c < 0 ? Int(-c) : c;
        os << (c < 0 ? '-' : '+');
        if (a != 1 || m.is_one()) {
            os << a;
            if (!m.is_one()) os << '*';
        }
        if (!m.is_one()) os << m.str();
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& text) {
    if (text == "0") return {};
    Polynomial out;
    std::size_t i = 0;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+') {
            ++i;
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
        }
        // One term: factors joined by '*'.
        Int coeff = 1;
        Monomial mono;
        while (i < text.size() && text[i] != '+' && text[i] != '-') {
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coeff *= Int(text.substr(i, j - i));
                i = j;
            } else if (text[i] == 'm') {
                if (text[i + 1] != '[') throw std::invalid_argument("bad monomial syntax");
                std::size_t close = text.find(']', i);
                std::string inner = text.substr(i + 2, close - i - 2);
                auto comma = inner.find(',');
                Edge e(std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1)));
                i = close + 1;
                int expnt = 1;
                if (i < text.size() && text[i] == '^') {
                    std::size_t j = ++i;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    expnt = std::stoi(text.substr(i, j - i));
                    i = j;
                }
                Monomial v;
                for (int r = 0; r < expnt; ++r) v = v * Monomial::variable(e);
                mono = mono * v;
            } else if (text[i] == '*') {
                ++i;
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + text[i] +
                                            "' in polynomial");
            }
        }
        out = out + Polynomial::term(mono, coeff * sign);
    }
    return out;
}

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& M) {
    const std::size_t n = M.size();
    if (n == 0) return Polynomial(Int(1));
    if (n == 1) return M[0][0];
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(M[r][c]);
        Polynomial contrib = M[0][j] * det_cofactor(minor);
        det = (j % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
    for (const auto& row : M)
        if (row.size() != M.size()) throw NonSquare{};
    return det_cofactor(M);
}

ReductionResult reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                       TermOrder ord) {
    for (const Polynomial& g : basis)
        if (g.is_zero()) throw std::invalid_argument("zero basis element");
    ReductionResult res;
    res.quotients.assign(basis.size(), Polynomial{});
    std::vector<std::pair<Monomial, Int>> leads;
    leads.reserve(basis.size());
    for (const Polynomial& g : basis) leads.push_back(g.leading_term(ord));

    Polynomial cur = p;
    Polynomial remainder;
    while (!cur.is_zero()) {
        res.max_terms = std::max(res.max_terms, cur.term_count());
        auto [lm, lc] = cur.leading_term(ord);
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!leads[i].first.divides(lm)) continue;
            if (lc % leads[i].second != 0)
                throw std::domain_error("leading coefficient does not divide exactly");
            Polynomial q = Polynomial::term(lm.divided_by(leads[i].first), lc / leads[i].second);
            res.quotients[i] = res.quotients[i] + q;
            cur = cur - q * basis[i];
            ++res.steps;
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial t = Polynomial::term(lm, lc);
            remainder = remainder + t;
            cur = cur - t;
        }
    }
    res.remainder = remainder;
    return res;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial of a zero polynomial");
    auto [mf, cf] = f.leading_term(ord);
    auto [mg, cg] = g.leading_term(ord);
    Monomial l = Monomial::lcm(mf, mg);
    Int af = cf < 0 ? Int(-cf) : cf, ag = cg < 0 ? Int(-cg) : cg;
    Int clcm = af / boost::multiprecision::gcd(af, ag) * ag;
    Polynomial tf = Polynomial::term(l.divided_by(mf), clcm / cf);
    Polynomial tg = Polynomial::term(l.divided_by(mg), clcm / cg);
    return tf * f - tg * g;
}

}  // namespace slopes
