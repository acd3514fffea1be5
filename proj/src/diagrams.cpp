#include "gbr/diagrams.hpp"

#include <sstream>
#include <stdexcept>

namespace gbr {

BrauerDiagram BrauerDiagram::identity(int n) {
    BrauerDiagram d;
    d.n = n;
    d.partner.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        d.partner[i] = n + i;
        d.partner[n + i] = i;
    }
    return d;
}

BrauerDiagram BrauerDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    BrauerDiagram d;
    d.n = n;
    d.partner.assign(2 * n, -1);
    for (auto& [p, q] : pairs) {
        d.partner[p] = q;
        d.partner[q] = p;
    }
    if (!d.valid()) throw std::invalid_argument("not a perfect matching");
    return d;
}

bool BrauerDiagram::valid() const {
    if ((int)partner.size() != 2 * n) return false;
    for (int p = 0; p < 2 * n; ++p) {
        int q = partner[p];
        if (q < 0 || q >= 2 * n || q == p || partner[q] != p) return false;
    }
    return true;
}

std::pair<BrauerDiagram, int> compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    if (d1.n != d2.n) throw std::invalid_argument("diagram size mismatch");
    int n = d1.n;
    // Walk paths through the glued middle layer. seen1/seen2 mark nodes of
    // d1 and d2 already traversed; exposed nodes are d1 top and d2 bottom.
    std::vector<char> seen1(2 * n, 0), seen2(2 * n, 0);
    BrauerDiagram out;
    out.n = n;
    out.partner.assign(2 * n, -1);

    auto trace = [&](int start) {
        // start: result node id; < n lives in d1, >= n lives in d2.
        bool in_top = start < n;
        int layer = in_top ? 1 : 2;
        int node = start;
        for (;;) {
            if (layer == 1) {
                seen1[node] = 1;
                int q = d1.partner[node];
                seen1[q] = 1;
                if (q < n) return q;       // exposed at d1 top
                layer = 2;
                node = q - n;              // glue: d1 bottom k+n <-> d2 top k
            } else {
                seen2[node] = 1;
                int q = d2.partner[node];
                seen2[q] = 1;
                if (q >= n) return q;      // exposed at d2 bottom
                layer = 1;
                node = q + n;
            }
        }
    };

    for (int r = 0; r < 2 * n; ++r) {
        if (out.partner[r] >= 0) continue;
        int s = trace(r);
        out.partner[r] = s;
        out.partner[s] = r;
    }

    int loops = 0;
    for (int x = n; x < 2 * n; ++x) {
        if (seen1[x]) continue;
        // Unvisited d1 bottom node: its component is a closed middle cycle.
        ++loops;
        int layer = 1, node = x;
        while (!(layer == 1 && node == x && seen1[x])) {
            if (layer == 1) {
                seen1[node] = 1;
                int q = d1.partner[node];
                seen1[q] = 1;
                layer = 2;
                node = q - n;
            } else {
                seen2[node] = 1;
                int q = d2.partner[node];
                seen2[q] = 1;
                layer = 1;
                node = q + n;
            }
        }
    }
    return {out, loops};
}

namespace {

void enumerate_matchings(std::vector<int>& partner, std::vector<BrauerDiagram>& out, int n) {
    int p = -1;
    for (int i = 0; i < 2 * n; ++i) {
        if (partner[i] < 0) {
            p = i;
            break;
        }
    }
    if (p < 0) {
        BrauerDiagram d;
        d.n = n;
        d.partner = partner;
        out.push_back(d);
        return;
    }
    for (int q = p + 1; q < 2 * n; ++q) {
        if (partner[q] >= 0) continue;
        partner[p] = q;
        partner[q] = p;
        enumerate_matchings(partner, out, n);
        partner[p] = -1;
        partner[q] = -1;
    }
}

}  // namespace

std::vector<BrauerDiagram> all_diagrams(int n) {
    std::vector<int> partner(2 * n, -1);
    std::vector<BrauerDiagram> out;
    enumerate_matchings(partner, out, n);
    return out;
}

long diagram_count(int n) { return (long)all_diagrams(n).size(); }

DiagramElement::DiagramElement(const BrauerDiagram& d, const Rational& tau, const Rational& coeff)
    : n_(d.n), tau_(tau) {
    add_term(d, coeff);
}

void DiagramElement::add_term(const BrauerDiagram& d, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(d.partner);
    if (it == terms_.end()) {
        terms_.emplace(d.partner, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool DiagramElement::operator==(const DiagramElement& o) const {
    return n_ == o.n_ && tau_ == o.tau_ && terms_ == o.terms_;
}

DiagramElement DiagramElement::operator+(const DiagramElement& o) const {
    DiagramElement r = *this;
    for (auto& [d, c] : o.terms_) {
        auto it = r.terms_.find(d);
        if (it == r.terms_.end()) {
            r.terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

DiagramElement DiagramElement::operator-(const DiagramElement& o) const {
    return *this + o.scaled(-1);
}

DiagramElement DiagramElement::operator*(const DiagramElement& o) const {
    if (n_ != o.n_ || tau_ != o.tau_) throw std::invalid_argument("ambient mismatch");
    DiagramElement r(n_, tau_);
    BrauerDiagram a, b;
    a.n = b.n = n_;
    for (auto& [da, ca] : terms_) {
        a.partner = da;
        for (auto& [db, cb] : o.terms_) {
            b.partner = db;
            auto [d, loops] = compose(a, b);
            Rational c = ca * cb;
            for (int k = 0; k < loops; ++k) c *= tau_;
            r.add_term(d, c);
        }
    }
    return r;
}

DiagramElement DiagramElement::scaled(const Rational& c) const {
    DiagramElement r(n_, tau_);
    if (c == 0) return r;
    for (auto& [d, coeff] : terms_) r.terms_.emplace(d, coeff * c);
    return r;
}

std::string DiagramElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c) << "*[";
        std::vector<char> done(2 * n_, 0);
        bool fp = true;
        for (int p = 0; p < 2 * n_; ++p) {
            if (done[p]) continue;
            done[p] = done[d[p]] = 1;
            if (!fp) os << " ";
            fp = false;
            os << p << "-" << d[p];
        }
        os << "]";
    }
    return os.str();
}

DiagramElement one_elem(int n, const Rational& tau) {
    return DiagramElement(BrauerDiagram::identity(n), tau);
}

DiagramElement s_elem(int i, int j, int n, const Rational& tau) {
    if (i == j) throw std::invalid_argument("s_elem needs distinct strands");
    BrauerDiagram d = BrauerDiagram::identity(n);
    d.partner[i] = n + j;
    d.partner[n + j] = i;
    d.partner[j] = n + i;
    d.partner[n + i] = j;
    return DiagramElement(d, tau);
}

DiagramElement e_elem(int i, int j, int n, const Rational& tau) {
    if (i == j) throw std::invalid_argument("e_elem needs distinct strands");
    BrauerDiagram d = BrauerDiagram::identity(n);
    d.partner[i] = j;
    d.partner[j] = i;
    d.partner[n + i] = n + j;
    d.partner[n + j] = n + i;
    return DiagramElement(d, tau);
}

std::vector<std::string> verify_bar_identities(int n, const Rational& tau) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& what, int a, int b, int c, int d) {
        std::ostringstream os;
        os << what << " at (" << a << "," << b << "," << c;
        if (d >= 0) os << "," << d;
        os << ")";
        bad.push_back(os.str());
    };
    // disjoint-support commutation
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (i == j || k == l) continue;
                    if (i == k || i == l || j == k || j == l) continue;
                    auto e = e_elem(i, j, n, tau), s = s_elem(k, l, n, tau);
                    auto e2 = e_elem(k, l, n, tau);
                    if (!(e * s == s * e)) fail("e.s disjoint commutation", i, j, k, l);
                    if (!(e * e2 == e2 * e)) fail("e.e disjoint commutation", i, j, k, l);
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!(e_elem(i, j, n, tau) == e_elem(j, i, n, tau))) fail("e symmetry", i, j, -1, -1);
            auto e = e_elem(i, j, n, tau);
            if (!(e * e == e.scaled(tau))) fail("e^2 = tau e", i, j, -1, -1);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                auto eij = e_elem(i, j, n, tau), eik = e_elem(i, k, n, tau);
                auto sjk = s_elem(j, k, n, tau);
                if (!(eij * eik == sjk * eik)) fail("e e = s e contraction", i, j, k, -1);
                if (!(eij * eik == eij * sjk)) fail("e e = e s contraction", i, j, k, -1);
                auto sij = s_elem(i, j, n, tau), ejk = e_elem(j, k, n, tau);
                if (!(sij * ejk == eik * sij)) fail("s e = e s transport", i, j, k, -1);
            }
    return bad;
}

std::vector<std::string> verify_brauer_relations(int n, const Rational& tau) {
    std::vector<std::string> bad;
    auto s = [&](int k) { return s_elem(k, k + 1, n, tau); };
    auto e = [&](int k) { return e_elem(k, k + 1, n, tau); };
    auto check = [&](bool ok, const std::string& what, int i, int j) {
        if (ok) return;
        std::ostringstream os;
        os << what << " at i=" << i;
        if (j >= 0) os << ", j=" << j;
        bad.push_back(os.str());
    };
    for (int i = 0; i + 2 < n; ++i) {
        check(s(i) * s(i + 1) * s(i) == s(i + 1) * s(i) * s(i + 1), "braid", i, -1);
        check(s(i) * s(i + 1) * e(i) == e(i + 1) * s(i) * s(i + 1), "s s e up", i, -1);
        check(e(i) * s(i + 1) * e(i) == e(i), "e s e up", i, -1);
    }
    for (int i = 1; i + 1 < n; ++i) {
        check(s(i) * s(i - 1) * e(i) == e(i - 1) * s(i) * s(i - 1), "s s e down", i, -1);
        check(e(i) * s(i - 1) * e(i) == e(i), "e s e down", i, -1);
    }
    for (int i = 0; i + 1 < n; ++i) {
        check(s(i) * s(i) == one_elem(n, tau), "involution", i, -1);
        check(s(i) * e(i) == e(i), "s e absorb", i, -1);
        check(e(i) * e(i) == e(i).scaled(tau), "e idempotent", i, -1);
        for (int j = 0; j + 1 < n; ++j) {
            if (j > i + 1 || i > j + 1) {
                check(s(i) * s(j) == s(j) * s(i), "distant s s", i, j);
                check(s(i) * e(j) == e(j) * s(i), "distant s e", i, j);
            }
        }
    }
    return bad;
}

}  // namespace gbr
