#include "gbr/groups.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gbr {

namespace {

constexpr int kMaxOrder = 4096;

int imod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void Group::index_elements(std::vector<std::vector<int>> encodings) {
    std::sort(encodings.begin(), encodings.end());
    encodings.erase(std::unique(encodings.begin(), encodings.end()), encodings.end());
    if ((int)encodings.size() > kMaxOrder)
        throw std::invalid_argument("group too large (order > 4096)");
    enc_ = std::move(encodings);
    for (int i = 0; i < (int)enc_.size(); ++i) enc_index_[enc_[i]] = i;
}

void Group::build_shared_tables() {
    int N = order(), H = num_hyperplanes();
    inv_.assign(N, -1);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (mul_[a * N + b] == 0) { inv_[a] = b; break; }

    for (int i = 0; i < (int)refl_.size(); ++i) refl_index_[refl_[i].elem] = i;

    // sanity: action respects multiplication
    for (int h = 0; h < H; ++h)
        assert(act(identity(), h) == h);

    rset_.assign(H * H, {});
    for (const auto& r : refl_)
        for (int j = 0; j < H; ++j) rset_[act(r.elem, j) * H + j].push_back(r.elem);
    for (auto& v : rset_) std::sort(v.begin(), v.end());

    edge_of_pair_.assign(H * H, -1);
    for (int e = 0; e < (int)edges_.size(); ++e) {
        auto& mem = edges_[e];
        std::sort(mem.begin(), mem.end());
        for (int i : mem)
            for (int j : mem)
                if (i != j) {
                    if (edge_of_pair_[i * H + j] != -1 && edge_of_pair_[i * H + j] != e)
                        throw std::logic_error("edge tables overlap");
                    edge_of_pair_[i * H + j] = e;
                }
    }
    for (int i = 0; i < H; ++i)
        for (int j = 0; j < H; ++j)
            if (i != j && edge_of_pair_[i * H + j] < 0)
                throw std::logic_error("hyperplane pair not covered by an edge");

    // conjugacy classes of pseudo reflections
    std::set<int> seen;
    std::vector<std::vector<int>> classes;
    for (const auto& r : refl_) {
        if (seen.count(r.elem)) continue;
        std::set<int> cls;
        std::deque<int> work{r.elem};
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            if (!cls.insert(x).second) continue;
            for (int g = 0; g < N; ++g) work.push_back(conj(g, x));
        }
        classes.emplace_back(cls.begin(), cls.end());
        seen.insert(cls.begin(), cls.end());
    }
    // hyperplane orbits
    std::vector<std::vector<int>> orbits;
    std::vector<int> horb(H, -1);
    for (int h = 0; h < H; ++h) {
        if (horb[h] >= 0) continue;
        std::set<int> orb;
        std::deque<int> work{h};
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            if (!orb.insert(x).second) continue;
            for (int g = 0; g < N; ++g) work.push_back(act(g, x));
        }
        for (int x : orb) horb[x] = (int)orbits.size();
        orbits.emplace_back(orb.begin(), orb.end());
    }
    orbit_of_ = horb;

    // parameter names: class by representative, orbit by representative
    auto class_name = [&](int rep_elem) -> std::string {
        switch (family_) {
            case Family::SymmetricA:
                return "mu";
            case Family::Dihedral:
                if (m_ % 2) return "mu";
                return reflection_hyp(rep_elem) % 2 == 0 ? "mu0" : "mu1";
            case Family::Cyclotomic: {
                const auto& e = enc_[rep_elem];
                bool diag = true;
                for (int i = 0; i < n_; ++i)
                    if (e[i] != i) diag = false;
                if (!diag) return "mu";
                for (int i = 0; i < n_; ++i)
                    if (e[n_ + i]) return "mu" + std::to_string(e[n_ + i]);
                return "mu";
            }
        }
        return "mu";
    };
    auto orbit_name = [&](int rep_hyp) -> std::string {
        switch (family_) {
            case Family::SymmetricA:
                return "tau";
            case Family::Dihedral:
                if (m_ % 2) return "tau";
                return rep_hyp % 2 == 0 ? "tau0" : "tau1";
            case Family::Cyclotomic:
                return rep_hyp >= num_hyperplanes() - n_ ? "tau0" : "tau1";
        }
        return "tau";
    };
    for (auto& c : classes) {
        classes_.push_back({class_name(c.front()), c});
        for (int x : c) class_of_[x] = (int)classes_.size() - 1;
    }
    for (auto& o : orbits) orbits_.push_back({orbit_name(o.front()), o});
    std::sort(classes_.begin(), classes_.end(),
              [](const NamedSet& a, const NamedSet& b) { return a.name < b.name; });
    class_of_.clear();
    for (int c = 0; c < (int)classes_.size(); ++c)
        for (int x : classes_[c].members) class_of_[x] = c;
    std::sort(orbits_.begin(), orbits_.end(),
              [](const NamedSet& a, const NamedSet& b) { return a.name < b.name; });
    orbit_of_.assign(H, -1);
    for (int o = 0; o < (int)orbits_.size(); ++o)
        for (int x : orbits_[o].members) orbit_of_[x] = o;

    stab_order_.assign(H, 1);
    for (const auto& r : refl_) stab_order_[r.hyp]++;

    // shortest generator words, breadth first
    words_.assign(N, {});
    std::vector<bool> done(N, false);
    std::deque<int> bfs{identity()};
    done[identity()] = true;
    while (!bfs.empty()) {
        int g = bfs.front();
        bfs.pop_front();
        for (int k = 0; k < (int)gens_.size(); ++k) {
            int h = mul(g, gens_[k]);
            if (done[h]) continue;
            done[h] = true;
            words_[h] = words_[g];
            words_[h].push_back(k);
            bfs.push_back(h);
        }
    }
    for (bool d : done)
        if (!d) throw std::logic_error("generators do not generate the group");
}

// ---------------------------------------------------------------- dihedral

Group Group::dihedral(int m) {
    if (m < 2) throw std::invalid_argument("dihedral: need m >= 2");
    Group G;
    G.family_ = Family::Dihedral;
    G.m_ = m;
    G.n_ = 2;
    G.dim_ = 2;
    // encoding [f, t]: rotation by 2*pi*t/m, then f=1 marks r^t * s0, which is
    // the reflection fixing the line at angle t*pi/m.
    std::vector<std::vector<int>> encs;
    for (int f = 0; f < 2; ++f)
        for (int t = 0; t < m; ++t) encs.push_back({f, t});
    G.index_elements(std::move(encs));
    int N = G.order();
    auto compose = [m](const std::vector<int>& x, const std::vector<int>& y) {
        // (t1,f1)*(t2,f2): r^t s0 r^u = r^{t-u} s0
        int t = x[0] == 0 ? imod(x[1] + y[1], m) : imod(x[1] - y[1], m);
        return std::vector<int>{x[0] ^ y[0], t};
    };
    G.mul_.assign(N * N, -1);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            G.mul_[a * N + b] = G.enc_index_.at(compose(G.enc_[a], G.enc_[b]));

    for (int j = 0; j < m; ++j) G.hyp_labels_.push_back("H" + std::to_string(j));
    G.act_.assign(N * m, -1);
    for (int g = 0; g < N; ++g) {
        auto& e = G.enc_[g];
        for (int j = 0; j < m; ++j)
            G.act_[g * m + j] = e[0] == 0 ? imod(j + 2 * e[1], m) : imod(2 * e[1] - j, m);
    }
    for (int j = 0; j < m; ++j) G.refl_.push_back({G.enc_index_.at({1, j}), j});
    G.edges_.push_back([&] {
        std::vector<int> all(m);
        for (int j = 0; j < m; ++j) all[j] = j;
        return all;
    }());
    G.gens_ = {G.enc_index_.at({1, 0}), G.enc_index_.at({1, 1})};
    G.gen_names_ = {"s0", "s1"};
    G.build_shared_tables();
    return G;
}

int Group::dihedral_rotation(int t) const { return enc_index_.at({0, imod(t, m_)}); }
int Group::dihedral_reflection(int j) const { return enc_index_.at({1, imod(j, m_)}); }

// ---------------------------------------------------------------- symmetric

static void permutations(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
}

Group Group::symmetric(int n) {
    if (n < 2) throw std::invalid_argument("symmetric: need n >= 2");
    Group G;
    G.family_ = Family::SymmetricA;
    G.n_ = n;
    G.m_ = 1;
    G.dim_ = n;
    std::vector<std::vector<int>> encs;
    permutations(n, encs);
    G.index_elements(std::move(encs));
    int N = G.order();
    G.mul_.assign(N * N, -1);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            // (ab)(i) = a(b(i))
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = G.enc_[a][G.enc_[b][i]];
            G.mul_[a * N + b] = G.enc_index_.at(c);
        }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pairs.push_back({i, j});
            G.hyp_labels_.push_back("H(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    int H = (int)pairs.size();
    auto pair_id = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return (int)(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
    };
    G.act_.assign(N * H, -1);
    for (int g = 0; g < N; ++g)
        for (int h = 0; h < H; ++h)
            G.act_[g * H + h] = pair_id(G.enc_[g][pairs[h].first], G.enc_[g][pairs[h].second]);
    for (int h = 0; h < H; ++h) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::swap(p[pairs[h].first], p[pairs[h].second]);
        G.refl_.push_back({G.enc_index_.at(p), h});
    }
    // edges: triangles share a point, disjoint transpositions give 2-edges
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                G.edges_.push_back({pair_id(i, j), pair_id(i, k), pair_id(j, k)});
    for (int a = 0; a < H; ++a)
        for (int b = a + 1; b < H; ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i != k && i != l && j != k && j != l)
                G.edges_.push_back({a, b});
        }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        for (int t = 0; t < n; ++t) p[t] = t;
        std::swap(p[i], p[i + 1]);
        G.gens_.push_back(G.enc_index_.at(p));
        G.gen_names_.push_back("s" + std::to_string(i + 1));
    }
    G.build_shared_tables();
    return G;
}

int Group::symmetric_transposition(int i, int j) const {
    std::vector<int> p(n_);
    for (int t = 0; t < n_; ++t) p[t] = t;
    std::swap(p[i], p[j]);
    return enc_index_.at(p);
}

int Group::hyp_symmetric(int i, int j) const {
    if (i > j) std::swap(i, j);
    int id = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            if (a == i && b == j) return id;
            ++id;
        }
    throw std::out_of_range("hyp_symmetric");
}

// --------------------------------------------------------------- cyclotomic

Group Group::cyclotomic(int m, int n) {
    if (m < 2 || n < 1) throw std::invalid_argument("cyclotomic: need m >= 2, n >= 1");
    Group G;
    G.family_ = Family::Cyclotomic;
    G.m_ = m;
    G.n_ = n;
    G.dim_ = n;
    // encoding sigma[0..n) ++ a[0..n): z_i -> w^{a_i} z_{sigma^{-1}(i)}
    std::vector<std::vector<int>> perms;
    permutations(n, perms);
    std::vector<std::vector<int>> encs;
    std::vector<int> a(n, 0);
    for (const auto& p : perms) {
        std::fill(a.begin(), a.end(), 0);
        while (true) {
            std::vector<int> e = p;
            e.insert(e.end(), a.begin(), a.end());
            encs.push_back(std::move(e));
            int i = 0;
            while (i < n && ++a[i] == m) a[i++] = 0;
            if (i == n) break;
        }
    }
    G.index_elements(std::move(encs));
    int N = G.order();
    auto compose = [m, n](const std::vector<int>& x, const std::vector<int>& y) {
        // (sigma,a)(tau,b) = (sigma tau, i -> a_i + b_{sigma^{-1}(i)})
        std::vector<int> sinv(n);
        for (int i = 0; i < n; ++i) sinv[x[i]] = i;
        std::vector<int> e(2 * n);
        for (int i = 0; i < n; ++i) e[i] = x[y[i]];
        for (int i = 0; i < n; ++i) e[n + i] = imod(x[n + i] + y[n + sinv[i]], m);
        return e;
    };
    G.mul_.assign(N * N, -1);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            G.mul_[p * N + q] = G.enc_index_.at(compose(G.enc_[p], G.enc_[q]));

    // hyperplanes: offdiag (i<j, a) then axes
    struct Off { int i, j, a; };
    std::vector<Off> offs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int c = 0; c < m; ++c) {
                offs.push_back({i, j, c});
                G.hyp_labels_.push_back("H(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ";" + std::to_string(c) + ")");
            }
    int axis0 = (int)offs.size();
    for (int i = 0; i < n; ++i) G.hyp_labels_.push_back("H(" + std::to_string(i + 1) + ")");
    int H = axis0 + n;
    auto off_id = [&](int i, int j, int c) {
        if (i > j) { std::swap(i, j); c = -c; }
        c = imod(c, m);
        for (int t = 0; t < (int)offs.size(); ++t)
            if (offs[t].i == i && offs[t].j == j && offs[t].a == c) return t;
        throw std::logic_error("off_id");
    };
    G.act_.assign(N * H, -1);
    for (int g = 0; g < N; ++g) {
        const auto& e = G.enc_[g];
        for (int t = 0; t < axis0; ++t) {
            auto [i, j, c] = offs[t];
            G.act_[g * H + t] = off_id(e[i], e[j], c + e[n + e[i]] - e[n + e[j]]);
        }
        for (int i = 0; i < n; ++i) G.act_[g * H + axis0 + i] = axis0 + e[i];
    }
    // pseudo reflections: s_{i,j;a} and diagonal powers s_i^k
    for (int t = 0; t < axis0; ++t) {
        auto [i, j, c] = offs[t];
        std::vector<int> e(2 * n, 0);
        for (int q = 0; q < n; ++q) e[q] = q;
        std::swap(e[i], e[j]);
        e[n + i] = imod(c, m);
        e[n + j] = imod(-c, m);
        G.refl_.push_back({G.enc_index_.at(e), t});
    }
    for (int i = 0; i < n; ++i)
        for (int k = 1; k < m; ++k) {
            std::vector<int> e(2 * n, 0);
            for (int q = 0; q < n; ++q) e[q] = q;
            e[n + i] = k;
            G.refl_.push_back({G.enc_index_.at(e), axis0 + i});
        }
    // edges
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> big = {axis0 + i, axis0 + j};
            for (int c = 0; c < m; ++c) big.push_back(off_id(i, j, c));
            G.edges_.push_back(big);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int ca = 0; ca < m; ++ca)
                    for (int cb = 0; cb < m; ++cb)
                        G.edges_.push_back({off_id(i, j, ca), off_id(j, k, cb), off_id(i, k, ca + cb)});
    for (int t = 0; t < axis0; ++t)
        for (int u = t + 1; u < axis0; ++u) {
            auto [i, j, ca] = offs[t];
            auto [k, l, cb] = offs[u];
            if (i != k && i != l && j != k && j != l) G.edges_.push_back({t, u});
        }
    for (int t = 0; t < axis0; ++t)
        for (int i = 0; i < n; ++i)
            if (i != offs[t].i && i != offs[t].j) G.edges_.push_back({t, axis0 + i});
    // generators: S0 = s_1 (diagonal), S_i = s_{i,i+1;0}
    {
        std::vector<int> e(2 * n, 0);
        for (int q = 0; q < n; ++q) e[q] = q;
        e[n] = 1;
        G.gens_.push_back(G.enc_index_.at(e));
        G.gen_names_.push_back("S0");
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> e(2 * n, 0);
        for (int q = 0; q < n; ++q) e[q] = q;
        std::swap(e[i], e[i + 1]);
        G.gens_.push_back(G.enc_index_.at(e));
        G.gen_names_.push_back("S" + std::to_string(i + 1));
    }
    G.build_shared_tables();
    return G;
}

int Group::cyclo_transposition(int i, int j, int c) const {
    if (i > j) { std::swap(i, j); c = -c; }
    std::vector<int> e(2 * n_, 0);
    for (int q = 0; q < n_; ++q) e[q] = q;
    std::swap(e[i], e[j]);
    e[n_ + i] = imod(c, m_);
    e[n_ + j] = imod(-c, m_);
    return enc_index_.at(e);
}

int Group::cyclo_diag(int i, int k) const {
    std::vector<int> e(2 * n_, 0);
    for (int q = 0; q < n_; ++q) e[q] = q;
    e[n_ + i] = imod(k, m_);
    return enc_index_.at(e);
}

int Group::hyp_cyclo_offdiag(int i, int j, int c) const {
    if (i > j) { std::swap(i, j); c = -c; }
    c = imod(c, m_);
    int id = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int t = 0; t < m_; ++t) {
                if (a == i && b == j && t == c) return id;
                ++id;
            }
    throw std::out_of_range("hyp_cyclo_offdiag");
}

int Group::hyp_cyclo_axis(int i) const { return num_hyperplanes() - n_ + i; }

// ------------------------------------------------------------------ shared

std::string Group::descriptor() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Dihedral: os << "I2(" << m_ << ")"; break;
        case Family::SymmetricA: os << "S" << n_; break;
        case Family::Cyclotomic: os << "G(" << m_ << ",1," << n_ << ")"; break;
    }
    return os.str();
}

std::string Group::elem_str(int g) const {
    const auto& e = enc_[g];
    std::ostringstream os;
    switch (family_) {
        case Family::Dihedral:
            if (e[0] == 0 && e[1] == 0) return "1";
            if (e[0] == 0) { os << "r^" << e[1]; return os.str(); }
            os << "s" << e[1];
            return os.str();
        case Family::SymmetricA: {
            os << "[";
            for (int i = 0; i < n_; ++i) os << (i ? " " : "") << e[i] + 1;
            os << "]";
            return os.str();
        }
        case Family::Cyclotomic: {
            os << "[";
            for (int i = 0; i < n_; ++i) os << (i ? " " : "") << e[i] + 1;
            os << "|";
            for (int i = 0; i < n_; ++i) os << (i ? " " : "") << e[n_ + i];
            os << "]";
            return os.str();
        }
    }
    return "?";
}

std::vector<std::complex<double>> Group::normal(int h) const {
    using cd = std::complex<double>;
    const double pi = std::numbers::pi;
    std::vector<cd> v(dim_, cd(0));
    switch (family_) {
        case Family::Dihedral:
            v[0] = -std::sin(h * pi / m_);
            v[1] = std::cos(h * pi / m_);
            return v;
        case Family::SymmetricA: {
            int id = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j, ++id)
                    if (id == h) {
                        v[i] = 1;
                        v[j] = -1;
                        return v;
                    }
            break;
        }
        case Family::Cyclotomic: {
            int axis0 = num_hyperplanes() - n_;
            if (h >= axis0) {
                v[h - axis0] = 1;
                return v;
            }
            int id = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j)
                    for (int c = 0; c < m_; ++c, ++id)
                        if (id == h) {
                            v[i] = 1;
                            v[j] = -std::exp(cd(0, -2 * pi * c / m_));
                            return v;
                        }
            break;
        }
    }
    throw std::out_of_range("normal");
}

Mat<std::complex<double>> Group::element_matrix(int g) const {
    using cd = std::complex<double>;
    const double pi = std::numbers::pi;
    Mat<cd> M(dim_, dim_);
    const auto& e = enc_[g];
    switch (family_) {
        case Family::Dihedral: {
            if (e[0] == 0) {
                double th = 2 * pi * e[1] / m_;
                M.at(0, 0) = std::cos(th);
                M.at(0, 1) = -std::sin(th);
                M.at(1, 0) = std::sin(th);
                M.at(1, 1) = std::cos(th);
            } else {
                double th = pi * e[1] / m_;
                M.at(0, 0) = std::cos(2 * th);
                M.at(0, 1) = std::sin(2 * th);
                M.at(1, 0) = std::sin(2 * th);
                M.at(1, 1) = -std::cos(2 * th);
            }
            return M;
        }
        case Family::SymmetricA:
            for (int j = 0; j < n_; ++j) M.at(e[j], j) = 1;
            return M;
        case Family::Cyclotomic: {
            for (int j = 0; j < n_; ++j)
                M.at(e[j], j) = std::exp(cd(0, 2 * pi * e[n_ + e[j]] / m_));
            return M;
        }
    }
    throw std::logic_error("element_matrix");
}

}  // namespace gbr
