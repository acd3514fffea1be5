#include "gbr/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gbr {

namespace {

// acc += f * v, dropping cancelled entries
void axpy(SparseVec& acc, const Rational& f, const SparseVec& v) {
    if (f == 0) return;
    for (auto& [k, c] : v) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, f * c);
        } else {
            it->second += f * c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

// Sparse row space with leading coordinate = largest index, so that
// low-indexed words (the pure group words) are never eliminated.
struct DepSpace {
    std::map<int, SparseVec> rows;  // leading index -> row, leading coeff 1

    int rank() const { return (int)rows.size(); }

    // eliminates every row-led coordinate; false if v vanished
    bool reduce(SparseVec& v) const {
        for (;;) {
            int hit = -1;
            for (auto it = v.rbegin(); it != v.rend(); ++it)
                if (rows.count(it->first)) {
                    hit = it->first;
                    break;
                }
            if (hit < 0) return !v.empty();
            Rational f = v.at(hit);
            for (auto& [k, c] : rows.at(hit)) {
                auto it = v.find(k);
                if (it == v.end()) {
                    v.emplace(k, -f * c);
                } else {
                    it->second -= f * c;
                    if (it->second == 0) v.erase(it);
                }
            }
        }
    }

    // stored row on success, nullptr if v was already in the span
    const SparseVec* add(SparseVec v) {
        if (!reduce(v)) return nullptr;
        int lead = v.rbegin()->first;
        Rational inv = Rational(1) / v.rbegin()->second;
        for (auto& [k, c] : v) c *= inv;
        return &rows.emplace(lead, std::move(v)).first->second;
    }
};

}  // namespace

Params generic_params(const Group& G, Variant variant) {
    Params p;
    p.variant = variant;
    int m = G.m_param();
    for (auto& cls : G.reflection_classes()) {
        if (cls.name == "mu" || cls.name == "mu0") {
            p.mu[cls.name] = 1;
            continue;
        }
        int k = std::stoi(cls.name.substr(2));
        int key = (std::min(k, m - k) - 1) % 5;  // inverse-paired classes coincide
        static const long num[] = {2, 3, 5, 7, 9};
        static const long den[] = {3, 5, 7, 11, 13};
        p.mu[cls.name] = rat(num[key], den[key]);
    }
    for (auto& orb : G.hyperplane_orbits())
        p.m[orb.name] = orb.name == "tau1" ? rat(11, 5) : rat(7, 3);
    return p;
}

Rational mu_of(const Group& G, const Params& p, int refl_elem) {
    return p.mu.at(G.reflection_classes()[G.class_of(refl_elem)].name);
}

Rational m_of(const Group& G, const Params& p, int hyp) {
    return p.m.at(G.hyperplane_orbits()[G.orbit_of(hyp)].name);
}

void validate_params(const Group& G, const Params& p) {
    auto& classes = G.reflection_classes();
    auto& orbits = G.hyperplane_orbits();
    if ((int)p.mu.size() != (int)classes.size() || (int)p.m.size() != (int)orbits.size())
        throw std::invalid_argument("parameter count mismatch");
    for (auto& cls : classes)
        if (!p.mu.count(cls.name)) throw std::invalid_argument("missing mu for " + cls.name);
    for (auto& orb : orbits)
        if (!p.m.count(orb.name)) throw std::invalid_argument("missing m for " + orb.name);
    for (auto& r : G.reflections()) {
        const std::string& a = classes[G.class_of(r.elem)].name;
        const std::string& b = classes[G.class_of(G.inv(r.elem))].name;
        if (p.mu.at(a) != p.mu.at(b))
            throw std::invalid_argument("mu must agree on inverse classes (" + a + " vs " + b + ")");
    }
}

Algebra::Algebra(const Group& G, Params p) : G_(G), params_(std::move(p)) {
    validate_params(G_, params_);
    auto& classes = G_.reflection_classes();
    for (auto& r : G_.reflections())
        mu_refl_[r.elem] = params_.mu.at(classes[G_.class_of(r.elem)].name);
    int H = G_.num_hyperplanes();
    m_hyp_.resize(H);
    for (int h = 0; h < H; ++h)
        m_hyp_[h] = params_.m.at(G_.hyperplane_orbits()[G_.orbit_of(h)].name);

    // tails: ascending sets whose members pairwise tolerate each other
    std::vector<std::vector<int>> tails;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int start) -> void {
        tails.push_back(cur);
        for (int h = start; h < H; ++h) {
            bool ok = true;
            for (int t : cur) ok = ok && tail_compatible(t, h);
            if (!ok) continue;
            cur.push_back(h);
            self(self, h + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);

    spanning_count_ = (long)G_.order() * (long)tails.size();
    for (auto& t : tails)
        for (int g = 0; g < G_.order(); ++g)
            if (coset_min(g, t) == g) basis_.push_back({g, t});
    std::sort(basis_.begin(), basis_.end());
    for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;

    dense_ = dim() <= 256;
    if (dense_) {
        table_.resize((size_t)dim() * dim());
        have_.assign((size_t)dim() * dim(), 0);
    }
}

bool Algebra::tail_compatible(int i, int j) const {
    if (i == j) return false;
    if (G_.pair_commutes(i, j)) return true;
    return params_.variant == Variant::Hat && G_.r_set(i, j).empty();
}

bool Algebra::reducible(int i, int j) const {
    if (i == j) return true;
    if (G_.pair_commutes(i, j)) return false;
    if (!G_.r_set(i, j).empty()) return true;
    return params_.variant == Variant::Standard;
}

const std::vector<int>& Algebra::absorber(const std::vector<int>& tail) const {
    auto it = absorber_memo_.find(tail);
    if (it != absorber_memo_.end()) return it->second;
    std::vector<int> gens;
    for (auto& r : G_.reflections())
        for (int t : tail)
            if (r.hyp == t) gens.push_back(r.elem);
    std::vector<char> in(G_.order(), 0);
    std::vector<int> queue = {G_.identity()};
    in[G_.identity()] = 1;
    for (size_t k = 0; k < queue.size(); ++k)
        for (int s : gens) {
            int x = G_.mul(queue[k], s);
            if (!in[x]) {
                in[x] = 1;
                queue.push_back(x);
            }
        }
    std::sort(queue.begin(), queue.end());
    return absorber_memo_.emplace(tail, std::move(queue)).first->second;
}

int Algebra::coset_min(int g, const std::vector<int>& tail) const {
    if (tail.empty()) return g;
    int best = g;
    for (int a : absorber(tail)) best = std::min(best, G_.mul(g, a));
    return best;
}

void Algebra::reduce_into(std::vector<Term>& work, AlgebraElement& out) const {
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        int L = (int)t.tail.size();
        int P = -1, Q = -1;
        for (int p = 0; p < L && P < 0; ++p)
            for (int q = p + 1; q < L; ++q)
                if (reducible(t.tail[p], t.tail[q])) {
                    P = p;
                    Q = q;
                    break;
                }
        if (P < 0) {
            std::sort(t.tail.begin(), t.tail.end());
            NormalWord w{coset_min(t.g, t.tail), std::move(t.tail)};
            auto it = out.find(w);
            if (it == out.end()) {
                out.emplace(std::move(w), std::move(t.c));
            } else {
                it->second += t.c;
                if (it->second == 0) out.erase(it);
            }
            continue;
        }
        // slide tail[P] right next to tail[Q]; the pairs skipped over are
        // irreducible, hence genuinely commuting (or hat-commuting)
        int i = t.tail[P], j = t.tail[Q];
        std::vector<int> pre(t.tail.begin(), t.tail.begin() + P);
        pre.insert(pre.end(), t.tail.begin() + P + 1, t.tail.begin() + Q);
        std::vector<int> rest(t.tail.begin() + Q + 1, t.tail.end());
        if (i == j) {
            Term nt;
            nt.c = t.c * m_hyp_[i];
            nt.g = t.g;
            nt.tail = pre;
            nt.tail.push_back(j);
            nt.tail.insert(nt.tail.end(), rest.begin(), rest.end());
            work.push_back(std::move(nt));
            continue;
        }
        auto& rs = G_.r_set(i, j);
        if (rs.empty()) continue;  // standard variant: the product is zero
        for (int s : rs) {
            int si = G_.inv(s);
            Term nt;
            nt.c = t.c * mu_refl_.at(s);
            nt.g = G_.mul(t.g, s);
            nt.tail.reserve(pre.size() + 1 + rest.size());
            for (int u : pre) nt.tail.push_back(G_.act(si, u));
            nt.tail.push_back(j);
            nt.tail.insert(nt.tail.end(), rest.begin(), rest.end());
            work.push_back(std::move(nt));
        }
    }
}

AlgebraElement Algebra::raw_normal_form(const std::vector<Token>& word) const {
    Term t{1, G_.identity(), {}};
    for (auto& tok : word) {
        if (tok.is_e) {
            t.tail.push_back(tok.id);
        } else {
            int wi = G_.inv(tok.id);
            for (auto& h : t.tail) h = G_.act(wi, h);
            t.g = G_.mul(t.g, tok.id);
        }
    }
    std::vector<Term> work;
    work.push_back(std::move(t));
    AlgebraElement out;
    reduce_into(work, out);
    return out;
}

AlgebraElement Algebra::normal_form(const std::vector<Token>& word) const {
    AlgebraElement out = raw_normal_form(word);
    return quotient_mode_ ? project_words(out) : out;
}

AlgebraElement Algebra::project_words(const AlgebraElement& x) const {
    SparseVec acc;
    for (auto& [w, c] : x) axpy(acc, c, img_[word_index_.at(w)]);
    AlgebraElement out;
    for (auto& [p, c] : acc) out.emplace(basis_[p], c);
    return out;
}

// rewriting product of two words as a combination of words
static SparseVec word_product(const Algebra& A, const NormalWord& x, const NormalWord& y,
                              const std::map<NormalWord, int>& idx) {
    std::vector<Algebra::Token> toks;
    toks.push_back(Algebra::tok_g(x.g));
    for (int t : x.tail) toks.push_back(Algebra::tok_e(t));
    toks.push_back(Algebra::tok_g(y.g));
    for (int t : y.tail) toks.push_back(Algebra::tok_e(t));
    SparseVec v;
    for (auto& [w, c] : A.raw_normal_form(toks)) v[idx.at(w)] = c;
    return v;
}

const SparseVec& Algebra::raw_product(int a, int b) const {
    size_t k = (size_t)a * words_.size() + b;
    if (rawhave_[k]) return rawtab_[k];
    rawtab_[k] = word_product(*this, words_[a], words_[b], word_index_);
    rawhave_[k] = 1;
    return rawtab_[k];
}

const SparseVec& Algebra::product(int a, int b) const {
    if (dense_) {
        size_t k = (size_t)a * dim() + b;
        if (have_[k]) return table_[k];
        table_[k] = quotient_mode_ ? projected_product(a, b)
                                   : word_product(*this, basis_[a], basis_[b], index_);
        have_[k] = 1;
        return table_[k];
    }
    auto key = std::make_pair(a, b);
    auto it = lazy_table_.find(key);
    if (it != lazy_table_.end()) return it->second;
    SparseVec v = quotient_mode_ ? projected_product(a, b)
                                 : word_product(*this, basis_[a], basis_[b], index_);
    return lazy_table_.emplace(key, std::move(v)).first->second;
}

SparseVec Algebra::projected_product(int a, int b) const {
    SparseVec acc;
    for (auto& [w, c] : raw_product(pivots_[a], pivots_[b])) axpy(acc, c, img_[w]);
    return acc;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    SparseVec acc;
    for (auto& [wx, cx] : x) {
        int a = index_.at(wx);
        for (auto& [wy, cy] : y) axpy(acc, cx * cy, product(a, index_.at(wy)));
    }
    AlgebraElement out;
    for (auto& [k, c] : acc) out.emplace(basis_[k], c);
    return out;
}

AlgebraElement Algebra::star(const AlgebraElement& x) const {
    SparseVec acc;
    for (auto& [w, c] : x) {
        if (c == 0) continue;
        std::vector<Token> toks;
        for (auto it = w.tail.rbegin(); it != w.tail.rend(); ++it) toks.push_back(tok_e(*it));
        toks.push_back(tok_g(G_.inv(w.g)));
        for (auto& [v, d] : normal_form(toks)) {
            auto it = acc.find(index_.at(v));
            if (it == acc.end()) acc.emplace(index_.at(v), c * d);
            else {
                it->second += c * d;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    AlgebraElement out;
    for (auto& [k, c] : acc) out.emplace(basis_[k], c);
    return out;
}

AlgebraElement Algebra::unit() const { return from_group(G_.identity()); }

AlgebraElement Algebra::from_group(int g) const {
    AlgebraElement x;
    x[NormalWord{g, {}}] = 1;
    return x;
}

AlgebraElement Algebra::from_e(int h) const {
    AlgebraElement x;
    x[NormalWord{coset_min(G_.identity(), {h}), {h}}] = 1;
    return quotient_mode_ ? project_words(x) : x;
}

std::vector<Rational> Algebra::to_dense(const AlgebraElement& x) const {
    std::vector<Rational> v(dim(), Rational(0));
    for (auto& [w, c] : x) v[index_.at(w)] = c;
    return v;
}

std::string Algebra::word_str(const NormalWord& w) const {
    std::ostringstream os;
    os << G_.elem_str(w.g);
    for (int t : w.tail) os << ".e[" << G_.hyperplane_str(t) << "]";
    return os.str();
}

bool Algebra::associativity_sweep(std::array<int, 3>* witness) const {
    int d = dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const SparseVec& ab = product(a, b);
            for (int c = 0; c < d; ++c) {
                SparseVec lhs, rhs;
                for (auto& [w, x] : ab) axpy(lhs, x, product(w, c));
                for (auto& [w, x] : product(b, c)) axpy(rhs, x, product(a, w));
                if (lhs != rhs) {
                    if (witness) *witness = {a, b, c};
                    return false;
                }
            }
        }
    return true;
}

bool Algebra::associativity_sample(int trials, unsigned seed, std::array<int, 3>* witness) const {
    std::mt19937 rng(seed);
    int d = dim();
    for (int t = 0; t < trials; ++t) {
        int a = (int)(rng() % d), b = (int)(rng() % d), c = (int)(rng() % d);
        SparseVec lhs, rhs;
        for (auto& [w, x] : product(a, b)) axpy(lhs, x, product(w, c));
        for (auto& [w, x] : product(b, c)) axpy(rhs, x, product(a, w));
        if (lhs != rhs) {
            if (witness) *witness = {a, b, c};
            return false;
        }
    }
    return true;
}

const RadicalReport& Algebra::semisimplicity_report() const {
    if (!radical_) {
        radical_ = trace_form_radical(dim(), [this](int a, int b) { return product(a, b); });
    }
    return *radical_;
}

bool Algebra::in_trace_radical(const AlgebraElement& x) const {
    auto& rep = semisimplicity_report();
    auto xd = to_dense(x);
    for (int b = 0; b < dim(); ++b) {
        Rational s = 0;
        for (int a = 0; a < dim(); ++a)
            if (xd[a] != 0) s += xd[a] * rep.gram.at(a, b);
        if (s != 0) return false;
    }
    return true;
}

bool Algebra::group_embedding_check() const {
    for (int g = 0; g < G_.order(); ++g)
        if (!index_.count(NormalWord{g, {}})) return false;
    std::vector<char> pure(dim(), 0);
    for (int i = 0; i < dim(); ++i) pure[i] = basis_[i].tail.empty();
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) {
            const SparseVec& p = product(a, b);
            if (pure[a] && pure[b]) {
                int want = index_.at(NormalWord{G_.mul(basis_[a].g, basis_[b].g), {}});
                if (p.size() != 1 || p.begin()->first != want || p.begin()->second != 1)
                    return false;
            } else {
                for (auto& [k, c] : p)
                    if (pure[k]) return false;
            }
        }
    return true;
}

void Algebra::apply_quotient(std::vector<int> pivots, std::vector<SparseVec> img_words,
                             QuotientInfo info) {
    words_ = std::move(basis_);
    word_index_ = std::move(index_);
    // recycle the spanning-phase product cache as the raw-word table
    rawtab_.assign(words_.size() * words_.size(), SparseVec{});
    rawhave_.assign(words_.size() * words_.size(), 0);
    if (dense_) {
        for (size_t k = 0; k < table_.size(); ++k)
            if (have_[k]) {
                rawtab_[k] = std::move(table_[k]);
                rawhave_[k] = 1;
            }
    } else {
        for (auto& [key, v] : lazy_table_) {
            size_t k = (size_t)key.first * words_.size() + key.second;
            rawtab_[k] = std::move(v);
            rawhave_[k] = 1;
        }
    }
    pivots_ = std::move(pivots);
    std::vector<int> pos(words_.size(), -1);
    for (int i = 0; i < (int)pivots_.size(); ++i) pos[pivots_[i]] = i;
    img_.assign(words_.size(), {});
    for (int w = 0; w < (int)words_.size(); ++w) {
        if (pos[w] >= 0) {
            img_[w] = {{pos[w], Rational(1)}};
            continue;
        }
        for (auto& [u, c] : img_words[w]) img_[w][pos[u]] = c;
    }
    basis_.clear();
    index_.clear();
    for (int p : pivots_) basis_.push_back(words_[p]);
    for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;
    quotient_mode_ = true;
    quot_ = info;
    dense_ = dim() <= 256;
    table_.clear();
    have_.clear();
    lazy_table_.clear();
    if (dense_) {
        table_.resize((size_t)dim() * dim());
        have_.assign((size_t)dim() * dim(), 0);
    }
    radical_.reset();
}

Algebra Algebra::quotiented(const Group& G, Params p, long max_triples, unsigned seed) {
    Algebra A(G, std::move(p));
    const int n = A.dim();
    DepSpace dep;
    QuotientInfo info;
    info.words = n;

    // (sum_w v_w w) * c and a * (sum_w v_w w) in word coordinates
    auto mul_vec_word = [&](const SparseVec& v, int c) {
        SparseVec r;
        for (auto& [w, x] : v) axpy(r, x, A.product(w, c));
        return r;
    };
    auto mul_word_vec = [&](int a, const SparseVec& v) {
        SparseVec r;
        for (auto& [w, x] : v) axpy(r, x, A.product(a, w));
        return r;
    };
    // close the dependence space under one-sided multiplications so that
    // reduction modulo it commutes with the product
    std::vector<SparseVec> work;
    auto close = [&]() {
        while (!work.empty()) {
            SparseVec v = std::move(work.back());
            work.pop_back();
            for (int w = 0; w < n; ++w) {
                if (const SparseVec* r = dep.add(mul_word_vec(w, v))) work.push_back(*r);
                if (const SparseVec* r = dep.add(mul_vec_word(v, w))) work.push_back(*r);
            }
        }
    };

    bool full = (long)n * n * n <= 3000000;
    std::mt19937 rng(seed);
    bool found = true;
    for (int round = 1; found; ++round) {
        info.rounds = round;
        found = false;
        auto check = [&](int a, int b, int c) {
            SparseVec d = mul_vec_word(A.product(a, b), c);
            for (auto& [k, x] : A.product(b, c)) axpy(d, -x, A.product(a, k));
            if (const SparseVec* r = dep.add(std::move(d))) {
                found = true;
                work.push_back(*r);
                close();
            }
        };
        if (full) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) check(a, b, c);
        } else {
            for (long t = 0; t < max_triples; ++t)
                check((int)(rng() % n), (int)(rng() % n), (int)(rng() % n));
        }
    }
    info.defect_pass_full = full;
    info.dependence_rank = dep.rank();
    info.dim = n - dep.rank();
    if (dep.rank() == 0) {
        A.quot_ = info;
        return A;
    }
    std::vector<int> pivots;
    std::vector<SparseVec> img(n);
    for (int w = 0; w < n; ++w) {
        if (!dep.rows.count(w)) {
            pivots.push_back(w);
            continue;
        }
        if (A.basis()[w].tail.empty())
            throw std::runtime_error("dependence eliminated a pure group word");
        SparseVec v{{w, Rational(1)}};
        dep.reduce(v);  // rows are not inter-reduced, so reduce to pivots here
        img[w] = std::move(v);
    }
    A.apply_quotient(std::move(pivots), std::move(img), info);
    return A;
}

Algebra build_algebra(const Group& G, Params p) {
    Algebra A(G, std::move(p));
    std::array<int, 3> w{};
    bool ok = A.dim() <= 256 ? A.associativity_sweep(&w)
                             : A.associativity_sample(20000, 20240817u, &w);
    if (!ok) {
        std::ostringstream os;
        os << "associativity failed at triple (" << A.word_str(A.basis()[w[0]]) << ", "
           << A.word_str(A.basis()[w[1]]) << ", " << A.word_str(A.basis()[w[2]])
           << "): the spanning words carry a dependence at these parameters";
        throw std::runtime_error(os.str());
    }
    return A;
}

bool rescale_check(const Group& G, const Params& base, const Rational& lambda) {
    if (lambda == 0) throw std::invalid_argument("rescale needs lambda != 0");
    Params scaled = base;
    for (auto& [k, v] : scaled.mu) v *= lambda;
    for (auto& [k, v] : scaled.m) v *= lambda;
    Algebra A(G, base), B(G, scaled);
    if (!(A.basis() == B.basis())) return false;
    auto lpow = [&](int k) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= lambda;
        return r;
    };
    int d = A.dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const SparseVec &pa = A.product(a, b), &pb = B.product(a, b);
            if (pa.size() != pb.size()) return false;
            Rational f = lpow((int)(A.basis()[a].tail.size() + A.basis()[b].tail.size()));
            for (auto& [w, c] : pb) {
                auto it = pa.find(w);
                if (it == pa.end()) return false;
                if (c * lpow((int)A.basis()[w].tail.size()) != it->second * f) return false;
            }
        }
    return true;
}

}  // namespace gbr
