#include "gbr/presentations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gbr {

namespace {

using Word = std::vector<std::string>;

Word alt(const std::string& a, const std::string& b, int len) {
    Word w;
    for (int t = 0; t < len; ++t) w.push_back(t % 2 == 0 ? a : b);
    return w;
}

Word cat(std::initializer_list<Word> parts) {
    Word w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

FreeTerm term(Word w) { return {1, "", std::move(w)}; }
FreeTerm term(std::string param, Word w) { return {1, std::move(param), std::move(w)}; }

Relation rel(std::string name, std::vector<FreeTerm> l, std::vector<FreeTerm> r) {
    return {std::move(name), std::move(l), std::move(r)};
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) s += " ";
        s += g;
    }
    return s;
}

}  // namespace

std::string relation_str(const Relation& r) {
    auto side = [](const std::vector<FreeTerm>& ts) {
        if (ts.empty()) return std::string("0");
        std::string s;
        for (const auto& t : ts) {
            if (!s.empty()) s += " + ";
            std::string factor;
            if (t.coeff != 1) factor = rational_str(t.coeff) + " ";
            if (!t.param.empty()) factor += t.param + " ";
            s += factor + word_str(t.word);
        }
        return s;
    };
    return r.name + ": " + side(r.lhs) + " = " + side(r.rhs);
}

Presentation dihedral_presentation(int m) {
    if (m < 3) throw std::invalid_argument("dihedral_presentation: need m >= 3");
    Presentation P;
    P.generators = {"S0", "S1", "E0", "E1"};
    auto& R = P.relations;

    R.push_back(rel("(1) braid", {term(alt("S0", "S1", m))}, {term(alt("S1", "S0", m))}));
    R.push_back(rel("(2) S0^2", {term({"S0", "S0"})}, {term({})}));
    R.push_back(rel("(2) S1^2", {term({"S1", "S1"})}, {term({})}));
    for (int i : {0, 1}) {
        std::string s = "S" + std::to_string(i), e = "E" + std::to_string(i);
        R.push_back(rel("(3) " + s + e, {term({s, e})}, {term({e})}));
        R.push_back(rel("(3) " + e + s, {term({e, s})}, {term({e})}));
    }

    if (m % 2 == 1) {
        int k = (m - 1) / 2;
        R.push_back(rel("(4) E0^2", {term({"E0", "E0"})}, {term("tau", {"E0"})}));
        R.push_back(rel("(4) E1^2", {term({"E1", "E1"})}, {term("tau", {"E1"})}));
        for (int i = 1; i <= k; ++i) {
            R.push_back(rel("(5) i=" + std::to_string(i),
                            {term(cat({{"E0"}, alt("S1", "S0", 2 * i - 1), {"E0"}}))},
                            {term("mu", {"E0"})}));
            R.push_back(rel("(6) i=" + std::to_string(i),
                            {term(cat({{"E1"}, alt("S0", "S1", 2 * i - 1), {"E1"}}))},
                            {term("mu", {"E1"})}));
        }
        R.push_back(rel("(7) shift", {term(cat({alt("S0", "S1", 2 * k), {"E0"}}))},
                        {term(cat({{"E1"}, alt("S0", "S1", 2 * k)}))}));
        return P;
    }

    int k = m / 2;
    // every group element as an alternating word
    std::vector<Word> words;
    for (int t = 0; t <= m; ++t) words.push_back(alt("S0", "S1", t));
    for (int t = 1; t < m; ++t) words.push_back(alt("S1", "S0", t));
    for (const auto& w : words) {
        R.push_back(rel("(4) E1 " + word_str(w) + " E0",
                        {term(cat({{"E1"}, w, {"E0"}}))}, {}));
        R.push_back(rel("(4) E0 " + word_str(w) + " E1",
                        {term(cat({{"E0"}, w, {"E1"}}))}, {}));
    }
    // skip the degenerate indices where the conjugating reflection fixes the
    // wall (i=k for E0, i=1 for E1): there the left side collapses by
    // absorption and the two-term right side is false
    Word c = alt("S0", "S1", m);  // central half turn
    for (int i = 1; i <= k; ++i) {
        std::string mu_a = (i % 2 == 0) ? "mu0" : "mu1";
        std::string mu_b = ((i + k) % 2 == 0) ? "mu0" : "mu1";
        if (i < k)
            R.push_back(rel("(5) i=" + std::to_string(i),
                            {term(cat({{"E0"}, alt("S1", "S0", 2 * i - 1), {"E0"}}))},
                            {term(mu_a, {"E0"}), term(mu_b, cat({c, {"E0"}}))}));
        if (i > 1)
            R.push_back(rel("(6) i=" + std::to_string(i),
                            {term(cat({{"E1"}, alt("S1", "S0", 2 * i - 1), {"E1"}}))},
                            {term(mu_a, {"E1"}), term(mu_b, cat({c, {"E1"}}))}));
    }
    R.push_back(rel("(7) center E0", {term(cat({alt("S1", "S0", m - 1), {"E0"}}))},
                    {term(cat({{"E0"}, alt("S1", "S0", m - 1)}))}));
    R.push_back(rel("(8) center E1", {term(cat({alt("S0", "S1", m - 1), {"E1"}}))},
                    {term(cat({{"E1"}, alt("S0", "S1", m - 1)}))}));
    R.push_back(rel("(9) E0^2", {term({"E0", "E0"})}, {term("tau0", {"E0"})}));
    R.push_back(rel("(9) E1^2", {term({"E1", "E1"})}, {term("tau1", {"E1"})}));
    return P;
}

Presentation coxeter_presentation(const Group& G) {
    if (G.family() == Family::Cyclotomic)
        throw std::invalid_argument("coxeter_presentation: real families only");
    int ng = (int)G.generators().size();
    Presentation P;
    std::vector<std::string> sn(ng), en(ng);
    for (int i = 0; i < ng; ++i) {
        sn[i] = G.generator_names()[i];
        en[i] = "e" + sn[i].substr(1);
    }
    P.generators = sn;
    P.generators.insert(P.generators.end(), en.begin(), en.end());
    auto& R = P.relations;

    auto elem_of = [&](const std::vector<int>& letters) {
        int g = G.identity();
        for (int t : letters) g = G.mul(g, G.generators()[t]);
        return g;
    };
    auto alt_idx = [](int a, int b, int len) {
        std::vector<int> v;
        for (int t = 0; t < len; ++t) v.push_back(t % 2 == 0 ? a : b);
        return v;
    };
    auto mu_name = [&](int refl) { return G.reflection_classes()[G.class_of(refl)].name; };

    for (int i = 0; i < ng; ++i) {
        int h = G.reflection_hyp(G.generators()[i]);
        std::string tau = G.hyperplane_orbits()[G.orbit_of(h)].name;
        R.push_back(rel("(1) " + sn[i] + "^2", {term({sn[i], sn[i]})}, {term({})}));
        R.push_back(rel("(3) " + sn[i] + en[i], {term({sn[i], en[i]})}, {term({en[i]})}));
        R.push_back(rel("(3) " + en[i] + sn[i], {term({en[i], sn[i]})}, {term({en[i]})}));
        R.push_back(rel("(4) " + en[i] + "^2", {term({en[i], en[i]})}, {term(tau, {en[i]})}));
    }

    for (int i = 0; i < ng; ++i)
        for (int j = i + 1; j < ng; ++j) {
            int prod = G.mul(G.generators()[i], G.generators()[j]);
            int mij = 1, x = prod;
            while (x != G.identity()) {
                x = G.mul(x, prod);
                ++mij;
            }
            std::string pair = sn[i] + "," + sn[j];
            R.push_back(rel("(2) braid " + pair, {term(alt(sn[i], sn[j], mij))},
                            {term(alt(sn[j], sn[i], mij))}));
            if (mij == 2) {
                R.push_back(rel("(5) " + sn[i] + en[j], {term({sn[i], en[j]})},
                                {term({en[j], sn[i]})}));
                R.push_back(rel("(5) " + sn[j] + en[i], {term({sn[j], en[i]})},
                                {term({en[i], sn[j]})}));
                R.push_back(rel("(5) " + en[i] + en[j], {term({en[i], en[j]})},
                                {term({en[j], en[i]})}));
            } else if (mij % 2 == 1) {
                int k = (mij - 1) / 2;
                for (int l = 1; l <= k; ++l) {
                    std::string nm = " " + pair + " l=" + std::to_string(l);
                    R.push_back(rel("(6)" + nm,
                                    {term(cat({{en[i]}, alt(sn[j], sn[i], 2 * l - 1), {en[i]}}))},
                                    {term(mu_name(elem_of(alt_idx(j, i, 2 * l - 1))), {en[i]})}));
                    R.push_back(rel("(6)'" + nm,
                                    {term(cat({{en[j]}, alt(sn[i], sn[j], 2 * l - 1), {en[j]}}))},
                                    {term(mu_name(elem_of(alt_idx(i, j, 2 * l - 1))), {en[j]})}));
                }
                R.push_back(rel("(7) " + pair, {term(cat({alt(sn[i], sn[j], 2 * k), {en[i]}}))},
                                {term(cat({{en[j]}, alt(sn[i], sn[j], 2 * k)}))}));
                R.push_back(rel("(7)' " + pair, {term(cat({alt(sn[j], sn[i], 2 * k), {en[j]}}))},
                                {term(cat({{en[i]}, alt(sn[j], sn[i], 2 * k)}))}));
            } else {
                int k = mij / 2;
                std::vector<Word> words;
                for (int t = 0; t <= mij; ++t) words.push_back(alt(sn[i], sn[j], t));
                for (int t = 1; t < mij; ++t) words.push_back(alt(sn[j], sn[i], t));
                for (const auto& w : words) {
                    R.push_back(rel("(8) " + en[i] + " " + word_str(w) + " " + en[j],
                                    {term(cat({{en[i]}, w, {en[j]}}))}, {}));
                    R.push_back(rel("(8) " + en[j] + " " + word_str(w) + " " + en[i],
                                    {term(cat({{en[j]}, w, {en[i]}}))}, {}));
                }
                Word cw = alt(sn[i], sn[j], mij);
                int c = elem_of(alt_idx(i, j, mij));
                // l=k is degenerate: the odd word fixes the wall by (10), so
                // the product collapses by absorption instead
                for (int l = 1; l < k; ++l) {
                    std::string nm = " " + pair + " l=" + std::to_string(l);
                    int s = elem_of(alt_idx(j, i, 2 * l - 1));
                    R.push_back(rel("(9)" + nm,
                                    {term(cat({{en[i]}, alt(sn[j], sn[i], 2 * l - 1), {en[i]}}))},
                                    {term(mu_name(s), {en[i]}),
                                     term(mu_name(G.mul(G.inv(c), s)), cat({cw, {en[i]}}))}));
                    int t = elem_of(alt_idx(i, j, 2 * l - 1));
                    R.push_back(rel("(9)'" + nm,
                                    {term(cat({{en[j]}, alt(sn[i], sn[j], 2 * l - 1), {en[j]}}))},
                                    {term(mu_name(t), {en[j]}),
                                     term(mu_name(G.mul(G.inv(c), t)), cat({cw, {en[j]}}))}));
                }
                R.push_back(rel("(10) " + pair,
                                {term(cat({alt(sn[i], sn[j], mij - 1), {en[j]}}))},
                                {term(cat({{en[j]}, alt(sn[i], sn[j], mij - 1)}))}));
                R.push_back(rel("(10)' " + pair,
                                {term(cat({alt(sn[j], sn[i], mij - 1), {en[i]}}))},
                                {term(cat({{en[i]}, alt(sn[j], sn[i], mij - 1)}))}));
            }
        }
    return P;
}

Presentation brauer_presentation(int n) {
    if (n < 2) throw std::invalid_argument("brauer_presentation: need n >= 2");
    Presentation P;
    auto s = [](int i) { return "s" + std::to_string(i); };
    auto e = [](int i) { return "e" + std::to_string(i); };
    for (int i = 1; i < n; ++i) P.generators.push_back(s(i));
    for (int i = 1; i < n; ++i) P.generators.push_back(e(i));
    auto& R = P.relations;
    for (int i = 1; i + 1 < n; ++i) {
        R.push_back(rel("braid i=" + std::to_string(i),
                        {term({s(i), s(i + 1), s(i)})}, {term({s(i + 1), s(i), s(i + 1)})}));
        R.push_back(rel("s s e up i=" + std::to_string(i),
                        {term({s(i), s(i + 1), e(i)})}, {term({e(i + 1), s(i), s(i + 1)})}));
        R.push_back(rel("e s e up i=" + std::to_string(i),
                        {term({e(i), s(i + 1), e(i)})}, {term({e(i)})}));
    }
    for (int i = 2; i < n; ++i) {
        R.push_back(rel("s s e down i=" + std::to_string(i),
                        {term({s(i), s(i - 1), e(i)})}, {term({e(i - 1), s(i), s(i - 1)})}));
        R.push_back(rel("e s e down i=" + std::to_string(i),
                        {term({e(i), s(i - 1), e(i)})}, {term({e(i)})}));
    }
    for (int i = 1; i < n; ++i) {
        R.push_back(rel("involution i=" + std::to_string(i), {term({s(i), s(i)})}, {term({})}));
        R.push_back(rel("absorb i=" + std::to_string(i), {term({s(i), e(i)})}, {term({e(i)})}));
        R.push_back(
            rel("absorb' i=" + std::to_string(i), {term({e(i), s(i)})}, {term({e(i)})}));
        R.push_back(rel("idempotent i=" + std::to_string(i), {term({e(i), e(i)})},
                        {term("tau", {e(i)})}));
        for (int j = i + 2; j < n; ++j) {
            std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
            R.push_back(rel("distant s s" + ij, {term({s(i), s(j)})}, {term({s(j), s(i)})}));
            R.push_back(rel("distant s e" + ij, {term({s(i), e(j)})}, {term({e(j), s(i)})}));
            R.push_back(rel("distant s e'" + ij, {term({s(j), e(i)})}, {term({e(i), s(j)})}));
            R.push_back(rel("distant e e" + ij, {term({e(i), e(j)})}, {term({e(j), e(i)})}));
        }
    }
    return P;
}

Presentation cyclotomic_presentation(int m, int n) {
    if (m < 2 || n < 1) throw std::invalid_argument("cyclotomic_presentation: need m>=2, n>=1");
    Presentation P;
    auto S = [](int i) { return "S" + std::to_string(i); };
    auto E = [](int i) { return "E" + std::to_string(i); };
    for (int i = 0; i < n; ++i) P.generators.push_back(S(i));
    for (int i = 0; i < n; ++i) P.generators.push_back(E(i));
    auto& R = P.relations;

    auto pow = [&](const std::string& g, int t) { return Word(t, g); };

    R.push_back(rel("(1) S0^m", {term(pow("S0", m))}, {term({})}));
    for (int i = 1; i < n; ++i)
        R.push_back(rel("(1) " + S(i) + "^2", {term({S(i), S(i)})}, {term({})}));
    if (n >= 2)
        R.push_back(rel("(1) S0 S1 S0 S1", {term({"S0", "S1", "S0", "S1"})},
                        {term({"S1", "S0", "S1", "S0"})}));
    for (int i = 1; i + 1 < n; ++i)
        R.push_back(rel("(1) braid " + S(i), {term({S(i), S(i + 1), S(i)})},
                        {term({S(i + 1), S(i), S(i + 1)})}));
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            R.push_back(rel("(1) " + S(i) + " " + S(j), {term({S(i), S(j)})},
                            {term({S(j), S(i)})}));

    R.push_back(rel("(2) E0^2", {term({"E0", "E0"})}, {term("tau0", {"E0"})}));
    for (int i = 1; i < n; ++i)
        R.push_back(rel("(2) " + E(i) + "^2", {term({E(i), E(i)})}, {term("tau1", {E(i)})}));

    if (n >= 2) {
        for (int i = 1; i < m; ++i) {
            Word w = cat({{"S1"}, pow("S0", i), {"S1"}});
            R.push_back(rel("(3) S1 S0^" + std::to_string(i) + " S1 E0",
                            {term(cat({w, {"E0"}}))}, {term(cat({{"E0"}, w}))}));
            Word v = cat({pow("S0", i), {"S1"}, pow("S0", i)});
            R.push_back(rel("(3) S0^" + std::to_string(i) + " S1 S0^" + std::to_string(i) + " E1",
                            {term(cat({v, {"E1"}}))}, {term(cat({{"E1"}, v}))}));
        }
    }
    for (int i = 1; i + 1 < n; ++i)
        R.push_back(rel("(3) " + S(i) + S(i + 1) + E(i),
                        {term({S(i), S(i + 1), E(i)})}, {term({E(i + 1), S(i), S(i + 1)})}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j - i >= 2 || i - j >= 2)
                R.push_back(rel("(3) " + S(i) + " " + E(j), {term({S(i), E(j)})},
                                {term({E(j), S(i)})}));

    for (int i = 0; i < n; ++i) {
        R.push_back(rel("(4) " + S(i) + E(i), {term({S(i), E(i)})}, {term({E(i)})}));
        R.push_back(rel("(4) " + E(i) + S(i), {term({E(i), S(i)})}, {term({E(i)})}));
    }

    if (n >= 2) {
        // E1 S0^i E1 picks up the diagonal reflections through both marked
        // coordinates plus the swaps whose wall contains the intersection
        for (int i = 1; i < m; ++i) {
            std::vector<FreeTerm> rhs = {
                term("mu" + std::to_string(m - i), {"E1"}),
                term("mu" + std::to_string(i),
                     cat({pow("S0", i), {"S1"}, pow("S0", i), {"S1"}, {"E1"}}))};
            for (int c = 1; c < m; ++c)
                if ((2 * c + i) % m == 0)
                    rhs.push_back(term("mu", cat({pow("S0", (i + c) % m), {"S1"},
                                                  pow("S0", m - c), {"E1"}})));
            R.push_back(rel("(5) E1 S0^" + std::to_string(i) + " E1",
                            {term(cat({{"E1"}, pow("S0", i), {"E1"}}))}, std::move(rhs)));
        }
        std::vector<FreeTerm> rhs = {term("mu", {"E0"})};
        for (int i = 1; i < m; ++i)
            rhs.push_back(term(
                "mu", cat({{"S1"}, pow("S0", i), {"S1"}, pow("S0", m - i), {"E0"}})));
        R.push_back(rel("(5) E0 S1 E0", {term({"E0", "S1", "E0"})}, std::move(rhs)));
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            R.push_back(rel("(6) " + E(i) + " " + E(j), {term({E(i), E(j)})},
                            {term({E(j), E(i)})}));
    for (int i = 1; i + 1 < n; ++i)
        R.push_back(rel("(6) " + E(i) + E(i + 1), {term({E(i), E(i + 1)})},
                        {term("mu", {S(i), S(i + 1), S(i), E(i + 1)})}));

    if (n >= 2) {
        // "any word" means any group element: words equal in the group are
        // already equal here by the relations in (1)
        Group G = Group::cyclotomic(m, n);
        for (int g = 0; g < G.order(); ++g) {
            Word w;
            for (int t : G.word(g)) w.push_back("S" + std::to_string(t));
            R.push_back(rel("(7) E0 " + word_str(w) + " E1",
                            {term(cat({{"E0"}, w, {"E1"}}))}, {}));
            R.push_back(rel("(7) E1 " + word_str(w) + " E0",
                            {term(cat({{"E1"}, w, {"E0"}}))}, {}));
        }
    }
    return P;
}

Presentation substitute_param(Presentation P, const std::string& name, const Rational& value) {
    for (auto& r : P.relations)
        for (auto* side : {&r.lhs, &r.rhs})
            for (auto& t : *side)
                if (t.param == name) {
                    t.param.clear();
                    t.coeff *= value;
                }
    return P;
}

namespace {

struct CanonTerm {
    Word word;
    std::string param;
    Rational coeff;
    bool operator<(const CanonTerm& o) const {
        if (word != o.word) return word < o.word;
        if (param != o.param) return param < o.param;
        return coeff < o.coeff;
    }
    bool operator==(const CanonTerm& o) const {
        return word == o.word && param == o.param && coeff == o.coeff;
    }
};

using CanonSide = std::vector<CanonTerm>;
using CanonRel = std::pair<CanonSide, CanonSide>;

CanonSide canon_side(const std::vector<FreeTerm>& ts, bool reversed) {
    CanonSide out;
    for (const auto& t : ts) {
        Word w = t.word;
        if (reversed) std::reverse(w.begin(), w.end());
        out.push_back({std::move(w), t.param, t.coeff});
    }
    std::sort(out.begin(), out.end());
    return out;
}

CanonRel canon_rel(const Relation& r) {
    CanonRel best;
    bool first = true;
    for (bool rev : {false, true}) {
        CanonSide l = canon_side(r.lhs, rev), rr = canon_side(r.rhs, rev);
        for (const CanonRel& cand : {CanonRel{l, rr}, CanonRel{rr, l}})
            if (first || cand < best) {
                best = cand;
                first = false;
            }
    }
    return best;
}

}  // namespace

bool same_relations(const Presentation& a, const Presentation& b) {
    std::vector<CanonRel> ca, cb;
    for (const auto& r : a.relations) ca.push_back(canon_rel(r));
    for (const auto& r : b.relations) cb.push_back(canon_rel(r));
    for (auto* v : {&ca, &cb}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return ca == cb;
}

GeneratorAssignment canonical_images(const Presentation& P, const Algebra& A) {
    const Group& G = A.group();
    auto lower = [](std::string s) {
        for (char& c : s) c = (char)std::tolower((unsigned char)c);
        return s;
    };
    GeneratorAssignment asg;
    std::map<std::string, int> s_elem;  // suffix -> group element
    for (const auto& name : P.generators) {
        if (lower(name)[0] != 's') continue;
        bool found = false;
        for (size_t i = 0; i < G.generator_names().size(); ++i)
            if (lower(G.generator_names()[i]) == lower(name)) {
                asg[name] = A.from_group(G.generators()[i]);
                s_elem[name.substr(1)] = G.generators()[i];
                found = true;
            }
        if (!found) throw std::invalid_argument("canonical_images: no generator " + name);
    }
    for (const auto& name : P.generators) {
        if (lower(name)[0] != 'e') continue;
        auto it = s_elem.find(name.substr(1));
        if (it == s_elem.end())
            throw std::invalid_argument("canonical_images: no partner for " + name);
        asg[name] = A.from_e(G.reflection_hyp(it->second));
    }
    return asg;
}

namespace {

Rational param_value(const Params& p, const std::string& name) {
    if (auto it = p.mu.find(name); it != p.mu.end()) return it->second;
    if (auto it = p.m.find(name); it != p.m.end()) return it->second;
    throw std::invalid_argument("unknown parameter " + name);
}

AlgebraElement eval_side(const std::vector<FreeTerm>& ts, const GeneratorAssignment& asg,
                         const Algebra& A) {
    AlgebraElement sum;
    for (const auto& t : ts) {
        Rational c = t.coeff;
        if (!t.param.empty()) c *= param_value(A.params(), t.param);
        if (c == 0) continue;
        AlgebraElement prod = A.unit();
        for (const auto& g : t.word) prod = A.multiply(prod, asg.at(g));
        for (const auto& [w, x] : prod) {
            sum[w] += c * x;
            if (sum[w] == 0) sum.erase(w);
        }
    }
    return sum;
}

}  // namespace

std::vector<std::string> check_assignment(const Presentation& P, const GeneratorAssignment& asg,
                                          const Algebra& A) {
    std::vector<std::string> bad;
    for (const auto& r : P.relations)
        if (eval_side(r.lhs, asg, A) != eval_side(r.rhs, asg, A)) bad.push_back(r.name);
    return bad;
}

bool check_generation(const GeneratorAssignment& asg, const Algebra& A) {
    EchelonBasis<Rational> span(A.dim());
    std::vector<AlgebraElement> work = {A.unit()};
    while (!work.empty()) {
        AlgebraElement x = std::move(work.back());
        work.pop_back();
        if (!span.add(A.to_dense(x))) continue;
        if (span.dim() == A.dim()) return true;
        for (const auto& [name, img] : asg) work.push_back(A.multiply(x, img));
    }
    return span.dim() == A.dim();
}

std::map<int, AlgebraElement> conjugate_e_family(const Algebra& A) {
    const Group& G = A.group();
    if (G.family() != Family::Cyclotomic)
        throw std::invalid_argument("conjugate_e_family: wreath family only");
    int n = G.n_param(), m = G.m_param();
    const auto& gens = G.generators();  // S0 diagonal, S1..S{n-1} adjacent swaps

    auto fold = [&](const std::vector<int>& letters) {
        int g = G.identity();
        for (int t : letters) g = G.mul(g, gens[t]);
        return g;
    };
    auto conj = [&](int w, int hyp) {
        return A.multiply(A.from_group(w),
                          A.multiply(A.from_e(hyp), A.from_group(G.inv(w))));
    };

    std::map<int, AlgebraElement> out;
    // axes: descending swap chains applied to the first axis projector
    int axis_base = G.hyp_cyclo_axis(0);
    int axis_stab = gens[0];  // S0 fixes its own axis
    for (int i = 1; i <= n; ++i) {
        std::vector<int> letters;
        for (int t = i - 1; t >= 1; --t) letters.push_back(t);
        int w = fold(letters);
        AlgebraElement F = conj(w, axis_base);
        if (!(conj(G.mul(w, axis_stab), axis_base) == F))
            throw std::runtime_error("conjugate_e_family: axis words disagree at i=" +
                                     std::to_string(i));
        out[G.hyp_cyclo_axis(i - 1)] = std::move(F);
    }
    // off-diagonal targets from the adjacent-swap projectors (1-based i<j)
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int a = 0; a < m; ++a) {
                std::vector<int> letters;
                std::vector<int> loop;  // S_{j-1} ... S_1 S_0 S_1 ... S_{j-1}
                for (int t = j - 1; t >= 1; --t) loop.push_back(t);
                loop.push_back(0);
                for (int t = 1; t <= j - 1; ++t) loop.push_back(t);
                for (int rep = 0; rep < a; ++rep)
                    letters.insert(letters.end(), loop.begin(), loop.end());
                for (int t = j - 1; t >= i + 1; --t) letters.push_back(t);
                int base = G.hyp_cyclo_offdiag(i - 1, i, 0);
                int w = fold(letters);
                AlgebraElement F = conj(w, base);
                int stab = G.cyclo_transposition(i - 1, i, 0);
                if (!(conj(G.mul(w, stab), base) == F))
                    throw std::runtime_error("conjugate_e_family: words disagree at (" +
                                             std::to_string(i) + "," + std::to_string(j) +
                                             ";" + std::to_string(a) + ")");
                out[G.act(w, base)] = std::move(F);
            }
    if ((int)out.size() != G.num_hyperplanes())
        throw std::runtime_error("conjugate_e_family: targets collide");
    return out;
}

}  // namespace gbr
