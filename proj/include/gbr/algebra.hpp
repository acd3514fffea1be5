#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbr/groups.hpp"
#include "gbr/matrix.hpp"
#include "gbr/rational.hpp"

namespace gbr {

enum class Variant { Standard, Hat };

// Parameter pack: one mu per reflection conjugacy class, one m per
// hyperplane orbit (the coefficient in e_i^2 = m_i e_i).
struct Params {
    std::map<std::string, Rational> mu;
    std::map<std::string, Rational> m;
    Variant variant = Variant::Standard;
};

// Deterministic defaults: distinct small fractions per class/orbit, equal on
// inverse-paired classes so the anti-involution exists.
Params generic_params(const Group& G, Variant variant = Variant::Standard);
// Coefficient lookups: mu keyed by the reflection's class name, m by the
// hyperplane's orbit name.
Rational mu_of(const Group& G, const Params& p, int refl_elem);
Rational m_of(const Group& G, const Params& p, int hyp);
// Throws when names don't match the group's classes/orbits or when mu is not
// constant under inversion.
void validate_params(const Group& G, const Params& p);

// Canonical spanning word: group element times a product of pairwise
// compatible e_t factors. Tail ascending; group part minimal in its right
// coset modulo the subgroup generated by reflections fixing a tail member.
struct NormalWord {
    int g = 0;
    std::vector<int> tail;

    bool operator<(const NormalWord& o) const {
        if (tail != o.tail) return tail < o.tail;
        return g < o.g;
    }
    bool operator==(const NormalWord& o) const { return g == o.g && tail == o.tail; }
};

using AlgebraElement = std::map<NormalWord, Rational>;

// Outcome of the dependence-discovery construction (Algebra::quotiented).
// Every associativity defect of the rewriting table is a linear combination
// of spanning words that provably vanishes in the algebra; the discovered
// dependences are closed under one-sided multiplication and quotiented out.
struct QuotientInfo {
    int words = 0;            // canonical spanning words before the quotient
    int dim = 0;              // surviving basis size
    int dependence_rank = 0;  // independent dependences found
    int rounds = 0;           // defect passes until a clean one
    bool defect_pass_full = false;  // last pass covered every triple
};

// The algebra attached to a reflection group and parameter pack, realized by
// structure constants over the normal words. The rewriting strategy is fixed
// (leftmost reducible tail pair first); whether the normal words really form
// a basis is certified afterwards by the associativity sweep, which fails
// with a witness triple when the spanning set carries a hidden dependence.
class Algebra {
  public:
    struct Token {
        bool is_e;
        int id;  // group element id, or hyperplane id when is_e
    };
    static Token tok_g(int g) { return {false, g}; }
    static Token tok_e(int h) { return {true, h}; }

    Algebra(const Group& G, Params p);

    // Builds the spanning table, then repeatedly harvests associativity
    // defects (genuine dependences, since every rewriting step applies a
    // defining relation), closes them under multiplication and quotients
    // them out, until a defect pass comes back clean. Passes cover all
    // triples when feasible, otherwise max_triples seeded samples each.
    static Algebra quotiented(const Group& G, Params p, long max_triples = 400000,
                              unsigned seed = 20240817u);

    const Group& group() const { return G_; }
    const Params& params() const { return params_; }
    Variant variant() const { return params_.variant; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<NormalWord>& basis() const { return basis_; }
    int index_of(const NormalWord& w) const { return index_.at(w); }
    long spanning_words_count() const { return spanning_count_; }
    // non-null iff built via quotiented()
    const QuotientInfo* quotient() const { return quot_ ? &*quot_ : nullptr; }
    std::string word_str(const NormalWord& w) const;

    AlgebraElement normal_form(const std::vector<Token>& word) const;
    // normal form in spanning-word coordinates, before quotient projection
    AlgebraElement raw_normal_form(const std::vector<Token>& word) const;
    const SparseVec& product(int a, int b) const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement star(const AlgebraElement& x) const;

    AlgebraElement unit() const;
    AlgebraElement from_group(int g) const;
    AlgebraElement from_e(int h) const;
    std::vector<Rational> to_dense(const AlgebraElement& x) const;

    bool associativity_sweep(std::array<int, 3>* witness = nullptr) const;
    bool associativity_sample(int trials, unsigned seed,
                              std::array<int, 3>* witness = nullptr) const;
    const RadicalReport& semisimplicity_report() const;
    // trace(L_x L_y) = 0 against every basis y
    bool in_trace_radical(const AlgebraElement& x) const;
    // pure group words multiply like the group and no product leaks back
    // onto them from words with nonempty tails
    bool group_embedding_check() const;

  private:
    struct Term {
        Rational c;
        int g;
        std::vector<int> tail;
    };

    bool reducible(int i, int j) const;
    bool tail_compatible(int i, int j) const;
    const std::vector<int>& absorber(const std::vector<int>& tail) const;
    int coset_min(int g, const std::vector<int>& tail) const;
    void reduce_into(std::vector<Term>& work, AlgebraElement& out) const;
    // rewriting product in spanning-word coordinates (quotient mode only;
    // in spanning mode product() itself plays this role)
    const SparseVec& raw_product(int a, int b) const;
    SparseVec projected_product(int a, int b) const;
    AlgebraElement project_words(const AlgebraElement& x) const;
    void apply_quotient(std::vector<int> pivots, std::vector<SparseVec> img_words,
                        QuotientInfo info);

    Group G_;
    Params params_;
    std::map<int, Rational> mu_refl_;
    std::vector<Rational> m_hyp_;
    std::vector<NormalWord> basis_;
    std::map<NormalWord, int> index_;
    long spanning_count_ = 0;
    bool dense_ = true;

    // quotient mode: full spanning-word list, with the image of each word
    // in basis coordinates
    bool quotient_mode_ = false;
    std::vector<NormalWord> words_;
    std::map<NormalWord, int> word_index_;
    std::vector<int> pivots_;
    std::vector<SparseVec> img_;
    std::optional<QuotientInfo> quot_;

    mutable std::map<std::vector<int>, std::vector<int>> absorber_memo_;
    mutable std::vector<SparseVec> table_;
    mutable std::vector<char> have_;
    mutable std::map<std::pair<int, int>, SparseVec> lazy_table_;
    mutable std::vector<SparseVec> rawtab_;
    mutable std::vector<char> rawhave_;
    mutable std::optional<RadicalReport> radical_;
};

// Builds and certifies: runs the full associativity sweep for dim <= 256
// (seeded sampling above), throwing with the witness triple on failure.
// When it throws, the spanning words carry a genuine dependence; the
// Algebra::quotiented constructor discovers and removes such dependences.
Algebra build_algebra(const Group& G, Params p);

// Structure constants of the lambda-rescaled parameters match under
// w -> w, e_i -> lambda e_i.
bool rescale_check(const Group& G, const Params& base, const Rational& lambda);

}  // namespace gbr
