#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gbr/matrix.hpp"

namespace gbr {

enum class Family { Dihedral, SymmetricA, Cyclotomic };

// Pseudo reflection: group element together with its fixed hyperplane.
struct Reflection {
    int elem;
    int hyp;
};

struct NamedSet {
    std::string name;
    std::vector<int> members;
};

// Finite pseudo reflection group together with its hyperplane arrangement:
// dihedral I2(m) on C^2, symmetric S_n on C^n (type A_{n-1} hyperplanes
// x_i = x_j), and the wreath family G(m,1,n) (hyperplanes x_i = w^a x_j and
// the coordinate axes x_i = 0).
//
// Elements are dense ids, 0 = identity, ordered by a canonical encoding so
// coset minima are reproducible.
class Group {
  public:
    static Group dihedral(int m);
    static Group symmetric(int n);
    static Group cyclotomic(int m, int n);

    Family family() const { return family_; }
    int m_param() const { return m_; }
    int n_param() const { return n_; }
    std::string descriptor() const;

    int order() const { return (int)enc_.size(); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[a * order() + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    std::string elem_str(int g) const;

    int num_hyperplanes() const { return (int)hyp_labels_.size(); }
    std::string hyperplane_str(int h) const { return hyp_labels_[h]; }
    int ambient_dim() const { return dim_; }

    // Image of hyperplane h under element g.
    int act(int g, int h) const { return act_[g * num_hyperplanes() + h]; }

    const std::vector<Reflection>& reflections() const { return refl_; }
    bool is_reflection(int g) const { return refl_index_.count(g) > 0; }
    // Hyperplane of a pseudo reflection.
    int reflection_hyp(int g) const { return refl_[refl_index_.at(g)].hyp; }

    // {s pseudo reflection : s(H_j) = H_i}
    const std::vector<int>& r_set(int i, int j) const { return rset_[i * num_hyperplanes() + j]; }

    // Codimension-2 edges, each the sorted list of hyperplanes containing it.
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_of_pair(int i, int j) const { return edge_of_pair_[i * num_hyperplanes() + j]; }
    // True when the edge through H_i and H_j contains no further hyperplane.
    bool pair_commutes(int i, int j) const {
        return edges_[edge_of_pair(i, j)].size() == 2;
    }

    const std::vector<NamedSet>& reflection_classes() const { return classes_; }
    const std::vector<NamedSet>& hyperplane_orbits() const { return orbits_; }
    int class_of(int refl_elem) const { return class_of_.at(refl_elem); }
    int orbit_of(int h) const { return orbit_of_[h]; }
    // Order of the pointwise stabilizer of H_h (count of pseudo reflections + 1).
    int stabilizer_order(int h) const { return stab_order_[h]; }

    const std::vector<int>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    // Shortest word in generators() (indices into that list).
    const std::vector<int>& word(int g) const { return words_[g]; }

    // Geometry (doubles), used by cross-checks and the monodromy paths.
    std::vector<std::complex<double>> normal(int h) const;
    Mat<std::complex<double>> element_matrix(int g) const;

    // Family-specific element lookups.
    int dihedral_rotation(int t) const;       // r^t
    int dihedral_reflection(int j) const;     // s_j, fixes H_j
    int symmetric_transposition(int i, int j) const;
    int cyclo_transposition(int i, int j, int a) const;  // s_{i,j;a}
    int cyclo_diag(int i, int k) const;                  // s_i^k
    int hyp_dihedral(int j) const { return j; }
    int hyp_symmetric(int i, int j) const;
    int hyp_cyclo_offdiag(int i, int j, int a) const;
    int hyp_cyclo_axis(int i) const;

  private:
    Group() = default;
    void index_elements(std::vector<std::vector<int>> encodings);
    void build_shared_tables();

    Family family_ = Family::Dihedral;
    int m_ = 0, n_ = 0, dim_ = 0;

    std::vector<std::vector<int>> enc_;
    std::map<std::vector<int>, int> enc_index_;
    std::vector<int> mul_, inv_;

    std::vector<std::string> hyp_labels_;
    std::vector<int> act_;
    std::vector<Reflection> refl_;
    std::map<int, int> refl_index_;
    std::vector<std::vector<int>> rset_;
    std::vector<std::vector<int>> edges_;
    std::vector<int> edge_of_pair_;
    std::vector<NamedSet> classes_, orbits_;
    std::map<int, int> class_of_;
    std::vector<int> orbit_of_, stab_order_;
    std::vector<int> gens_;
    std::vector<std::string> gen_names_;
    std::vector<std::vector<int>> words_;
};

}  // namespace gbr
