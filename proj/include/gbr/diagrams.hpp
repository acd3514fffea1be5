#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbr/rational.hpp"

namespace gbr {

// Brauer diagram on 2n nodes: a perfect matching stored as a fixed-point-free
// involution. Nodes 0..n-1 are the top row, n..2n-1 the bottom row.
struct BrauerDiagram {
    int n = 0;
    std::vector<int> partner;  // partner[p] = q, partner[q] = p, p != q

    static BrauerDiagram identity(int n);
    static BrauerDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
    bool valid() const;
    bool operator<(const BrauerDiagram& o) const { return partner < o.partner; }
    bool operator==(const BrauerDiagram& o) const { return partner == o.partner; }
};

// Stacking composition: d1 on top, d1's bottom row glued to d2's top row.
// Returns the resulting diagram and the number of closed middle loops.
std::pair<BrauerDiagram, int> compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

// All (2n-1)!! diagrams, in canonical (lexicographic) order.
std::vector<BrauerDiagram> all_diagrams(int n);
long diagram_count(int n);

// Element of the Brauer algebra B_n(tau): sparse rational combination of
// diagrams. tau is fixed per element; products multiply by tau^loops.
class DiagramElement {
  public:
    DiagramElement() = default;
    DiagramElement(int n, const Rational& tau) : n_(n), tau_(tau) {}
    DiagramElement(const BrauerDiagram& d, const Rational& tau, const Rational& coeff = 1);

    int n() const { return n_; }
    const Rational& tau() const { return tau_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const BrauerDiagram& d, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const DiagramElement& o) const;

    DiagramElement operator+(const DiagramElement& o) const;
    DiagramElement operator-(const DiagramElement& o) const;
    DiagramElement operator*(const DiagramElement& o) const;
    DiagramElement scaled(const Rational& c) const;

    std::string str() const;

  private:
    int n_ = 0;
    Rational tau_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

DiagramElement one_elem(int n, const Rational& tau);
// Transposition diagram s_{i,j} and bar diagram e_{i,j} (0-based, i != j).
DiagramElement s_elem(int i, int j, int n, const Rational& tau);
DiagramElement e_elem(int i, int j, int n, const Rational& tau);

// Checks the six bar/transposition identities on every admissible index
// tuple; returns human-readable descriptions of any failures.
std::vector<std::string> verify_bar_identities(int n, const Rational& tau);

// Checks the ten defining relation rows of B_n(tau) on the Coxeter
// generators s_k = s_{k,k+1}, e_k = e_{k,k+1}.
std::vector<std::string> verify_brauer_relations(int n, const Rational& tau);

}  // namespace gbr
