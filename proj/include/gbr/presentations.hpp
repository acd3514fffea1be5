#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbr/algebra.hpp"
#include "gbr/groups.hpp"

namespace gbr {

// One summand of a relation side: coeff * (named parameter or 1) * word.
struct FreeTerm {
    Rational coeff = 1;
    std::string param;               // "" = no parameter factor
    std::vector<std::string> word;   // generator names, empty = identity
};

struct Relation {
    std::string name;
    std::vector<FreeTerm> lhs, rhs;  // empty side means 0
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;
};

std::string relation_str(const Relation& r);

// Four-generator table of the dihedral algebra over S0,S1,E0,E1; the odd and
// even cases differ in the projector relations ("any word" instances are
// materialized over all group elements).
Presentation dihedral_presentation(int m);

// Coxeter-matrix driven table over the group's s/e generator pairs
// (dihedral and symmetric families).
Presentation coxeter_presentation(const Group& G);

// Defining table of the diagram algebra on n strands.
Presentation brauer_presentation(int n);

// Wreath family G(m,1,n) over S0..S{n-1}, E0..E{n-1}: S0 has order m, E0
// sits on the first coordinate axis; the e_0/e_1 zero products range over
// the parabolic generated by S0,S1.
Presentation cyclotomic_presentation(int m, int n);

// Replaces a named parameter by a fixed scalar in every term.
Presentation substitute_param(Presentation P, const std::string& name, const Rational& value);

// Relation lists considered as sets, modulo swapping the two sides and
// reversing every word (the anti-involution); used to compare the type A
// table with the diagram-algebra table.
bool same_relations(const Presentation& a, const Presentation& b);

using GeneratorAssignment = std::map<std::string, AlgebraElement>;

// Canonical images inside the built algebra: s-named generators map to the
// group generators with matching names, e-named ones to the projector of the
// partner generator's hyperplane.
GeneratorAssignment canonical_images(const Presentation& P, const Algebra& A);

// Substitutes the images into every relation and evaluates; returns the
// names of violated relations.
std::vector<std::string> check_assignment(const Presentation& P, const GeneratorAssignment& asg,
                                          const Algebra& A);

// True iff the unital subalgebra generated by the images is all of A.
bool check_generation(const GeneratorAssignment& asg, const Algebra& A);

// For G(m,1,n): every projector as an explicit conjugate w E w^{-1} of a
// generator projector, each target cross-checked with two distinct
// conjugating words. Throws when the two words disagree.
std::map<int, AlgebraElement> conjugate_e_family(const Algebra& A);

}  // namespace gbr
