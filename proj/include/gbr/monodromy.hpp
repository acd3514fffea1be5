#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gbr/algebra.hpp"
#include "gbr/groups.hpp"
#include "gbr/matrix.hpp"
#include "gbr/reps.hpp"

namespace gbr {

using cplx = std::complex<double>;
using CMat = Mat<cplx>;
using CVec = std::vector<cplx>;

// One analytic piece of a path in the arrangement complement: a straight
// segment or a circular arc around a wall.
struct Segment {
    bool arc = false;
    CVec a, b;            // line: a + t (b - a)
    CVec center, offset;  // arc: center + e^{i theta} offset
    double th0 = 0, th1 = 0;

    CVec at(double t) const;
    CVec velocity(double t) const;
};

struct Path {
    std::vector<Segment> segs;

    CVec start() const { return segs.front().at(0); }
    CVec end() const { return segs.back().at(1); }
    Path reversed() const;
    // minimum over sample points of the scaled distance |f_h(z)| / |f_h| to
    // any hyperplane; a valid path keeps this strictly positive
    double clearance(const std::vector<CVec>& forms, int samples_per_seg = 256) const;
};

// straight run from p0 into a tube around the wall H_v, the arc
// t -> e^{2 pi i t / m_v} pr_perp + pr, and the reflected return; shrink < 1
// tightens the tube radius (any value gives a homotopic loop downstairs)
Path generator_path(const Group& G, int v, const CVec& p0, double shrink = 1.0);

// real base point in the open fundamental chamber: (1, 2, ..., n) for the
// braid arrangement, the bisector direction of the first two walls otherwise
CVec base_point(const Group& G);

// Realized connection: per-hyperplane matrices (kappa already folded in)
// with the linear forms cutting out the hyperplanes.
struct Realized {
    std::vector<CVec> forms;
    std::vector<CMat> X;
};

// kappa * (sum of mu_s rho(s) over the wall - rho(e_v)) per hyperplane
Realized realize(const Group& G, const Params& p, const RatRep& rep, double kappa);

// Parallel transport of the identity frame along the path: adaptive embedded
// Runge-Kutta on Phi' = (sum_h X_h f_h(z')/f_h(z)) Phi with local error per
// step below tol. Throws on step-size underflow (path too close to a wall).
CMat transport(const Realized& conn, const Path& path, double tol);

CMat cinverse(const CMat& m);
cplx cdet(const CMat& m);
double max_abs(const CMat& m);

// monodromy image of the wall generator: rho(s_v)^{-1} followed by the
// transport along the generator path
CMat monodromy_generator(const Realized& conn, const Group& G, int v, int refl_elem,
                         const RatRep& rep, const CVec& p0, double tol);

// images of the standard wall generators, one per group generator
std::vector<CMat> standard_monodromy(const Group& G, const Params& p, const RatRep& rep,
                                     double kappa, double tol);

struct ResidualItem {
    std::string relation;
    double residual;
};

// Deformed-relation residuals for generator images X_1..X_{n-1}, with
// q = e^{kappa pi i}, l = q^{m-1}, tau = (l^{-1} - l + q^{-1} - q)/(q^{-1} - q)
// and E_i = (l/(q^{-1} - q))(X_i^2 + (q^{-1} - q)X_i - 1).
struct BmwReport {
    cplx q, l, tau;
    std::vector<CMat> E;
    std::vector<ResidualItem> items;
    double max_residual() const;
    double max_projector_norm() const;  // largest |E_i| entry: 0 for Hecke images
};

BmwReport bmw_check(const std::vector<CMat>& X, double kappa, double m_param);

// largest entry of (X - q^{1-m})(X + q^{-1})(X - q)
double cubic_residual(const CMat& X, double kappa, double m_param);

}  // namespace gbr
