#include "gbr/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbr {

namespace {

const double pi = std::numbers::pi;

CVec operator+(const CVec& x, const CVec& y) {
    CVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}
CVec operator-(const CVec& x, const CVec& y) {
    CVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}
CVec operator*(cplx c, const CVec& x) {
    CVec r = x;
    for (auto& v : r) v *= c;
    return r;
}

cplx form_eval(const CVec& form, const CVec& z) {
    cplx s = 0;
    for (size_t i = 0; i < form.size(); ++i) s += form[i] * z[i];
    return s;
}

double hnorm(const CVec& z) {
    double s = 0;
    for (const auto& v : z) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

CVec Segment::at(double t) const {
    if (!arc) return a + cplx(t) * (b - a);
    double th = th0 + t * (th1 - th0);
    return center + std::polar(1.0, th) * offset;
}

CVec Segment::velocity(double t) const {
    if (!arc) return b - a;
    double th = th0 + t * (th1 - th0);
    return (cplx(0, th1 - th0) * std::polar(1.0, th)) * offset;
}

Path Path::reversed() const {
    Path r;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        Segment s = *it;
        if (s.arc) std::swap(s.th0, s.th1);
        else std::swap(s.a, s.b);
        r.segs.push_back(std::move(s));
    }
    return r;
}

double Path::clearance(const std::vector<CVec>& forms, int samples_per_seg) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : segs)
        for (int k = 0; k <= samples_per_seg; ++k) {
            CVec z = s.at((double)k / samples_per_seg);
            for (const CVec& f : forms)
                best = std::min(best, std::abs(form_eval(f, z)) / hnorm(f));
        }
    return best;
}

CVec base_point(const Group& G) {
    int n = G.ambient_dim();
    CVec p(n);
    if (G.family() == Family::SymmetricA) {
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        return p;
    }
    if (G.family() == Family::Dihedral) {
        double th = pi / (2 * G.m_param());
        p[0] = std::cos(th);
        p[1] = std::sin(th);
        return p;
    }
    throw std::invalid_argument("no chamber base point for this family");
}

Path generator_path(const Group& G, int v, const CVec& p0, double shrink) {
    if (shrink <= 0 || shrink > 1) throw std::invalid_argument("shrink out of range");
    int P = G.num_hyperplanes();
    std::vector<CVec> forms(P);
    for (int h = 0; h < P; ++h) forms[h] = G.normal(h);

    // split p0 = pr + pr_perp against H_v; the normal vector spans im(s_v - 1)
    CVec nv = forms[v];
    cplx fp = form_eval(forms[v], p0);
    if (std::abs(fp) < 1e-12) throw std::invalid_argument("base point lies on the wall");
    CVec perp = (fp / form_eval(forms[v], nv)) * nv;
    CVec q = p0 - perp;  // generic wall target

    double delta = std::numeric_limits<double>::infinity();
    for (int h = 0; h < P; ++h)
        if (h != v) delta = std::min(delta, std::abs(form_eval(forms[h], q)) / hnorm(forms[h]));

    // tube radius: at most half the clearance of the wall point, at most
    // half the starting distance
    double r0 = hnorm(perp);
    double rad = shrink * std::min(delta / 2, r0 / 2);
    double eps = rad / r0;

    int mv = G.stabilizer_order(v);
    cplx zeta = std::polar(1.0, 2 * pi / mv);

    Segment run;
    run.a = p0;
    run.b = q + cplx(eps) * perp;

    Segment arc;
    arc.arc = true;
    arc.center = q;
    arc.offset = cplx(eps) * perp;
    arc.th0 = 0;
    arc.th1 = 2 * pi / mv;

    Segment back;
    back.a = q + zeta * (cplx(eps) * perp);
    back.b = q + zeta * perp;  // = s_v(p0)

    Path path{{run, arc, back}};
    if (path.clearance(forms) < 1e-9)
        throw std::runtime_error("generator path too close to a hyperplane");
    return path;
}

Realized realize(const Group& G, const Params& p, const RatRep& rep, double kappa) {
    Realized conn;
    for (int h = 0; h < G.num_hyperplanes(); ++h) {
        conn.forms.push_back(G.normal(h));
        RatMat x(rep.dim, rep.dim);
        for (const Reflection& s : G.reflections())
            if (s.hyp == h) x = x + mu_of(G, p, s.elem) * rep.rho[s.elem];
        x = x - rep.bar[h];
        conn.X.push_back(cplx(kappa) * complex_mat(x));
    }
    return conn;
}

namespace {

// Dormand-Prince 5(4) pair
const double C[7] = {0, 1. / 5, 3. / 10, 4. / 5, 8. / 9, 1, 1};
const double A[7][6] = {
    {},
    {1. / 5},
    {3. / 40, 9. / 40},
    {44. / 45, -56. / 15, 32. / 9},
    {19372. / 6561, -25360. / 2187, 64448. / 6561, -212. / 729},
    {9017. / 3168, -355. / 33, 46732. / 5247, 49. / 176, -5103. / 18656},
    {35. / 384, 0, 500. / 1113, 125. / 192, -2187. / 6784, 11. / 84},
};
const double B5[7] = {35. / 384,      0, 500. / 1113, 125. / 192,
                      -2187. / 6784, 11. / 84, 0};
const double B4[7] = {5179. / 57600, 0, 7571. / 16695, 393. / 640,
                      -92097. / 339200, 187. / 2100, 1. / 40};

CMat coefficient_matrix(const Realized& conn, const Segment& seg, double t) {
    CVec z = seg.at(t);
    CVec dz = seg.velocity(t);
    int d = conn.X[0].rows;
    CMat acc(d, d);
    for (size_t h = 0; h < conn.X.size(); ++h) {
        cplx g = form_eval(conn.forms[h], dz) / form_eval(conn.forms[h], z);
        acc = acc + g * conn.X[h];
    }
    return acc;
}

}  // namespace

double max_abs(const CMat& m) {
    double r = 0;
    for (const auto& v : m.a) r = std::max(r, std::abs(v));
    return r;
}

CMat transport(const Realized& conn, const Path& path, double tol) {
    int d = conn.X[0].rows;
    CMat y = CMat::identity(d);
    for (const Segment& seg : path.segs) {
        double t = 0, h = 0.05;
        while (t < 1) {
            h = std::min(h, 1 - t);
            CMat k[7];
            for (int i = 0; i < 7; ++i) {
                CMat yi = y;
                for (int j = 0; j < i; ++j)
                    if (A[i][j] != 0) yi = yi + cplx(h * A[i][j]) * k[j];
                k[i] = coefficient_matrix(conn, seg, t + C[i] * h) * yi;
            }
            CMat y5 = y, err(d, d);
            for (int i = 0; i < 7; ++i) {
                if (B5[i] != 0) y5 = y5 + cplx(h * B5[i]) * k[i];
                double db = B5[i] - B4[i];
                if (db != 0) err = err + cplx(h * db) * k[i];
            }
            double scale = std::max(1.0, max_abs(y));
            double e = max_abs(err);
            if (e <= tol * scale) {
                y = y5;
                t += h;
            }
            double fac = 0.9 * std::pow(tol * scale / std::max(e, 1e-300), 0.2);
            h *= std::clamp(fac, 0.2, 5.0);
            if (h < 1e-13) throw std::runtime_error("step-size underflow near a hyperplane");
        }
    }
    return y;
}

CMat cinverse(const CMat& m) {
    int n = m.rows;
    CMat a = m, inv = CMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) < 1e-250) throw std::runtime_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        cplx d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            cplx f = a.at(r, col);
            if (f == cplx(0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

cplx cdet(const CMat& m) {
    int n = m.rows;
    CMat a = m;
    cplx det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) < 1e-250) return 0;
        if (piv != col) {
            det = -det;
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            cplx f = a.at(r, col) / a.at(col, col);
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return det;
}

CMat monodromy_generator(const Realized& conn, const Group& G, int v, int refl_elem,
                         const RatRep& rep, const CVec& p0, double tol) {
    Path path = generator_path(G, v, p0);
    return cinverse(complex_mat(rep.rho[refl_elem])) * transport(conn, path, tol);
}

std::vector<CMat> standard_monodromy(const Group& G, const Params& p, const RatRep& rep,
                                     double kappa, double tol) {
    Realized conn = realize(G, p, rep, kappa);
    CVec p0 = base_point(G);
    std::vector<CMat> out;
    for (int w : G.generators())
        out.push_back(monodromy_generator(conn, G, G.reflection_hyp(w), w, rep, p0, tol));
    return out;
}

double BmwReport::max_residual() const {
    double r = 0;
    for (const auto& it : items) r = std::max(r, it.residual);
    return r;
}

double BmwReport::max_projector_norm() const {
    double r = 0;
    for (const auto& e : E) r = std::max(r, max_abs(e));
    return r;
}

BmwReport bmw_check(const std::vector<CMat>& X, double kappa, double m_param) {
    BmwReport rep;
    rep.q = std::polar(1.0, kappa * pi);
    rep.l = std::polar(1.0, kappa * (m_param - 1) * pi);
    cplx alpha = cplx(1) / rep.q - rep.q;
    rep.tau = (cplx(1) / rep.l - rep.l + alpha) / alpha;

    int k = (int)X.size();
    int d = X[0].rows;
    CMat I = CMat::identity(d);
    for (int i = 0; i < k; ++i)
        rep.E.push_back((rep.l / alpha) * (X[i] * X[i] + alpha * X[i] - I));
    const auto& E = rep.E;

    auto label = [](std::string text, int i, int j = -1) {
        for (auto& ch : text)
            if (ch == 'i') ch = (char)('1' + i);
            else if (ch == 'j') ch = (char)('1' + j);
        return text;
    };
    auto add = [&](std::string name, const CMat& lhs, const CMat& rhs) {
        rep.items.push_back({std::move(name), max_abs(lhs - rhs)});
    };

    for (int i = 0; i < k; ++i) {
        add(label("Ei Ei = tau Ei", i), E[i] * E[i], rep.tau * E[i]);
        add(label("Xi Ei = 1/l Ei", i), X[i] * E[i], (cplx(1) / rep.l) * E[i]);
        add(label("Ei Xi = 1/l Ei", i), E[i] * X[i], (cplx(1) / rep.l) * E[i]);
        add(label("l(Xi^2 + a Xi - 1) = a Ei", i),
            rep.l * (X[i] * X[i] + alpha * X[i] - I), alpha * E[i]);
    }
    for (int i = 0; i + 1 < k; ++i) {
        int j = i + 1;
        add(label("Xi Xj Xi = Xj Xi Xj", i, j), X[i] * X[j] * X[i], X[j] * X[i] * X[j]);
        add(label("Xi Xj Ei = Ej Xi Xj", i, j), X[i] * X[j] * E[i], E[j] * X[i] * X[j]);
        add(label("Xj Xi Ej = Ei Xj Xi", i, j), X[j] * X[i] * E[j], E[i] * X[j] * X[i]);
        add(label("Ei Xj Ei = l Ei", i, j), E[i] * X[j] * E[i], rep.l * E[i]);
        add(label("Ej Xi Ej = l Ej", i, j), E[j] * X[i] * E[j], rep.l * E[j]);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            add(label("Xi Xj = Xj Xi", i, j), X[i] * X[j], X[j] * X[i]);
            add(label("Xi Ej = Ej Xi", i, j), X[i] * E[j], E[j] * X[i]);
        }
    return rep;
}

double cubic_residual(const CMat& X, double kappa, double m_param) {
    int d = X.rows;
    CMat I = CMat::identity(d);
    cplx q = std::polar(1.0, kappa * pi);
    cplx a = std::polar(1.0, kappa * (1 - m_param) * pi);
    return max_abs((X - a * I) * (X + (cplx(1) / q) * I) * (X - q * I));
}

}  // namespace gbr
