#include "gbr/connections.hpp"

#include <stdexcept>

namespace gbr {

Connection<BoundElement> cherednik_connection(const Algebra& A) {
    const Group& G = A.group();
    Connection<BoundElement> conn{&G, "cherednik", {}};
    for (int i = 0; i < G.num_hyperplanes(); ++i) {
        AlgebraElement x;
        for (const Reflection& s : G.reflections())
            if (s.hyp == i) {
                Rational mu = mu_of(G, A.params(), s.elem);
                for (const auto& [w, c] : A.from_group(s.elem)) x[w] += mu * c;
            }
        conn.X.push_back({&A, std::move(x)});
    }
    return conn;
}

Connection<BoundElement> gbrauer_connection(const Algebra& A) {
    Connection<BoundElement> conn = cherednik_connection(A);
    conn.kind = "gbrauer";
    for (int i = 0; i < A.group().num_hyperplanes(); ++i)
        conn.X[i] = conn.X[i] - BoundElement{&A, A.from_e(i)};
    return conn;
}

Connection<DiagramElement> brauer_connection(const Group& Sn, const Rational& tau) {
    if (Sn.family() != Family::SymmetricA)
        throw std::invalid_argument("brauer_connection: symmetric group arrangement only");
    int n = Sn.n_param();
    Connection<DiagramElement> conn{&Sn, "brauer", {}};
    conn.X.resize(Sn.num_hyperplanes(), DiagramElement(n, tau));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            conn.X[Sn.hyp_symmetric(i, j)] =
                s_elem(i, j, n, tau) - e_elem(i, j, n, tau);
    return conn;
}

Connection<RatMat> lk_connection(const Group& G, const Params& p) {
    validate_params(G, p);
    int H = G.num_hyperplanes();
    Connection<RatMat> conn{&G, "lk", {}};
    for (int i = 0; i < H; ++i) {
        RatMat x(H, H);
        // reflections fixing H_i permute the hyperplanes
        for (const Reflection& s : G.reflections())
            if (s.hyp == i) {
                Rational mu = mu_of(G, p, s.elem);
                for (int j = 0; j < H; ++j) x.at(G.act(s.elem, j), j) += mu;
            }
        // minus the projector row
        x.at(i, i) -= m_of(G, p, i);
        for (int j = 0; j < H; ++j) {
            if (j == i) continue;
            for (int s : G.r_set(i, j)) x.at(i, j) -= mu_of(G, p, s);
        }
        conn.X.push_back(std::move(x));
    }
    return conn;
}

}  // namespace gbr
