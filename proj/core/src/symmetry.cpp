#include "qfrob/symmetry.hpp"

#include <algorithm>

namespace qfrob {

namespace {

std::string entry_name(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

HeckeSymmetry validate(const ScalarMatrix& r, int n, const std::string& name) {
    if (r.rows() != n * n || r.cols() != n * n)
        throw ShapeError("symmetry matrix must be N^2 x N^2");
    ScalarMatrix rr(r);
    rr.set_shape({n, n});

    ScalarMatrix r12 = embed_factor(rr, 1, 3);
    ScalarMatrix r23 = embed_factor(rr, 2, 3);
    ScalarMatrix lhs = r12 * r23 * r12;
    ScalarMatrix rhs = r23 * r12 * r23;
    if (lhs != rhs) {
        auto [i, j] = ScalarMatrix::first_difference(lhs, rhs);
        throw BraidViolation("braid relation fails first at entry " + entry_name(i, j) + ": " +
                             lhs.at(i, j).to_string() + " != " + rhs.at(i, j).to_string());
    }

    const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);
    ScalarMatrix sq = rr * rr;
    ScalarMatrix hecke = ScalarMatrix::identity(n * n) + rr.scaled(qbar);
    if (sq != hecke) {
        auto [i, j] = ScalarMatrix::first_difference(sq, hecke);
        throw HeckeViolation("Hecke condition fails first at entry " + entry_name(i, j) + ": " +
                             sq.at(i, j).to_string() + " != " + hecke.at(i, j).to_string());
    }

    HeckeSymmetry s;
    s.n_ = n;
    s.r_ = rr;
    s.r_inv_ = rr - ScalarMatrix::identity(n * n).scaled(qbar);
    s.r_inv_.set_shape({n, n});
    s.name_ = name;
    return s;
}

SkewInverseData skew_inverse(const HeckeSymmetry& s) {
    const int n = s.n();
    const int n2 = n * n;
    // Unknowns x_{(a2,b2)} = Psi[(b2,a3)][(a2,c3)] for each fixed (a3,c3);
    // the coefficient matrix A[(a1,c1)][(a2,b2)] = R[(a1,a2)][(c1,b2)] is
    // shared by all right-hand sides.
    ScalarMatrix a(n2, n2), rhs(n2, n2);
    for (int a1 = 0; a1 < n; ++a1)
        for (int c1 = 0; c1 < n; ++c1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2)
                    a.at(a1 * n + c1, a2 * n + b2) = s.r().at(a1 * n + a2, c1 * n + b2);
    for (int a1 = 0; a1 < n; ++a1)
        for (int c1 = 0; c1 < n; ++c1)
            for (int a3 = 0; a3 < n; ++a3)
                for (int c3 = 0; c3 < n; ++c3)
                    if (a1 == c3 && a3 == c1) rhs.at(a1 * n + c1, a3 * n + c3) = RatFunc(1);

    SolveResult sol;
    try {
        sol = solve(a, rhs, ReduceStrategy::Field);
    } catch (const InconsistentSystem&) {
        throw NotSkewInvertible("the skew-inverse system is singular");
    }
    if (!sol.unique) throw NotSkewInvertible("the skew-inverse system is singular");

    SkewInverseData data;
    data.psi = ScalarMatrix(n2, n2);
    for (int r = 0; r < n; ++r)
        for (int m = 0; m < n; ++m)
            for (int j = 0; j < n; ++j)
                for (int nn = 0; nn < n; ++nn)
                    data.psi.at(r * n + m, j * n + nn) = sol.x.at(j * n + r, m * n + nn);
    data.psi.set_shape({n, n});
    data.b = partial_trace(data.psi, {1});
    data.c = partial_trace(data.psi, {2});
    return data;
}

ScalarMatrix r_trace(const SkewInverseData& data, const ScalarMatrix& m,
                     const std::set<int>& which) {
    if (!m.has_shape()) throw ShapeError("r_trace needs a tensor shape");
    const int f = static_cast<int>(m.shape().size());
    ScalarMatrix twisted = m;
    for (int i : which) {
        if (i < 1 || i > f) throw IndexError("r_trace factor index out of range");
        twisted = embed_single(data.c, i, f) * twisted;
    }
    twisted.set_shape(m.shape());
    return partial_trace(twisted, which);
}

ScalarMatrix rho(const HeckeSymmetry& s, const HeckeElement& z, int n) {
    if (z.n() != n) throw DimensionMismatch("element does not live in H_n");
    const long dim = [&] {
        long d = 1;
        for (int i = 0; i < n; ++i) d *= s.n();
        return d;
    }();
    ScalarMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    std::map<Perm, ScalarMatrix> memo;
    memo.emplace(perm_identity(n), ScalarMatrix::identity(static_cast<int>(dim)));
    // rho(T_w) built one generator at a time along reduced words.
    auto image = [&](const Perm& w) -> const ScalarMatrix& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::vector<std::pair<int, Perm>> chain;  // (generator, shorter perm)
        Perm cur = w;
        while (memo.find(cur) == memo.end()) {
            auto word = reduced_word(cur);
            int i = word.front();
            Perm shorter = cur;
            for (auto& v : shorter) {
                if (v == i - 1)
                    v = static_cast<std::uint8_t>(i);
                else if (v == i)
                    v = static_cast<std::uint8_t>(i - 1);
            }
            chain.emplace_back(i, cur);
            cur = shorter;
        }
        for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
            memo.emplace(rit->second, embed_factor(s.r(), rit->first, n) * memo.at(cur));
            cur = rit->second;
        }
        return memo.at(w);
    };
    for (const auto& [w, c] : z.terms()) out = out + image(w).scaled(c);
    if (n >= 1) out.set_shape(std::vector<int>(static_cast<std::size_t>(n), s.n()));
    return out;
}

namespace {

int matrix_rank(const ScalarMatrix& m, bool fast) {
    if (!fast) return row_reduce(m).rank;
    int best = 0;
    for (long num : {7L, 12L}) {
        ScalarMatrix sp(m.rows(), m.cols());
        Rational q0 = make_rational(num, num == 7 ? 5 : 7);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) sp.at(i, j) = RatFunc(m.at(i, j).specialize(q0));
        best = std::max(best, row_reduce(sp).rank);
    }
    return best;
}

// Polynomials in t as coefficient vectors, constant term first.
int poly_deg(const std::vector<Rational>& p) {
    int d = -1;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) d = static_cast<int>(i);
    return d;
}

}  // namespace

std::string BiRank::series_string() const {
    auto print = [](const std::vector<Rational>& p, bool plus_form) -> std::string {
        // Try the (1 +- t)^d form first.
        int d = poly_deg(p);
        std::vector<Rational> powed{Rational(1)};
        for (int i = 0; i < d; ++i) {
            std::vector<Rational> next(powed.size() + 1);
            for (std::size_t j = 0; j < powed.size(); ++j) {
                next[j] += powed[j];
                next[j + 1] += plus_form ? powed[j] : -powed[j];
            }
            powed = std::move(next);
        }
        powed.resize(p.size(), Rational(0));
        if (powed == p) {
            std::string base = plus_form ? "(1+t)" : "(1-t)";
            if (d == 0) return "1";
            if (d == 1) return base;
            return base + "^" + std::to_string(d);
        }
        std::string s;
        for (int i = 0; i <= d; ++i) {
            if (p[static_cast<std::size_t>(i)] == 0) continue;
            if (!s.empty()) s += p[static_cast<std::size_t>(i)] > 0 ? "+" : "";
            std::string c = to_string(p[static_cast<std::size_t>(i)]);
            if (i == 0)
                s += c;
            else
                s += (c == "1" ? "" : c + "*") + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
        }
        return s.empty() ? "0" : s;
    };
    std::string num = print(series_num, true);
    std::string den = print(series_den, false);
    return den == "1" ? num : num + "/" + den;
}

BiRank birank(const HeckeSymmetry& sym, int kmax, bool fast_rank) {
    if (kmax < 2) throw IndexError("birank needs kmax >= 2");
    std::vector<long> d{1};
    ScalarMatrix a_img = ScalarMatrix::identity(sym.n());  // rho(a_1) on V
    a_img.set_shape({sym.n()});
    d.push_back(sym.n());
    bool dead = false;
    for (int k = 2; k <= kmax; ++k) {
        if (dead) {
            d.push_back(0);
            continue;
        }
        // a_k = (1/k_q) a_{k-1} (q^{k-1} e - (k-1)_q tau_{k-1}) a_{k-1},
        // mapped through rho directly.
        ScalarMatrix prev = kron(a_img, ScalarMatrix::identity(sym.n()));
        ScalarMatrix mid =
            ScalarMatrix::identity(prev.rows()).scaled(RatFunc::q(k - 1)) -
            embed_factor(sym.r(), k - 1, k).scaled(q_int(k - 1));
        a_img = (prev * mid * prev).scaled(q_int(k).inverse());
        a_img.set_shape(std::vector<int>(static_cast<std::size_t>(k), sym.n()));
        int rk = matrix_rank(a_img, fast_rank);
        d.push_back(rk);
        if (rk == 0) dead = true;
    }

    // Minimal rational function P/Q with Q(0) = 1 matching the series
    // through kmax; degrees are limited to kmax/2.
    const int rmax = kmax / 2;
    for (int sdeg = 0; sdeg <= rmax; ++sdeg) {
        // Unknowns c_1..c_sdeg; equations sum_j c_j d_{k-j} = -d_k for
        // k = rmax+1 .. kmax.
        const int neq = kmax - rmax;
        ScalarMatrix m(neq, sdeg), rhs(neq, 1);
        for (int e = 0; e < neq; ++e) {
            int k = rmax + 1 + e;
            for (int j = 1; j <= sdeg; ++j)
                m.at(e, j - 1) = RatFunc(Rational(k - j >= 0 ? d[static_cast<std::size_t>(k - j)] : 0));
            rhs.at(e, 0) = RatFunc(Rational(-d[static_cast<std::size_t>(k)]));
        }
        SolveResult sol;
        try {
            sol = solve(m, rhs);
        } catch (const InconsistentSystem&) {
            continue;
        }
        std::vector<Rational> den{Rational(1)};
        for (int j = 1; j <= sdeg; ++j) den.push_back(sol.x.at(j - 1, 0).specialize(Rational(1)));
        // P = Q * series, truncated; must vanish beyond degree rmax.
        std::vector<Rational> num(static_cast<std::size_t>(kmax + 1), Rational(0));
        for (int k = 0; k <= kmax; ++k)
            for (int j = 0; j <= std::min(k, sdeg); ++j)
                num[static_cast<std::size_t>(k)] += den[static_cast<std::size_t>(j)] *
                                                    Rational(d[static_cast<std::size_t>(k - j)]);
        bool ok = true;
        for (int k = rmax + 1; k <= kmax; ++k)
            if (num[static_cast<std::size_t>(k)] != 0) ok = false;
        if (!ok) continue;
        num.resize(static_cast<std::size_t>(rmax + 1));

        // Coprimality of the fitted pair.
        LaurentPoly pn, pd;
        for (std::size_t i = 0; i < num.size(); ++i)
            pn += LaurentPoly::monomial(num[i], static_cast<int>(i));
        for (std::size_t i = 0; i < den.size(); ++i)
            pd += LaurentPoly::monomial(den[i], static_cast<int>(i));
        if (!poly_gcd(pn, pd).is_constant()) continue;

        BiRank out;
        out.r = poly_deg(num);
        out.s = poly_deg(den);
        out.hp_coefficients = d;
        num.resize(static_cast<std::size_t>(out.r + 1));
        den.resize(static_cast<std::size_t>(out.s + 1));
        out.series_num = std::move(num);
        out.series_den = std::move(den);

        // Cross-check the trace identities for the detected bi-rank.
        SkewInverseData data = skew_inverse(sym);
        ScalarMatrix bc = data.b * data.c;
        if (bc != ScalarMatrix::identity(sym.n()).scaled(RatFunc::q(-2 * (out.r - out.s))))
            throw Inconclusive("bi-rank (" + std::to_string(out.r) + "|" + std::to_string(out.s) +
                               ") fails the B*C identity");
        RatFunc expect_tr = RatFunc::q(out.s - out.r) * q_int(out.r - out.s);
        if (data.b.trace() != expect_tr || data.c.trace() != expect_tr)
            throw Inconclusive("bi-rank (" + std::to_string(out.r) + "|" + std::to_string(out.s) +
                               ") fails the trace identity");
        return out;
    }
    throw Inconclusive("no rational function of degree <= kmax/2 fits; raise kmax");
}

namespace {

ScalarMatrix gl_type_matrix(int m, int n) {
    const int nn = m + n;
    ScalarMatrix r(nn * nn, nn * nn);
    const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);
    auto parity = [&](int i) { return i >= m ? 1 : 0; };
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            if (i == j) {
                // R(e_i (x) e_i) = (-1)^p q^{1-2p} e_i (x) e_i
                r.at(i * nn + i, i * nn + i) =
                    parity(i) ? -RatFunc::q(-1) : RatFunc::q(1);
            } else {
                // R(e_i (x) e_j) = (-1)^{p(i)p(j)} e_j (x) e_i [+ qbar e_i (x) e_j if i<j]
                RatFunc sign = (parity(i) && parity(j)) ? RatFunc(-1) : RatFunc(1);
                r.at(j * nn + i, i * nn + j) = sign;
                if (i < j) r.at(i * nn + j, i * nn + j) = qbar;
            }
        }
    return r;
}

}  // namespace

HeckeSymmetry builtin(const std::string& name) {
    if (name == "r2") {
        ScalarMatrix r = gl_type_matrix(2, 0);
        return validate(r, 2, "r2");
    }
    if (name == "r11") {
        ScalarMatrix r = gl_type_matrix(1, 1);
        return validate(r, 2, "r11");
    }
    if (name.rfind("glN:", 0) == 0) {
        int n = std::stoi(name.substr(4));
        if (n < 1 || n > 6) throw Error("glN dimension out of range (1..6)");
        return validate(gl_type_matrix(n, 0), n, name);
    }
    if (name.rfind("glMN:", 0) == 0) {
        auto rest = name.substr(5);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw Error("glMN needs two parameters m,n");
        int m = std::stoi(rest.substr(0, comma));
        int n = std::stoi(rest.substr(comma + 1));
        if (m < 0 || n < 0 || m + n < 1 || m + n > 6) throw Error("glMN parameters out of range");
        return validate(gl_type_matrix(m, n), m + n, name);
    }
    throw Error("unknown built-in symmetry: " + name);
}

}  // namespace qfrob
