#include "qfrob/spectral.hpp"

#include <algorithm>

namespace qfrob {

std::string SpectralFamily::var_name(int i) const {
    if (i < m) return m == 1 ? "mu" : "mu_" + std::to_string(i + 1);
    int j = i - m;
    return n == 1 ? "nu" : "nu_" + std::to_string(j + 1);
}

MultiPoly MultiPoly::constant(int nvars, const RatFunc& c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw IndexError("variable index out of range");
    MultiPoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = power;
    p.add_term(e, RatFunc(1));
    return p;
}

void MultiPoly::add_term(const std::vector<int>& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_ ? a.nvars_ : b.nvars_);
    std::vector<int> e;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const RatFunc& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly acc = MultiPoly::constant(nvars_, RatFunc(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::divided_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    MultiPoly rem(*this), quot(nvars_);
    const auto& dl = *d.terms_.rbegin();  // leading term in deglex
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        std::vector<int> e = rl.first;
        bool divisible = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= dl.first[i];
            if (e[i] < 0) divisible = false;
        }
        if (!divisible)
            throw NonPolynomialResult("quotient is not a polynomial at term " +
                                      std::to_string(rem.terms_.size()));
        RatFunc c = rl.second / dl.second;
        MultiPoly t(nvars_);
        t.add_term(e, c);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::substituted(int from, const RatFunc& coeff, int to) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        int p = f[static_cast<std::size_t>(from)];
        f[static_cast<std::size_t>(from)] = 0;
        f[static_cast<std::size_t>(to)] += p;
        r.add_term(f, c * coeff.pow(p));
    }
    return r;
}

std::string MultiPoly::to_string(const SpectralFamily& f) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool needs_parens =
            cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        bool negative = !needs_parens && !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        std::string mon;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += f.var_name(static_cast<int>(i));
            if (e[i] != 1) mon += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mon.empty())
            body = needs_parens ? "(" + cs + ")" : cs;
        else if (cs == "1")
            body = mon;
        else
            body = (needs_parens ? "(" + cs + ")" : cs) + "*" + mon;
        if (s.empty())
            s = (negative ? "-" : "") + body;
        else
            s += (negative ? " - " : " + ") + body;
    }
    return s;
}

MultiPoly sym_poly(SymKind kind, int r, const std::vector<int>& vars, const RatFunc& scale,
                   int nvars) {
    if (r < 0) throw IndexError("symmetric polynomial degree must be nonnegative");
    if (r == 0) return MultiPoly::constant(nvars, RatFunc(1));
    MultiPoly out(nvars);
    const int k = static_cast<int>(vars.size());
    if (k == 0) return out;  // e_r = h_r = 0 in no variables for r >= 1
    for (int v : vars)
        if (v < 0 || v >= nvars) throw IndexError("symmetric polynomial variable out of range");
    if (kind == SymKind::Elementary) {
        if (r > k) return out;  // zero
        std::vector<int> idx(static_cast<std::size_t>(r));
        // iterate r-combinations of vars
        for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::vector<int> e(static_cast<std::size_t>(nvars), 0);
            for (int i : idx) ++e[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])];
            out.add_term(e, scale.pow(r));
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - r + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < r; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    } else {
        // multisets of size r: weakly increasing index sequences
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        for (;;) {
            std::vector<int> e(static_cast<std::size_t>(nvars), 0);
            for (int i : idx) ++e[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])];
            out.add_term(e, scale.pow(r));
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1) --pos;
            if (pos < 0) break;
            int v = idx[static_cast<std::size_t>(pos)] + 1;
            for (int i = pos; i < r; ++i) idx[static_cast<std::size_t>(i)] = v;
        }
    }
    return out;
}

std::vector<MultiPoly> eigen_relations(const SpectralFamily& f) {
    if (f.n != 0) throw FamilyError("eigen_relations needs an even family");
    std::vector<int> mu;
    for (int i = 0; i < f.m; ++i) mu.push_back(i);
    std::vector<MultiPoly> out;
    for (int k = 1; k <= f.m; ++k)
        out.push_back(sym_poly(SymKind::Elementary, k, mu, RatFunc::q(-1), f.nvars()));
    return out;
}

namespace {

// Linear factor  x_a - c x_b  over the family's variables.
MultiPoly linear_factor(int nvars, int a, const RatFunc& c, int b) {
    MultiPoly p = MultiPoly::variable(nvars, a);
    p -= MultiPoly::variable(nvars, b).scaled(c);
    return p;
}

}  // namespace

MultiPoly power_sum_spectral(const SpectralFamily& f, int k) {
    if (k < 1) throw IndexError("power sums start at k = 1");
    const int nv = f.nvars();
    const RatFunc one(1);

    // Common denominator: ordered pairs within and across both families.
    struct Factor {
        int a, b;      // x_a - c x_b
        RatFunc c;
        bool in_den(int i) const { return a == i; }
    };
    std::vector<Factor> den_factors;
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            if (a != b) den_factors.push_back({a, b, one});

    auto weight_num = [&](int i) {
        // numerator of d_i (or d~_j) including the q^{+-1} prefactor
        MultiPoly num = MultiPoly::constant(nv, i < f.m ? RatFunc::q(-1) : -RatFunc::q(1));
        for (int p = 0; p < f.m; ++p) {
            if (p == i) continue;
            num = num * linear_factor(nv, i, i < f.m ? RatFunc::q(-2) : RatFunc::q(-2), p);
        }
        for (int p = f.m; p < nv; ++p) {
            if (p == i) continue;
            num = num * linear_factor(nv, i, RatFunc::q(2), p);
        }
        return num;
    };

    MultiPoly total(nv);
    for (int i = 0; i < nv; ++i) {
        MultiPoly term = MultiPoly::variable(nv, i, k) * weight_num(i);
        for (const auto& fac : den_factors)
            if (!fac.in_den(i)) term = term * linear_factor(nv, fac.a, fac.c, fac.b);
        total += term;
    }
    MultiPoly den = MultiPoly::constant(nv, one);
    for (const auto& fac : den_factors) den = den * linear_factor(nv, fac.a, fac.c, fac.b);
    return total.divided_exact(den);
}

MultiPoly power_sum_spectral(const SpectralFamily& f, const Partition& nu) {
    MultiPoly out = MultiPoly::constant(f.nvars(), RatFunc(1));
    for (int part : nu.parts()) out = out * power_sum_spectral(f, part);
    return out;
}

namespace {

MultiPoly one_row_schur(const SpectralFamily& f, int k) {
    if (k < 0) return MultiPoly(f.nvars());
    if (k == 0) return MultiPoly::constant(f.nvars(), RatFunc(1));
    std::vector<int> mu, nu;
    for (int i = 0; i < f.m; ++i) mu.push_back(i);
    for (int j = 0; j < f.n; ++j) nu.push_back(f.m + j);
    MultiPoly out(f.nvars());
    for (int r = 0; r <= k; ++r) {
        MultiPoly er = nu.empty() ? (r == 0 ? MultiPoly::constant(f.nvars(), RatFunc(1))
                                            : MultiPoly(f.nvars()))
                                  : sym_poly(SymKind::Elementary, r, nu, -RatFunc::q(1), f.nvars());
        if (er.is_zero()) continue;
        MultiPoly hr = mu.empty() ? (k - r == 0 ? MultiPoly::constant(f.nvars(), RatFunc(1))
                                                : MultiPoly(f.nvars()))
                                  : sym_poly(SymKind::Complete, k - r, mu, RatFunc::q(-1), f.nvars());
        if (hr.is_zero()) continue;
        out += er * hr;
    }
    return out;
}

}  // namespace

MultiPoly schur_spectral(const SpectralFamily& f, const Partition& lambda) {
    const int rows = lambda.rows();
    if (rows == 0) return MultiPoly::constant(f.nvars(), RatFunc(1));
    if (rows == 1) return one_row_schur(f, lambda.part(0));
    // Jacobi-Trudi in the h-form over the super one-row values:
    // det[ s_(lambda_i - i + j) ], expanded over permutations.
    std::vector<int> perm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) perm[static_cast<std::size_t>(i)] = i;
    MultiPoly det(f.nvars());
    do {
        int inv = 0;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < rows; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        MultiPoly prod = MultiPoly::constant(f.nvars(), (inv % 2) ? RatFunc(-1) : RatFunc(1));
        bool zero = false;
        for (int i = 0; i < rows && !zero; ++i) {
            int col = perm[static_cast<std::size_t>(i)];
            MultiPoly cell = one_row_schur(f, lambda.part(i) - i + col);
            if (cell.is_zero()) zero = true;
            prod = prod * cell;
        }
        if (!zero) det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

bool newton_check(const SpectralFamily& f, int k) {
    if (k < 1) throw IndexError("Newton identities start at k = 1");
    MultiPoly acc = schur_spectral(f, k == 0 ? Partition{} : Partition(std::vector<int>(
                                                                 static_cast<std::size_t>(k), 1)))
                        .scaled(q_int(k));
    for (int i = 1; i <= k; ++i) {
        MultiPoly e_term =
            (k - i == 0) ? MultiPoly::constant(f.nvars(), RatFunc(1))
                         : schur_spectral(f, Partition(std::vector<int>(
                                                 static_cast<std::size_t>(k - i), 1)));
        RatFunc coeff = RatFunc::q(k - i);
        if (i % 2) coeff = -coeff;
        acc += (e_term * power_sum_spectral(f, i)).scaled(coeff);
    }
    return acc.is_zero();
}

MultiPoly hall_littlewood_row(int k, int mvars, const RatFunc& t) {
    if (k < 1) throw IndexError("row Hall-Littlewood functions start at k = 1");
    const int nv = mvars;
    MultiPoly total(nv);
    for (int i = 0; i < nv; ++i) {
        MultiPoly term = MultiPoly::variable(nv, i, k);
        for (int j = 0; j < nv; ++j)
            if (j != i) term = term * linear_factor(nv, i, t, j);
        // complement of this term's denominator in the full pair product
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                if (a != b && a != i) term = term * linear_factor(nv, a, RatFunc(1), b);
        total += term;
    }
    MultiPoly den = MultiPoly::constant(nv, RatFunc(1));
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            if (a != b) den = den * linear_factor(nv, a, RatFunc(1), b);
    MultiPoly q_k = total.divided_exact(den);
    return q_k.scaled(RatFunc(1) - t);
}

bool hl_compare(const SpectralFamily& f, int k) {
    if (f.n != 0) throw FamilyError("Hall-Littlewood comparison needs an even family");
    MultiPoly lhs = power_sum_spectral(f, k).scaled(RatFunc::q(1) - RatFunc::q(-1));
    MultiPoly rhs = hall_littlewood_row(k, f.m, RatFunc::q(-2));
    return lhs == rhs;
}

bool supersymmetry_check(const MultiPoly& p, const SpectralFamily& f) {
    if (f.m < 1 || f.n < 1) throw FamilyError("super-symmetry needs both families");
    // Symmetry in the scaled variables is symmetry in the raw ones.
    for (int i = 0; i + 1 < f.m; ++i)
        if (p.swapped(i, i + 1) != p) return false;
    for (int j = 0; j + 1 < f.n; ++j)
        if (p.swapped(f.m + j, f.m + j + 1) != p) return false;
    // Substitute mu_1 = q s, nu_1 = q^-1 s (then s occupies slot 0): the
    // result must not contain s at all.
    MultiPoly sub = p.substituted(0, RatFunc::q(1), 0).substituted(f.m, RatFunc::q(-1), 0);
    for (const auto& [e, c] : sub.terms())
        if (e[0] != 0) return false;
    return true;
}

MultiPoly classical_limit(const MultiPoly& p) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, RatFunc(c.specialize(Rational(1))));
    return r;
}

}  // namespace qfrob
