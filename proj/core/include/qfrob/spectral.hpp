#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfrob/partition.hpp"
#include "qfrob/rat_func.hpp"

namespace qfrob {

// Eigenvalue family: m even eigenvalues mu_1..mu_m and n odd eigenvalues
// nu_1..nu_n, treated as formal central indeterminates.
struct SpectralFamily {
    int m = 0;
    int n = 0;
    SpectralFamily(int m_, int n_) : m(m_), n(n_) {
        if (m < 0 || n < 0 || m + n < 1) throw FamilyError("family needs m, n >= 0 and m+n >= 1");
    }
    int nvars() const { return m + n; }
    std::string var_name(int i) const;  // mu, mu_1, nu, ...
};

struct DegLexVecLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

// Commutative polynomial over RatFunc in a fixed number of variables.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const RatFunc& c);
    static MultiPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, RatFunc, DegLexVecLess>& terms() const { return terms_; }

    void add_term(const std::vector<int>& e, const RatFunc& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const RatFunc& c) const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Exact division; throws NonPolynomialResult when the quotient is not a
    // polynomial.
    MultiPoly divided_exact(const MultiPoly& d) const;

    // Exchange the values of two variables.
    MultiPoly swapped(int i, int j) const;
    // Substitute variable `from` by coeff * variable `to`.
    MultiPoly substituted(int from, const RatFunc& coeff, int to) const;

    std::string to_string(const SpectralFamily& f) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, RatFunc, DegLexVecLess> terms_;
};

enum class SymKind { Elementary, Complete };

// e_r or h_r in the scaled variables {scale * x_i : i in vars}; e_r = 0 for
// r > |vars|, e_0 = h_0 = 1.
MultiPoly sym_poly(SymKind kind, int r, const std::vector<int>& vars, const RatFunc& scale,
                   int nvars);

// For an even family: the spectral values of the elementary symmetric
// functions, k = 1..m, i.e. e_k evaluated on q^-1 mu.
std::vector<MultiPoly> eigen_relations(const SpectralFamily& f);

// Spectral power sum via the weight parametrization; always a polynomial.
MultiPoly power_sum_spectral(const SpectralFamily& f, int k);
MultiPoly power_sum_spectral(const SpectralFamily& f, const Partition& nu);

// One-row values via the super h/e convolution; general shapes through the
// Jacobi-Trudi determinant over the one-row values.
MultiPoly schur_spectral(const SpectralFamily& f, const Partition& lambda);

// k_q e_k - q^{k-1} e_{k-1} p_1 + ... + (-1)^k p_k == 0.
bool newton_check(const SpectralFamily& f, int k);

// One-row Hall-Littlewood q-function q_k(x; t) in `mvars` variables.
MultiPoly hall_littlewood_row(int k, int mvars, const RatFunc& t);
// (q - q^-1) p_k == q_k(mu; q^-2) for an even family.
bool hl_compare(const SpectralFamily& f, int k);

// Symmetric under permutations of q^-1 mu and of q nu separately, and
// independent of s after substituting mu_1 = q s, nu_1 = q^-1 s.
bool supersymmetry_check(const MultiPoly& p, const SpectralFamily& f);

// q -> 1 specialization of every coefficient.
MultiPoly classical_limit(const MultiPoly& p);

}  // namespace qfrob
