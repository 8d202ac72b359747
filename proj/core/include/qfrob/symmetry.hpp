#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "qfrob/hecke.hpp"
#include "qfrob/matrix.hpp"

namespace qfrob {

// A certified skew-invertible Hecke symmetry: an N^2 x N^2 matrix R over
// RatFunc satisfying the braid relation and R^2 = I + (q - q^-1) R.
class HeckeSymmetry {
public:
    int n() const { return n_; }
    const ScalarMatrix& r() const { return r_; }
    // R^-1 = R - (q - q^-1) I, from the Hecke condition.
    const ScalarMatrix& r_inverse() const { return r_inv_; }
    const std::string& name() const { return name_; }

    friend HeckeSymmetry validate(const ScalarMatrix& r, int n, const std::string& name);

private:
    HeckeSymmetry() = default;
    int n_ = 0;
    ScalarMatrix r_;
    ScalarMatrix r_inv_;
    std::string name_;
};

// Checks both defining relations exactly; throws BraidViolation or
// HeckeViolation naming the first failing entry.
HeckeSymmetry validate(const ScalarMatrix& r, int n, const std::string& name = "custom");

struct SkewInverseData {
    ScalarMatrix psi;  // N^2 x N^2, shape [N, N]
    ScalarMatrix b;    // N x N partial trace of psi over the first factor
    ScalarMatrix c;    // N x N partial trace of psi over the second factor
};

// Solves Tr_2 R_12 Psi_23 = P_13 as a linear system; throws NotSkewInvertible
// when the system is singular.
SkewInverseData skew_inverse(const HeckeSymmetry& s);

// Multiplies by C on each factor in `which`, then takes the partial trace
// over those factors.
ScalarMatrix r_trace(const SkewInverseData& data, const ScalarMatrix& m,
                     const std::set<int>& which);

// R-matrix representation of H_n(q) on V^(x n): tau_i -> R_i, extended
// multiplicatively along reduced words.
ScalarMatrix rho(const HeckeSymmetry& s, const HeckeElement& z, int n);

struct BiRank {
    int r = 0;
    int s = 0;
    std::vector<long> hp_coefficients;  // dim of the k-th antisymmetric component
    std::vector<Rational> series_num;   // fitted numerator, constant term first
    std::vector<Rational> series_den;   // fitted denominator, constant term 1
    std::string series_string() const;  // e.g. (1+t)^2/(1-t)
};

// Ranks of the antisymmetrizer images through kmax, then the minimal rational
// function fitting the series (denominator degree tried in increasing order,
// degrees at most kmax/2). Throws Inconclusive when nothing fits. With
// fast_rank, ranks are taken as the maximum over two rational specializations
// of q (a rank can only drop under specialization).
BiRank birank(const HeckeSymmetry& s, int kmax, bool fast_rank = false);

// Built-in symmetries: "r2", "r11", "glN:<N>", "glMN:<m>,<n>".
HeckeSymmetry builtin(const std::string& name);

}  // namespace qfrob
