#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qfrob/matrix.hpp"
#include "qfrob/partition.hpp"
#include "qfrob/rat_func.hpp"

namespace qfrob {

// Permutation of {0..n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a o b)(i) = a[b[i]]
int perm_length(const Perm& w);                   // inversion count
// Left factorization w = s_{i1} ... s_{ik} (1-based generator indices,
// reduced); applying the factors left to right rebuilds w.
std::vector<int> reduced_word(const Perm& w);
// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_perms(int n);

// Element of the Hecke algebra H_n(q) in the T_w basis.
class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {}

    static HeckeElement unit(int n);
    static HeckeElement generator(int n, int i);  // tau_i, 1 <= i <= n-1
    static HeckeElement basis(int n, const Perm& w, const RatFunc& c = RatFunc(1));

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Perm, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Perm& w) const;

    void add_term(const Perm& w, const RatFunc& c);

    HeckeElement operator-() const;
    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement scaled(const RatFunc& c) const;

    // tau_i * x and x * tau_i.
    HeckeElement gen_left(int i) const;
    HeckeElement gen_right(int i) const;

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    // Same element viewed in H_m(q), m >= n (new strands act as fixed points).
    HeckeElement embedded(int m) const;

    std::string to_string() const;

private:
    int n_;
    std::map<Perm, RatFunc> terms_;
};

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

// j_1 = e, j_k = tau_{k-1} j_{k-1} tau_{k-1}; 1 <= k <= n.
HeckeElement jucys_murphy(int n, int k);

// q-antisymmetrizer a_k and q-symmetrizer h_k in H_k(q):
//   a_1 = e,  a_k = (1/k_q) a_{k-1} (q^{k-1} e - (k-1)_q tau_{k-1}) a_{k-1}
//   h_1 = e,  h_k = (1/k_q) h_{k-1} (q^{1-k} e + (k-1)_q tau_{k-1}) h_{k-1}
HeckeElement antisymmetrizer(int k);
HeckeElement symmetrizer(int k);

// Primitive idempotent e^lambda_TT by Jucys-Murphy interpolation along the
// subtableau chain of T. Satisfies j_k e = e j_k = q^{2 c(k)} e.
HeckeElement primitive_idempotent(const StdTableau& t);

// Canonical Coxeter element with gaps of cyclic type nu: each part nu_j >= 2
// contributes the contiguous descending string tau_{b+nu_j-1} ... tau_{b+1},
// b = nu_1 + ... + nu_{j-1}.
HeckeElement coxeter_with_gaps(const Partition& nu);
std::vector<int> coxeter_word(const Partition& nu);

// Irreducible character: trace of left multiplication by z on the left ideal
// H_n(q) e^lambda. The ideal basis is cached per shape inside the instance.
class LeftIdealTrace {
public:
    explicit LeftIdealTrace(const Partition& shape);

    int dimension() const { return dim_; }
    RatFunc value(const HeckeElement& z) const;
    // Trace of tau_{w1} ... tau_{wk}; cheaper than value() for long products.
    RatFunc value_word(const std::vector<int>& word) const;

private:
    RatFunc trace_of_(const std::vector<HeckeElement>& images) const;

    Partition shape_;
    int n_;
    int dim_;
    // Basis elements of the ideal and the coordinate permutations at which
    // the coefficient matrix is invertible.
    std::vector<HeckeElement> basis_;
    std::vector<Perm> coord_perms_;
    ScalarMatrix coord_inverse_;  // inverse of the basis coordinate matrix
};

RatFunc character(const Partition& shape, const HeckeElement& z);

// Entry (nu, lambda) = chi^lambda(z_nu); rows and columns in reverse
// lexicographic partition order. n must not exceed the bound.
ScalarMatrix character_table(int n, int bound = 5);

}  // namespace qfrob
