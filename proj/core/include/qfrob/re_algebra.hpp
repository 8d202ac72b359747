#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/symmetry.hpp"

namespace qfrob {

// Word in the N^2 generators l_i^j, one byte per letter; letter = i*N + j
// (0-based). Words compare by degree first, then lexicographically.
using Word = std::string;

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Noncommutative polynomial in the generators of the quadratic algebra.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(int n) : n_(n) {}

    static NCPoly generator(int n, int i, int j);           // l_i^j, 0-based
    static NCPoly constant(int n, const RatFunc& c);        // c * empty word
    static NCPoly term(int n, const Word& w, const RatFunc& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, RatFunc, DegLexLess>& terms() const { return terms_; }
    RatFunc coeff(const Word& w) const;

    // Degree of a homogeneous polynomial; throws DegreeMismatch when terms
    // of different degrees are present (zero has degree -1).
    int homogeneous_degree() const;

    void add_term(const Word& w, const RatFunc& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const RatFunc& c) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    int n_ = 0;  // dimension N of V (alphabet size N^2)
    std::map<Word, RatFunc, DegLexLess> terms_;
};

// Square matrix with NCPoly entries and tensor-factor bookkeeping.
class LMatrix {
public:
    LMatrix() = default;
    LMatrix(int dim, int n) : dim_(dim), n_(n), a_(std::size_t(dim) * dim, NCPoly(n)) {}

    static LMatrix generating(int n);  // entry (i, j) = l_i^j
    static LMatrix identity(int dim, int n);

    int dim() const { return dim_; }
    int n() const { return n_; }
    NCPoly& at(int r, int c) { return a_[std::size_t(r) * dim_ + c]; }
    const NCPoly& at(int r, int c) const { return a_[std::size_t(r) * dim_ + c]; }

    friend LMatrix operator+(const LMatrix& a, const LMatrix& b);
    friend LMatrix operator-(const LMatrix& a, const LMatrix& b);
    friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
    LMatrix scaled(const RatFunc& c) const;
    LMatrix scaled_poly(const NCPoly& p) const;  // left multiplication by a scalar polynomial

    friend LMatrix mul_scalar_left(const ScalarMatrix& s, const LMatrix& m);
    friend LMatrix mul_scalar_right(const LMatrix& m, const ScalarMatrix& s);

    friend bool operator==(const LMatrix& a, const LMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

private:
    int dim_ = 0;
    int n_ = 0;
    std::vector<NCPoly> a_;
};

// Row-reduced span of one graded component of the two-sided ideal generated
// by the quadratic relations; basis rows are kept sparse over the word basis
// in degree-lexicographic column order.
class IdealBasis {
public:
    struct Row {
        long pivot;
        std::vector<std::pair<long, RatFunc>> terms;  // sorted by column, pivot coeff 1
    };

    int degree() const { return degree_; }
    long word_dim() const { return word_dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    long quotient_dim() const { return word_dim_ - rank(); }
    const std::vector<Row>& rows() const { return rows_; }

    // Basis vectors as polynomials, for inspection and tests.
    std::vector<NCPoly> basis_polynomials(int n) const;

private:
    friend class ReAlgebra;
    int degree_ = 0;
    long word_dim_ = 0;
    std::vector<Row> rows_;          // sorted by pivot column
    std::map<long, int> pivot_of_;   // pivot column -> row index
};

// Family of representation matrices, one per generator l_i^j, acting on
// V^(x k); includes the tensor-slot convention that reproduced both the
// defining rank-one action and the braid commutant on two factors.
struct RepFamily {
    int k = 0;
    std::vector<ScalarMatrix> gen;  // indexed i*N + j
    std::string convention;         // "column" or "row"
};

// The reflection-equation algebra of a symmetry, with cached graded ideal
// components, matrix embeddings, and representations. Caches are guarded for
// concurrent use.
class ReAlgebra {
public:
    explicit ReAlgebra(const HeckeSymmetry& s);

    const HeckeSymmetry& symmetry() const { return sym_; }
    const SkewInverseData& skew() const { return skew_; }
    int n() const { return sym_.n(); }

    // The nonzero entries of R L1 R L1 - L1 R L1 R, deduplicated.
    const std::vector<NCPoly>& relations() const;

    const IdealBasis& ideal_component(int degree) const;

    // Canonical representative modulo the ideal component of the same degree.
    NCPoly normal_form(const NCPoly& p) const;
    bool reduces_to_zero(const NCPoly& p) const { return normal_form(p).is_zero(); }

    // L_<1..k> products and the conjugated copies L_<k>.
    const LMatrix& l_product(int k) const;

    // Characteristic map: Tr_{R(1..k)}( rho(z) L_<1..k> ).
    NCPoly ch(const HeckeElement& z, int k) const;

    NCPoly power_sum(int k) const;              // Tr_R L^k
    NCPoly power_sum(const Partition& nu) const;  // product over parts
    NCPoly elementary(int k) const;              // ch(a_k, k)
    NCPoly schur(const Partition& lambda) const;
    NCPoly schur(const StdTableau& t) const;

    bool is_central(const NCPoly& p) const;

    const RepFamily& rep_generators(int k) const;
    ScalarMatrix apply_rep(const RepFamily& reps, const NCPoly& p) const;
    bool schur_weyl_check(int k) const;

    // Sum (-q)^j e_j(L) L^{m-j}, j = 0..m, reduced entrywise; true when every
    // entry vanishes. The symmetry must have bi-rank (m|0).
    bool cayley_hamilton_even(int m) const;

    // Full trace of (scalar matrix) * (NCPoly matrix):
    // sum_{a,c} m[a][c] p[c][a].
    NCPoly traced_pairing(const ScalarMatrix& m, const LMatrix& p) const;

    // Kronecker power C (x) ... (x) C on k factors.
    ScalarMatrix c_power(int k) const { return c_twist_(k); }

private:
    const IdealBasis& component_(int degree) const;
    ScalarMatrix c_twist_(int k) const;  // kron of k copies of C
    std::vector<ScalarMatrix> build_rep_family_(int k, bool column_convention) const;
    bool family_matches_rank_one_(const std::vector<ScalarMatrix>& gens) const;
    bool family_commutes_with_braid_(const std::vector<ScalarMatrix>& gens, int k) const;
    std::string resolve_slot_convention_() const;

    HeckeSymmetry sym_;
    SkewInverseData skew_;

    mutable std::mutex mutex_;
    mutable std::optional<std::vector<NCPoly>> relations_;
    mutable std::map<int, IdealBasis> components_;
    mutable std::map<int, LMatrix> l_products_;
    mutable std::map<int, ScalarMatrix> c_twists_;
    mutable std::map<int, RepFamily> reps_;
    mutable std::optional<std::string> slot_convention_;
};

}  // namespace qfrob
