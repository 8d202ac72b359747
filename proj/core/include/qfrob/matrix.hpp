#pragma once

#include <set>
#include <vector>

#include "qfrob/rat_func.hpp"

namespace qfrob {

// Dense matrix over RatFunc with optional tensor-factor bookkeeping.
// Composite indices are row-major mixed radix: the leftmost tensor factor is
// the most significant digit. This convention is global.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static ScalarMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RatFunc& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    bool has_shape() const { return !shape_.empty(); }
    const std::vector<int>& shape() const { return shape_; }
    void set_shape(std::vector<int> s);
    std::vector<int> effective_shape() const;  // [rows] when no shape is set

    ScalarMatrix operator-() const;
    ScalarMatrix transposed() const;
    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    ScalarMatrix scaled(const RatFunc& c) const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    bool is_zero() const;
    bool is_identity() const;
    RatFunc trace() const;

    // First entry (row, col) where the two matrices differ; both must have
    // equal dimensions and at least one differing entry.
    static std::pair<int, int> first_difference(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<RatFunc> a_;
    std::vector<int> shape_;
};

// Kronecker product; the result's shape is the concatenation of the operands'
// effective shapes.
ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

// I^(i-1) (x) M (x) I^(m-i-1) for M acting on two adjacent factors of
// dimension N each (M is N^2 x N^2); 1 <= i <= m-1.
ScalarMatrix embed_factor(const ScalarMatrix& m, int i, int factors);

// Same, for M acting on a single factor (M is N x N); 1 <= i <= m.
ScalarMatrix embed_single(const ScalarMatrix& m, int i, int factors);

// Trace over the tensor factors in `which` (1-based), keeping the others in
// order. The matrix must be square with a tensor shape.
ScalarMatrix partial_trace(const ScalarMatrix& m, const std::set<int>& which);

struct RowReduceResult {
    ScalarMatrix rref;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// FractionFree: cross-multiplication elimination on denominator-cleared rows
// with per-row content stripping; suited to matrices whose entries are small
// polynomials. Field: pivot rows normalized to 1, classic Gauss-Jordan;
// suited to entries that already carry denominators.
enum class ReduceStrategy { FractionFree, Field };

// Reduced row echelon form over the exact field. Deterministic: columns are
// processed left to right and the first usable row becomes the pivot.
RowReduceResult row_reduce(const ScalarMatrix& a,
                           ReduceStrategy strategy = ReduceStrategy::FractionFree);

struct SolveResult {
    ScalarMatrix x;
    bool unique = false;
};

// One exact solution of A x = b (b may have several columns); free variables
// are set to zero. Throws InconsistentSystem when no solution exists.
SolveResult solve(const ScalarMatrix& a, const ScalarMatrix& b,
                  ReduceStrategy strategy = ReduceStrategy::FractionFree);

}  // namespace qfrob
