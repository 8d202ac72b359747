#include "qfrob/matrix.hpp"

#include <algorithm>

#include "qfrob/errors.hpp"

namespace qfrob {

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

void ScalarMatrix::set_shape(std::vector<int> s) {
    long prod = 1;
    for (int d : s) prod *= d;
    if (prod != rows_) throw ShapeError("tensor shape does not match row count");
    shape_ = std::move(s);
}

std::vector<int> ScalarMatrix::effective_shape() const {
    if (!shape_.empty()) return shape_;
    return {rows_};
}

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    if (rows_ == cols_) r.shape_ = shape_;
    return r;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix addition size mismatch");
    ScalarMatrix r(a);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("matrix subtraction size mismatch");
    ScalarMatrix r(a);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product size mismatch");
    ScalarMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const RatFunc& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    if (a.rows_ == b.cols_ && a.has_shape()) r.shape_ = a.shape_;
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const RatFunc& c) const {
    ScalarMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

bool ScalarMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

bool ScalarMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

RatFunc ScalarMatrix::trace() const {
    if (rows_ != cols_) throw ShapeError("trace of a non-square matrix");
    RatFunc t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::pair<int, int> ScalarMatrix::first_difference(const ScalarMatrix& a, const ScalarMatrix& b) {
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            if (a.at(i, j) != b.at(i, j)) return {i, j};
    throw Error("matrices are equal");
}

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const RatFunc& x = a.at(ia, ja);
            if (x.is_zero()) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb) {
                    const RatFunc& y = b.at(ib, jb);
                    if (y.is_zero()) continue;
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) = x * y;
                }
        }
    if (r.rows() == r.cols()) {
        auto sa = a.effective_shape(), sb = b.effective_shape();
        sa.insert(sa.end(), sb.begin(), sb.end());
        r.set_shape(sa);
    }
    return r;
}

ScalarMatrix embed_factor(const ScalarMatrix& m, int i, int factors) {
    if (m.rows() != m.cols()) throw ShapeError("embed_factor needs a square matrix");
    int n2 = m.rows();
    int n = 1;
    while (n * n < n2) ++n;
    if (n * n != n2) throw ShapeError("embed_factor needs an N^2 x N^2 matrix");
    if (i < 1 || i > factors - 1) throw IndexError("embed_factor position out of range");
    ScalarMatrix two(m);
    two.set_shape({n, n});
    ScalarMatrix r = two;
    if (i > 1) {
        ScalarMatrix left = ScalarMatrix::identity(1);
        for (int k = 1; k < i; ++k) left = kron(left, ScalarMatrix::identity(n));
        left.set_shape(std::vector<int>(i - 1, n));
        r = kron(left, r);
    }
    for (int k = i + 1; k < factors; ++k) r = kron(r, ScalarMatrix::identity(n));
    r.set_shape(std::vector<int>(factors, n));
    return r;
}

ScalarMatrix embed_single(const ScalarMatrix& m, int i, int factors) {
    if (m.rows() != m.cols()) throw ShapeError("embed_single needs a square matrix");
    if (i < 1 || i > factors) throw IndexError("embed_single position out of range");
    int n = m.rows();
    ScalarMatrix r = ScalarMatrix::identity(1);
    for (int k = 1; k <= factors; ++k) r = kron(r, k == i ? m : ScalarMatrix::identity(n));
    r.set_shape(std::vector<int>(factors, n));
    return r;
}

ScalarMatrix partial_trace(const ScalarMatrix& m, const std::set<int>& which) {
    if (m.rows() != m.cols()) throw ShapeError("partial trace of a non-square matrix");
    if (!m.has_shape()) throw ShapeError("partial trace needs a tensor shape");
    if (which.empty()) throw IndexError("partial trace over an empty factor set");
    const auto& shape = m.shape();
    const int f = static_cast<int>(shape.size());
    for (int w : which)
        if (w < 1 || w > f) throw IndexError("partial trace factor index out of range");

    std::vector<int> kept, traced;
    for (int k = 0; k < f; ++k) (which.count(k + 1) ? traced : kept).push_back(k);

    long kept_dim = 1, traced_dim = 1;
    for (int k : kept) kept_dim *= shape[k];
    for (int k : traced) traced_dim *= shape[k];

    // Strides of each factor in the composite row-major index.
    std::vector<long> stride(f, 1);
    for (int k = f - 2; k >= 0; --k) stride[k] = stride[k + 1] * shape[k + 1];

    auto compose = [&](const std::vector<int>& factors_idx, const std::vector<int>& digits) {
        long v = 0;
        for (std::size_t t = 0; t < factors_idx.size(); ++t) v += stride[factors_idx[t]] * digits[t];
        return v;
    };
    auto digits_of = [&](long value, const std::vector<int>& factors_idx) {
        std::vector<int> d(factors_idx.size());
        for (std::size_t t = 0; t < factors_idx.size(); ++t) {
            long dim = shape[factors_idx[t]];
            long s = 1;
            for (std::size_t u = t + 1; u < factors_idx.size(); ++u) s *= shape[factors_idx[u]];
            d[t] = static_cast<int>((value / s) % dim);
        }
        return d;
    };

    ScalarMatrix r(static_cast<int>(kept_dim), static_cast<int>(kept_dim));
    for (long kr = 0; kr < kept_dim; ++kr) {
        auto krd = digits_of(kr, kept);
        for (long kc = 0; kc < kept_dim; ++kc) {
            auto kcd = digits_of(kc, kept);
            RatFunc sum;
            for (long t = 0; t < traced_dim; ++t) {
                auto td = digits_of(t, traced);
                long row = compose(kept, krd) + compose(traced, td);
                long col = compose(kept, kcd) + compose(traced, td);
                sum += m.at(static_cast<int>(row), static_cast<int>(col));
            }
            r.at(static_cast<int>(kr), static_cast<int>(kc)) = sum;
        }
    }
    if (!kept.empty()) {
        std::vector<int> ks;
        for (int k : kept) ks.push_back(shape[k]);
        r.set_shape(ks);
    }
    return r;
}

namespace {

// Divides a row by the gcd of its rational contents and the common power of
// q, keeping entries polynomial and small.
void strip_row(std::vector<RatFunc>& row) {
    bool any = false;
    Integer num_gcd(0), den_lcm(1);
    int min_low = 0;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        Rational c = x.num().content();
        if (!any) {
            num_gcd = c.get_num();
            den_lcm = c.get_den();
            min_low = x.num().low_exp();
            any = true;
        } else {
            num_gcd = gcd(num_gcd, c.get_num());
            den_lcm = lcm(den_lcm, c.get_den());
            min_low = std::min(min_low, x.num().low_exp());
        }
    }
    if (!any) return;
    Rational content = make_rational(num_gcd, den_lcm);
    if (content == 1 && min_low == 0) return;
    RatFunc factor(LaurentPoly::monomial(Rational(1) / content, -min_low));
    for (auto& x : row)
        if (!x.is_zero()) x *= factor;
}

}  // namespace

RowReduceResult row_reduce(const ScalarMatrix& a, ReduceStrategy strategy) {
    const int rows = a.rows(), cols = a.cols();
    const bool ff = (strategy == ReduceStrategy::FractionFree);
    std::vector<std::vector<RatFunc>> w(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        auto& row = w[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(cols));
        if (ff) {
            // Clear denominators so elimination stays polynomial.
            LaurentPoly common(Rational(1));
            for (int j = 0; j < cols; ++j)
                if (!a.at(i, j).is_zero()) {
                    const LaurentPoly& d = a.at(i, j).den();
                    common = common.divided_exact(poly_gcd(common, d)) * d;
                }
            RatFunc factor{common};
            for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = a.at(i, j) * factor;
            strip_row(row);
        } else {
            for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = a.at(i, j);
        }
    }

    std::vector<int> pivot_cols;
    int pivot_row = 0;
    if (ff) {
        // Forward single-step division elimination: every update is
        // (p * x - e * prow) / prev with the previous pivot dividing exactly,
        // so entries stay minors of the cleared matrix and degrees grow
        // linearly. No row rescaling in between; stripping would break the
        // exact divisions.
        LaurentPoly prev(Rational(1));
        for (int col = 0; col < cols && pivot_row < rows; ++col) {
            int sel = -1;
            for (int i = pivot_row; i < rows; ++i)
                if (!w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(w[static_cast<std::size_t>(sel)], w[static_cast<std::size_t>(pivot_row)]);
            const auto& prow = w[static_cast<std::size_t>(pivot_row)];
            const LaurentPoly p = prow[static_cast<std::size_t>(col)].num();
            const bool trivial_prev = prev.is_one();
            for (int i = pivot_row + 1; i < rows; ++i) {
                auto& row = w[static_cast<std::size_t>(i)];
                const LaurentPoly e = row[static_cast<std::size_t>(col)].num();
                for (int j = col; j < cols; ++j) {
                    LaurentPoly v = row[static_cast<std::size_t>(j)].num() * p;
                    if (!e.is_zero() && !prow[static_cast<std::size_t>(j)].is_zero())
                        v -= e * prow[static_cast<std::size_t>(j)].num();
                    if (!trivial_prev && !v.is_zero()) v = v.divided_exact(prev);
                    row[static_cast<std::size_t>(j)] = RatFunc(std::move(v));
                }
                row[static_cast<std::size_t>(col)] = RatFunc();
            }
            prev = p;
            pivot_cols.push_back(col);
            ++pivot_row;
        }
        // Back-elimination over the field on the (small) echelon entries.
        for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
            auto& prow = w[static_cast<std::size_t>(k)];
            const int col = pivot_cols[static_cast<std::size_t>(k)];
            RatFunc inv = prow[static_cast<std::size_t>(col)].inverse();
            for (int j = col; j < cols; ++j)
                if (!prow[static_cast<std::size_t>(j)].is_zero())
                    prow[static_cast<std::size_t>(j)] *= inv;
            for (int i = 0; i < k; ++i) {
                auto& row = w[static_cast<std::size_t>(i)];
                const RatFunc e = row[static_cast<std::size_t>(col)];
                if (e.is_zero()) continue;
                for (int j = col; j < cols; ++j) {
                    const RatFunc& pj = prow[static_cast<std::size_t>(j)];
                    if (!pj.is_zero()) row[static_cast<std::size_t>(j)] -= e * pj;
                }
            }
        }
    } else {
        for (int col = 0; col < cols && pivot_row < rows; ++col) {
            int sel = -1;
            for (int i = pivot_row; i < rows; ++i)
                if (!w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(w[static_cast<std::size_t>(sel)], w[static_cast<std::size_t>(pivot_row)]);
            auto& prow = w[static_cast<std::size_t>(pivot_row)];
            RatFunc inv = prow[static_cast<std::size_t>(col)].inverse();
            for (int j = col; j < cols; ++j)
                if (!prow[static_cast<std::size_t>(j)].is_zero())
                    prow[static_cast<std::size_t>(j)] *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == pivot_row) continue;
                auto& row = w[static_cast<std::size_t>(i)];
                const RatFunc e = row[static_cast<std::size_t>(col)];
                if (e.is_zero()) continue;
                for (int j = col; j < cols; ++j) {
                    const RatFunc& pj = prow[static_cast<std::size_t>(j)];
                    RatFunc& rj = row[static_cast<std::size_t>(j)];
                    if (j == col) {
                        rj = RatFunc();
                        continue;
                    }
                    if (!pj.is_zero()) rj -= e * pj;
                }
            }
            pivot_cols.push_back(col);
            ++pivot_row;
        }
    }

    ScalarMatrix rref(rows, cols);
    for (int i = 0; i < static_cast<int>(pivot_cols.size()); ++i) {
        auto& row = w[static_cast<std::size_t>(i)];
        RatFunc inv =
            row[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(i)])].inverse();
        if (inv.is_one()) {
            for (int j = 0; j < cols; ++j)
                if (!row[static_cast<std::size_t>(j)].is_zero())
                    rref.at(i, j) = row[static_cast<std::size_t>(j)];
        } else {
            for (int j = 0; j < cols; ++j)
                if (!row[static_cast<std::size_t>(j)].is_zero())
                    rref.at(i, j) = row[static_cast<std::size_t>(j)] * inv;
        }
    }
    return {std::move(rref), static_cast<int>(pivot_cols.size()), std::move(pivot_cols)};
}

SolveResult solve(const ScalarMatrix& a, const ScalarMatrix& b, ReduceStrategy strategy) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
    ScalarMatrix aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    RowReduceResult rr = row_reduce(aug, strategy);
    for (int pc : rr.pivot_cols)
        if (pc >= a.cols()) throw InconsistentSystem("solve: inconsistent system");
    ScalarMatrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
        for (int j = 0; j < b.cols(); ++j)
            x.at(rr.pivot_cols[k], j) = rr.rref.at(static_cast<int>(k), a.cols() + j);
    return {std::move(x), rr.rank == a.cols()};
}

}  // namespace qfrob
