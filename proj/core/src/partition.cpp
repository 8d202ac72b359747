#include "qfrob/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qfrob {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidPartition("parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

StdTableau::StdTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw InvalidTableau("row count does not match shape");
    pos_.assign(static_cast<std::size_t>(shape_.n()), {-1, -1});
    for (int r = 0; r < shape_.rows(); ++r) {
        if (static_cast<int>(rows_[static_cast<std::size_t>(r)].size()) != shape_.part(r))
            throw InvalidTableau("row length does not match shape");
        for (int c = 0; c < shape_.part(r); ++c) {
            int v = rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 1 || v > shape_.n() || pos_[static_cast<std::size_t>(v - 1)].first >= 0)
                throw InvalidTableau("filling is not a permutation of 1..n");
            pos_[static_cast<std::size_t>(v - 1)] = {r, c};
            if (c > 0 && rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] >= v)
                throw InvalidTableau("rows must strictly increase");
            if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                throw InvalidTableau("columns must strictly increase");
        }
    }
}

StdTableau StdTableau::row_reading(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 0; r < shape.rows(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < shape.part(r); ++c) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StdTableau(shape, std::move(rows));
}

std::pair<int, int> StdTableau::position_of(int k) const {
    if (k < 1 || k > n()) throw IndexError("tableau entry out of range");
    return pos_[static_cast<std::size_t>(k - 1)];
}

int StdTableau::content(int k) const {
    auto [r, c] = position_of(k);
    return c - r;
}

std::vector<int> StdTableau::contents() const {
    std::vector<int> out;
    for (int k = 1; k <= n(); ++k) out.push_back(content(k));
    return out;
}

std::string StdTableau::to_string() const {
    std::string s;
    for (int r = 0; r < shape_.rows(); ++r) {
        if (r) s += "/";
        for (int c = 0; c < shape_.part(r); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
    }
    return s;
}

namespace {

// Grow the diagram box by box; every growth path is a standard tableau.
void gen_tableaux(const Partition& shape, int next, std::vector<int>& row_len,
                  std::vector<std::vector<int>>& rows, std::vector<StdTableau>& out) {
    if (next > shape.n()) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
        bool addable = row_len[static_cast<std::size_t>(r)] < shape.part(r) &&
                       (r == 0 || row_len[static_cast<std::size_t>(r)] <
                                      row_len[static_cast<std::size_t>(r - 1)]);
        if (!addable) continue;
        rows[static_cast<std::size_t>(r)].push_back(next);
        ++row_len[static_cast<std::size_t>(r)];
        gen_tableaux(shape, next + 1, row_len, rows, out);
        --row_len[static_cast<std::size_t>(r)];
        rows[static_cast<std::size_t>(r)].pop_back();
    }
}

}  // namespace

std::vector<StdTableau> standard_tableaux(const Partition& shape) {
    std::vector<StdTableau> out;
    std::vector<int> row_len(static_cast<std::size_t>(shape.rows()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    gen_tableaux(shape, 1, row_len, rows, out);
    return out;
}

long tableau_count(const Partition& shape) {
    // Hook length formula.
    std::vector<int> conj;
    for (int c = 0; c < shape.part(0); ++c) {
        int h = 0;
        while (h < shape.rows() && shape.part(h) > c) ++h;
        conj.push_back(h);
    }
    long num_fact = 1;
    for (int k = 2; k <= shape.n(); ++k) num_fact *= k;
    long hooks = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.part(r); ++c)
            hooks *= (shape.part(r) - c) + (conj[static_cast<std::size_t>(c)] - r) - 1;
    return num_fact / hooks;
}

std::vector<int> addable_corner_contents(const Partition& shape) {
    std::vector<int> out;
    out.push_back(shape.part(0));  // extend the first row
    for (int r = 1; r <= shape.rows(); ++r) {
        int len = shape.part(r);
        if (r < shape.rows() ? shape.part(r) < shape.part(r - 1) : true) out.push_back(len - r);
    }
    return out;
}

}  // namespace qfrob
