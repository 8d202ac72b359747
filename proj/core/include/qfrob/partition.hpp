#pragma once

#include <string>
#include <vector>

#include "qfrob/errors.hpp"

namespace qfrob {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const;  // e.g. (2,1)

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> all_partitions(int n);

// Standard Young tableau of a given shape; the filling places 1..n with rows
// and columns strictly increasing.
class StdTableau {
public:
    StdTableau(Partition shape, std::vector<std::vector<int>> rows);

    static StdTableau row_reading(const Partition& shape);  // 1..n filled row by row

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Row and column (0-based) of the box holding k.
    std::pair<int, int> position_of(int k) const;
    // Content column - row of the box holding k.
    int content(int k) const;
    std::vector<int> contents() const;  // c(1)..c(n)

    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> pos_;  // by entry-1
};

// All standard tableaux of the shape, in a fixed deterministic order.
std::vector<StdTableau> standard_tableaux(const Partition& shape);

// Number of standard tableaux (hook length formula).
long tableau_count(const Partition& shape);

// Contents of the addable corner cells of the shape, in top-down order.
std::vector<int> addable_corner_contents(const Partition& shape);

}  // namespace qfrob
