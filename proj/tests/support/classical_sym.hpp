#pragma once

// Classical symmetric-function oracle over commuting variables, independent
// of the quantum pipelines: Schur polynomials by direct semistandard-tableau
// enumeration, power sums by expansion, and expansion of a symmetric
// polynomial in the Schur basis by leading-term peeling.

#include <map>

#include "qfrob/partition.hpp"
#include "qfrob/spectral.hpp"

namespace qfrob::testsupport {

inline void enumerate_ssyt(const Partition& shape, int nvars, std::vector<std::vector<int>>& rows,
                           int r, int c, const std::function<void()>& emit) {
    if (r == shape.rows()) {
        emit();
        return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == shape.part(r)) {
        next_r = r + 1;
        next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= nvars; ++v) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        enumerate_ssyt(shape, nvars, rows, next_r, next_c, emit);
    }
}

inline MultiPoly classical_schur(const Partition& shape, int nvars) {
    MultiPoly out(nvars);
    if (shape.rows() == 0) return MultiPoly::constant(nvars, RatFunc(1));
    if (shape.rows() > nvars) return out;  // no semistandard fillings
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.rows(); ++r)
        rows.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
    enumerate_ssyt(shape, nvars, rows, 0, 0, [&] {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        for (const auto& row : rows)
            for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
        out.add_term(e, RatFunc(1));
    });
    return out;
}

inline MultiPoly classical_power_sum(int k, int nvars) {
    MultiPoly out(nvars);
    for (int i = 0; i < nvars; ++i) out += MultiPoly::variable(nvars, i, k);
    return out;
}

inline MultiPoly classical_power_sum(const Partition& nu, int nvars) {
    MultiPoly out = MultiPoly::constant(nvars, RatFunc(1));
    for (int part : nu.parts()) out = out * classical_power_sum(part, nvars);
    return out;
}

// Expands a homogeneous symmetric polynomial in the Schur basis by peeling
// dominant monomials; throws if the peeling does not terminate at zero.
inline std::map<std::vector<int>, Rational> schur_expand(MultiPoly p, int nvars) {
    std::map<std::vector<int>, Rational> out;
    int guard = 0;
    while (!p.is_zero()) {
        if (++guard > 1000) throw Error("Schur expansion does not terminate");
        const auto& [e, c] = *p.terms().rbegin();  // deglex-leading term
        std::vector<int> lam;
        for (int x : e)
            if (x) lam.push_back(x);
        for (std::size_t i = 0; i + 1 < lam.size(); ++i)
            if (lam[i] < lam[i + 1]) throw Error("leading exponent is not a partition");
        Rational coeff = c.specialize(Rational(1));  // coefficients here are rational constants
        p -= classical_schur(Partition(lam), nvars).scaled(RatFunc(coeff));
        out[lam] += coeff;
    }
    return out;
}

}  // namespace qfrob::testsupport
