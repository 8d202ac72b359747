#include "qfrob/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace qfrob {

Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

int perm_length(const Perm& w) {
    int len = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++len;
    return len;
}

std::vector<int> reduced_word(const Perm& w) {
    Perm cur = w;
    std::vector<int> word;
    const int n = static_cast<int>(w.size());
    bool progressed = true;
    while (progressed) {
        progressed = false;
        // Find a left descent: value i-1 appears after value i.
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) pos[cur[static_cast<std::size_t>(j)]] = j;
        for (int i = 1; i < n; ++i) {
            if (pos[static_cast<std::size_t>(i - 1)] > pos[static_cast<std::size_t>(i)]) {
                word.push_back(i);
                for (auto& v : cur) {
                    if (v == i - 1)
                        v = static_cast<std::uint8_t>(i);
                    else if (v == i)
                        v = static_cast<std::uint8_t>(i - 1);
                }
                progressed = true;
                break;
            }
        }
    }
    return word;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

HeckeElement HeckeElement::unit(int n) { return basis(n, perm_identity(n)); }

HeckeElement HeckeElement::generator(int n, int i) {
    if (i < 1 || i > n - 1) throw IndexError("generator index out of range");
    Perm p = perm_identity(n);
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    return basis(n, p);
}

HeckeElement HeckeElement::basis(int n, const Perm& w, const RatFunc& c) {
    HeckeElement e(n);
    e.add_term(w, c);
    return e;
}

RatFunc HeckeElement::coeff(const Perm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc() : it->second;
}

void HeckeElement::add_term(const Perm& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("Hecke elements of different n");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("Hecke elements of different n");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const RatFunc& c) const {
    HeckeElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

HeckeElement HeckeElement::gen_left(int i) const {
    if (i < 1 || i > n_ - 1) throw IndexError("generator index out of range");
    HeckeElement r(n_);
    const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);
    const auto lo = static_cast<std::uint8_t>(i - 1), hi = static_cast<std::uint8_t>(i);
    for (const auto& [w, c] : terms_) {
        Perm sw = w;
        int pos_lo = -1, pos_hi = -1;
        for (int j = 0; j < n_; ++j) {
            if (sw[static_cast<std::size_t>(j)] == lo) {
                pos_lo = j;
                sw[static_cast<std::size_t>(j)] = hi;
            } else if (sw[static_cast<std::size_t>(j)] == hi) {
                pos_hi = j;
                sw[static_cast<std::size_t>(j)] = lo;
            }
        }
        r.add_term(sw, c);
        if (pos_lo > pos_hi) r.add_term(w, c * qbar);  // length went down
    }
    return r;
}

HeckeElement HeckeElement::gen_right(int i) const {
    if (i < 1 || i > n_ - 1) throw IndexError("generator index out of range");
    HeckeElement r(n_);
    const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);
    for (const auto& [w, c] : terms_) {
        Perm ws = w;
        std::swap(ws[static_cast<std::size_t>(i - 1)], ws[static_cast<std::size_t>(i)]);
        r.add_term(ws, c);
        if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)])
            r.add_term(w, c * qbar);
    }
    return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.n() != b.n()) throw DimensionMismatch("Hecke elements of different n");
    HeckeElement out(a.n());
    if (a.is_zero() || b.is_zero()) return out;
    long cost_left = 0, cost_right = 0;
    for (const auto& [w, c] : a.terms()) cost_left += perm_length(w);
    for (const auto& [w, c] : b.terms()) cost_right += perm_length(w);
    cost_left *= static_cast<long>(b.term_count());
    cost_right *= static_cast<long>(a.term_count());
    if (cost_left <= cost_right) {
        for (const auto& [w, c] : a.terms()) {
            auto word = reduced_word(w);
            HeckeElement y = b;
            for (auto it = word.rbegin(); it != word.rend(); ++it) y = y.gen_left(*it);
            out += y.scaled(c);
        }
    } else {
        for (const auto& [v, c] : b.terms()) {
            auto word = reduced_word(v);
            HeckeElement y = a;
            for (int i : word) y = y.gen_right(i);
            out += y.scaled(c);
        }
    }
    return out;
}

HeckeElement HeckeElement::embedded(int m) const {
    if (m < n_) throw DimensionMismatch("cannot embed into a smaller algebra");
    HeckeElement r(m);
    for (const auto& [w, c] : terms_) {
        Perm p = w;
        for (int v = n_; v < m; ++v) p.push_back(static_cast<std::uint8_t>(v));
        r.terms_.emplace(std::move(p), c);
    }
    return r;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ")*";
        if (perm_length(w) == 0) {
            s += "e";
        } else {
            s += "T[";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(w[i] + 1);
            }
            s += "]";
        }
    }
    return s;
}

HeckeElement jucys_murphy(int n, int k) {
    if (k < 1 || k > n) throw IndexError("Jucys-Murphy index out of range");
    HeckeElement j = HeckeElement::unit(n);
    for (int i = 2; i <= k; ++i) j = j.gen_left(i - 1).gen_right(i - 1);
    return j;
}

HeckeElement antisymmetrizer(int k) {
    HeckeElement a = HeckeElement::unit(k);
    for (int j = 2; j <= k; ++j) {
        HeckeElement mid =
            HeckeElement::unit(k).scaled(RatFunc::q(j - 1)) -
            HeckeElement::generator(k, j - 1).scaled(q_int(j - 1));
        a = multiply(multiply(a, mid), a).scaled(q_int(j).inverse());
    }
    return a;
}

HeckeElement symmetrizer(int k) {
    HeckeElement h = HeckeElement::unit(k);
    for (int j = 2; j <= k; ++j) {
        HeckeElement mid =
            HeckeElement::unit(k).scaled(RatFunc::q(1 - j)) +
            HeckeElement::generator(k, j - 1).scaled(q_int(j - 1));
        h = multiply(multiply(h, mid), h).scaled(q_int(j).inverse());
    }
    return h;
}

namespace {

// Shape of the boxes holding 1..k of a standard tableau.
Partition subshape(const StdTableau& t, int k) {
    std::vector<int> rows;
    for (int r = 0; r < t.shape().rows(); ++r) {
        int len = 0;
        for (int v : t.rows()[static_cast<std::size_t>(r)])
            if (v <= k) ++len;
        if (len) rows.push_back(len);
    }
    return Partition(rows);
}

// Divides out the common content (rational, power of q, and polynomial) of an
// element whose coefficients are polynomial; returns the removed factor.
RatFunc strip_element_content(HeckeElement& e) {
    if (e.is_zero()) return RatFunc(1);
    LaurentPoly g;
    for (const auto& [w, c] : e.terms()) {
        g = poly_gcd(g, c.num());
        if (g.is_constant()) break;
    }
    bool any_correction = !g.is_constant();
    Rational content(0);
    int min_low = 0;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        Rational rc = c.num().content();
        if (first) {
            content = rc;
            min_low = c.num().low_exp();
            first = false;
        } else {
            content = make_rational(gcd(content.get_num(), rc.get_num()),
                                    lcm(content.get_den(), rc.get_den()));
            min_low = std::min(min_low, c.num().low_exp());
        }
    }
    RatFunc removed(LaurentPoly::monomial(content, min_low));
    if (any_correction) removed *= RatFunc(g.shifted(-g.low_exp()));
    if (removed.is_one()) return removed;
    HeckeElement out(e.n());
    RatFunc inv = removed.inverse();
    for (const auto& [w, c] : e.terms()) out.add_term(w, c * inv);
    e = std::move(out);
    return removed;
}

// Product of the interpolation factors with contents stripped as they grow:
// returns (E, sigma) with E = sigma * e^lambda_TT.
std::pair<HeckeElement, RatFunc> idempotent_scaled(const StdTableau& t) {
    const int n = t.n();
    HeckeElement e = HeckeElement::unit(n);
    RatFunc scale(1);
    for (int k = 2; k <= n; ++k) {
        Partition prev = subshape(t, k - 1);
        const int ck = t.content(k);
        HeckeElement jk = jucys_murphy(n, k);
        for (int c : addable_corner_contents(prev)) {
            if (c == ck) continue;
            HeckeElement factor = jk;
            factor -= HeckeElement::unit(n).scaled(RatFunc::q(2 * c));
            e = multiply(e, factor);
            scale *= RatFunc::q(2 * ck) - RatFunc::q(2 * c);
            scale /= strip_element_content(e);
        }
    }
    return {std::move(e), std::move(scale)};
}

}  // namespace

HeckeElement primitive_idempotent(const StdTableau& t) {
    auto [e, scale] = idempotent_scaled(t);
    return e.scaled(scale.inverse());
}

HeckeElement coxeter_with_gaps(const Partition& nu) {
    HeckeElement z = HeckeElement::unit(nu.n());
    for (int i : coxeter_word(nu)) z = z.gen_right(i);
    return z;
}

std::vector<int> coxeter_word(const Partition& nu) {
    std::vector<int> word;
    int base = 0;
    for (int part : nu.parts()) {
        for (int t = base + part - 1; t >= base + 1; --t) word.push_back(t);
        base += part;
    }
    return word;
}

LeftIdealTrace::LeftIdealTrace(const Partition& shape) : shape_(shape), n_(shape.n()) {
    const long d = tableau_count(shape);
    auto [escaled, scale] = idempotent_scaled(StdTableau::row_reading(shape));
    (void)scale;  // the ideal and its trace are insensitive to basis scaling

    if (n_ <= 5) {
        // Row-reduce the full spanning set {T_w e} over the T-basis.
        auto perms = all_perms(n_);
        std::map<Perm, int> index;
        for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
        const int dim = static_cast<int>(perms.size());
        ScalarMatrix span(dim, dim);
        for (int r = 0; r < dim; ++r) {
            auto word = reduced_word(perms[static_cast<std::size_t>(r)]);
            HeckeElement y = escaled;
            for (auto it = word.rbegin(); it != word.rend(); ++it) y = y.gen_left(*it);
            for (const auto& [w, c] : y.terms()) span.at(r, index[w]) = c;
        }
        RowReduceResult rr = row_reduce(span, ReduceStrategy::Field);
        if (rr.rank != d)
            throw DimensionMismatch("left ideal dimension " + std::to_string(rr.rank) +
                                    " differs from tableau count " + std::to_string(d));
        for (int k = 0; k < rr.rank; ++k) {
            HeckeElement b(n_);
            for (int j = 0; j < dim; ++j)
                if (!rr.rref.at(k, j).is_zero())
                    b.add_term(perms[static_cast<std::size_t>(j)], rr.rref.at(k, j));
            basis_.push_back(std::move(b));
            coord_perms_.push_back(perms[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(k)])]);
        }
        coord_inverse_ = ScalarMatrix::identity(static_cast<int>(d));
    } else {
        // Transversal spanning set {T_{d(S)} e}; the coordinate matrix at the
        // transversal permutations is invertible for these ideals.
        const StdTableau t0 = StdTableau::row_reading(shape);
        auto tabs = standard_tableaux(shape);
        if (static_cast<long>(tabs.size()) != d) throw DimensionMismatch("tableau enumeration bug");
        for (const auto& s : tabs) {
            Perm w(static_cast<std::size_t>(n_));
            for (int r = 0; r < shape.rows(); ++r)
                for (int c = 0; c < shape.part(r); ++c) {
                    int from = t0.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    int to = s.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    w[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
                }
            auto word = reduced_word(w);
            HeckeElement y = escaled;
            for (auto it = word.rbegin(); it != word.rend(); ++it) y = y.gen_left(*it);
            strip_element_content(y);  // diagonal rescaling leaves the trace alone
            basis_.push_back(std::move(y));
            coord_perms_.push_back(std::move(w));
        }
        ScalarMatrix m(static_cast<int>(d), static_cast<int>(d));
        for (int j = 0; j < static_cast<int>(d); ++j)
            for (int k = 0; k < static_cast<int>(d); ++k)
                m.at(j, k) = basis_[static_cast<std::size_t>(k)].coeff(coord_perms_[static_cast<std::size_t>(j)]);
        SolveResult inv = solve(m, ScalarMatrix::identity(static_cast<int>(d)), ReduceStrategy::Field);
        if (!inv.unique)
            throw DimensionMismatch("transversal coordinates are degenerate for " +
                                    shape.to_string());
        coord_inverse_ = std::move(inv.x);
    }
    dim_ = static_cast<int>(d);
}

RatFunc LeftIdealTrace::trace_of_(const std::vector<HeckeElement>& images) const {
    // tr(Minv * Z) accumulated entrywise; Z[j][k] = coordinate j of image k.
    RatFunc out;
    for (int k = 0; k < dim_; ++k)
        for (int j = 0; j < dim_; ++j) {
            const RatFunc& m = coord_inverse_.at(k, j);
            if (m.is_zero()) continue;
            RatFunc z = images[static_cast<std::size_t>(k)].coeff(
                coord_perms_[static_cast<std::size_t>(j)]);
            if (!z.is_zero()) out += m * z;
        }
    return out;
}

RatFunc LeftIdealTrace::value(const HeckeElement& z) const {
    if (z.n() != n_) throw DimensionMismatch("element size does not match the shape");
    std::vector<HeckeElement> images;
    images.reserve(static_cast<std::size_t>(dim_));
    for (int k = 0; k < dim_; ++k)
        images.push_back(multiply(z, basis_[static_cast<std::size_t>(k)]));
    return trace_of_(images);
}

namespace {

// Coefficient of T_v in tau_{word[t]} ... tau_{word.back()} * y, by unwinding
// one generator at a time:
//   [T_v](tau_i x) = x_{s_i v} + (q - q^-1) x_v  when s_i v is shorter than v,
//   [T_v](tau_i x) = x_{s_i v}                   otherwise.
RatFunc word_product_coeff(const std::vector<int>& word, std::size_t t, const Perm& v,
                           const HeckeElement& y, const RatFunc& qbar) {
    if (t == word.size()) return y.coeff(v);
    const int i = word[t];
    const auto lo = static_cast<std::uint8_t>(i - 1), hi = static_cast<std::uint8_t>(i);
    Perm sv = v;
    int pos_lo = -1, pos_hi = -1;
    for (std::size_t j = 0; j < sv.size(); ++j) {
        if (sv[j] == lo) {
            pos_lo = static_cast<int>(j);
            sv[j] = hi;
        } else if (sv[j] == hi) {
            pos_hi = static_cast<int>(j);
            sv[j] = lo;
        }
    }
    RatFunc out = word_product_coeff(word, t + 1, sv, y, qbar);
    if (pos_lo > pos_hi)  // s_i v is shorter: the descent branch contributes
        out += qbar * word_product_coeff(word, t + 1, v, y, qbar);
    return out;
}

}  // namespace

RatFunc LeftIdealTrace::value_word(const std::vector<int>& word) const {
    const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);
    RatFunc out;
    for (int k = 0; k < dim_; ++k)
        for (int j = 0; j < dim_; ++j) {
            const RatFunc& m = coord_inverse_.at(k, j);
            if (m.is_zero()) continue;
            RatFunc z = word_product_coeff(word, 0, coord_perms_[static_cast<std::size_t>(j)],
                                           basis_[static_cast<std::size_t>(k)], qbar);
            if (!z.is_zero()) out += m * z;
        }
    return out;
}

RatFunc character(const Partition& shape, const HeckeElement& z) {
    return LeftIdealTrace(shape).value(z);
}

ScalarMatrix character_table(int n, int bound) {
    if (n > bound) throw BoundExceeded("character table bound exceeded");
    auto parts = all_partitions(n);
    const int m = static_cast<int>(parts.size());
    ScalarMatrix table(m, m);
    for (int col = 0; col < m; ++col) {
        LeftIdealTrace tr(parts[static_cast<std::size_t>(col)]);
        for (int row = 0; row < m; ++row)
            table.at(row, col) = tr.value(coxeter_with_gaps(parts[static_cast<std::size_t>(row)]));
    }
    return table;
}

}  // namespace qfrob
