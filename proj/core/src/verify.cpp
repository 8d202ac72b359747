#include "qfrob/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

namespace qfrob {

CheckResult CheckResult::pass(std::string id, std::string params) {
    return {std::move(id), std::move(params), Status::Pass, ""};
}
CheckResult CheckResult::fail(std::string id, std::string params, std::string witness) {
    return {std::move(id), std::move(params), Status::Fail, std::move(witness)};
}
CheckResult CheckResult::skip(std::string id, std::string params, std::string reason) {
    return {std::move(id), std::move(params), Status::Skip, std::move(reason)};
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckResult::Status::Fail) return false;
    return true;
}

int VerificationReport::count(CheckResult::Status s) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

void VerificationReport::append(const VerificationReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

std::optional<std::vector<int>> shifted_coxeter_word(const Partition& nu) {
    auto word = coxeter_word(nu);
    if (word.empty()) return std::nullopt;
    int max_gen = *std::max_element(word.begin(), word.end());
    if (max_gen + 1 > nu.n() - 1) return std::nullopt;
    for (int& g : word) ++g;
    return word;
}

namespace {

std::string truncate(std::string s, std::size_t limit = 160) {
    if (s.size() > limit) {
        s.resize(limit);
        s += "...";
    }
    return s;
}

HeckeElement element_from_word(int n, const std::vector<int>& word) {
    HeckeElement z = HeckeElement::unit(n);
    for (int i : word) z = z.gen_right(i);
    return z;
}

// Characters chi^lambda(z_nu) for all partitions of n, with shared ideal
// bases per shape.
struct CharacterBlock {
    std::vector<Partition> parts;
    ScalarMatrix table;  // rows nu, cols lambda
    explicit CharacterBlock(int n) : parts(all_partitions(n)), table(character_table(n, n)) {}
};

}  // namespace

VerificationReport frobenius_algebra(const ReAlgebra& alg, int n) {
    VerificationReport rep;
    rep.subject = alg.symmetry().name();
    CharacterBlock chars(n);
    for (std::size_t r = 0; r < chars.parts.size(); ++r) {
        const Partition& nu = chars.parts[r];
        std::string params = "n=" + std::to_string(n) + " nu=" + nu.to_string();
        NCPoly residual = alg.power_sum(nu);
        for (std::size_t c = 0; c < chars.parts.size(); ++c)
            residual -= alg.schur(chars.parts[c]).scaled(chars.table.at(static_cast<int>(r),
                                                                        static_cast<int>(c)));
        NCPoly nf = alg.normal_form(residual);
        if (nf.is_zero())
            rep.append(CheckResult::pass("frobenius-algebra", params));
        else
            rep.append(CheckResult::fail("frobenius-algebra", params,
                                         truncate("residue " + nf.to_string())));
    }
    return rep;
}

VerificationReport frobenius_rep(const ReAlgebra& alg, int n, int k) {
    VerificationReport rep;
    rep.subject = alg.symmetry().name();
    CharacterBlock chars(n);
    const RepFamily& reps = alg.rep_generators(k);
    for (std::size_t r = 0; r < chars.parts.size(); ++r) {
        const Partition& nu = chars.parts[r];
        std::string params =
            "n=" + std::to_string(n) + " k=" + std::to_string(k) + " nu=" + nu.to_string();
        ScalarMatrix lhs = alg.apply_rep(reps, alg.power_sum(nu));
        ScalarMatrix rhs(lhs.rows(), lhs.cols());
        for (std::size_t c = 0; c < chars.parts.size(); ++c)
            rhs = rhs + alg.apply_rep(reps, alg.schur(chars.parts[c]))
                            .scaled(chars.table.at(static_cast<int>(r), static_cast<int>(c)));
        if (lhs == rhs) {
            rep.append(CheckResult::pass("frobenius-rep", params));
        } else {
            auto [i, j] = ScalarMatrix::first_difference(lhs, rhs);
            rep.append(CheckResult::fail(
                "frobenius-rep", params,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                    lhs.at(i, j).to_string() + " != " + rhs.at(i, j).to_string()));
        }
    }
    return rep;
}

VerificationReport frobenius_spectral(const SpectralFamily& f, int n) {
    if (n > 5) throw BoundExceeded("spectral Frobenius bound is n <= 5");
    VerificationReport rep;
    rep.subject = "family (" + std::to_string(f.m) + "|" + std::to_string(f.n) + ")";
    CharacterBlock chars(n);
    for (std::size_t r = 0; r < chars.parts.size(); ++r) {
        const Partition& nu = chars.parts[r];
        std::string params = "n=" + std::to_string(n) + " nu=" + nu.to_string();
        MultiPoly lhs = power_sum_spectral(f, nu);
        MultiPoly rhs(f.nvars());
        for (std::size_t c = 0; c < chars.parts.size(); ++c)
            rhs += schur_spectral(f, chars.parts[c])
                       .scaled(chars.table.at(static_cast<int>(r), static_cast<int>(c)));
        if (lhs == rhs)
            rep.append(CheckResult::pass("frobenius-spectral", params));
        else
            rep.append(CheckResult::fail("frobenius-spectral", params,
                                         truncate("difference " + (lhs - rhs).to_string(f))));
    }
    return rep;
}

bool prop11_check(const ReAlgebra& alg, const Partition& nu) {
    NCPoly target = alg.power_sum(nu);
    NCPoly lhs = alg.ch(coxeter_with_gaps(nu), nu.n());
    if (!alg.reduces_to_zero(lhs - target)) return false;
    if (auto alt = shifted_coxeter_word(nu)) {
        NCPoly lhs2 = alg.ch(element_from_word(nu.n(), *alt), nu.n());
        if (!alg.reduces_to_zero(lhs2 - target)) return false;
    }
    return true;
}

namespace {

// Deterministic small random elements for the homomorphism spot checks.
HeckeElement random_element(std::mt19937& rng, int n) {
    auto perms = all_perms(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-2, 2);
    HeckeElement out(n);
    for (int t = 0; t < 3; ++t) {
        RatFunc c = RatFunc(coeff(rng)) + RatFunc(coeff(rng)) * RatFunc::q(expo(rng));
        out += HeckeElement::basis(n, perms[pick(rng)], c);
    }
    return out;
}

// Runs independent jobs on a small pool, preserving result order; a throwing
// job becomes a failed check instead of tearing the pool down.
std::vector<VerificationReport> run_jobs(std::vector<std::function<VerificationReport()>> jobs,
                                         int threads) {
    std::vector<VerificationReport> results(jobs.size());
    auto run_one = [&](std::size_t i) {
        try {
            results[i] = jobs[i]();
        } catch (const std::exception& e) {
            VerificationReport r;
            r.append(CheckResult::fail("exception", "job " + std::to_string(i), e.what()));
            results[i] = std::move(r);
        }
    };
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(jobs.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                run_one(i);
            }
        });
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

VerificationReport full_suite(const ScalarMatrix& r, int n, const std::string& name,
                              const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.subject = name;
    report.environment.rank_mode = opts.fast_rank ? "probabilistic" : "exact";

    std::optional<HeckeSymmetry> sym;
    try {
        sym = validate(r, n, name);
        report.append(CheckResult::pass("validate", "N=" + std::to_string(n)));
    } catch (const Error& e) {
        report.append(CheckResult::fail("validate", "N=" + std::to_string(n), e.what()));
    }
    if (!sym) {
        for (const char* id :
             {"skew-inverse", "birank", "trace-identities", "rtrace-closure", "rep-rank-one",
              "rep-relations", "schur-weyl", "rho-homomorphism", "centrality", "prop11",
              "frobenius-algebra", "frobenius-rep", "frobenius-spectral", "cayley-hamilton",
              "newton", "hall-littlewood", "supersymmetry", "classical-limit"})
            report.append(CheckResult::skip(id, "", "validation failed"));
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        return report;
    }

    std::optional<ReAlgebra> alg;
    try {
        alg.emplace(*sym);
        report.append(CheckResult::pass("skew-inverse", ""));
    } catch (const NotSkewInvertible& e) {
        report.append(CheckResult::fail("skew-inverse", "", e.what()));
    }
    if (!alg) {
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        return report;
    }

    std::optional<BiRank> br;
    try {
        br = birank(*sym, opts.kmax, opts.fast_rank);
        report.append(CheckResult::pass(
            "birank", "kmax=" + std::to_string(opts.kmax) + " -> (" + std::to_string(br->r) + "|" +
                          std::to_string(br->s) + "), series " + br->series_string()));
    } catch (const Inconclusive& e) {
        report.append(CheckResult::fail("birank", "kmax=" + std::to_string(opts.kmax), e.what()));
    }

    // Trace identities, stated explicitly even though birank cross-checks them.
    if (br) {
        const auto& skew = alg->skew();
        ScalarMatrix bc = skew.b * skew.c;
        bool ok = bc == ScalarMatrix::identity(n).scaled(RatFunc::q(-2 * (br->r - br->s)));
        RatFunc expect = RatFunc::q(br->s - br->r) * q_int(br->r - br->s);
        ok = ok && skew.b.trace() == expect && skew.c.trace() == expect;
        report.append(ok ? CheckResult::pass("trace-identities", "")
                         : CheckResult::fail("trace-identities", "",
                                             "B*C or the traces do not match the bi-rank"));
    } else {
        report.append(CheckResult::skip("trace-identities", "", "bi-rank unknown"));
    }

    // Tr_{R(k+1)} R_k = I^(x)k, k = 1, 2.
    {
        bool ok = true;
        for (int k = 1; k <= 2; ++k) {
            ScalarMatrix rk = embed_factor(sym->r(), k, k + 1);
            if (!r_trace(alg->skew(), rk, {k + 1}).is_identity()) ok = false;
        }
        report.append(ok ? CheckResult::pass("rtrace-closure", "k<=2")
                         : CheckResult::fail("rtrace-closure", "k<=2",
                                             "Tr_{R(k+1)} R_k is not the identity"));
    }

    // Parallel batch of the independent heavyweight checks.
    std::vector<std::function<VerificationReport()>> jobs;
    const ReAlgebra& algebra = *alg;

    jobs.emplace_back([&algebra] {
        VerificationReport r1;
        try {
            const RepFamily& reps = algebra.rep_generators(1);
            r1.append(CheckResult::pass("rep-rank-one", "convention=" + reps.convention));
        } catch (const Error& e) {
            r1.append(CheckResult::fail("rep-rank-one", "", e.what()));
        }
        return r1;
    });

    jobs.emplace_back([&algebra, &opts] {
        VerificationReport r1;
        for (int k = 1; k <= opts.rep_k_max; ++k) {
            bool ok = true;
            const RepFamily& reps = algebra.rep_generators(k);
            for (const auto& rel : algebra.relations())
                if (!algebra.apply_rep(reps, rel).is_zero()) ok = false;
            r1.append(ok ? CheckResult::pass("rep-relations", "k=" + std::to_string(k))
                         : CheckResult::fail("rep-relations", "k=" + std::to_string(k),
                                             "a defining relation acts nontrivially"));
        }
        return r1;
    });

    jobs.emplace_back([&algebra, &opts] {
        VerificationReport r1;
        for (int k = 2; k <= opts.rep_k_max; ++k)
            r1.append(algebra.schur_weyl_check(k)
                          ? CheckResult::pass("schur-weyl", "k=" + std::to_string(k))
                          : CheckResult::fail("schur-weyl", "k=" + std::to_string(k),
                                              "action does not commute with R_i"));
        return r1;
    });

    jobs.emplace_back([sym] {
        VerificationReport r1;
        std::mt19937 rng(12345);
        bool ok = true;
        for (int n_h : {3, 4}) {
            for (int trial = 0; trial < 10 && ok; ++trial) {
                HeckeElement x = random_element(rng, n_h);
                HeckeElement y = random_element(rng, n_h);
                if (rho(*sym, multiply(x, y), n_h) != rho(*sym, x, n_h) * rho(*sym, y, n_h))
                    ok = false;
            }
        }
        r1.append(ok ? CheckResult::pass("rho-homomorphism", "n=3,4 x20")
                     : CheckResult::fail("rho-homomorphism", "n=3,4 x20",
                                         "rho(x y) != rho(x) rho(y)"));
        return r1;
    });

    const int central_max = (n <= 2) ? std::min(opts.max_n, 3) : 2;
    jobs.emplace_back([&algebra, central_max] {
        VerificationReport r1;
        for (int k = 1; k <= central_max; ++k) {
            bool ok = algebra.is_central(algebra.normal_form(algebra.power_sum(k)));
            r1.append(ok ? CheckResult::pass("centrality", "p_" + std::to_string(k))
                         : CheckResult::fail("centrality", "p_" + std::to_string(k),
                                             "power sum is not central"));
        }
        for (int deg = 1; deg <= central_max; ++deg)
            for (const auto& lam : all_partitions(deg)) {
                bool ok = algebra.is_central(algebra.normal_form(algebra.schur(lam)));
                r1.append(ok ? CheckResult::pass("centrality", "s_" + lam.to_string())
                             : CheckResult::fail("centrality", "s_" + lam.to_string(),
                                                 "Schur polynomial is not central"));
            }
        return r1;
    });

    jobs.emplace_back([&algebra] {
        VerificationReport r1;
        for (const auto& nu : all_partitions(3))
            r1.append(prop11_check(algebra, nu)
                          ? CheckResult::pass("prop11", "nu=" + nu.to_string())
                          : CheckResult::fail("prop11", "nu=" + nu.to_string(),
                                              "ch(z_nu) != p_nu modulo the ideal"));
        return r1;
    });

    for (int deg = 2; deg <= opts.max_n; ++deg)
        jobs.emplace_back([&algebra, deg] { return frobenius_algebra(algebra, deg); });

    for (int deg = 2; deg <= std::min(opts.max_n, 3); ++deg)
        for (int k = 1; k <= opts.rep_k_max; ++k)
            jobs.emplace_back([&algebra, deg, k] { return frobenius_rep(algebra, deg, k); });

    if (br) {
        SpectralFamily fam(br->r, br->s);
        for (int deg = 2; deg <= opts.max_n; ++deg)
            jobs.emplace_back([fam, deg] { return frobenius_spectral(fam, deg); });

        jobs.emplace_back([&algebra, fam, br] {
            VerificationReport r1;
            if (br->s == 0) {
                bool ok = algebra.cayley_hamilton_even(br->r);
                r1.append(ok ? CheckResult::pass("cayley-hamilton", "m=" + std::to_string(br->r))
                             : CheckResult::fail("cayley-hamilton", "m=" + std::to_string(br->r),
                                                 "an entry does not reduce to zero"));
            } else {
                r1.append(CheckResult::skip("cayley-hamilton", "",
                                            "bi-rank (" + std::to_string(br->r) + "|" +
                                                std::to_string(br->s) + ")"));
            }
            return r1;
        });

        jobs.emplace_back([fam] {
            VerificationReport r1;
            for (int k = 1; k <= 4; ++k)
                r1.append(newton_check(fam, k)
                              ? CheckResult::pass("newton", "k=" + std::to_string(k))
                              : CheckResult::fail("newton", "k=" + std::to_string(k),
                                                  "identity does not vanish"));
            return r1;
        });

        jobs.emplace_back([fam] {
            VerificationReport r1;
            if (fam.n == 0 && fam.m <= 3) {
                for (int k = 1; k <= 3; ++k)
                    r1.append(hl_compare(fam, k)
                                  ? CheckResult::pass("hall-littlewood", "k=" + std::to_string(k))
                                  : CheckResult::fail("hall-littlewood",
                                                      "k=" + std::to_string(k), "mismatch"));
            } else {
                r1.append(CheckResult::skip("hall-littlewood", "",
                                            fam.n == 0 ? "m > 3" : "family has an odd part"));
            }
            return r1;
        });

        jobs.emplace_back([fam] {
            VerificationReport r1;
            if (fam.m >= 1 && fam.n >= 1) {
                bool ok = true;
                for (int k = 1; k <= 3; ++k)
                    if (!supersymmetry_check(power_sum_spectral(fam, k), fam)) ok = false;
                r1.append(ok ? CheckResult::pass("supersymmetry", "p_k, k<=3")
                             : CheckResult::fail("supersymmetry", "p_k, k<=3",
                                                 "a power sum is not super-symmetric"));
            } else {
                r1.append(CheckResult::skip("supersymmetry", "", "family is purely even or odd"));
            }
            return r1;
        });

        jobs.emplace_back([fam] {
            VerificationReport r1;
            bool ok = true;
            for (int k = 1; k <= 3 && ok; ++k) {
                MultiPoly lim = classical_limit(power_sum_spectral(fam, k));
                MultiPoly expect(fam.nvars());
                for (int i = 0; i < fam.m; ++i) expect += MultiPoly::variable(fam.nvars(), i, k);
                for (int j = 0; j < fam.n; ++j)
                    expect -= MultiPoly::variable(fam.nvars(), fam.m + j, k);
                if (lim != expect) ok = false;
            }
            r1.append(ok ? CheckResult::pass("classical-limit", "p_k, k<=3")
                         : CheckResult::fail("classical-limit", "p_k, k<=3",
                                             "q->1 limit is not the super-classical power sum"));
            return r1;
        });
    }

    auto results = run_jobs(std::move(jobs), opts.threads);
    for (auto& r1 : results) report.append(r1);

    try {
        report.environment.slot_convention = alg->rep_generators(1).convention;
    } catch (const Error&) {
        report.environment.slot_convention = "unresolved";
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

VerificationReport full_suite(const HeckeSymmetry& s, const VerifyOptions& opts) {
    return full_suite(s.r(), s.n(), s.name(), opts);
}

}  // namespace qfrob
