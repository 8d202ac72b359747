#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrob/re_algebra.hpp"
#include "qfrob/spectral.hpp"

namespace qfrob {

struct CheckResult {
    enum class Status { Pass, Fail, Skip };
    std::string id;
    std::string params;
    Status status = Status::Pass;
    std::string witness;  // failure witness, or the reason for a skip

    static CheckResult pass(std::string id, std::string params = "");
    static CheckResult fail(std::string id, std::string params, std::string witness);
    static CheckResult skip(std::string id, std::string params, std::string reason);
};

struct ReportEnvironment {
    std::string monomial_order = "deglex";
    std::string slot_convention;  // resolved when representations are built
    std::string rank_mode = "exact";
};

struct VerificationReport {
    std::string subject;
    ReportEnvironment environment;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool all_passed() const;
    int count(CheckResult::Status s) const;
    void append(CheckResult c) { checks.push_back(std::move(c)); }
    void append(const VerificationReport& other);
};

struct VerifyOptions {
    int max_n = 3;        // largest symmetric degree for the Frobenius checks
    int rep_k_max = 3;    // largest tensor power for representation checks
    int kmax = 4;         // bi-rank scan depth
    bool fast_rank = false;
    int threads = 0;      // 0 = hardware concurrency
};

// Alternative gap placement of the same cyclic type (all strings shifted one
// slot right); present when the type has a trivial part to spare.
std::optional<std::vector<int>> shifted_coxeter_word(const Partition& nu);

// p_nu(L) = sum_lambda chi^lambda_nu s_lambda(L) modulo the ideal, per nu.
VerificationReport frobenius_algebra(const ReAlgebra& alg, int n);

// The same identities pushed through the representation on V^(x k).
VerificationReport frobenius_rep(const ReAlgebra& alg, int n, int k);

// The spectral image of the identity, per nu, as exact MultiPoly equality.
VerificationReport frobenius_spectral(const SpectralFamily& f, int n);

// ch(z_nu) = p_nu modulo the ideal; also for a shifted gap placement when
// one exists.
bool prop11_check(const ReAlgebra& alg, const Partition& nu);

// Runs the whole battery on a raw matrix: validation, skew-inverse data,
// bi-rank, representation self-checks, Schur-Weyl, centrality, ch/power-sum
// comparisons, all three Frobenius pipelines, the even Cayley-Hamilton
// identity, and the spectral-side identities for the detected bi-rank.
VerificationReport full_suite(const ScalarMatrix& r, int n, const std::string& name,
                              const VerifyOptions& opts = {});
VerificationReport full_suite(const HeckeSymmetry& s, const VerifyOptions& opts = {});

}  // namespace qfrob
