#pragma once

#include <iosfwd>
#include <string>

#include "qfrob/symmetry.hpp"
#include "qfrob/verify.hpp"

namespace qfrob::cli {

struct SymmetryFile {
    int n = 0;
    std::string name;
    std::vector<std::vector<std::string>> entries;  // N^2 x N^2 scalar expressions
};

SymmetryFile read_symmetry_file(const std::string& path);
void write_symmetry_file(const std::string& path, const HeckeSymmetry& s);
ScalarMatrix entries_to_matrix(const SymmetryFile& f);

// Builtin name or a path to a symmetry file. Returns the raw matrix so that
// validation failures surface as check results, not as ingestion errors.
struct ResolvedInput {
    ScalarMatrix r;
    int n = 0;
    std::string name;
};
ResolvedInput resolve_input(const std::string& input);

std::string report_to_json(const VerificationReport& rep);
void print_report_text(std::ostream& os, const VerificationReport& rep);

struct CheckArgs {
    std::string input;
    std::string mode = "all";  // algebra | rep | spectral | all
    int max_n = 3;
    int rep_k_max = 3;
    int kmax = 4;
    bool fast_rank = false;
    std::string out;
};
int cmd_check(const CheckArgs& args);

struct TableArgs {
    std::string kind;  // characters | schur | power-sums
    int n = 3;
    int family_m = -1, family_n = -1;
    int up_to = 3;
    std::string out;
};
int cmd_table(const TableArgs& args);

struct BirankArgs {
    std::string input;
    int kmax = 4;
    bool fast_rank = false;
    std::string out;
};
int cmd_birank(const BirankArgs& args);

int cmd_export(const std::string& name, const std::string& out);

}  // namespace qfrob::cli
