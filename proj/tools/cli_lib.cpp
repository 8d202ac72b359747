#include "cli_lib.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace qfrob::cli {

using nlohmann::json;

SymmetryFile read_symmetry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    SymmetryFile f;
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(path + ": missing integer field 'n'");
    f.n = doc["n"].get<int>();
    if (f.n < 1 || f.n > 8) throw Error(path + ": n out of range");
    f.name = doc.value("name", path);
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw Error(path + ": missing array field 'entries'");
    const int dim = f.n * f.n;
    const auto& rows = doc["entries"];
    if (static_cast<int>(rows.size()) != dim)
        throw Error(path + ": 'entries' must have N^2 rows");
    for (int i = 0; i < dim; ++i) {
        if (!rows[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != dim)
            throw Error(path + ": row " + std::to_string(i) + " must have N^2 entries");
        std::vector<std::string> row;
        for (int j = 0; j < dim; ++j)
            row.push_back(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              .get<std::string>());
        f.entries.push_back(std::move(row));
    }
    return f;
}

ScalarMatrix entries_to_matrix(const SymmetryFile& f) {
    const int dim = f.n * f.n;
    ScalarMatrix r(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const std::string& text = f.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            try {
                r.at(i, j) = parse_scalar(text);
            } catch (const ParseError& e) {
                throw Error("entries[" + std::to_string(i) + "][" + std::to_string(j) + "] = \"" +
                            text + "\": " + e.what());
            }
        }
    return r;
}

void write_symmetry_file(const std::string& path, const HeckeSymmetry& s) {
    json rows = json::array();
    const int dim = s.n() * s.n();
    for (int i = 0; i < dim; ++i) {
        json row = json::array();
        for (int j = 0; j < dim; ++j) row.push_back(s.r().at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    json doc{{"n", s.n()}, {"name", s.name()}, {"entries", std::move(rows)}};
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

ResolvedInput resolve_input(const std::string& input) {
    const bool looks_like_path = input.find('/') != std::string::npos ||
                                 input.find(".json") != std::string::npos ||
                                 input.find('.') == 0;
    if (!looks_like_path) {
        try {
            HeckeSymmetry s = builtin(input);
            return {s.r(), s.n(), s.name()};
        } catch (const BraidViolation&) {
            throw;
        } catch (const HeckeViolation&) {
            throw;
        } catch (const Error& e) {
            // not a builtin name; fall through to file handling
            std::ifstream probe(input);
            if (!probe) throw Error(std::string(e.what()) + " (and no such file)");
        }
    }
    SymmetryFile f = read_symmetry_file(input);
    return {entries_to_matrix(f), f.n, f.name};
}

namespace {

const char* status_text(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "pass";
        case CheckResult::Status::Fail: return "FAIL";
        default: return "skip";
    }
}

json report_json_doc(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"id", c.id}, {"status", status_text(c.status)}};
        if (!c.params.empty()) e["params"] = c.params;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"schema", "qfrob-report/1"},
                {"subject", rep.subject},
                {"environment",
                 {{"monomial_order", rep.environment.monomial_order},
                  {"slot_convention", rep.environment.slot_convention},
                  {"rank_mode", rep.environment.rank_mode}}},
                {"checks", std::move(checks)},
                {"summary",
                 {{"total", rep.checks.size()},
                  {"passed", rep.count(CheckResult::Status::Pass)},
                  {"failed", rep.count(CheckResult::Status::Fail)},
                  {"skipped", rep.count(CheckResult::Status::Skip)}}},
                {"elapsed_ms", rep.elapsed_ms}};
}

void maybe_write_json(const std::string& path, const json& doc) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace

std::string report_to_json(const VerificationReport& rep) { return report_json_doc(rep).dump(2); }

void print_report_text(std::ostream& os, const VerificationReport& rep) {
    os << "subject: " << rep.subject << "\n";
    for (const auto& c : rep.checks) {
        os << "  [" << status_text(c.status) << "] " << c.id;
        if (!c.params.empty()) os << " " << c.params;
        if (!c.witness.empty()) os << " :: " << c.witness;
        os << "\n";
    }
    os << "summary: " << rep.count(CheckResult::Status::Pass) << " passed, "
       << rep.count(CheckResult::Status::Fail) << " failed, "
       << rep.count(CheckResult::Status::Skip) << " skipped ("
       << static_cast<long>(rep.elapsed_ms) << " ms)\n";
}

int cmd_check(const CheckArgs& args) {
    ResolvedInput in = resolve_input(args.input);
    VerifyOptions opts;
    opts.max_n = args.max_n;
    opts.rep_k_max = args.rep_k_max;
    opts.kmax = args.kmax;
    opts.fast_rank = args.fast_rank;

    VerificationReport rep;
    if (args.mode == "all") {
        rep = full_suite(in.r, in.n, in.name, opts);
    } else {
        rep.subject = in.name;
        rep.environment.rank_mode = opts.fast_rank ? "probabilistic" : "exact";
        std::optional<HeckeSymmetry> sym;
        try {
            sym = validate(in.r, in.n, in.name);
            rep.append(CheckResult::pass("validate", "N=" + std::to_string(in.n)));
        } catch (const Error& e) {
            rep.append(CheckResult::fail("validate", "N=" + std::to_string(in.n), e.what()));
        }
        if (sym) {
            if (args.mode == "algebra") {
                ReAlgebra alg(*sym);
                for (int n = 2; n <= opts.max_n; ++n) rep.append(frobenius_algebra(alg, n));
            } else if (args.mode == "rep") {
                ReAlgebra alg(*sym);
                for (int n = 2; n <= std::min(opts.max_n, 3); ++n)
                    for (int k = 1; k <= opts.rep_k_max; ++k) rep.append(frobenius_rep(alg, n, k));
            } else if (args.mode == "spectral") {
                BiRank br = birank(*sym, opts.kmax, opts.fast_rank);
                SpectralFamily fam(br.r, br.s);
                for (int n = 2; n <= opts.max_n; ++n) rep.append(frobenius_spectral(fam, n));
            } else {
                throw Error("unknown mode: " + args.mode);
            }
        }
    }
    print_report_text(std::cout, rep);
    maybe_write_json(args.out, report_json_doc(rep));
    return rep.all_passed() ? 0 : 1;
}

int cmd_table(const TableArgs& args) {
    json doc;
    if (args.kind == "characters") {
        auto parts = all_partitions(args.n);
        ScalarMatrix table = character_table(args.n, 5);
        std::size_t width = 0;
        std::vector<std::vector<std::string>> cells;
        for (std::size_t r = 0; r < parts.size(); ++r) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < parts.size(); ++c) {
                row.push_back(table.at(static_cast<int>(r), static_cast<int>(c)).to_string());
                width = std::max(width, row.back().size());
            }
            cells.push_back(std::move(row));
        }
        std::cout << "chi^lambda(z_nu), rows nu, columns lambda, n = " << args.n << "\n";
        std::cout << "columns:";
        for (const auto& p : parts) std::cout << " " << p.to_string();
        std::cout << "\n";
        json jrows = json::array();
        for (std::size_t r = 0; r < parts.size(); ++r) {
            std::cout << "  " << parts[r].to_string() << " :";
            json jrow = json::array();
            for (auto& cell : cells[r]) {
                std::cout << "  " << cell;
                jrow.push_back(cell);
            }
            std::cout << "\n";
            jrows.push_back(std::move(jrow));
        }
        doc = json{{"schema", "qfrob-table/1"},
                   {"kind", "characters"},
                   {"n", args.n},
                   {"rows", jrows}};
    } else if (args.kind == "schur" || args.kind == "power-sums") {
        if (args.family_m < 0 || args.family_n < 0)
            throw Error("table " + args.kind + " needs --family m,n");
        SpectralFamily fam(args.family_m, args.family_n);
        json entries = json::array();
        if (args.kind == "schur") {
            for (int k = 1; k <= args.up_to; ++k)
                for (const auto& lam : all_partitions(k)) {
                    MultiPoly s = schur_spectral(fam, lam);
                    std::string line = "s_" + lam.to_string() + " = " + s.to_string(fam);
                    std::cout << line << "\n";
                    entries.push_back({{"lambda", lam.to_string()}, {"value", s.to_string(fam)}});
                }
        } else {
            for (int k = 1; k <= args.up_to; ++k) {
                MultiPoly p = power_sum_spectral(fam, k);
                std::cout << "p_" << k << " = " << p.to_string(fam) << "\n";
                entries.push_back({{"k", k}, {"value", p.to_string(fam)}});
            }
        }
        doc = json{{"schema", "qfrob-table/1"},
                   {"kind", args.kind},
                   {"family", {args.family_m, args.family_n}},
                   {"up_to", args.up_to},
                   {"entries", entries}};
    } else {
        throw Error("unknown table kind: " + args.kind);
    }
    maybe_write_json(args.out, doc);
    return 0;
}

int cmd_birank(const BirankArgs& args) {
    ResolvedInput in = resolve_input(args.input);
    HeckeSymmetry sym = validate(in.r, in.n, in.name);
    BiRank br;
    try {
        br = birank(sym, args.kmax, args.fast_rank);
    } catch (const Inconclusive& e) {
        std::cout << "inconclusive: " << e.what() << " (try a larger --kmax)\n";
        return 1;
    }
    std::cout << "(" << br.r << "|" << br.s << "), series " << br.series_string() << "\n";
    std::cout << "dimensions:";
    for (long d : br.hp_coefficients) std::cout << " " << d;
    std::cout << "\n";
    if (args.fast_rank) std::cout << "rank mode: probabilistic\n";
    if (!args.out.empty()) {
        json doc{{"schema", "qfrob-birank/1"},
                 {"subject", in.name},
                 {"r", br.r},
                 {"s", br.s},
                 {"series", br.series_string()},
                 {"dimensions", br.hp_coefficients},
                 {"rank_mode", args.fast_rank ? "probabilistic" : "exact"}};
        maybe_write_json(args.out, doc);
    }
    return 0;
}

int cmd_export(const std::string& name, const std::string& out) {
    HeckeSymmetry s = builtin(name);
    write_symmetry_file(out, s);
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace qfrob::cli
