#include <iostream>

#include "CLI11.hpp"
#include "cli_lib.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for Hecke symmetries, reflection-equation "
                 "algebras, and their symmetric-function identities"};
    app.require_subcommand(1);

    qfrob::cli::CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Run the verification suite on a symmetry");
    check->add_option("input", check_args.input, "built-in name (r2, r11, glN:<N>, glMN:<m>,<n>) or symmetry file")
        ->required();
    check->add_option("--mode", check_args.mode, "algebra | rep | spectral | all")
        ->check(CLI::IsMember({"algebra", "rep", "spectral", "all"}));
    check->add_option("--n", check_args.max_n, "largest symmetric degree (default 3)");
    check->add_option("--k", check_args.rep_k_max, "largest tensor power (default 3)");
    check->add_option("--kmax", check_args.kmax, "bi-rank scan depth (default 4)");
    check->add_flag("--fast-rank", check_args.fast_rank, "probabilistic ranks by specialization");
    check->add_option("--out", check_args.out, "write the report as JSON");

    qfrob::cli::TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print character or spectral tables");
    table->add_option("kind", table_args.kind, "characters | schur | power-sums")->required();
    table->add_option("--n", table_args.n, "Hecke algebra size for characters (default 3)");
    std::string family;
    table->add_option("--family", family, "eigenvalue family m,n for spectral tables");
    table->add_option("--up-to", table_args.up_to, "largest degree (default 3)");
    table->add_option("--out", table_args.out, "write the table as JSON");

    qfrob::cli::BirankArgs birank_args;
    auto* birank = app.add_subcommand("birank", "Detect the bi-rank of a symmetry");
    birank->add_option("input", birank_args.input, "built-in name or symmetry file")->required();
    birank->add_option("--kmax", birank_args.kmax, "scan depth (default 4)");
    birank->add_flag("--fast-rank", birank_args.fast_rank, "probabilistic ranks");
    birank->add_option("--out", birank_args.out, "write the result as JSON");

    std::string export_name, export_out;
    auto* exp = app.add_subcommand("export", "Write a built-in symmetry as a symmetry file");
    exp->add_option("name", export_name, "built-in name")->required();
    exp->add_option("--out", export_out, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return qfrob::cli::cmd_check(check_args);
        if (table->parsed()) {
            if (!family.empty()) {
                auto comma = family.find(',');
                if (comma == std::string::npos)
                    throw qfrob::Error("--family expects m,n");
                table_args.family_m = std::stoi(family.substr(0, comma));
                table_args.family_n = std::stoi(family.substr(comma + 1));
            }
            return qfrob::cli::cmd_table(table_args);
        }
        if (birank->parsed()) return qfrob::cli::cmd_birank(birank_args);
        if (exp->parsed()) return qfrob::cli::cmd_export(export_name, export_out);
    } catch (const qfrob::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qfrob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
