// saj: compile, check and measure semi-algebraic refutations of linear
// systems over prime fields.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "semialg/commands.hpp"
#include "semialg/errors.hpp"

namespace {

semialg::RefuteMode parse_mode(const std::string& mode) {
    if (mode == "auto") return semialg::RefuteMode::Auto;
    if (mode == "f2") return semialg::RefuteMode::F2;
    if (mode == "fp") return semialg::RefuteMode::Fp;
    throw CLI::ValidationError("--mode must be auto, f2 or fp");
}

struct Range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    std::uint32_t step = 1;
};

Range parse_range(const std::string& s) {
    Range r;
    const auto colon1 = s.find(':');
    if (colon1 == std::string::npos) throw CLI::ValidationError("--n must look like A:B or A:B:S");
    r.lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, colon1)));
    const auto rest = s.substr(colon1 + 1);
    const auto colon2 = rest.find(':');
    if (colon2 == std::string::npos) {
        r.hi = static_cast<std::uint32_t>(std::stoul(rest));
    } else {
        r.hi = static_cast<std::uint32_t>(std::stoul(rest.substr(0, colon2)));
        r.step = static_cast<std::uint32_t>(std::stoul(rest.substr(colon2 + 1)));
        if (r.step == 0) throw CLI::ValidationError("--n step must be positive");
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-algebraic refutations from Gaussian elimination over prime fields"};
    app.require_subcommand(1);

    std::string in_path, out_path, proof_path, system_path, csv_path;
    std::string mode = "auto";
    std::string family;
    std::string n_range;
    std::uint64_t cap = std::uint64_t(1) << 20;
    std::uint64_t field = 2;
    std::uint64_t seed = 0;
    std::uint32_t width = 2;

    auto* refute = app.add_subcommand("refute", "compile a checked refutation");
    refute->add_option("input", in_path, "system file")->required();
    refute->add_option("-o,--output", out_path, "proof file to write")->required();
    refute->add_option("--mode", mode, "auto|f2|fp")->capture_default_str();

    auto* check = app.add_subcommand("check", "re-verify a proof against its system");
    check->add_option("proof", proof_path, "proof file")->required();
    check->add_option("--system", system_path, "system file")->required();

    auto* solve = app.add_subcommand("solve", "solve or extract a certificate");
    solve->add_option("input", in_path, "system file")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive satisfiability check");
    oracle->add_option("input", in_path, "system file")->required();
    oracle->add_option("--cap", cap, "max assignments to enumerate")->capture_default_str();

    auto* stats = app.add_subcommand("stats", "verify a proof file and print its metrics");
    stats->add_option("proof", proof_path, "proof file")->required();

    auto* bench = app.add_subcommand("bench", "measure proof sizes over a family");
    bench->add_option("--family", family, "tseitin-cycle|random")->required();
    bench->add_option("--n", n_range, "A:B or A:B:S")->required();
    bench->add_option("--field", field, "prime field")->capture_default_str();
    bench->add_option("--w", width, "max row width (random family)")->capture_default_str();
    bench->add_option("--seed", seed, "RNG seed")->capture_default_str();
    bench->add_option("--csv", csv_path, "CSV output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (refute->parsed()) {
            return semialg::cmd_refute(in_path, out_path, parse_mode(mode), std::cout, std::cerr);
        }
        if (check->parsed()) {
            return semialg::cmd_check(proof_path, system_path, std::cout, std::cerr);
        }
        if (solve->parsed()) {
            return semialg::cmd_solve(in_path, std::cout, std::cerr);
        }
        if (oracle->parsed()) {
            return semialg::cmd_oracle(in_path, cap, std::cout, std::cerr);
        }
        if (stats->parsed()) {
            return semialg::cmd_stats(proof_path, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            const Range r = parse_range(n_range);
            return semialg::cmd_bench(family, r.lo, r.hi, r.step, field, width, seed, csv_path,
                                      std::cout, std::cerr);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const semialg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
