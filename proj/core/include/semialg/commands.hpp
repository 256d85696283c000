#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "semialg/derivations.hpp"
#include "semialg/linsystem.hpp"

namespace semialg {

// Command implementations shared by the saj tool and the test suites.
// Exit codes:
//   refute: 0 refuted, 1 satisfiable, 2 parse/io error, 3 internal check failure
//   check:  0 accepted refutation, 2 parse/io error, 4 hypothesis mismatch,
//           5 rule violation / not a refutation (the offending line is named)
//   solve/oracle/stats/bench: 0 ok, 2 on errors (oracle: also when over cap)

enum class RefuteMode { Auto, F2, Fp };

int cmd_refute(const std::string& system_path, const std::string& proof_path, RefuteMode mode,
               std::ostream& out, std::ostream& err);
int cmd_check(const std::string& proof_path, const std::string& system_path, std::ostream& out,
              std::ostream& err);
int cmd_solve(const std::string& system_path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& system_path, std::uint64_t cap, std::ostream& out,
               std::ostream& err);
int cmd_stats(const std::string& proof_path, std::ostream& out, std::ostream& err);

struct BenchRecord {
    std::string family;
    std::uint32_t n = 0;
    std::uint64_t p = 2;
    std::uint32_t w = 0;
    std::size_t length = 0;
    long long size = 0;
    int degree = 0;
    std::size_t lines = 0;
    long long ms = 0;
};

// Runs one full refute + check round and reports the checked metrics.
BenchRecord bench_instance(const std::string& family, const LinSystemFp& sys, RefuteMode mode);

int cmd_bench(const std::string& family, std::uint32_t n_lo, std::uint32_t n_hi,
              std::uint32_t n_step, std::uint64_t p, std::uint32_t w, std::uint64_t seed,
              const std::string& csv_path, std::ostream& out, std::ostream& err);

// Shared pretty-printers.
std::string format_assignment(const std::vector<std::uint32_t>& assignment);
std::string format_certificate(const Certificate& cert);
std::string format_metrics(const ProofMetrics& m);

}  // namespace semialg
