#pragma once

#include <cstdint>

#include "semialg/linsystem.hpp"

namespace semialg {

// The n-cycle parity system x_i + x_(i+1) = b_i over F_2 with a single odd
// charge on the first edge: unsatisfiable, width 2.
LinSystemFp tseitin_cycle(std::uint32_t n);

// m random rows of support size uniform in [1, w]; deterministic in seed.
LinSystemFp random_system(std::uint64_t p, std::uint32_t n, std::uint32_t w, std::uint32_t m,
                          std::uint64_t seed);

// Resamples random_system (bumping the seed) until solving yields a
// certificate.
LinSystemFp random_unsat_system(std::uint64_t p, std::uint32_t n, std::uint32_t w,
                                std::uint32_t m, std::uint64_t seed);

// Two rows on one random support of size w: a and lambda*a with the
// right-hand side perturbed, so the pair is unsatisfiable by construction.
LinSystemFp planted_unsat_pair(std::uint64_t p, std::uint32_t n, std::uint32_t w,
                               std::uint64_t seed);

}  // namespace semialg
