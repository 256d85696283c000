#include "semialg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "semialg/errors.hpp"

namespace semialg {

LinSystemFp tseitin_cycle(std::uint32_t n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    LinSystemFp sys(2, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> row(n, 0);
        row[i] = 1;
        row[(i + 1) % n] = 1;
        sys.add_row(std::move(row), i == 0 ? 1 : 0);
    }
    return sys;
}

namespace {

std::vector<std::uint32_t> random_support(std::mt19937_64& rng, std::uint32_t n,
                                          std::uint32_t size) {
    std::vector<std::uint32_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(size);
    std::sort(cols.begin(), cols.end());
    return cols;
}

}  // namespace

LinSystemFp random_system(std::uint64_t p, std::uint32_t n, std::uint32_t w, std::uint32_t m,
                          std::uint64_t seed) {
    if (w == 0 || w > n) throw Error("width must be in [1, n]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> width_dist(1, w);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, static_cast<std::uint32_t>(p - 1));
    std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(p - 1));

    LinSystemFp sys(p, n);
    for (std::uint32_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> row(n, 0);
        for (const auto col : random_support(rng, n, width_dist(rng))) {
            row[col] = nonzero(rng);
        }
        sys.add_row(std::move(row), any(rng));
    }
    return sys;
}

LinSystemFp random_unsat_system(std::uint64_t p, std::uint32_t n, std::uint32_t w,
                                std::uint32_t m, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        LinSystemFp sys = random_system(p, n, w, m, seed + attempt * 0x9e3779b97f4a7c15ULL);
        if (std::holds_alternative<Certificate>(solve(sys))) return sys;
        if (attempt > 100000) throw Error("rejection sampling did not find an unsat system");
    }
}

LinSystemFp planted_unsat_pair(std::uint64_t p, std::uint32_t n, std::uint32_t w,
                               std::uint64_t seed) {
    if (w == 0 || w > n) throw Error("width must be in [1, n]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, static_cast<std::uint32_t>(p - 1));
    std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(p - 1));

    const auto support = random_support(rng, n, w);
    std::vector<std::uint32_t> base(n, 0);
    for (const auto col : support) base[col] = nonzero(rng);
    const std::uint32_t b1 = any(rng);
    const std::uint64_t lambda = nonzero(rng);
    const std::uint32_t delta = nonzero(rng);

    std::vector<std::uint32_t> scaled(n, 0);
    for (const auto col : support) {
        scaled[col] = static_cast<std::uint32_t>((base[col] * lambda) % p);
    }
    const auto b2 = static_cast<std::uint32_t>((b1 * lambda + delta) % p);

    LinSystemFp sys(p, n);
    sys.add_row(std::move(base), b1);
    sys.add_row(std::move(scaled), b2);
    return sys;
}

}  // namespace semialg
