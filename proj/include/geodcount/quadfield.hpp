#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "geodcount/errors.hpp"

namespace geodcount::quadfield {

// An element x + y*sqrt(2) of Z[sqrt(2)].
struct QuadInt {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

inline constexpr QuadInt kOne{1, 0};
inline constexpr QuadInt kSqrt2{0, 1};
inline constexpr QuadInt kUnit{1, 1};          // eps = 1 + sqrt(2), N(eps) = -1
inline constexpr QuadInt kUnitSq{3, 2};        // eps^2 = 3 + 2 sqrt(2)
inline constexpr QuadInt kUnitInv{-1, 1};      // eps^{-1} = -1 + sqrt(2)
inline constexpr QuadInt kUnitSqInv{3, -2};    // eps^{-2}

inline constexpr double kSqrt2Real = 1.4142135623730951;
inline constexpr double kLogUnit = 0.881373587019543;  // log(1 + sqrt(2))

QuadInt mul(QuadInt a, QuadInt b);
QuadInt neg(QuadInt a);
QuadInt conj(QuadInt a);
std::int64_t norm(QuadInt a);

// Exact sign of the real embedding x + y*sqrt(2) (sqrt(2) > 0); 0 only for (0,0).
int sign(QuadInt a);
double embed(QuadInt a);

// eps^k computed by repeated multiplication.
QuadInt unit_power(int k);

// Kronecker character mod 8: 0 on even d, +1 for d = +-1 (mod 8), -1 for d = +-3 (mod 8).
int chi8(std::uint64_t d);

// Number of ideals of Z[sqrt(2)] of norm n, via the divisor sum of chi8
// (evaluated multiplicatively from the factorization of n).
std::uint32_t ideal_count(std::uint64_t n);

// Canonical generators: g = x + y*sqrt(2) with N(g) = +n, g > 0 and
// sqrt(n) <= g < eps^2 sqrt(n). Exactly one generator per ideal of norm n.
std::vector<QuadInt> canonical_generators(std::uint64_t n);

// Norm-form oracle: |{canonical generators}|.
std::uint32_t ideal_count_bruteforce(std::uint64_t n);

struct IdealCountTable {
    std::uint64_t limit = 0;
    std::vector<std::uint16_t> counts;  // counts[n-1] = N(n), 1 <= n <= limit

    std::uint16_t at(std::uint64_t n) const {
        if (n < 1 || n > limit) throw SieveRangeError("ideal count table: n out of range");
        return counts[n - 1];
    }
};

// Divisor-character sieve: counts[n] = sum_{d | n} chi8(d) for all n <= limit.
// Partitioned over disjoint output ranges when workers > 1; result is identical
// for any worker count.
IdealCountTable ideal_count_sieve(std::uint64_t limit, int workers = 0);

// Binary cache: magic "N2SIEVE1", u32 LE version = 1, u64 LE limit, then
// limit x u16 LE counts.
void write_sieve_cache(const IdealCountTable& table, const std::filesystem::path& path);
IdealCountTable read_sieve_cache(const std::filesystem::path& path);

// 64-bit deterministic Miller-Rabin.
bool is_prime(std::uint64_t n);

std::uint64_t isqrt64(std::uint64_t n);

} // namespace geodcount::quadfield
