#include "geodcount/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <thread>

namespace geodcount::quadfield {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

namespace {

i64 checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw ArithmeticOverflow(std::string("overflow in ") + what);
    return static_cast<i64>(v);
}

} // namespace

QuadInt mul(QuadInt a, QuadInt b) {
    i128 x = i128(a.x) * b.x + 2 * i128(a.y) * b.y;
    i128 y = i128(a.x) * b.y + i128(a.y) * b.x;
    return {checked_i64(x, "qi_mul"), checked_i64(y, "qi_mul")};
}

QuadInt neg(QuadInt a) { return {-a.x, -a.y}; }

QuadInt conj(QuadInt a) { return {a.x, -a.y}; }

std::int64_t norm(QuadInt a) {
    i128 n = i128(a.x) * a.x - 2 * i128(a.y) * a.y;
    return checked_i64(n, "qi_norm");
}

int sign(QuadInt a) {
    if (a.x == 0 && a.y == 0) return 0;
    if (a.x >= 0 && a.y >= 0) return 1;
    if (a.x <= 0 && a.y <= 0) return -1;
    // Mixed signs: x + y sqrt2 > 0 iff x^2 > 2 y^2 when x > 0, iff x^2 < 2 y^2 when y > 0.
    i128 lhs = i128(a.x) * a.x;
    i128 rhs = 2 * i128(a.y) * a.y;
    if (a.x > 0) return lhs > rhs ? 1 : -1;  // lhs == rhs impossible: sqrt2 irrational
    return lhs < rhs ? 1 : -1;
}

double embed(QuadInt a) { return double(a.x) + double(a.y) * kSqrt2Real; }

QuadInt unit_power(int k) {
    QuadInt base = k >= 0 ? kUnit : kUnitInv;
    int n = k >= 0 ? k : -k;
    QuadInt r = kOne;
    for (int i = 0; i < n; ++i) r = mul(r, base);
    return r;
}

int chi8(std::uint64_t d) {
    switch (d & 7u) {
        case 1: case 7: return 1;
        case 3: case 5: return -1;
        default: return 0;
    }
}

std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return (unsigned __int128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic for all 64-bit inputs with this witness set.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint32_t ideal_count(std::uint64_t n) {
    if (n == 0) throw SieveRangeError("ideal_count: n must be positive");
    std::uint32_t result = 1;
    while ((n & 1) == 0) n >>= 1;  // chi8 vanishes on even divisors
    for (u64 p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        int a = 0;
        while (n % p == 0) { n /= p; ++a; }
        if (chi8(p) == 1) result *= static_cast<std::uint32_t>(a + 1);
        else if ((a & 1) != 0) return 0;
    }
    if (n > 1) {  // prime cofactor, exponent 1
        if (chi8(n) == -1) return 0;
        result *= 2;
    }
    return result;
}

std::vector<QuadInt> canonical_generators(std::uint64_t n) {
    if (n == 0) throw SieveRangeError("canonical_generators: n must be positive");
    std::vector<QuadInt> gens;
    // g in [sqrt(n), eps^2 sqrt(n)) with N(g) = +n forces 0 <= y < 2 sqrt(n).
    u64 ybound = 2 * isqrt64(n) + 2;
    for (u64 y = 0; y <= ybound; ++y) {
        u64 t = n + 2 * y * y;
        u64 x = isqrt64(t);
        if (x * x != t) continue;
        QuadInt g{i64(x), i64(y)};
        // window: n <= g^2 < eps^4 n, with g^2 = (x^2 + 2y^2) + 2xy sqrt(2), eps^4 = 17 + 12 sqrt(2)
        QuadInt gsq{i64(x * x + 2 * y * y), i64(2 * x * y)};
        if (sign({gsq.x - i64(n), gsq.y}) < 0) continue;
        if (sign({gsq.x - 17 * i64(n), gsq.y - 12 * i64(n)}) >= 0) continue;
        gens.push_back(g);
    }
    return gens;
}

std::uint32_t ideal_count_bruteforce(std::uint64_t n) {
    return static_cast<std::uint32_t>(canonical_generators(n).size());
}

IdealCountTable ideal_count_sieve(std::uint64_t limit, int workers) {
    if (limit < 1) throw SieveRangeError("ideal_count_sieve: limit must be >= 1");
    std::vector<std::int16_t> acc;
    try {
        acc.assign(limit, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("ideal_count_sieve: allocation failed");
    }
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    u64 chunk = (limit + workers - 1) / static_cast<u64>(workers);

    // Each worker owns an output slice [lo, hi); writes are disjoint, so the
    // result is independent of the partition.
    auto run = [&](u64 lo, u64 hi) {
        // slice owns n in (lo, hi]
        for (u64 d = 1; d <= hi; d += 2) {
            auto c = static_cast<std::int16_t>(chi8(d));
            for (u64 m = ((lo + d) / d) * d; m <= hi; m += d) acc[m - 1] += c;
        }
    };
    if (workers == 1 || limit < 4096) {
        run(0, limit);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            u64 lo = static_cast<u64>(w) * chunk;
            u64 hi = std::min(limit, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    IdealCountTable table;
    table.limit = limit;
    table.counts.resize(limit);
    for (u64 i = 0; i < limit; ++i) table.counts[i] = static_cast<std::uint16_t>(acc[i]);
    return table;
}

void write_sieve_cache(const IdealCountTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("cannot open cache file for writing: " + path.string());
    out.write("N2SIEVE1", 8);
    std::uint32_t version = 1;
    std::uint64_t limit = table.limit;
    unsigned char hdr[12];
    for (int i = 0; i < 4; ++i) hdr[i] = static_cast<unsigned char>((version >> (8 * i)) & 0xff);
    for (int i = 0; i < 8; ++i) hdr[4 + i] = static_cast<unsigned char>((limit >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(hdr), 12);
    std::vector<unsigned char> payload(table.counts.size() * 2);
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        payload[2 * i] = static_cast<unsigned char>(table.counts[i] & 0xff);
        payload[2 * i + 1] = static_cast<unsigned char>(table.counts[i] >> 8);
    }
    out.write(reinterpret_cast<const char*>(payload.data()), std::streamsize(payload.size()));
    if (!out) throw ResourceError("write failed: " + path.string());
}

IdealCountTable read_sieve_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open cache file: " + path.string());
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, "N2SIEVE1", 8) != 0)
        throw ResourceError("bad cache magic: " + path.string());
    unsigned char hdr[12];
    in.read(reinterpret_cast<char*>(hdr), 12);
    if (!in) throw ResourceError("truncated cache header: " + path.string());
    std::uint32_t version = 0;
    std::uint64_t limit = 0;
    for (int i = 0; i < 4; ++i) version |= std::uint32_t(hdr[i]) << (8 * i);
    for (int i = 0; i < 8; ++i) limit |= std::uint64_t(hdr[4 + i]) << (8 * i);
    if (version != 1) throw ResourceError("unsupported cache version");
    IdealCountTable table;
    table.limit = limit;
    table.counts.resize(limit);
    std::vector<unsigned char> payload(limit * 2);
    in.read(reinterpret_cast<char*>(payload.data()), std::streamsize(payload.size()));
    if (!in) throw ResourceError("truncated cache payload: " + path.string());
    for (std::uint64_t i = 0; i < limit; ++i)
        table.counts[i] = static_cast<std::uint16_t>(payload[2 * i] | (payload[2 * i + 1] << 8));
    return table;
}

} // namespace geodcount::quadfield
