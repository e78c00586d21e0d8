#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fermatshift/error.hpp"

namespace fermatshift {

// All integer quantities are exact. Natural is non-negative by convention;
// operations validate their own domains.
using Natural = mpz_class;
using Index = std::uint64_t;

Natural gcd(const Natural& a, const Natural& b);
Natural pow2(Index e);
Index bit_length(const Natural& n); // 0 for n = 0
bool fits_index(const Natural& n);
Index to_index(const Natural& n); // raises cap_exceeded when out of range

// Strict decimal parse: "0" or [1-9][0-9]*, nothing else.
std::optional<Natural> parse_decimal(const std::string& text);

struct Valuation {
    Natural base;
    Index exponent;
};

// Largest e with base^e | m. Requires base prime and m >= 1.
Valuation valuation(const Natural& base, const Natural& m);

// 2-adic valuation without the primality gate; the internal workhorse.
Index nu2(const Natural& m);

// Euler totient from the prime factorization; raises limit_exhausted when
// the factoring budget runs out.
Natural euler_phi(const Natural& n);

// Least e >= 1 with a^e = 1 (mod n). Requires gcd(a, n) = 1; n = 1 gives 1.
Natural multiplicative_order(const Natural& a, const Natural& n);

// a^e mod modulus by square-and-multiply, result in [0, modulus).
Natural pow_mod(const Natural& a, const Natural& e, const Natural& modulus);

// s_0 = 2 mod M, s_{j+1} = s_j^2 mod M; returns s_n = 2^(2^n) mod M.
// No limit on n beyond iteration time.
Natural iterated_square_mod(const Natural& modulus, Index n);

enum class Primality { composite, prime, probable_prime };

// "deterministic" / "probable"; the label certificates carry.
const char* primality_label(Primality c);
std::optional<Primality> primality_from_label(const std::string& label);

// Deterministic strong-pseudoprime bases below 2^64; above that, fixed-seed
// probabilistic rounds with error < 2^-128, flagged probable_prime.
Primality classify_prime(const Natural& n);
bool is_prime(const Natural& n);

struct PrimePower {
    Natural prime;
    unsigned exponent;
};

struct Factorization {
    std::vector<PrimePower> factors; // ascending primes
    Natural cofactor{1};             // unfactored composite part; 1 when complete
    bool complete = true;

    Natural reassemble() const;
};

inline constexpr std::uint64_t default_factor_budget = 1'000'000;

// Trial division, perfect-power peeling, then Brent-style rho under an
// iteration budget per composite. Partial results come back in-band.
Factorization factorize(const Natural& n, std::uint64_t budget = default_factor_budget);

// Primes strictly below limit.
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

} // namespace fermatshift
