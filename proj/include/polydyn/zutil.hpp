#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydyn {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prime factorization of |n| (n != 0), as prime -> exponent.
std::map<Int, int> factor(const Int& n);

bool is_probable_prime(const Int& n);

// Exact k-th root: returns r with r^k == n if one exists in Z.
std::optional<Int> exact_root(const Int& n, unsigned k);

// Exact k-th root in Q: r with r^k == q.
std::optional<Rat> exact_root(const Rat& q, unsigned k);

// p-adic valuation of n != 0; val(0) throws.
long valuation(const Int& n, const Int& p);
// Valuation of q != 0 (may be negative).
long valuation(const Rat& q, const Int& p);

// Parse "p" or "p/q" (arbitrary precision, canonicalized). Throws parse_error.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);

// Largest divisor s of m such that q is an exact s-th power; returns (s, root).
std::pair<unsigned, Rat> largest_power_divisor(const Rat& q, unsigned m);

// Rational reconstruction: find p/q with |p|, q <= floor(sqrt(M/2)), p/q == r mod M.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& M);

// The rational with smallest denominator in [lo, hi] (lo <= hi).
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

// All rational roots of sum coeffs[i] x^i (ascending, not all zero).
std::vector<Rat> rational_poly_roots(const std::vector<Rat>& coeffs);

// Deterministic xorshift-based generator for property tests and prime picking.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
};

// Random 62-bit probable prime avoiding divisors of `avoid` entries.
std::uint64_t random_prime64(SplitMix64& rng, const std::vector<Int>& avoid);

}  // namespace polydyn
