#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace firetree {

// All game quantities are exact rationals. Competitive-ratio assertions and
// LP optima are decided with no rounding anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "7", "-3/4" and decimal literals like "1.5" (converted exactly).
Rat rat_from_string(const std::string& s);

// Canonical "num/den" form, e.g. "3/2", "4/1".
std::string rat_to_string(const Rat& r);

// Display-only decimal expansion, truncated towards zero.
std::string rat_to_decimal(const Rat& r, int digits = 6);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
bool rat_is_integer(const Rat& r);

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }
std::vector<Rat> make_rats(const std::vector<long long>& vs);

// Exact integer certificate for comparisons against the inverse golden
// ratio: for p, q > 0, p/q >= 1/phi iff p^2 + pq - q^2 >= 0.
Int phi_certificate(const Int& p, const Int& q);

// Sign of x - 1/phi for x > 0 (never 0: sqrt(5) is irrational).
int cmp_inv_phi(const Rat& x);

}  // namespace firetree
