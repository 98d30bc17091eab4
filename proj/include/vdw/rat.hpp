#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vdw {

using Int = mpz_class;

/// Exact rational scalar. GMP keeps values canonical (gcd(num, den) = 1,
/// den >= 1) through arithmetic; only raw construction needs an explicit
/// canonicalize, which the helpers below perform.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace vdw
