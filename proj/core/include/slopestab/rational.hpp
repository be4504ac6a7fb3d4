#pragma once
// Exact rational scalars. Everything in this library computes over Q (or
// over Q adjoined a single square root, see quadirr.hpp); there are no
// floating point tolerances anywhere in a decision path.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace slopestab {

using Int = mpz_class;
using Rat = mpq_class;

// Library-wide error type. Thrown for precondition violations, inconsistent
// input data, and parse failures; the CLI maps these to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_even_integer(const Rat& r) {
    return is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
}

// floor(r) as an exact integer.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// Parses "p", "-p", "p/q" (whitespace-free). Throws Error on anything else.
Rat parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q", q > 0.
std::string rat_str(const Rat& r);

}  // namespace slopestab
