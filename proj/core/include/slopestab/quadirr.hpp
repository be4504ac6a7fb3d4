#pragma once
// Exact arithmetic in Q(sqrt(n)): values a + b*sqrt(n) with rational a, b and
// a non-negative integer radicand n. Interval endpoints in this library
// (pseudo-Seshadri bounds, quadratic root thresholds) are exactly such
// numbers, and every comparison against them must be decided exactly — the
// sign logic squares the radical away instead of approximating it.

#include <optional>
#include <string>

#include "slopestab/rational.hpp"

namespace slopestab {

class QuadValue;

// Exact three-way comparison, valid across different radicands: sign(x - y).
// Same-field differences reduce to a sign; mixed fields isolate one radical
// on each side and square, which stays inside a single Q(sqrt(n)).
int quad_compare(const QuadValue& x, const QuadValue& y);

class QuadValue {
public:
    QuadValue() = default;
    QuadValue(const Rat& rational) : a_(rational) {}  // NOLINT: implicit by design
    QuadValue(Rat a, Rat b, Int n);

    // sqrt(r) for rational r >= 0, as an exact QuadValue.
    static QuadValue sqrt_of(const Rat& r);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    const Int& radicand() const { return n_; }
    bool is_rational() const { return b_ == 0; }
    // Only valid when is_rational().
    const Rat& as_rational() const;

    int sign() const;

    QuadValue operator-() const;
    QuadValue operator+(const QuadValue& o) const;
    QuadValue operator-(const QuadValue& o) const;
    QuadValue operator*(const QuadValue& o) const;

    bool operator==(const QuadValue& o) const { return quad_compare(*this, o) == 0; }
    bool operator!=(const QuadValue& o) const { return quad_compare(*this, o) != 0; }
    bool operator<(const QuadValue& o) const { return quad_compare(*this, o) < 0; }
    bool operator<=(const QuadValue& o) const { return quad_compare(*this, o) <= 0; }
    bool operator>(const QuadValue& o) const { return quad_compare(*this, o) > 0; }
    bool operator>=(const QuadValue& o) const { return quad_compare(*this, o) >= 0; }

    // Exact floor.
    Int floor() const;

    // Canonical text: "p/q" when rational, else e.g. "2+1/3*sqrt(5)".
    std::string str() const;
    double approx() const;

private:
    void normalize();
    Rat a_, b_;
    Int n_;  // 0 when the value is rational
};

// min over a set is taken elementwise with exact comparisons.
QuadValue quad_min(const QuadValue& x, const QuadValue& y);

}  // namespace slopestab
