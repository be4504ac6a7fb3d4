#include "slopestab/quadirr.hpp"

#include <cmath>

namespace slopestab {
namespace {

// Pulls square factors out of n (trial division by small primes, then a
// perfect-square check on the residue). Exactness never depends on this —
// sign decisions square the radical away — it only keeps the printed form
// canonical, so a bounded sieve is enough.
void extract_square_part(Int& n, Int& outside) {
    outside = 1;
    if (n <= 1) return;
    for (unsigned long p = 2; p <= 997; p = (p == 2 ? 3 : p + 2)) {
        Int p2 = Int(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            n /= p2;
            outside *= p;
        }
        if (n < p2) break;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        outside *= root;
        n = 1;
    }
}

}  // namespace

QuadValue::QuadValue(Rat a, Rat b, Int n) : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
    if (n_ < 0) throw Error("QuadValue: negative radicand");
    normalize();
}

void QuadValue::normalize() {
    if (b_ == 0 || n_ == 0) {
        b_ = 0;
        n_ = 0;
        return;
    }
    Int outside;
    extract_square_part(n_, outside);
    if (outside != 1) b_ *= Rat(outside);
    if (n_ == 1) {
        a_ += b_;
        b_ = 0;
        n_ = 0;
    }
}

QuadValue QuadValue::sqrt_of(const Rat& r) {
    if (r < 0) throw Error("sqrt_of: negative argument");
    if (r == 0) return QuadValue(Rat(0));
    // sqrt(p/q) = sqrt(p*q)/q with p*q a positive integer.
    Int pq = r.get_num() * r.get_den();
    return QuadValue(Rat(0), Rat(1, r.get_den()), pq);
}

const Rat& QuadValue::as_rational() const {
    if (!is_rational()) throw Error("QuadValue: not rational");
    return a_;
}

int QuadValue::sign() const {
    if (b_ == 0) return slopestab::sign(a_);
    if (a_ == 0) return slopestab::sign(b_);
    const int sa = slopestab::sign(a_), sb = slopestab::sign(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * n; the larger magnitude wins.
    Rat a2 = a_ * a_;
    Rat b2n = b_ * b_ * Rat(n_);
    if (a2 == b2n) return 0;
    return a2 > b2n ? sa : sb;
}

QuadValue QuadValue::operator-() const {
    QuadValue r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadValue QuadValue::operator+(const QuadValue& o) const {
    if (!is_rational() && !o.is_rational() && n_ != o.n_)
        throw Error("QuadValue: mixed radicands");
    QuadValue r;
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
    r.n_ = is_rational() ? o.n_ : n_;
    r.normalize();
    return r;
}

QuadValue QuadValue::operator-(const QuadValue& o) const { return *this + (-o); }

QuadValue QuadValue::operator*(const QuadValue& o) const {
    if (!is_rational() && !o.is_rational() && n_ != o.n_)
        throw Error("QuadValue: mixed radicands");
    const Int n = is_rational() ? o.n_ : n_;
    QuadValue r;
    r.a_ = a_ * o.a_ + b_ * o.b_ * Rat(n);
    r.b_ = a_ * o.b_ + b_ * o.a_;
    r.n_ = n;
    r.normalize();
    return r;
}

Int QuadValue::floor() const {
    if (b_ == 0) return rat_floor(a_);
    // Rational bracket for b*sqrt(n): with s = b^2*n = p/q, sqrt(s) lies in
    // [isqrt(pq)/q, (isqrt(pq)+1)/q]; signs flip the bracket for b < 0.
    Rat s = b_ * b_ * Rat(n_);
    Int pq = s.get_num() * s.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
    Rat lo(root, s.get_den()), hi(root + 1, s.get_den());
    lo.canonicalize();
    hi.canonicalize();
    if (slopestab::sign(b_) < 0) {
        Rat t = -hi;
        hi = -lo;
        lo = t;
    }
    Int f = rat_floor(a_ + lo);
    // The bracket width is at most 1/q, so a couple of exact nudges settle it.
    while ((*this - QuadValue(Rat(f + 1))).sign() >= 0) ++f;
    while ((*this - QuadValue(Rat(f))).sign() < 0) --f;
    return f;
}

std::string QuadValue::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string out;
    if (a_ != 0) out += rat_str(a_);
    if (slopestab::sign(b_) >= 0 && a_ != 0) out += "+";
    if (b_ == -1) out += "-";
    else if (b_ != 1) out += rat_str(b_) + "*";
    out += "sqrt(" + n_.get_str() + ")";
    return out;
}

double QuadValue::approx() const {
    double rad = std::sqrt(n_.get_d());
    return a_.get_d() + b_.get_d() * rad;
}

int quad_compare(const QuadValue& x, const QuadValue& y) {
    if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand())
        return (x - y).sign();
    // x - y = [(a_x - a_y) + b_x sqrt(n)] - b_y sqrt(m). Compare the bracket
    // P against q = b_y sqrt(m): once both carry the same strict sign,
    // squaring is monotone and P^2 - q^2 lives in Q(sqrt(n)) alone.
    QuadValue p(x.rational_part() - y.rational_part(), x.radical_coeff(), x.radicand());
    const int sp = p.sign();
    const int sq = slopestab::sign(y.radical_coeff());
    if (sp != sq) return sp < sq ? -1 : 1;
    QuadValue p2 = p * p;
    Rat q2 = y.radical_coeff() * y.radical_coeff() * Rat(y.radicand());
    const int s2 = (p2 - QuadValue(q2)).sign();
    return sp > 0 ? s2 : -s2;
}

QuadValue quad_min(const QuadValue& x, const QuadValue& y) {
    return (y < x) ? y : x;
}

}  // namespace slopestab
