#pragma once

// Exact numeric foundation: arbitrary-precision integers and normalized
// rationals (GMP), binary floats with explicit per-value precision (MPFR),
// and two closed value types used throughout: q*2^(a/2)*pi^(b/2) radicals
// and the quadratic extension Q(sqrt(6)).

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "faltung/errors.hpp"

namespace faltung {

using ExactInt = mpz_class;

ExactInt factorial(unsigned long n);
ExactInt binomial(unsigned long n, unsigned long k);
ExactInt ipow(const ExactInt& base, unsigned long e);

// Normalized rational: gcd(|num|,den)=1, den>=1, maintained after every
// operation (GMP's mpq keeps canonical form through arithmetic; all
// constructors canonicalize explicitly).
class ExactRat {
  public:
    ExactRat() : v_(0) {}
    ExactRat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRat(long num, long den);
    explicit ExactRat(const ExactInt& n) : v_(n) {}
    ExactRat(const ExactInt& num, const ExactInt& den);

    // Accepts "p/q" or "p", base 10.
    static ExactRat from_string(const std::string& s);

    ExactInt num() const { return v_.get_num(); }
    ExactInt den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    ExactRat inverse() const;
    ExactRat abs() const;
    // Integer exponent, negative allowed for nonzero values.
    ExactRat pow_int(long e) const;

    std::string to_string() const;
    const mpq_class& raw() const { return v_; }

    friend ExactRat operator+(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.v_ + b.v_)); }
    friend ExactRat operator-(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.v_ - b.v_)); }
    friend ExactRat operator*(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.v_ * b.v_)); }
    friend ExactRat operator/(const ExactRat& a, const ExactRat& b);
    ExactRat operator-() const { return ExactRat(mpq_class(-v_)); }
    ExactRat& operator+=(const ExactRat& o) { v_ += o.v_; return *this; }
    ExactRat& operator-=(const ExactRat& o) { v_ -= o.v_; return *this; }
    ExactRat& operator*=(const ExactRat& o) { v_ *= o.v_; return *this; }
    ExactRat& operator/=(const ExactRat& o);

    friend bool operator==(const ExactRat& a, const ExactRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactRat& a, const ExactRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactRat& a, const ExactRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactRat& a, const ExactRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactRat& a, const ExactRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactRat& a, const ExactRat& b) { return a.v_ >= b.v_; }

  private:
    explicit ExactRat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// Binary float with explicit precision; every arithmetic result is correctly
// rounded (round-to-nearest) at max(precisions of the operands).  Precision
// is part of the value, never ambient state.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t p);  // zero at precision p
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from(const ExactRat& q, mpfr_prec_t p);
    static BigFloat from(const ExactInt& n, mpfr_prec_t p);
    static BigFloat from_long(long n, mpfr_prec_t p);
    static BigFloat from_string(const std::string& dec, mpfr_prec_t p);
    static BigFloat pi(mpfr_prec_t p);
    static BigFloat e(mpfr_prec_t p);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent() const { return mpfr_get_exp(v_); }

    BigFloat rounded_to(mpfr_prec_t p) const;
    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat log() const;
    BigFloat pow_si(long e) const;
    BigFloat pow(const BigFloat& e) const;
    // One unit in the last place of this value (requires nonzero).
    BigFloat ulp() const;

    // Scientific notation with the given number of significant digits.
    std::string to_string(int sig_digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    // Same precision and same value; with the canonical mpfr significand
    // encoding this is bit-identity.
    bool identical(const BigFloat& o) const;

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw_mut() { return v_; }

  private:
    mpfr_t v_;
};

// q * 2^(two_half/2) * pi^(pi_half/2), exact.  Canonical form: q=0 forces
// both exponents to 0; otherwise the even part of the sqrt(2) exponent is
// folded into q so two_half is 0 or 1.  Powers of pi stay in the exponent
// (a rational q cannot absorb them), which keeps equality decidable: by
// transcendence of pi two values are equal iff their canonical triples are.
class ExactRadical {
  public:
    ExactRadical() : q_(0), two_half_(0), pi_half_(0) {}
    ExactRadical(ExactRat q, long two_half, long pi_half);
    explicit ExactRadical(const ExactRat& q) : ExactRadical(q, 0, 0) {}

    const ExactRat& q() const { return q_; }
    long two_half() const { return two_half_; }
    long pi_half() const { return pi_half_; }
    bool is_zero() const { return q_.is_zero(); }
    bool is_rational() const { return two_half_ == 0 && pi_half_ == 0; }
    ExactRat rational_value() const;

    ExactRadical inverse() const;
    ExactRadical operator-() const { return ExactRadical(-q_, two_half_, pi_half_); }

    friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b);
    friend ExactRadical operator*(const ExactRadical& a, const ExactRat& s);
    friend ExactRadical operator/(const ExactRadical& a, const ExactRadical& b);
    friend bool operator==(const ExactRadical& a, const ExactRadical& b);
    friend bool operator!=(const ExactRadical& a, const ExactRadical& b) { return !(a == b); }

    BigFloat to_float(mpfr_prec_t p) const;
    std::string to_string() const;

  private:
    ExactRat q_;
    long two_half_;
    long pi_half_;
};

inline ExactRadical radical_mul(const ExactRadical& x, const ExactRadical& y) { return x * y; }
inline BigFloat radical_to_float(const ExactRadical& x, mpfr_prec_t p) { return x.to_float(p); }

// Gamma(m/2) in closed form: a rational for even m, rational*sqrt(pi) for
// odd m (Gamma(1/2)=sqrt(pi), extended downward through Gamma(z+1)=z*Gamma(z)
// so negative odd m is fine).  Poles at even m<=0 are rejected.
ExactRadical gamma_half(long m);

// a + b*sqrt(6); field operations, exact.
class QSqrt6 {
  public:
    QSqrt6() : a_(0), b_(0) {}
    QSqrt6(long n) : a_(n), b_(0) {}  // NOLINT(google-explicit-constructor)
    explicit QSqrt6(ExactRat a) : a_(std::move(a)), b_(0) {}
    QSqrt6(ExactRat a, ExactRat b) : a_(std::move(a)), b_(std::move(b)) {}

    const ExactRat& rational_part() const { return a_; }
    const ExactRat& sqrt6_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QSqrt6 conjugate() const { return QSqrt6(a_, -b_); }
    QSqrt6 inverse() const;

    friend QSqrt6 operator+(const QSqrt6& x, const QSqrt6& y) { return QSqrt6(x.a_ + y.a_, x.b_ + y.b_); }
    friend QSqrt6 operator-(const QSqrt6& x, const QSqrt6& y) { return QSqrt6(x.a_ - y.a_, x.b_ - y.b_); }
    friend QSqrt6 operator*(const QSqrt6& x, const QSqrt6& y) {
        return QSqrt6(x.a_ * y.a_ + ExactRat(6) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    QSqrt6 operator-() const { return QSqrt6(-a_, -b_); }
    friend bool operator==(const QSqrt6& x, const QSqrt6& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QSqrt6& x, const QSqrt6& y) { return !(x == y); }

    std::string to_string() const;

  private:
    ExactRat a_, b_;
};

}  // namespace faltung
