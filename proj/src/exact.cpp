#include "faltung/exact.hpp"

#include <cstdio>
#include <cstdlib>

namespace faltung {

ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactInt binomial(unsigned long n, unsigned long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactInt ipow(const ExactInt& base, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

ExactRat::ExactRat(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) : v_(num, den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

ExactRat ExactRat::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw domain_error("unparsable rational: '" + s + "'");
    if (v.get_den() == 0) throw domain_error("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return ExactRat(std::move(v));
}

ExactRat operator/(const ExactRat& a, const ExactRat& b) {
    if (b.is_zero()) throw domain_error("rational division by zero");
    return ExactRat(mpq_class(a.v_ / b.v_));
}

ExactRat& ExactRat::operator/=(const ExactRat& o) {
    if (o.is_zero()) throw domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

ExactRat ExactRat::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero rational");
    return ExactRat(mpq_class(1 / v_));
}

ExactRat ExactRat::abs() const { return ExactRat(mpq_class(::abs(v_))); }

ExactRat ExactRat::pow_int(long e) const {
    if (e == 0) return ExactRat(1);
    if (is_zero() && e < 0) throw domain_error("negative power of zero");
    ExactInt n = ipow(num(), static_cast<unsigned long>(e < 0 ? -e : e));
    ExactInt d = ipow(den(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e > 0 ? ExactRat(n, d) : ExactRat(d, n);
}

std::string ExactRat::to_string() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

// ---- BigFloat -------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t p) {
    if (p < 2) throw domain_error("BigFloat precision must be >= 2 bits");
    mpfr_init2(v_, p);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from(const ExactRat& q, mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const ExactInt& n, mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& dec, mpfr_prec_t p) {
    BigFloat r(p);
    if (mpfr_set_str(r.v_, dec.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("unparsable decimal: '" + dec + "'");
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::e(mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_set_ui(r.v_, 1, MPFR_RNDN);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::rounded_to(mpfr_prec_t p) const {
    BigFloat r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw domain_error("sqrt of negative BigFloat");
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    if (sign() <= 0) throw domain_error("log of non-positive BigFloat");
    BigFloat r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat r(std::max(prec(), e.prec()));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ulp() const {
    if (is_zero()) throw domain_error("ulp of zero");
    BigFloat r(prec());
    mpfr_set_ui_2exp(r.v_, 1, exponent() - prec(), MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", sig_digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw domain_error("BigFloat division by zero");
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

bool BigFloat::identical(const BigFloat& o) const {
    if (prec() != o.prec()) return false;
    if (mpfr_nan_p(v_) || mpfr_nan_p(o.v_)) return false;
    return mpfr_equal_p(v_, o.v_) != 0;
}

// ---- ExactRadical ---------------------------------------------------------

ExactRadical::ExactRadical(ExactRat q, long two_half, long pi_half)
    : q_(std::move(q)), two_half_(two_half), pi_half_(pi_half) {
    if (q_.is_zero()) {
        two_half_ = 0;
        pi_half_ = 0;
        return;
    }
    // Fold 2^(two_half div 2) into q, floor division so negatives land in {0,1}.
    long k = two_half_ >= 0 ? two_half_ / 2 : -((-two_half_ + 1) / 2);
    if (k != 0) {
        q_ *= ExactRat(2).pow_int(k);
        two_half_ -= 2 * k;
    }
}

ExactRat ExactRadical::rational_value() const {
    if (!is_rational()) throw domain_error("radical value is not rational");
    return q_;
}

ExactRadical ExactRadical::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero radical");
    return ExactRadical(q_.inverse(), -two_half_, -pi_half_);
}

ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
    return ExactRadical(a.q_ * b.q_, a.two_half_ + b.two_half_, a.pi_half_ + b.pi_half_);
}

ExactRadical operator*(const ExactRadical& a, const ExactRat& s) {
    return ExactRadical(a.q_ * s, a.two_half_, a.pi_half_);
}

ExactRadical operator/(const ExactRadical& a, const ExactRadical& b) { return a * b.inverse(); }

bool operator==(const ExactRadical& a, const ExactRadical& b) {
    return a.q_ == b.q_ && a.two_half_ == b.two_half_ && a.pi_half_ == b.pi_half_;
}

BigFloat ExactRadical::to_float(mpfr_prec_t p) const {
    if (p < 2) throw domain_error("radical_to_float precision must be >= 2");
    const mpfr_prec_t w = p + 32;
    BigFloat r = BigFloat::from(q_, w);
    if (two_half_ != 0) r = r * BigFloat::from_long(2, w).sqrt().pow_si(two_half_);
    if (pi_half_ != 0) r = r * BigFloat::pi(w).sqrt().pow_si(pi_half_);
    return r.rounded_to(p);
}

std::string ExactRadical::to_string() const {
    std::string s = q_.to_string();
    if (two_half_ != 0) s += " * 2^(" + std::to_string(two_half_) + "/2)";
    if (pi_half_ != 0) s += " * pi^(" + std::to_string(pi_half_) + "/2)";
    return s;
}

ExactRadical gamma_half(long m) {
    if (m <= 0 && m % 2 == 0) throw domain_error("gamma_half: pole at non-positive integer argument");
    if (m % 2 == 0) return ExactRadical(ExactRat(factorial(static_cast<unsigned long>(m / 2 - 1))));
    // Odd m: walk Gamma(z+1) = z*Gamma(z) between m/2 and 1/2.
    ExactRat coeff(1);
    long mm = m;
    while (mm > 1) {
        mm -= 2;
        coeff *= ExactRat(mm, 2);  // Gamma(z+1) = z*Gamma(z) with z = mm/2
    }
    while (mm < 1) {
        coeff /= ExactRat(mm, 2);  // Gamma(z) = Gamma(z+1)/z downward
        mm += 2;
    }
    return ExactRadical(coeff, 0, 1);
}

QSqrt6 QSqrt6::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero in Q(sqrt(6))");
    ExactRat n = a_ * a_ - ExactRat(6) * b_ * b_;  // field norm, nonzero since sqrt(6) is irrational
    return QSqrt6(a_ / n, -b_ / n);
}

std::string QSqrt6::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(6)";
}

}  // namespace faltung
