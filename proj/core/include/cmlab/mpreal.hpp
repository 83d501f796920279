#ifndef CMLAB_MPREAL_HPP
#define CMLAB_MPREAL_HPP

#include "cmlab/intutil.hpp"

#include <mpfr.h>
#include <string>
#include <utility>

namespace cmlab {

/// Thin RAII wrapper around mpfr_t. Every value carries its own precision;
/// binary operations compute at the larger operand precision.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const ZZ& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const QQ& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real operator+(const Real& o) const { Real r(std::max(prec(), o.prec())); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(std::max(prec(), o.prec())); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(std::max(prec(), o.prec())); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(std::max(prec(), o.prec())); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }

    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    friend Real abs(const Real& x) { Real r(x.prec()); mpfr_abs(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& x) { Real r(x.prec()); mpfr_sqrt(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real exp(const Real& x) { Real r(x.prec()); mpfr_exp(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real log(const Real& x) { Real r(x.prec()); mpfr_log(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real cos(const Real& x) { Real r(x.prec()); mpfr_cos(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real sin(const Real& x) { Real r(x.prec()); mpfr_sin(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real floor(const Real& x) { Real r(x.prec()); mpfr_floor(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real round(const Real& x) { Real r(x.prec()); mpfr_round(r.v_, x.v_); return r; }
    friend Real hypot(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
        return r;
    }

    /// 2^-e with e > 0.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(1.0, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    ZZ round_to_zz() const {
        Real r = round(*this);
        ZZ z;
        mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
        return z;
    }

  private:
    mpfr_t v_;
};

struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator-() const { return {-re, -im}; }
    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return hypot(re, im); }
    Complex operator/(const Complex& o) const {
        Real n = o.norm2();
        Complex t = *this * o.conj();
        return {t.re / n, t.im / n};
    }
    Complex inv() const {
        Real n = norm2();
        return {re / n, -(im / n)};
    }

    static Complex exp_of(const Complex& z) {
        Real m = exp(z.re);
        return {m * cos(z.im), m * sin(z.im)};
    }
    Complex pow_ui(unsigned long e) const {
        Complex r(1.0, 0.0, prec());
        Complex b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Complex sqrt_principal() const;
};

} // namespace cmlab

#endif
