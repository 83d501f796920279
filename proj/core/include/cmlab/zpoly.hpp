#ifndef CMLAB_ZPOLY_HPP
#define CMLAB_ZPOLY_HPP

#include "cmlab/fp.hpp"
#include "cmlab/intutil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmlab {

/// Dense integer polynomial, coefficients lowest degree first.
/// The zero polynomial is the empty vector.
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<ZZ> c) : c_(std::move(c)) { trim(); }
    static ZPoly from_coeffs(std::initializer_list<long> cs);
    static ZPoly monomial(const ZZ& coeff, std::size_t deg);
    static ZPoly x_minus(const ZZ& a); // X - a

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const ZZ& operator[](std::size_t i) const { return c_[i]; }
    ZZ& operator[](std::size_t i) { return c_[i]; }
    const std::vector<ZZ>& coeffs() const { return c_; }
    const ZZ& lc() const { return c_.back(); }
    ZZ constant() const { return c_.empty() ? ZZ(0) : c_[0]; }
    void trim();

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly operator*(const ZZ& s) const;

    ZZ eval(const ZZ& x) const;
    QQ eval(const QQ& x) const;
    ZPoly derivative() const;
    ZPoly shifted(const ZZ& a) const;              // f(X + a)
    ZPoly scaled_arg(const ZZ& s) const;           // f(s X)
    ZPoly reversed() const;                        // X^deg f(1/X)
    ZPoly inflate(unsigned long e) const;          // f(X^e)
    ZPoly deflate(unsigned long e) const;          // inverse, exponents must be multiples of e
    unsigned long exponent_gcd() const;            // gcd of exponents of nonzero terms

    ZZ content() const;                            // >= 0, 0 only for zero poly
    ZPoly primitive_part() const;                  // content 1, positive leading coefficient
    ZZ max_abs_coeff() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<ZZ> c_;
};

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b);
bool zpoly_try_divide(const ZPoly& a, const ZPoly& b, ZPoly* quotient);
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b); // primitive, positive lc
ZPoly zpoly_squarefree_part(const ZPoly& f);
ZZ zpoly_resultant(const ZPoly& a, const ZPoly& b);

/// Yun decomposition: list of (squarefree factor, multiplicity).
std::vector<std::pair<ZPoly, int>> zpoly_squarefree_decompose(const ZPoly& f);

FpPoly zpoly_mod(const ZPoly& f, const FpCtx& F);

/// Power sums p_1..p_n of the roots of a monic integer polynomial.
std::vector<ZZ> zpoly_power_sums(const ZPoly& monic, int n);
/// Monic polynomial of degree d from power sums p_1..p_d.
ZPoly zpoly_from_power_sums(const std::vector<ZZ>& p, int d);

/// Monic integer polynomial whose roots are the pairwise differences
/// {alpha - beta} of the roots of two monic integer polynomials,
/// with multiplicity (degree = deg a * deg b).
ZPoly zpoly_root_differences(const ZPoly& monic_a, const ZPoly& monic_b);

/// Monic integer polynomial with roots lc(f)*alpha over the roots alpha of f.
ZPoly zpoly_monicize(const ZPoly& f);

} // namespace cmlab

#endif
