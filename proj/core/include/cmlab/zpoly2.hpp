#ifndef CMLAB_ZPOLY2_HPP
#define CMLAB_ZPOLY2_HPP

#include "cmlab/zpoly.hpp"

namespace cmlab {

/// Bivariate integer polynomial, stored as X-coefficients that are
/// polynomials in Y:  Phi(X, Y) = sum_k  cx[k](Y) * X^k.
class ZPoly2 {
  public:
    ZPoly2() = default;
    explicit ZPoly2(std::vector<ZPoly> cx) : cx_(std::move(cx)) { trim(); }

    int deg_x() const { return static_cast<int>(cx_.size()) - 1; }
    int deg_y() const;
    bool is_zero() const { return cx_.empty(); }
    const ZPoly& coeff_x(std::size_t k) const { return cx_[k]; }
    const std::vector<ZPoly>& coeffs_x() const { return cx_; }
    void trim();

    bool operator==(const ZPoly2& o) const { return cx_ == o.cx_; }
    ZPoly2 operator+(const ZPoly2& o) const;
    ZPoly2 operator-(const ZPoly2& o) const;
    ZPoly2 operator*(const ZPoly2& o) const;

    ZPoly eval_x(const ZZ& x) const;  // polynomial in Y
    ZPoly eval_y(const ZZ& y) const;  // polynomial in X
    ZZ eval(const ZZ& x, const ZZ& y) const;
    QQ eval(const QQ& x, const QQ& y) const;

    ZPoly2 swapped() const; // Phi(Y, X)

    /// Coefficient of Y^j as a polynomial in X.
    ZPoly coeff_y(std::size_t j) const;

    static ZPoly2 from_x_poly(const ZPoly& p);            // p(X)
    static ZPoly2 from_y_poly(const ZPoly& p);            // p(Y)
    static ZPoly2 term(const ZZ& c, std::size_t i, std::size_t j);

  private:
    std::vector<ZPoly> cx_;
};

/// Res_X(P(X), Phi(X, Y)) as a polynomial in Y, computed exactly.
/// Linear deg_x uses the direct Horner form; higher X-degrees use
/// evaluation at integer nodes plus exact interpolation.
ZPoly zpoly2_resultant_x(const ZPoly& p, const ZPoly2& phi);

} // namespace cmlab

#endif
