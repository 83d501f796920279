#ifndef CMLAB_CLASSPOLY_HPP
#define CMLAB_CLASSPOLY_HPP

#include "cmlab/mpreal.hpp"
#include "cmlab/quadforms.hpp"
#include "cmlab/roots.hpp"
#include "cmlab/zpoly.hpp"

#include <vector>

namespace cmlab {
namespace classpoly {

struct PrecisionPolicy {
    long working_bits = 256;
    long safety_margin_bits = 64;
};

enum class EtaVariant { eta, weber_f, weber_f1, weber_f2 };

/// Dedekind eta via the pentagonal-number q-series. Any tau with
/// positive imaginary part; throws PrecisionInsufficient when the series
/// length exceeds the internal cap (tau too close to the real axis).
Complex eval_eta(const Complex& tau, long bits);

/// eta or one of the Weber eta-quotients f, f1, f2.
Complex eval_eta_quotient(EtaVariant v, const Complex& tau, const PrecisionPolicy& policy);

/// Modular j-function; tau is reduced into the fundamental domain first.
Complex eval_j(const Complex& tau, const PrecisionPolicy& policy);

Complex reduce_to_fundamental_domain(Complex tau);

struct ClassPolynomial {
    quadforms::Discriminant discriminant;
    ZPoly poly; // monic of degree h(D)
};

/// Product over reduced forms of (X - j(tau_Q)), coefficients rounded to
/// integers with every residual certified < 1/4.
ClassPolynomial hilbert_class_poly(const quadforms::Discriminant& d, const PrecisionPolicy& policy);

/// Cached construction with the size-heuristic precision and retry-doubling.
ClassPolynomial hilbert_class_poly_cached(const quadforms::Discriminant& d);

long heuristic_bits(const quadforms::Discriminant& d, long margin_bits);

struct AlgebraicNumber {
    ZPoly minpoly; // primitive, irreducible, positive leading coefficient

    static AlgebraicNumber from_minpoly(const ZPoly& p);
    static AlgebraicNumber from_integer(const ZZ& n);
    static AlgebraicNumber from_rational(const QQ& q);
    std::vector<CertifiedRoot> embeddings(long bits) const;
};

/// Weil height through the Mahler identity:
/// (log |lc| + sum log+ |roots|) / deg, absolute error < 1e-12.
double weil_height(const AlgebraicNumber& alpha);

} // namespace classpoly
} // namespace cmlab

#endif
