#include "cmlab/mpreal.hpp"

namespace cmlab {

Complex Complex::sqrt_principal() const {
    // sqrt((|z| + re)/2) + i sign(im) sqrt((|z| - re)/2)
    mpfr_prec_t p = prec();
    Real r = abs();
    Real half(0.5, p);
    Real a = sqrt((r + re) * half);
    Real b = sqrt((r - re) * half);
    if (im.sign() < 0) b = -b;
    if (a.is_zero() && b.is_zero()) return Complex(p);
    return {a, b};
}

} // namespace cmlab
