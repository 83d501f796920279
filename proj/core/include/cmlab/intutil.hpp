#ifndef CMLAB_INTUTIL_HPP
#define CMLAB_INTUTIL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmlab {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotADiscriminant : Error {
    using Error::Error;
};

struct PrecisionInsufficient : Error {
    using Error::Error;
};

struct OrdinaryReduction : Error {
    using Error::Error;
};

using ZZ = mpz_class;
using QQ = mpq_class;

inline ZZ zz_pow(const ZZ& base, unsigned long e) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZZ zz_isqrt(const ZZ& n) {
    ZZ r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool zz_is_square(const ZZ& n, ZZ* root = nullptr) {
    if (sgn(n) < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) *root = zz_isqrt(n);
    return true;
}

/// v_p(n) for n != 0; also divides the p-part out of n when strip is given.
inline unsigned long zz_valuation(const ZZ& n, const ZZ& p, ZZ* strip = nullptr) {
    ZZ q;
    unsigned long v = mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (strip) *strip = q;
    return v;
}

/// Kronecker symbol (d/n) with the standard conventions at 2 and at units.
inline int kronecker(const ZZ& d, const ZZ& n) {
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

inline int kronecker_si(const ZZ& d, long n) {
    return mpz_kronecker_si(d.get_mpz_t(), n);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Trial division of |n| by all primes up to `bound`.
/// Returns prime -> exponent; the unfactored (positive) part is left in cofactor.
std::map<ZZ, unsigned long> trial_factor(const ZZ& n, std::uint64_t bound, ZZ& cofactor);

bool is_prime_u64(std::uint64_t n);

std::string zz_to_string(const ZZ& n);
ZZ zz_from_string(const std::string& s);

} // namespace cmlab

#endif
