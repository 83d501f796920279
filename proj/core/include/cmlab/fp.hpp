#ifndef CMLAB_FP_HPP
#define CMLAB_FP_HPP

#include <cstdint>
#include <vector>

namespace cmlab {

/// Arithmetic mod a word-size odd prime (p < 2^62), used by the
/// factorization machinery. Polynomials are dense coefficient vectors,
/// lowest degree first, normalized so the leading coefficient is nonzero.
struct FpCtx {
    std::uint64_t p;

    explicit FpCtx(std::uint64_t prime) : p(prime) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((__uint128_t)a * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<std::uint64_t>;

void fpoly_trim(FpPoly& f);
int fpoly_deg(const FpPoly& f); // -1 for zero
FpPoly fpoly_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fpoly_rem(const FpCtx& F, FpPoly a, const FpPoly& m);
FpPoly fpoly_divexact(const FpCtx& F, FpPoly a, const FpPoly& b);
FpPoly fpoly_gcd(const FpCtx& F, FpPoly a, FpPoly b);
FpPoly fpoly_monic(const FpCtx& F, FpPoly f);
FpPoly fpoly_deriv(const FpCtx& F, const FpPoly& f);
FpPoly fpoly_mulmod(const FpCtx& F, const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly fpoly_powmod(const FpCtx& F, FpPoly base, std::uint64_t e, const FpPoly& m);
/// x^(p^k) mod m for k = 1..deg(m), one Frobenius step at a time.
FpPoly fpoly_frobenius_step(const FpCtx& F, const FpPoly& prev, const FpPoly& m);

/// Distinct-degree factorization of a squarefree monic f.
/// Returns pairs (product of irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, int>> fpoly_ddf(const FpCtx& F, const FpPoly& f);

/// Equal-degree splitting (Cantor–Zassenhaus) of a product of irreducibles
/// of the given degree. Deterministically seeded.
std::vector<FpPoly> fpoly_edf(const FpCtx& F, const FpPoly& f, int d, std::uint64_t seed);

/// Full factorization of a squarefree monic f into monic irreducibles,
/// sorted by (degree, coefficients) for reproducibility.
std::vector<FpPoly> fpoly_factor_squarefree(const FpCtx& F, const FpPoly& f);

} // namespace cmlab

#endif
