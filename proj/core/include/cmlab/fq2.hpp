#ifndef CMLAB_FQ2_HPP
#define CMLAB_FQ2_HPP

#include "cmlab/intutil.hpp"

#include <cstdint>
#include <vector>

namespace cmlab {

/// Element a + b w of F_{p^2} in a fixed quadratic model.
struct Fp2El {
    std::uint64_t a = 0, b = 0;

    bool operator==(const Fp2El& o) const { return a == o.a && b == o.b; }
    bool operator<(const Fp2El& o) const { return a != o.a ? a < o.a : b < o.b; }
};

/// F_p[w]/(w^2 - s) for the smallest quadratic non-residue s when p is odd;
/// F_2[w]/(w^2 + w + 1) for p = 2. The (a, b) order on coordinates gives a
/// canonical total order on elements.
class Fp2 {
  public:
    explicit Fp2(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t nonresidue() const { return s_; }
    std::uint64_t order() const { return p_ * p_; }

    Fp2El zero() const { return {0, 0}; }
    Fp2El one() const { return {1, 0}; }
    Fp2El from_base(std::uint64_t a) const { return {a % p_, 0}; }
    Fp2El from_int(const ZZ& n) const;

    Fp2El add(Fp2El x, Fp2El y) const;
    Fp2El sub(Fp2El x, Fp2El y) const;
    Fp2El neg(Fp2El x) const;
    Fp2El mul(Fp2El x, Fp2El y) const;
    Fp2El inv(Fp2El x) const;
    Fp2El pow(Fp2El x, std::uint64_t e) const;
    bool is_zero(Fp2El x) const { return x.a == 0 && x.b == 0; }

    /// element of index i under the canonical (a, b) enumeration
    Fp2El element(std::uint64_t i) const { return {i / p_, i % p_}; }
    std::uint64_t index(Fp2El x) const { return x.a * p_ + x.b; }

    /// true iff x is a square in F_{p^2} (precomputed table when small)
    bool is_square(Fp2El x) const;
    void build_square_table();

  private:
    std::uint64_t p_, s_;
    std::vector<bool> squares_;

    std::uint64_t addp(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t subp(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mulp(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((__uint128_t)a * b % p_);
    }
};

} // namespace cmlab

#endif
