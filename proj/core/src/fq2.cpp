#include "cmlab/fq2.hpp"

namespace cmlab {

Fp2::Fp2(std::uint64_t p) : p_(p), s_(0) {
    if (p == 2) {
        s_ = 0; // marker: w^2 = w + 1
        return;
    }
    // smallest quadratic non-residue
    for (std::uint64_t c = 2; c < p; ++c) {
        bool is_sq = false;
        // Euler criterion
        std::uint64_t r = 1, b = c % p, e = (p - 1) / 2;
        while (e) {
            if (e & 1) r = mulp(r, b);
            b = mulp(b, b);
            e >>= 1;
        }
        is_sq = (r == 1);
        if (!is_sq) {
            s_ = c;
            return;
        }
    }
    throw Error("Fp2: no non-residue found (p must be an odd prime or 2)");
}

Fp2El Fp2::from_int(const ZZ& n) const {
    ZZ m = n % ZZ(static_cast<unsigned long>(p_));
    if (sgn(m) < 0) m += ZZ(static_cast<unsigned long>(p_));
    return {m.get_ui(), 0};
}

Fp2El Fp2::add(Fp2El x, Fp2El y) const { return {addp(x.a, y.a), addp(x.b, y.b)}; }
Fp2El Fp2::sub(Fp2El x, Fp2El y) const { return {subp(x.a, y.a), subp(x.b, y.b)}; }
Fp2El Fp2::neg(Fp2El x) const { return {x.a ? p_ - x.a : 0, x.b ? p_ - x.b : 0}; }

Fp2El Fp2::mul(Fp2El x, Fp2El y) const {
    if (p_ == 2) {
        // (a + bw)(c + dw), w^2 = w + 1 over F_2
        std::uint64_t ac = x.a & y.a, bd = x.b & y.b;
        std::uint64_t cross = (x.a & y.b) ^ (x.b & y.a);
        return {ac ^ bd, cross ^ bd};
    }
    std::uint64_t ac = mulp(x.a, y.a), bd = mulp(x.b, y.b);
    std::uint64_t cross = addp(mulp(x.a, y.b), mulp(x.b, y.a));
    return {addp(ac, mulp(s_, bd)), cross};
}

Fp2El Fp2::pow(Fp2El x, std::uint64_t e) const {
    Fp2El r = one(), b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fp2El Fp2::inv(Fp2El x) const {
    if (is_zero(x)) throw Error("Fp2: division by zero");
    return pow(x, p_ * p_ - 2);
}

void Fp2::build_square_table() {
    if (!squares_.empty()) return;
    squares_.assign(p_ * p_, false);
    for (std::uint64_t i = 0; i < p_ * p_; ++i) {
        Fp2El x = element(i);
        Fp2El sq = mul(x, x);
        squares_[index(sq)] = true;
    }
}

bool Fp2::is_square(Fp2El x) const {
    if (is_zero(x)) return true;
    if (!squares_.empty()) return squares_[index(x)];
    if (p_ == 2) return true; // Frobenius is surjective on squares in char 2
    Fp2El r = pow(x, (p_ * p_ - 1) / 2);
    return r == one();
}

} // namespace cmlab
