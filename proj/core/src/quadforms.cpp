#include "cmlab/quadforms.hpp"

namespace cmlab {
namespace quadforms {

bool is_valid_discriminant(const ZZ& n) {
    if (sgn(n) >= 0) return false;
    ZZ r = n % 4; // truncated: r in {-3,-2,-1,0}
    return r == 0 || r == -3;
}

Discriminant decompose(const ZZ& n) {
    if (!is_valid_discriminant(n))
        throw NotADiscriminant("not a discriminant: " + n.get_str());
    if (abs(n) > ZZ(kMaxAbsDiscriminant))
        throw Error("discriminant bound exceeded: " + n.get_str());
    ZZ m = -n;
    // largest f with f^2 | m, via trial factorization (|n| <= 1e8)
    ZZ cof;
    auto fac = trial_factor(m, 10000, cof);
    if (cof != 1) {
        // cofactor is prime or a prime square beyond the trial bound
        ZZ root;
        if (zz_is_square(cof, &root)) fac[root] += 2;
        else fac[cof] += 1;
    }
    ZZ squarefree(1), f(1);
    for (auto& [p, e] : fac) {
        if (e & 1) squarefree *= p;
        for (unsigned long i = 0; i + 1 < e; i += 2) f *= p;
    }
    ZZ d = -squarefree;
    ZZ dm = d % 4;
    if (!(dm == -3)) { // d != 1 mod 4: fundamental part is 4d
        d *= 4;
        if (mpz_divisible_ui_p(f.get_mpz_t(), 2) == 0)
            throw NotADiscriminant("not a discriminant: " + n.get_str());
        f /= 2;
    }
    return Discriminant{n, d, f};
}

bool is_prime_discriminant(const Discriminant& d) {
    if (d.conductor != 1) return false;
    if (d.value == -4 || d.value == -8) return true;
    ZZ p = -d.value;
    if (p % 4 != 3) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::vector<QuadForm> reduced_forms(const Discriminant& d) {
    if (abs(d.value) > ZZ(kMaxAbsDiscriminant))
        throw Error("discriminant bound exceeded: " + d.value.get_str());
    std::vector<QuadForm> out;
    const ZZ& D = d.value;
    ZZ absD = -D;
    ZZ amax = zz_isqrt(absD / 3);
    ZZ g;
    for (ZZ a(1); a <= amax; ++a) {
        ZZ fourA = 4 * a;
        for (ZZ b = -a + 1; b <= a; ++b) {
            ZZ num = b * b - D;
            if (num % fourA != 0) continue;
            ZZ c = num / fourA;
            if (c < a) continue;
            if (b < 0 && (c == a)) continue; // reduced: b >= 0 when a = c
            // (|b| = a with b < 0 is excluded by the loop range)
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue; // primitive classes only (eq. class group of the order)
            out.push_back({a, b, c});
        }
    }
    // loop order is already lexicographic in (a, b)
    return out;
}

long class_number(const Discriminant& d) {
    return static_cast<long>(reduced_forms(d).size());
}

ReductionType reduction_type(const Discriminant& d, const ZZ& p) {
    int k = kronecker(d.fundamental, p);
    SplitType t = k == 0 ? SplitType::ramified : (k == 1 ? SplitType::split : SplitType::inert);
    return {t, t != SplitType::split};
}

} // namespace quadforms
} // namespace cmlab
