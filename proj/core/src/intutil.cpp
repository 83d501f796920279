#include "cmlab/intutil.hpp"

namespace cmlab {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= bound; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

std::map<ZZ, unsigned long> trial_factor(const ZZ& n, std::uint64_t bound, ZZ& cofactor) {
    std::map<ZZ, unsigned long> out;
    ZZ m = abs(n);
    if (m == 0) throw Error("trial_factor: zero input");
    for (std::uint64_t p = 2; p <= bound && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p > 3 && p % 3 == 0) continue;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ZZ zp(static_cast<unsigned long>(p));
            unsigned long v = zz_valuation(m, zp, &m);
            out[zp] = v;
        }
        if (ZZ(p) * ZZ(p) > m) break;
    }
    // m may itself be a prime <= bound^2; claim it only if certain.
    if (m > 1 && m <= ZZ(bound) * ZZ(bound)) {
        out[m] += 1;
        m = 1;
    }
    cofactor = m;
    return out;
}

bool is_prime_u64(std::uint64_t n) {
    ZZ z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::string zz_to_string(const ZZ& n) { return n.get_str(); }

ZZ zz_from_string(const std::string& s) {
    ZZ r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw Error("bad integer literal: " + s);
    return r;
}

} // namespace cmlab
