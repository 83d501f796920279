#include "cmlab/fp.hpp"

#include <algorithm>

namespace cmlab {

std::uint64_t FpCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void fpoly_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fpoly_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fpoly_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
        }
    }
    fpoly_trim(c);
    return c;
}

FpPoly fpoly_rem(const FpCtx& F, FpPoly a, const FpPoly& m) {
    fpoly_trim(a);
    int dm = fpoly_deg(m);
    std::uint64_t lcinv = F.inv(m.back());
    while (fpoly_deg(a) >= dm) {
        int k = fpoly_deg(a) - dm;
        std::uint64_t q = F.mul(a.back(), lcinv);
        if (q) {
            for (int i = 0; i <= dm; ++i)
                a[k + i] = F.sub(a[k + i], F.mul(q, m[i]));
        }
        a.pop_back();
        fpoly_trim(a);
    }
    return a;
}

FpPoly fpoly_divexact(const FpCtx& F, FpPoly a, const FpPoly& b) {
    fpoly_trim(a);
    int db = fpoly_deg(b);
    int dq = fpoly_deg(a) - db;
    if (dq < 0) return {};
    FpPoly q(dq + 1, 0);
    std::uint64_t lcinv = F.inv(b.back());
    while (fpoly_deg(a) >= db && !a.empty()) {
        int k = fpoly_deg(a) - db;
        std::uint64_t c = F.mul(a.back(), lcinv);
        q[k] = c;
        for (int i = 0; i <= db; ++i)
            a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
        fpoly_trim(a);
    }
    return q;
}

FpPoly fpoly_gcd(const FpCtx& F, FpPoly a, FpPoly b) {
    fpoly_trim(a);
    fpoly_trim(b);
    while (!b.empty()) {
        FpPoly r = fpoly_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fpoly_monic(F, a);
}

FpPoly fpoly_monic(const FpCtx& F, FpPoly f) {
    fpoly_trim(f);
    if (f.empty() || f.back() == 1) return f;
    std::uint64_t inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
    return f;
}

FpPoly fpoly_deriv(const FpCtx& F, const FpPoly& f) {
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(F.mul(f[i], i % F.p));
    fpoly_trim(d);
    return d;
}

FpPoly fpoly_mulmod(const FpCtx& F, const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return fpoly_rem(F, fpoly_mul(F, a, b), m);
}

FpPoly fpoly_powmod(const FpCtx& F, FpPoly base, std::uint64_t e, const FpPoly& m) {
    FpPoly r{1};
    base = fpoly_rem(F, std::move(base), m);
    while (e) {
        if (e & 1) r = fpoly_mulmod(F, r, base, m);
        base = fpoly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

FpPoly fpoly_frobenius_step(const FpCtx& F, const FpPoly& prev, const FpPoly& m) {
    return fpoly_powmod(F, prev, F.p, m);
}

std::vector<std::pair<FpPoly, int>> fpoly_ddf(const FpCtx& F, const FpPoly& f) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rem = fpoly_monic(F, f);
    FpPoly h{0, 1}; // x
    h = fpoly_rem(F, h, rem);
    int d = 0;
    while (fpoly_deg(rem) > 0) {
        ++d;
        if (2 * d > fpoly_deg(rem)) {
            out.emplace_back(rem, fpoly_deg(rem));
            break;
        }
        h = fpoly_frobenius_step(F, h, rem);
        // gcd(x^(p^d) - x, rem)
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fpoly_trim(hx);
        FpPoly g = fpoly_gcd(F, hx, rem);
        if (fpoly_deg(g) > 0) {
            out.emplace_back(g, d);
            rem = fpoly_divexact(F, rem, g);
            h = fpoly_rem(F, h, rem);
        }
    }
    return out;
}

namespace {

// xorshift-style deterministic generator
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

FpPoly random_poly(const FpCtx& F, int deg, Rng& rng) {
    FpPoly r(deg + 1);
    for (auto& c : r) c = rng.next() % F.p;
    fpoly_trim(r);
    return r;
}

void edf_rec(const FpCtx& F, const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
    int n = fpoly_deg(f);
    if (n == d) {
        out.push_back(fpoly_monic(F, f));
        return;
    }
    // p odd here (factorization callers use odd primes only)
    __uint128_t q = 1;
    for (int i = 0; i < d; ++i) q *= F.p;
    std::uint64_t e_hi = static_cast<std::uint64_t>((q - 1) >> 64);
    std::uint64_t e_lo = static_cast<std::uint64_t>((q - 1) / 2);
    FpPoly g;
    for (;;) {
        FpPoly a = random_poly(F, n - 1, rng);
        if (fpoly_deg(a) <= 0) continue;
        FpPoly b;
        if (e_hi == 0) {
            b = fpoly_powmod(F, a, e_lo, f);
        } else {
            // (q-1)/2 needs 128-bit exponent: split as hi*2^64 + lo
            __uint128_t e = (q - 1) / 2;
            b = FpPoly{1};
            FpPoly base = fpoly_rem(F, a, f);
            while (e) {
                if (e & 1) b = fpoly_mulmod(F, b, base, f);
                base = fpoly_mulmod(F, base, base, f);
                e >>= 1;
            }
        }
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        fpoly_trim(b);
        g = fpoly_gcd(F, b, f);
        if (fpoly_deg(g) > 0 && fpoly_deg(g) < n) break;
    }
    edf_rec(F, g, d, rng, out);
    edf_rec(F, fpoly_divexact(F, f, g), d, rng, out);
}

} // namespace

std::vector<FpPoly> fpoly_edf(const FpCtx& F, const FpPoly& f, int d, std::uint64_t seed) {
    std::vector<FpPoly> out;
    Rng rng(seed + 0x517cc1b727220a95ULL * F.p);
    edf_rec(F, fpoly_monic(F, f), d, rng, out);
    return out;
}

std::vector<FpPoly> fpoly_factor_squarefree(const FpCtx& F, const FpPoly& f) {
    std::vector<FpPoly> out;
    std::uint64_t seed = 1;
    for (auto c : f) seed = seed * 1099511628211ULL + c;
    for (auto& [g, d] : fpoly_ddf(F, f)) {
        if (fpoly_deg(g) == d) {
            out.push_back(fpoly_monic(F, g));
        } else {
            auto parts = fpoly_edf(F, g, d, seed);
            out.insert(out.end(), parts.begin(), parts.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

} // namespace cmlab
