#include "cmlab/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace cmlab {

namespace {

ZZ balanced_mod(const ZZ& a, const ZZ& m) {
    ZZ x = a % m;
    if (sgn(x) < 0) x += m;
    if (x * 2 > m) x -= m;
    return x;
}

ZPoly zpoly_balanced(const ZPoly& f, const ZZ& m) {
    std::vector<ZZ> c(f.coeffs());
    for (auto& x : c) x = balanced_mod(x, m);
    return ZPoly(std::move(c));
}

ZPoly zpoly_mulmod(const ZPoly& a, const ZPoly& b, const ZZ& m) {
    return zpoly_balanced(a * b, m);
}

// division by a monic divisor over Z/m, balanced output
void zpoly_divmod_monic(const ZPoly& a, const ZPoly& d, const ZZ& m, ZPoly* q, ZPoly* r) {
    std::vector<ZZ> rem(a.coeffs());
    int dd = d.deg();
    int dq = a.deg() - dd;
    std::vector<ZZ> quo(dq >= 0 ? dq + 1 : 0, ZZ(0));
    for (int k = dq; k >= 0; --k) {
        ZZ c = balanced_mod(rem[k + dd], m);
        quo[k] = c;
        if (c != 0)
            for (int i = 0; i <= dd; ++i)
                rem[k + i] = balanced_mod(rem[k + i] - c * d[i], m);
    }
    if (q) *q = ZPoly(std::move(quo));
    if (r) {
        rem.resize(dd > 0 ? dd : 0);
        for (auto& x : rem) x = balanced_mod(x, m);
        *r = ZPoly(std::move(rem));
    }
}

ZPoly fp_to_zpoly(const FpPoly& f, std::uint64_t p) {
    std::vector<ZZ> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        ZZ x(static_cast<unsigned long>(f[i]));
        if (x * 2 > ZZ(static_cast<unsigned long>(p))) x -= ZZ(static_cast<unsigned long>(p));
        c[i] = x;
    }
    return ZPoly(std::move(c));
}

// extended euclid over F_p for monic coprime g, h: s g + t h = 1
void fp_bezout(const FpCtx& F, const FpPoly& g, const FpPoly& h, FpPoly& s, FpPoly& t) {
    FpPoly r0 = g, r1 = h;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (fpoly_deg(r1) >= 0) {
        // q, r = divmod(r0, r1)
        FpPoly q;
        {
            FpPoly rem = r0;
            int d1 = fpoly_deg(r1);
            int dq = fpoly_deg(rem) - d1;
            q.assign(dq >= 0 ? dq + 1 : 0, 0);
            std::uint64_t inv = F.inv(r1.back());
            while (fpoly_deg(rem) >= d1 && !rem.empty()) {
                int k = fpoly_deg(rem) - d1;
                std::uint64_t c = F.mul(rem.back(), inv);
                q[k] = c;
                for (int i = 0; i <= d1; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(c, r1[i]));
                fpoly_trim(rem);
            }
            r0 = r1;
            r1 = rem;
        }
        FpPoly s2 = s0, t2 = t0;
        // s2 -= q*s1 ; t2 -= q*t1
        {
            FpPoly qs = fpoly_mul(F, q, s1);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = F.sub(s2[i], qs[i]);
            fpoly_trim(s2);
            FpPoly qt = fpoly_mul(F, q, t1);
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = F.sub(t2[i], qt[i]);
            fpoly_trim(t2);
        }
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // r0 is the gcd, must be a nonzero constant
    std::uint64_t inv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    for (auto& c : t0) c = F.mul(c, inv);
    s = s0;
    t = t0;
}

struct PairLift {
    ZPoly g, h;
};

// Lift monic V = G0*H0 (mod p) to V = G*H (mod p^k), G,H monic.
PairLift hensel_pair(const ZPoly& Vfull, const FpPoly& G0, const FpPoly& H0,
                     std::uint64_t p, const ZZ& pk) {
    FpCtx F(p);
    FpPoly s0, t0;
    fp_bezout(F, G0, H0, s0, t0);
    ZPoly G = fp_to_zpoly(G0, p), H = fp_to_zpoly(H0, p);
    ZPoly S = fp_to_zpoly(s0, p), T = fp_to_zpoly(t0, p);
    ZZ m(static_cast<unsigned long>(p));
    while (m < pk) {
        ZZ m2 = m * m;
        if (m2 > pk) m2 = pk;
        ZPoly V = zpoly_balanced(Vfull, m2);
        // E = (V - G*H) / m
        ZPoly E = zpoly_balanced(V - G * H, m2);
        {
            std::vector<ZZ> c(E.coeffs());
            for (auto& x : c) x /= m;
            E = ZPoly(std::move(c));
        }
        ZZ mq = m2 / m;
        E = zpoly_balanced(E, mq);
        // solve dG*H + dH*G = E with deg dG < deg G
        ZPoly q, dG;
        zpoly_divmod_monic(zpoly_mulmod(E, T, mq), G, mq, &q, &dG);
        ZPoly dH = zpoly_balanced(E * S + q * H, mq);
        G = zpoly_balanced(G + dG * m, m2);
        H = zpoly_balanced(H + dH * m, m2);
        if (m2 >= pk) break;
        // lift the Bezout pair: d = (1 - S*G - T*H)/m
        ZPoly D = zpoly_balanced(ZPoly({ZZ(1)}) - S * G - T * H, m2);
        {
            std::vector<ZZ> c(D.coeffs());
            for (auto& x : c) x /= m;
            D = ZPoly(std::move(c));
        }
        D = zpoly_balanced(D, mq);
        ZPoly q2, r2;
        zpoly_divmod_monic(zpoly_mulmod(S, D, mq), H, mq, &q2, &r2);
        ZPoly dT = zpoly_balanced(T * D + q2 * G, mq);
        S = zpoly_balanced(S + r2 * m, m2);
        T = zpoly_balanced(T + dT * m, m2);
        m = m2;
    }
    return {zpoly_balanced(G, pk), zpoly_balanced(H, pk)};
}

void hensel_tree(const ZPoly& V, const std::vector<FpPoly>& gs, std::size_t lo, std::size_t hi,
                 std::uint64_t p, const ZZ& pk, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zpoly_balanced(V, pk));
        return;
    }
    FpCtx F(p);
    // balance the split by degree
    int total = 0;
    for (std::size_t i = lo; i < hi; ++i) total += fpoly_deg(gs[i]);
    std::size_t mid = lo;
    int acc = 0;
    while (mid + 1 < hi && 2 * acc < total) acc += fpoly_deg(gs[mid++]);
    if (mid == lo) ++mid;
    FpPoly G0{1}, H0{1};
    for (std::size_t i = lo; i < mid; ++i) G0 = fpoly_mul(F, G0, gs[i]);
    for (std::size_t i = mid; i < hi; ++i) H0 = fpoly_mul(F, H0, gs[i]);
    auto [G, H] = hensel_pair(V, G0, H0, p, pk);
    hensel_tree(G, gs, lo, mid, p, pk, out);
    hensel_tree(H, gs, mid, hi, p, pk, out);
}

struct ModularImage {
    std::uint64_t p = 0;
    std::vector<int> factor_degs;
};

// subset-sum bitset of achievable factor degrees
std::vector<bool> achievable_degrees(const std::vector<int>& degs, int n) {
    std::vector<bool> dp(n + 1, false);
    dp[0] = true;
    for (int d : degs)
        for (int i = n; i >= d; --i)
            if (dp[i - d]) dp[i] = true;
    return dp;
}

const std::uint64_t kWitnessPrimes[] = {
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257,
    263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349};

std::vector<ZPoly> zassenhaus(const ZPoly& f, int degree_stride);

// factors of h(x^q) for irreducible h and prime q
std::vector<ZPoly> inflate_prime_step(const ZPoly& h, unsigned long q) {
    ZPoly hq = h.inflate(q);
    if (h.deg() == 0) return {hq};
    // local witness: if the residue of a root of h is not a q-th power in
    // some residue field, h(x^q) is irreducible (Capelli, q prime).
    int passes = 0;
    for (std::uint64_t p : kWitnessPrimes) {
        if (passes >= 12) break;
        FpCtx F(p);
        if (mpz_divisible_ui_p(h.lc().get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(h.constant().get_mpz_t(), p)) continue;
        FpPoly hp = zpoly_mod(h, F);
        if (fpoly_deg(fpoly_gcd(F, hp, fpoly_deriv(F, hp))) != 0) continue;
        // find a small-degree irreducible factor of hp
        FpPoly x{0, 1};
        FpPoly pw = fpoly_rem(F, x, hp);
        FpPoly phi;
        int e = 0;
        FpPoly rem = fpoly_monic(F, hp);
        for (int d = 1; d <= 4 && fpoly_deg(rem) > 0; ++d) {
            pw = fpoly_frobenius_step(F, pw, hp);
            FpPoly diff = pw;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = F.sub(diff[1], 1);
            fpoly_trim(diff);
            FpPoly g = fpoly_gcd(F, diff, rem);
            if (fpoly_deg(g) >= d) {
                // extract one irreducible factor of degree d
                if (fpoly_deg(g) == d) {
                    phi = g;
                } else {
                    std::uint64_t seed = p;
                    for (auto c : g) seed = seed * 1315423911ULL + c;
                    phi = fpoly_edf(F, g, d, seed).front();
                }
                e = d;
                break;
            }
        }
        if (e == 0) continue;
        // q-th power test in F_{p^e}
        __uint128_t order = 1;
        for (int i = 0; i < e; ++i) order *= p;
        order -= 1;
        if (order % q != 0) continue;
        __uint128_t exp = order / q;
        // alpha = x mod phi ; compute alpha^exp in F_p[x]/phi
        FpPoly alpha{0, 1};
        alpha = fpoly_rem(F, alpha, phi);
        FpPoly acc{1};
        FpPoly base = alpha;
        __uint128_t ee = exp;
        while (ee) {
            if (ee & 1) acc = fpoly_mulmod(F, acc, base, phi);
            base = fpoly_mulmod(F, base, base, phi);
            ee >>= 1;
        }
        if (!(acc.size() == 1 && acc[0] == 1)) {
            return {hq}; // not a q-th power locally => irreducible
        }
        ++passes;
    }
    // likely reducible (or no usable witness): run the full machinery,
    // knowing every true factor degree is a multiple of deg(h)
    return zassenhaus(hq, h.deg());
}

std::vector<ZPoly> zassenhaus(const ZPoly& f, int degree_stride) {
    int n = f.deg();
    if (n <= 1) return {f.primitive_part()};
    if (n == 2 || n == 3) {
        // small-degree shortcut: a factor exists iff a rational root does
        // (degree 2/3 polynomials are reducible iff they have a linear factor)
        // handled by the generic path below just as well; fall through.
    }

    // collect modular images for degree analysis
    std::vector<ModularImage> images;
    std::vector<std::uint64_t> used;
    for (std::uint64_t p : kWitnessPrimes) {
        if (images.size() >= 5) break;
        FpCtx F(p);
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        FpPoly fp = zpoly_mod(f, F);
        if (fpoly_deg(fp) != n) continue;
        if (fpoly_deg(fpoly_gcd(F, fp, fpoly_deriv(F, fp))) != 0) continue;
        ModularImage img;
        img.p = p;
        for (auto& [g, d] : fpoly_ddf(F, fpoly_monic(F, fp))) {
            int count = fpoly_deg(g) / d;
            for (int i = 0; i < count; ++i) img.factor_degs.push_back(d);
        }
        images.push_back(std::move(img));
    }
    if (images.empty()) throw Error("zassenhaus: no usable primes for " + f.to_string());

    std::vector<bool> allowed(n + 1, true);
    for (auto& img : images) {
        auto ach = achievable_degrees(img.factor_degs, n);
        for (int i = 0; i <= n; ++i) allowed[i] = allowed[i] && ach[i];
    }
    if (degree_stride > 1)
        for (int i = 0; i <= n; ++i)
            if (i % degree_stride) allowed[i] = false;
    bool maybe_reducible = false;
    for (int i = 1; i < n; ++i)
        if (allowed[i] && allowed[n - i]) maybe_reducible = true;
    if (!maybe_reducible) return {f.primitive_part()};

    // best image = fewest modular factors
    const ModularImage* best = &images[0];
    for (auto& img : images)
        if (img.factor_degs.size() < best->factor_degs.size()) best = &img;

    std::uint64_t p = best->p;
    FpCtx F(p);
    FpPoly fp = fpoly_monic(F, zpoly_mod(f, F));
    std::vector<FpPoly> gs = fpoly_factor_squarefree(F, fp);
    if (gs.size() == 1) return {f.primitive_part()};

    // Landau-Mignotte style bound on factor coefficients (factors of f over Z
    // have |coeff| <= 2^n * ||f||_2 * |lc(f)|)
    ZZ l2(0);
    for (const auto& c : f.coeffs()) l2 += c * c;
    ZZ bound = (zz_isqrt(l2) + 1) * abs(f.lc());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    ZZ pk(static_cast<unsigned long>(p));
    while (pk <= bound * 2) pk *= ZZ(static_cast<unsigned long>(p));

    // lift the monic factorization of f/lc over Z_p
    ZZ lcinv;
    {
        ZZ lcmod = f.lc() % pk;
        if (sgn(lcmod) < 0) lcmod += pk;
        if (mpz_invert(lcinv.get_mpz_t(), lcmod.get_mpz_t(), pk.get_mpz_t()) == 0)
            throw Error("zassenhaus: leading coefficient not invertible");
    }
    ZPoly V = zpoly_balanced(f * lcinv, pk);
    std::vector<ZPoly> lifted;
    hensel_tree(V, gs, 0, gs.size(), p, pk, lifted);

    // recombination
    std::vector<ZPoly> result;
    std::vector<int> degs(lifted.size());
    std::vector<ZZ> trail(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        degs[i] = lifted[i].deg();
        trail[i] = balanced_mod(lifted[i].constant(), pk);
    }
    std::vector<std::size_t> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly fcur = f.primitive_part();
    long budget = 20000000;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        int dsum = 0;
        for (auto i : subset) dsum += degs[i];
        if (dsum >= fcur.deg() || !allowed[dsum]) return false;
        if (--budget < 0) throw Error("zassenhaus: recombination budget exceeded for degree " +
                                      std::to_string(n));
        // trailing-coefficient divisibility test
        ZZ t = fcur.lc();
        for (auto i : subset) t = balanced_mod(t * trail[i], pk);
        if (t == 0 || !mpz_divisible_p((fcur.lc() * fcur.constant()).get_mpz_t(), t.get_mpz_t()))
            return false;
        ZPoly g = ZPoly({fcur.lc()});
        for (auto i : subset) g = zpoly_mulmod(g, lifted[i], pk);
        g = g.primitive_part();
        ZPoly q;
        if (!zpoly_try_divide(fcur, g, &q)) return false;
        result.push_back(g);
        fcur = q.primitive_part();
        std::vector<std::size_t> next;
        for (auto i : alive)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) next.push_back(i);
        alive = std::move(next);
        return true;
    };

    for (std::size_t card = 1; card <= alive.size() / 2;) {
        // enumerate subsets of the alive set of this cardinality
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (true) {
            std::vector<std::size_t> subset(card);
            for (std::size_t i = 0; i < card; ++i) subset[i] = alive[idx[i]];
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[pos] == alive.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++card;
        if (alive.size() < 2 * card) break;
    }
    if (fcur.deg() >= 1) result.push_back(fcur.primitive_part());
    return result;
}

std::vector<ZPoly> factor_squarefree_rec(const ZPoly& f0) {
    ZPoly f = f0.primitive_part();
    if (f.deg() <= 1) return {f};
    unsigned long e = f.exponent_gcd();
    if (e > 1 && f.constant() != 0) {
        ZPoly g = f.deflate(e);
        std::vector<ZPoly> base = factor_squarefree_rec(g);
        // inflate stepwise over the prime factorization of e, small primes first
        std::vector<unsigned long> qs;
        unsigned long m = e;
        for (unsigned long q = 2; q * q <= m; ++q)
            while (m % q == 0) {
                qs.push_back(q);
                m /= q;
            }
        if (m > 1) qs.push_back(m);
        std::sort(qs.begin(), qs.end());
        for (unsigned long q : qs) {
            std::vector<ZPoly> next;
            for (auto& h : base) {
                auto parts = inflate_prime_step(h, q);
                next.insert(next.end(), parts.begin(), parts.end());
            }
            base = std::move(next);
        }
        return base;
    }
    return zassenhaus(f, 1);
}

} // namespace

std::vector<ZPoly> zpoly_factor_squarefree_primitive(const ZPoly& f) {
    auto out = factor_squarefree_rec(f);
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

ZFactors zpoly_factor(const ZPoly& f) {
    ZFactors out;
    if (f.is_zero()) throw Error("zpoly_factor: zero polynomial");
    ZZ c = f.content();
    if (sgn(f.lc()) < 0) c = -c;
    out.content = c;
    ZPoly g = f.primitive_part();
    if (g.deg() == 0) return out;
    // strip powers of x
    int xmult = 0;
    while (g.constant() == 0) {
        std::vector<ZZ> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = ZPoly(std::move(shifted));
        ++xmult;
    }
    if (xmult > 0) out.factors.emplace_back(ZPoly({ZZ(0), ZZ(1)}), xmult);
    for (auto& [part, mult] : zpoly_squarefree_decompose(g))
        for (auto& irr : zpoly_factor_squarefree_primitive(part))
            out.factors.emplace_back(irr, mult);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    // verify by multiplying back
    ZPoly check({out.content});
    for (auto& [p, m] : out.factors)
        for (int i = 0; i < m; ++i) check = check * p;
    if (!(check == f)) throw Error("zpoly_factor: verification failed");
    return out;
}

bool zpoly_is_irreducible(const ZPoly& f) {
    if (f.is_zero() || f.deg() == 0) return false;
    ZFactors fac = zpoly_factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace cmlab
