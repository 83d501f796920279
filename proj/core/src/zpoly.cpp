#include "cmlab/zpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cmlab {

ZPoly ZPoly::from_coeffs(std::initializer_list<long> cs) {
    std::vector<ZZ> v;
    for (long c : cs) v.emplace_back(c);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::monomial(const ZZ& coeff, std::size_t deg) {
    std::vector<ZZ> v(deg + 1, ZZ(0));
    v[deg] = coeff;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::x_minus(const ZZ& a) { return ZPoly({-a, ZZ(1)}); }

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<ZZ> r(std::max(c_.size(), o.c_.size()), ZZ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<ZZ> r(std::max(c_.size(), o.c_.size()), ZZ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<ZZ> r(c_.size() + o.c_.size() - 1, ZZ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
    std::vector<ZZ> r(c_);
    for (auto& x : r) x = -x;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZZ& s) const {
    if (s == 0) return {};
    std::vector<ZZ> r(c_);
    for (auto& x : r) x *= s;
    return ZPoly(std::move(r));
}

ZZ ZPoly::eval(const ZZ& x) const {
    ZZ r(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

QQ ZPoly::eval(const QQ& x) const {
    QQ r(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += QQ(c_[i]);
    }
    return r;
}

ZPoly ZPoly::derivative() const {
    std::vector<ZZ> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * ZZ(static_cast<unsigned long>(i)));
    return ZPoly(std::move(r));
}

ZPoly ZPoly::shifted(const ZZ& a) const {
    // Horner: f(X + a) built from the top coefficient down.
    ZPoly r;
    ZPoly base({a, ZZ(1)});
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * base;
        if (c_[i] != 0) r = r + ZPoly::monomial(c_[i], 0);
    }
    return r;
}

ZPoly ZPoly::scaled_arg(const ZZ& s) const {
    std::vector<ZZ> r(c_);
    ZZ pw(1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= s;
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::reversed() const {
    std::vector<ZZ> r(c_.rbegin(), c_.rend());
    return ZPoly(std::move(r));
}

ZPoly ZPoly::inflate(unsigned long e) const {
    if (c_.empty() || e == 1) return *this;
    std::vector<ZZ> r(static_cast<std::size_t>(deg()) * e + 1, ZZ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::deflate(unsigned long e) const {
    if (e == 1) return *this;
    std::vector<ZZ> r(c_.size() / e + 1, ZZ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % e != 0) throw Error("deflate: exponent not divisible");
        r.at(i / e) = c_[i];
    }
    return ZPoly(std::move(r));
}

unsigned long ZPoly::exponent_gcd() const {
    unsigned long g = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) g = std::gcd(g, static_cast<unsigned long>(i));
    return g == 0 ? 1 : g;
}

ZZ ZPoly::content() const {
    ZZ g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (c_.empty()) return {};
    ZZ g = content();
    if (sgn(lc()) < 0) g = -g;
    std::vector<ZZ> r(c_);
    for (auto& x : r) x /= g;
    return ZPoly(std::move(r));
}

ZZ ZPoly::max_abs_coeff() const {
    ZZ m(0);
    for (const auto& x : c_) {
        ZZ a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        ZZ a = c_[i];
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        ZZ aa = abs(a);
        if (i == 0 || aa != 1) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!zpoly_try_divide(a, b, &q)) throw Error("zpoly_divexact: not divisible");
    return q;
}

bool zpoly_try_divide(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quotient) *quotient = ZPoly();
        return true;
    }
    int dq = a.deg() - b.deg();
    if (dq < 0) return false;
    std::vector<ZZ> rem(a.coeffs());
    std::vector<ZZ> q(dq + 1, ZZ(0));
    for (int k = dq; k >= 0; --k) {
        ZZ top = rem[k + b.deg()];
        if (top == 0) continue;
        ZZ c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        if (r != 0) return false;
        q[k] = c;
        for (int i = 0; i <= b.deg(); ++i)
            mpz_submul(rem[k + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    if (quotient) *quotient = ZPoly(std::move(q));
    return true;
}

FpPoly zpoly_mod(const ZPoly& f, const FpCtx& F) {
    FpPoly r(f.coeffs().size());
    ZZ p(static_cast<unsigned long>(F.p));
    for (std::size_t i = 0; i < r.size(); ++i) {
        ZZ m = f[i] % p;
        if (sgn(m) < 0) m += p;
        r[i] = m.get_ui();
    }
    fpoly_trim(r);
    return r;
}

namespace {

const std::uint64_t kGcdPrimes[] = {
    4611686018427388039ULL, 4611686018427387847ULL, 4611686018427387817ULL,
    4611686018427387787ULL, 4611686018427387631ULL, 4611686018427387433ULL,
    4611686018427387247ULL, 4611686018427387209ULL};

ZZ crt_pair(const ZZ& r1, const ZZ& m1, const ZZ& r2, const ZZ& m2) {
    // r = r1 mod m1, r2 mod m2 with gcd(m1, m2) = 1
    ZZ inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw Error("crt: moduli not coprime");
    ZZ t = ((r2 - r1) * inv) % m2;
    if (sgn(t) < 0) t += m2;
    return r1 + m1 * t;
}

ZZ balanced(const ZZ& r, const ZZ& m) {
    ZZ x = r % m;
    if (sgn(x) < 0) x += m;
    if (x * 2 > m) x -= m;
    return x;
}

} // namespace

ZPoly zpoly_gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.is_zero()) return b0.is_zero() ? ZPoly() : b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    ZPoly a = a0.primitive_part(), b = b0.primitive_part();
    if (a.deg() < b.deg()) std::swap(a, b);
    // modular gcd with CRT reconstruction and divisibility check
    ZZ lcg;
    mpz_gcd(lcg.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());
    int best_deg = b.deg() + 1;
    std::vector<ZZ> acc;
    ZZ modulus(1);
    for (std::uint64_t p : kGcdPrimes) {
        FpCtx F(p);
        if (mpz_divisible_ui_p(a.lc().get_mpz_t(), p) || mpz_divisible_ui_p(b.lc().get_mpz_t(), p))
            continue;
        FpPoly g = fpoly_gcd(F, zpoly_mod(a, F), zpoly_mod(b, F));
        int d = fpoly_deg(g);
        if (d == 0) return ZPoly({ZZ(1)});
        if (d > best_deg) continue; // unlucky prime
        // scale so the leading coefficient matches gcd of leading coefficients
        std::uint64_t scale = F.mul(lcg.get_ui() ? (lcg % ZZ(static_cast<unsigned long>(p))).get_ui() : 0,
                                    F.inv(g.back()));
        ZZ zp(static_cast<unsigned long>(p));
        std::vector<ZZ> img(d + 1);
        for (int i = 0; i <= d; ++i) img[i] = ZZ(static_cast<unsigned long>(F.mul(g[i], scale)));
        if (d < best_deg) {
            best_deg = d;
            acc = img;
            modulus = zp;
        } else {
            for (int i = 0; i <= d; ++i) acc[i] = crt_pair(acc[i], modulus, img[i], zp);
            modulus *= zp;
        }
        std::vector<ZZ> cand(best_deg + 1);
        for (int i = 0; i <= best_deg; ++i) cand[i] = balanced(acc[i], modulus);
        ZPoly g_cand = ZPoly(std::move(cand)).primitive_part();
        if (!g_cand.is_zero() && zpoly_try_divide(a, g_cand, nullptr) &&
            zpoly_try_divide(b, g_cand, nullptr))
            return g_cand;
    }
    throw Error("zpoly_gcd: ran out of primes");
}

ZPoly zpoly_squarefree_part(const ZPoly& f) {
    if (f.is_zero() || f.deg() == 0) return f;
    ZPoly g = zpoly_gcd(f, f.derivative());
    if (g.deg() == 0) return f.primitive_part();
    return zpoly_divexact(f.primitive_part(), g).primitive_part();
}

std::vector<std::pair<ZPoly, int>> zpoly_squarefree_decompose(const ZPoly& f0) {
    // Yun's algorithm on the primitive part.
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly f = f0.primitive_part();
    if (f.deg() <= 0) return out;
    ZPoly df = f.derivative();
    ZPoly a = zpoly_gcd(f, df);
    ZPoly b = zpoly_divexact(f, a);
    ZPoly c = zpoly_divexact(df, a);
    ZPoly d = c - b.derivative();
    int mult = 1;
    while (true) {
        ZPoly g = zpoly_gcd(b, d);
        if (g.deg() > 0) out.emplace_back(g.primitive_part(), mult);
        b = zpoly_divexact(b, g);
        if (b.deg() == 0) break;
        c = zpoly_divexact(d, g);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

namespace {

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R
ZPoly zpoly_prem(const ZPoly& A, const ZPoly& B) {
    int d = B.deg();
    ZPoly R = A;
    long e = A.deg() - d + 1;
    while (!R.is_zero() && R.deg() >= d) {
        ZPoly lead = ZPoly::monomial(R.lc(), R.deg() - d);
        R = R * B.lc() - lead * B;
        --e;
    }
    if (e > 0) R = R * zz_pow(B.lc(), e);
    return R;
}

} // namespace

ZZ zpoly_resultant(const ZPoly& a0, const ZPoly& b0) {
    // subresultant PRS (Cohen, Alg. 3.3.7)
    if (a0.is_zero() || b0.is_zero()) return ZZ(0);
    ZPoly A = a0, B = b0;
    ZZ s(1);
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) s = -1;
        std::swap(A, B);
    }
    if (B.deg() == 0) return s * zz_pow(B.lc(), A.deg());
    ZZ ca = A.content(), cb = B.content();
    A = ZPoly([&] {
        std::vector<ZZ> c(A.coeffs());
        for (auto& x : c) x /= ca;
        return c;
    }());
    B = ZPoly([&] {
        std::vector<ZZ> c(B.coeffs());
        for (auto& x : c) x /= cb;
        return c;
    }());
    ZZ t = zz_pow(ca, B.deg()) * zz_pow(cb, A.deg());
    ZZ g(1), h(1);
    while (true) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
        ZPoly R = zpoly_prem(A, B);
        if (R.is_zero()) return ZZ(0);
        A = B;
        ZZ divisor = g * zz_pow(h, delta);
        std::vector<ZZ> rc(R.coeffs());
        for (auto& x : rc) x /= divisor;
        B = ZPoly(std::move(rc));
        g = A.lc();
        if (delta == 1) h = g;
        else if (delta > 1) h = zz_pow(g, delta) / zz_pow(h, delta - 1);
        if (B.deg() == 0) break;
    }
    // h^(1 - deg A) * lc(B)^(deg A)
    ZZ num = zz_pow(B.lc(), A.deg());
    if (A.deg() > 1) num /= zz_pow(h, A.deg() - 1);
    return s * t * num;
}

std::vector<ZZ> zpoly_power_sums(const ZPoly& f, int n) {
    if (f.is_zero() || f.lc() != 1) throw Error("zpoly_power_sums: monic input required");
    int d = f.deg();
    std::vector<ZZ> p(n + 1, ZZ(0));
    p[0] = d;
    for (int k = 1; k <= n; ++k) {
        ZZ s(0);
        // Newton: p_k = -k a_{d-k} - sum_{i=1}^{k-1} a_{d-i} p_{k-i}
        for (int i = 1; i < k; ++i) {
            int idx = d - i;
            if (idx >= 0 && f[idx] != 0) s += f[idx] * p[k - i];
        }
        if (d - k >= 0) s += f[d - k] * ZZ(static_cast<long>(k));
        p[k] = -s;
    }
    return p;
}

ZPoly zpoly_from_power_sums(const std::vector<ZZ>& p, int d) {
    // e_0 = 1; k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<ZZ> e(d + 1, ZZ(0));
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        ZZ s(0);
        for (int i = 1; i <= k; ++i) {
            if (i & 1) s += e[k - i] * p[i];
            else s -= e[k - i] * p[i];
        }
        ZZ q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), ZZ(static_cast<long>(k)).get_mpz_t());
        if (r != 0) throw Error("zpoly_from_power_sums: non-integral elementary symmetric function");
        e[k] = q;
    }
    std::vector<ZZ> c(d + 1);
    for (int k = 0; k <= d; ++k) c[d - k] = (k & 1) ? -e[k] : e[k];
    return ZPoly(std::move(c));
}

ZPoly zpoly_root_differences(const ZPoly& a, const ZPoly& b) {
    if (a.lc() != 1 || b.lc() != 1)
        throw Error("zpoly_root_differences: monic inputs required");
    int da = a.deg(), db = b.deg();
    int n = da * db;
    if (n == 0) return ZPoly({ZZ(1)});
    std::vector<ZZ> pa = zpoly_power_sums(a, n);
    std::vector<ZZ> pb = zpoly_power_sums(b, n);
    // power sums of {-beta}
    for (int k = 1; k <= n; k += 2) pb[k] = -pb[k];
    std::vector<ZZ> pr(n + 1, ZZ(0));
    pr[0] = n;
    ZZ binom;
    for (int m = 1; m <= n; ++m) {
        ZZ s(0);
        for (int t = 0; t <= m; ++t) {
            if (pa[t] == 0 || pb[m - t] == 0) continue;
            mpz_bin_uiui(binom.get_mpz_t(), m, t);
            s += binom * pa[t] * pb[m - t];
        }
        pr[m] = s;
    }
    return zpoly_from_power_sums(pr, n);
}

ZPoly zpoly_monicize(const ZPoly& f) {
    if (f.is_zero()) return f;
    if (f.lc() == 1) return f;
    int d = f.deg();
    std::vector<ZZ> c(d + 1);
    // coefficient of x^k becomes a_k * lc^(d-1-k); leading becomes 1
    ZZ pw(1);
    c[d] = 1;
    for (int k = d - 1; k >= 0; --k) {
        c[k] = f[k] * pw;
        pw *= f.lc();
    }
    return ZPoly(std::move(c));
}

} // namespace cmlab
