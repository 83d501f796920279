#include "cmlab/hecke.hpp"

#include "cmlab/cache.hpp"
#include "cmlab/classpoly.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cmlab {
namespace hecke {

using nlohmann::ordered_json;

long sigma1(long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

namespace {

/// Truncated integer Laurent series: sum of c[i] q^(val + i), coefficients
/// correct for exponents < hi.
struct QS {
    long val = 0;
    long hi = 0; // exclusive bound of validity
    std::vector<ZZ> c;

    long top() const { return val + static_cast<long>(c.size()); }
    ZZ at(long e) const {
        if (e < val || e >= top()) return ZZ(0);
        return c[e - val];
    }
    void normalize() {
        while (!c.empty() && c.front() == 0) {
            c.erase(c.begin());
            ++val;
        }
        long keep = hi - val;
        if (keep < 0) keep = 0;
        if (static_cast<long>(c.size()) > keep) c.resize(keep);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

QS qs_mul(const QS& a, const QS& b) {
    QS r;
    r.val = a.val + b.val;
    r.hi = std::min(a.hi + b.val, b.hi + a.val);
    long len = r.hi - r.val;
    if (len < 0) len = 0;
    r.c.assign(len, ZZ(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long ei = a.val + static_cast<long>(i);
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            long e = ei + b.val + static_cast<long>(j);
            if (e >= r.hi) break;
            mpz_addmul(r.c[e - r.val].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
        }
    }
    r.normalize();
    return r;
}

QS qs_add(const QS& a, const QS& b) {
    QS r;
    r.val = std::min(a.val, b.val);
    r.hi = std::min(a.hi, b.hi);
    long len = std::max(a.top(), b.top()) - r.val;
    if (len < 0) len = 0;
    r.c.assign(len, ZZ(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.val + i - r.val] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.val + i - r.val] += b.c[i];
    r.normalize();
    return r;
}

QS qs_scale(const QS& a, const ZZ& s) {
    QS r = a;
    for (auto& x : r.c) x *= s;
    r.normalize();
    return r;
}

QS qs_const(const ZZ& v, long hi) {
    QS r;
    r.val = 0;
    r.hi = hi;
    r.c = {v};
    r.normalize();
    return r;
}

/// inverse of a series with leading coefficient +-1
QS qs_inverse(const QS& a) {
    if (a.c.empty() || !(a.c[0] == 1 || a.c[0] == -1))
        throw Error("qs_inverse: leading coefficient must be a unit");
    QS r;
    r.val = -a.val;
    r.hi = a.hi - 2 * a.val;
    long len = a.hi - a.val;
    if (len < 0) len = 0;
    r.c.assign(len, ZZ(0));
    ZZ lead = a.c[0];
    r.c[0] = lead; // 1/(+-1) = +-1
    for (long k = 1; k < len; ++k) {
        ZZ s(0);
        for (long i = 1; i <= k; ++i) {
            if (i < static_cast<long>(a.c.size()) && a.c[i] != 0)
                s += a.c[i] * r.c[k - i];
        }
        r.c[k] = -s * lead;
    }
    r.hi = r.val + len;
    r.normalize();
    return r;
}

std::vector<ZZ> j_series_coeffs(long hi) {
    // j = q^-1 w + 768 + 48 u + u^2 with u = 4096 q w^-1 and
    // w = prod_{m odd} (1 - q^m)^24
    long n = hi + 2;
    QS w;
    w.val = 0;
    w.hi = n;
    w.c.assign(n, ZZ(0));
    w.c[0] = 1;
    for (long m = 1; m < n; m += 2) {
        // multiply by (1 - q^m)^24 via 24 sparse passes
        for (int rep = 0; rep < 24; ++rep) {
            for (long i = n - 1; i >= m; --i) w.c[i] -= w.c[i - m];
        }
    }
    QS v = qs_inverse(w);
    QS u = qs_scale(v, ZZ(4096));
    u.val += 1;
    u.hi += 1;
    QS jw = w;
    jw.val -= 1;
    jw.hi -= 1;
    QS j = qs_add(jw, qs_const(ZZ(768), n - 2));
    j = qs_add(j, qs_scale(u, ZZ(48)));
    j = qs_add(j, qs_mul(u, u));
    std::vector<ZZ> out(hi + 1); // exponents -1 .. hi-1
    for (long e = -1; e < hi; ++e) out[e + 1] = j.at(e);
    return out;
}

// power sums -> monic X-polynomial with series coefficients
std::vector<QS> series_from_power_sums(const std::vector<QS>& p, long d, long hi) {
    std::vector<QS> e(d + 1);
    e[0] = qs_const(ZZ(1), hi);
    for (long k = 1; k <= d; ++k) {
        QS s;
        s.val = 0;
        s.hi = hi;
        for (long i = 1; i <= k; ++i) {
            QS term = qs_mul(e[k - i], p[i]);
            if (i % 2 == 0) term = qs_scale(term, ZZ(-1));
            s = qs_add(s, term);
        }
        // divide by k exactly
        for (auto& x : s.c) {
            ZZ q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(),
                        ZZ(static_cast<long>(k)).get_mpz_t());
            if (r != 0) throw Error("modular polynomial: non-integral symmetric function");
            x = q;
        }
        e[k] = s;
    }
    // B(X) = sum_i (-1)^(d-i) e_{d-i} X^i
    std::vector<QS> bx(d + 1);
    for (long i = 0; i <= d; ++i) {
        bx[i] = e[d - i];
        if ((d - i) % 2 == 1) bx[i] = qs_scale(bx[i], ZZ(-1));
    }
    return bx;
}

ZPoly2 build_modular_poly(long n) {
    long s1 = sigma1(n);
    long guard = 8;
    long hi = s1 + guard; // q-precision bound (exclusive)
    std::vector<ZZ> j = j_series_coeffs(hi + 2);

    // blocks over (a, d) with a d = n; X-polynomial with series coefficients
    std::vector<QS> acc{qs_const(ZZ(1), hi)};
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long a = n / d;
        // J_a as a series in Q = q^(1/d): exponent a*m at Q-index a*m
        QS ja;
        ja.val = -a;
        ja.hi = a * (static_cast<long>(j.size()) - 1); // validity in Q-exponents
        ja.hi = std::min(ja.hi, d * hi + a * 2);
        ja.c.assign(ja.hi - ja.val, ZZ(0));
        for (long m = -1; a * m < ja.hi && m + 1 < static_cast<long>(j.size()); ++m) {
            long e = a * m;
            if (e >= ja.val && e < ja.hi) ja.c[e - ja.val] = j[m + 1];
        }
        ja.normalize();
        // power sums of the block roots: p_k = d * (exponents of J_a^k divisible by d)
        std::vector<QS> psums(d + 1);
        psums[0] = qs_const(ZZ(static_cast<long>(d)), hi);
        QS pw = qs_const(ZZ(1), ja.hi);
        for (long k = 1; k <= d; ++k) {
            pw = qs_mul(pw, ja);
            QS pk;
            pk.val = -((k * a) / d + 1);
            pk.hi = std::min(hi, pw.hi / d);
            pk.c.assign(pk.hi - pk.val, ZZ(0));
            for (long e = pw.val; e < pw.top(); ++e) {
                if (e % d != 0) continue;
                long eq = e / d;
                if (eq >= pk.val && eq < pk.hi) pk.c[eq - pk.val] = pw.at(e) * ZZ(static_cast<long>(d));
            }
            pk.normalize();
            psums[k] = pk;
        }
        std::vector<QS> block = series_from_power_sums(psums, d, hi);
        // multiply into the accumulator
        std::vector<QS> next(acc.size() + block.size() - 1);
        for (auto& t : next) t = QS{0, hi, {}};
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t k = 0; k < block.size(); ++k)
                next[i + k] = qs_add(next[i + k], qs_mul(acc[i], block[k]));
        acc = std::move(next);
    }
    if (static_cast<long>(acc.size()) - 1 != s1)
        throw Error("modular polynomial: degree mismatch");

    // express each X^k coefficient as a polynomial in j
    // j-powers: J^t for t <= s1
    std::vector<QS> jpow(s1 + 1);
    jpow[0] = qs_const(ZZ(1), hi);
    {
        QS j1;
        j1.val = -1;
        j1.hi = hi + 1;
        j1.c.assign(j1.hi - j1.val, ZZ(0));
        for (long m = -1; m < hi && m + 1 < static_cast<long>(j.size()); ++m)
            j1.c[m + 1] = j[m + 1];
        j1.normalize();
        for (long t = 1; t <= s1; ++t) jpow[t] = qs_mul(jpow[t - 1], j1);
    }
    std::vector<ZPoly> coeffs_x(s1 + 1);
    for (long k = 0; k <= s1; ++k) {
        QS s = acc[k];
        std::vector<ZZ> ycoeffs(s1 + 1, ZZ(0));
        while (true) {
            s.normalize();
            if (s.c.empty() || s.val >= 0) break;
            long v = -s.val;
            if (v > s1) throw Error("modular polynomial: principal part too deep");
            ZZ c = s.c[0];
            ycoeffs[v] = c;
            s = qs_add(s, qs_scale(jpow[v], -c));
        }
        if (!s.c.empty()) {
            ycoeffs[0] = s.at(0);
            s = qs_add(s, qs_const(-s.at(0), hi));
        }
        s.normalize();
        // remainder must vanish through the guard range
        for (long e = s.val; e < std::min(s.hi, hi - 2); ++e)
            if (s.at(e) != 0)
                throw Error("modular polynomial: residual series at level " + std::to_string(n));
        coeffs_x[k] = ZPoly(std::move(ycoeffs));
    }
    return ZPoly2(std::move(coeffs_x));
}

std::filesystem::path phi_cache_path(long n) {
    return cache_root() / "phi" / ("n" + std::to_string(n) + ".json");
}

ZPoly2 phi_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<ZPoly> cx;
    for (const auto& t : j.at("terms")) {
        std::size_t i = t.at(0).get<std::size_t>();
        std::size_t k = t.at(1).get<std::size_t>();
        ZZ c = zz_from_string(t.at(2).get<std::string>());
        if (cx.size() <= i) cx.resize(i + 1);
        cx[i] = cx[i] + ZPoly::monomial(c, k);
    }
    return ZPoly2(std::move(cx));
}

std::string phi_to_json(long n, const ZPoly2& phi) {
    ordered_json out;
    out["name"] = "phi_" + std::to_string(n);
    out["deg_x"] = phi.deg_x();
    out["deg_y"] = phi.deg_y();
    ordered_json terms = ordered_json::array();
    for (int i = 0; i <= phi.deg_x(); ++i) {
        const ZPoly& c = phi.coeff_x(i);
        for (int k = 0; k <= c.deg(); ++k)
            if (c[k] != 0) terms.push_back({i, k, c[k].get_str()});
    }
    out["terms"] = terms;
    return out.dump();
}

std::map<long, ClassicalModularPolynomial> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

const ClassicalModularPolynomial& classical_modular_poly(long n) {
    if (n < 1 || n > kMaxModularLevel)
        throw Error("classical_modular_poly: level out of range");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    auto path = phi_cache_path(n);
    if (auto blob = read_file(path)) {
        auto parsed = nlohmann::json::parse(*blob, nullptr, false);
        if (!parsed.is_discarded()) {
            ClassicalModularPolynomial cmp{n, phi_from_json(*blob)};
            return g_phi_cache.emplace(n, std::move(cmp)).first->second;
        }
    }
    ClassicalModularPolynomial cmp{n, build_modular_poly(n)};
    atomic_write(path, phi_to_json(n, cmp.poly));
    return g_phi_cache.emplace(n, std::move(cmp)).first->second;
}

std::vector<ZZ> j_q_series(long terms) { return j_series_coeffs(terms); }

namespace {

// point count of a general Weierstrass quintuple over F_{p^2}, brute force
long count_points(const Fp2& F, Fp2El a1, Fp2El a2, Fp2El a3, Fp2El a4, Fp2El a6) {
    long n = 1; // point at infinity
    std::uint64_t q = F.order();
    for (std::uint64_t xi = 0; xi < q; ++xi) {
        Fp2El x = F.element(xi);
        Fp2El x2 = F.mul(x, x);
        Fp2El rhs = F.add(F.mul(x2, x), F.add(F.mul(a2, x2), F.add(F.mul(a4, x), a6)));
        Fp2El lin = F.add(F.mul(a1, x), a3);
        for (std::uint64_t yi = 0; yi < q; ++yi) {
            Fp2El y = F.element(yi);
            Fp2El lhs = F.add(F.mul(y, y), F.mul(lin, y));
            if (lhs == rhs) ++n;
        }
    }
    return n;
}

} // namespace

SupersingularSet supersingular_set(long p) {
    if (p < 2 || p > kMaxSupersingularPrime) throw Error("supersingular_set: prime out of range");
    Fp2 F(static_cast<std::uint64_t>(p));
    std::vector<Fp2El> points;
    std::uint64_t q = F.order();
    if (p == 2 || p == 3) {
        // small characteristic: enumerate all Weierstrass quintuples and
        // count points directly (j from the universal b-invariant formulas)
        std::vector<Fp2El> seen;
        Fp2El four = F.from_base(4 % p), two = F.from_base(2 % p);
        for (std::uint64_t i1 = 0; i1 < q; ++i1)
            for (std::uint64_t i2 = 0; i2 < q; ++i2)
                for (std::uint64_t i3 = 0; i3 < q; ++i3)
                    for (std::uint64_t i4 = 0; i4 < q; ++i4)
                        for (std::uint64_t i6 = 0; i6 < q; ++i6) {
                            Fp2El a1 = F.element(i1), a2 = F.element(i2), a3 = F.element(i3),
                                  a4 = F.element(i4), a6 = F.element(i6);
                            Fp2El b2 = F.add(F.mul(a1, a1), F.mul(four, a2));
                            Fp2El b4 = F.add(F.mul(two, a4), F.mul(a1, a3));
                            Fp2El b6 = F.add(F.mul(a3, a3), F.mul(four, a6));
                            Fp2El b8 = F.add(F.mul(F.mul(a1, a1), a6), F.mul(four, F.mul(a2, a6)));
                            b8 = F.sub(b8, F.mul(a1, F.mul(a3, a4)));
                            b8 = F.add(b8, F.mul(a2, F.mul(a3, a3)));
                            b8 = F.sub(b8, F.mul(a4, a4));
                            Fp2El b22 = F.mul(b2, b2);
                            Fp2El delta = F.neg(F.mul(b22, b8));
                            delta = F.sub(delta, F.mul(F.from_base(8 % p), F.mul(b4, F.mul(b4, b4))));
                            delta = F.sub(delta, F.mul(F.from_base(27 % p), F.mul(b6, b6)));
                            delta = F.add(delta, F.mul(F.from_base(9 % p), F.mul(b2, F.mul(b4, b6))));
                            if (F.is_zero(delta)) continue;
                            Fp2El c4 = F.sub(b22, F.mul(F.from_base(24 % p), b4));
                            Fp2El jv = F.mul(F.mul(c4, F.mul(c4, c4)), F.inv(delta));
                            bool have = false;
                            for (const auto& s : seen)
                                if (s == jv) { have = true; break; }
                            if (have) continue;
                            seen.push_back(jv);
                            long count = count_points(F, a1, a2, a3, a4, a6);
                            long trace = static_cast<long>(q) + 1 - count;
                            if (trace % p == 0) points.push_back(jv);
                        }
    } else {
        F.build_square_table();
        Fp2El j0 = F.zero();
        Fp2El j1728 = F.from_int(ZZ(1728));
        for (std::uint64_t ji = 0; ji < q; ++ji) {
            Fp2El j = F.element(ji);
            Fp2El A, B;
            if (j == j0) { // y^2 = x^3 + 1
                A = F.zero();
                B = F.one();
            } else if (j == j1728) { // y^2 = x^3 + x
                A = F.one();
                B = F.zero();
            } else { // y^2 = x^3 + 3kx + 2k with k = j/(1728 - j)
                Fp2El k = F.mul(j, F.inv(F.sub(j1728, j)));
                A = F.mul(F.from_base(3 % p), k);
                B = F.mul(F.from_base(2 % p), k);
            }
            long sum = 0; // character sum; trace = -sum, twist-invariant mod p
            for (std::uint64_t xi = 0; xi < q; ++xi) {
                Fp2El x = F.element(xi);
                Fp2El f = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(A, x), B));
                if (F.is_zero(f)) continue;
                sum += F.is_square(f) ? 1 : -1;
            }
            if ((sum % p) == 0) points.push_back(j);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {p, points};
}

long HeckeDivisor::degree() const {
    long d = 0;
    for (const auto& [k, v] : entries) d += v;
    return d;
}

bool HeckeDivisor::supported_on(const std::vector<Fp2El>& set) const {
    for (const auto& [k, v] : entries) {
        if (v == 0) continue;
        if (!std::binary_search(set.begin(), set.end(), k)) return false;
    }
    return true;
}

namespace {

// roots with multiplicity of a monic-in-X specialization over F_{p^2}
HeckeDivisor roots_with_multiplicity(const Fp2& F, std::vector<Fp2El> poly, long p) {
    HeckeDivisor d;
    d.p = p;
    std::uint64_t q = F.order();
    // trim
    while (!poly.empty() && F.is_zero(poly.back())) poly.pop_back();
    for (std::uint64_t ti = 0; ti < q && poly.size() > 1; ++ti) {
        Fp2El t = F.element(ti);
        for (;;) {
            // synthetic division by (X - t); remainder = value
            std::vector<Fp2El> quo(poly.size() - 1);
            Fp2El carry = F.zero();
            for (std::size_t i = poly.size(); i-- > 1;) {
                carry = F.add(poly[i], F.mul(carry, t));
                quo[i - 1] = carry;
            }
            Fp2El rem = F.add(poly[0], F.mul(carry, t));
            if (!F.is_zero(rem)) break;
            d.entries[t] += 1;
            poly = quo;
            if (poly.size() <= 1) break;
        }
    }
    return d;
}

} // namespace

HeckeDivisor hecke_image(Fp2El j0, long n, long p) {
    if (n < 1 || n > kMaxModularLevel) throw Error("hecke_image: level out of range");
    if (n % p == 0) throw Error("hecke_image: level divisible by the characteristic");
    const auto& phi = classical_modular_poly(n);
    Fp2 F(static_cast<std::uint64_t>(p));
    // evaluate Phi(X, j0) over F_{p^2}
    std::vector<Fp2El> poly(phi.poly.deg_x() + 1, F.zero());
    for (int i = 0; i <= phi.poly.deg_x(); ++i) {
        const ZPoly& c = phi.poly.coeff_x(i);
        Fp2El acc = F.zero();
        for (int k = c.deg(); k >= 0; --k) {
            acc = F.mul(acc, j0);
            acc = F.add(acc, F.from_int(c[k]));
        }
        poly[i] = acc;
    }
    return roots_with_multiplicity(F, std::move(poly), p);
}

HeckeDivisor hecke_image(const HeckeDivisor& d, long n) {
    HeckeDivisor out;
    out.p = d.p;
    for (const auto& [pt, mult] : d.entries) {
        HeckeDivisor img = hecke_image(pt, n, d.p);
        for (const auto& [pt2, m2] : img.entries) out.entries[pt2] += mult * m2;
    }
    return out;
}

long overlap_degree(Fp2El j0, long q, long qprime, long p) {
    if (q == qprime) throw Error("overlap_degree: distinct primes required");
    HeckeDivisor dq = hecke_image(j0, q, p);
    HeckeDivisor dqp = hecke_image(j0, qprime, p);
    long deg = 0;
    for (const auto& [pt, mult] : dq.entries)
        if (mult > 0 && dqp.entries.count(pt) && dqp.entries.at(pt) > 0) deg += mult;
    return deg;
}

std::vector<OrbitMeasureRow> hecke_orbit_measure(Fp2El j0, long maxlevel, long p) {
    SupersingularSet ss = supersingular_set(p);
    std::vector<OrbitMeasureRow> rows;
    for (long n = 1; n <= maxlevel; ++n) {
        if (n % p == 0) continue;
        HeckeDivisor d = hecke_image(j0, n, p);
        OrbitMeasureRow row;
        row.n = n;
        row.mass.assign(ss.points.size(), QQ(0));
        long deg = sigma1(n);
        row.max_atom = QQ(0);
        for (const auto& [pt, mult] : d.entries) {
            auto it = std::lower_bound(ss.points.begin(), ss.points.end(), pt);
            if (it == ss.points.end() || !(*it == pt))
                throw Error("hecke_orbit_measure: support left the supersingular set");
            QQ mass(mult, deg);
            mass.canonicalize();
            row.mass[it - ss.points.begin()] = mass;
            if (mass > row.max_atom) row.max_atom = mass;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

HeckeDivisor cm_reduction_divisor(const quadforms::Discriminant& d, long p) {
    if (abs(d.value) > ZZ(100000L)) throw Error("cm_reduction_divisor: discriminant bound exceeded");
    auto rt = quadforms::reduction_type(d, ZZ(p));
    if (rt.type == quadforms::SplitType::split)
        throw OrdinaryReduction("cm_reduction_divisor: split prime gives ordinary reduction");
    ZPoly h = classpoly::hilbert_class_poly_cached(d).poly;
    Fp2 F(static_cast<std::uint64_t>(p));
    std::vector<Fp2El> poly(h.deg() + 1);
    for (int i = 0; i <= h.deg(); ++i) poly[i] = F.from_int(h[i]);
    return roots_with_multiplicity(F, std::move(poly), p);
}

std::string divisor_to_json(const HeckeDivisor& d) {
    ordered_json out;
    out["p"] = d.p;
    ordered_json entries = ordered_json::array();
    for (const auto& [pt, mult] : d.entries)
        if (mult != 0)
            entries.push_back({{pt.a, pt.b}, mult});
    out["entries"] = entries;
    return out.dump();
}

} // namespace hecke
} // namespace cmlab
