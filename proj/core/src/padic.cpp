#include "cmlab/padic.hpp"

#include "cmlab/parallel.hpp"
#include "cmlab/sunits.hpp"

#include "json.hpp"

#include <cmath>

namespace cmlab {
namespace padic {

using nlohmann::ordered_json;

long NewtonPolygon::total_length() const {
    long n = 0;
    for (const auto& s : segments) n += s.length;
    return n;
}

std::vector<QQ> NewtonPolygon::valuations() const {
    std::vector<QQ> out;
    for (const auto& s : segments)
        for (long i = 0; i < s.length; ++i) out.push_back(s.valuation);
    return out;
}

QQ NewtonPolygon::max_valuation() const {
    if (segments.empty()) return QQ(0);
    return segments.back().valuation;
}

NewtonPolygon newton_polygon(const ZPoly& p, const ZZ& prime) {
    if (p.is_zero()) throw Error("newton_polygon: zero polynomial");
    if (p.constant() == 0) throw Error("newton_polygon: strip zero roots first");
    // points (i, v_p(a_i)) for nonzero a_i
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= p.deg(); ++i) {
        if (p[i] == 0) continue;
        pts.emplace_back(i, static_cast<long>(zz_valuation(p[i], prime)));
    }
    // lower convex hull, left to right (Andrew monotone chain, lower part)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep if b is strictly below segment a-pt: cross product test
            long cross = (b.first - a.first) * (pt.second - a.second) -
                         (pt.first - a.first) * (b.second - a.second);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon poly;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long di = hull[i].first - hull[i - 1].first;
        long dv = hull[i].second - hull[i - 1].second;
        QQ valuation(-dv, di);
        valuation.canonicalize();
        poly.segments.push_back({valuation, di});
    }
    std::reverse(poly.segments.begin(), poly.segments.end()); // ascending valuations
    return poly;
}

namespace {

// b^deg * P(X + a/b) as an integer polynomial
ZPoly shift_rational(const ZPoly& p, const QQ& alpha) {
    ZZ a = alpha.get_num(), b = alpha.get_den();
    // Horner against (b X + a), scaling numerator each step
    ZPoly base({a, b});
    ZPoly r;
    for (int i = p.deg(); i >= 0; --i) {
        r = r * base;
        if (p[i] != 0) {
            // p[i] * b^(deg - i)
            r = r + ZPoly({p[i] * zz_pow(b, p.deg() - i)});
        }
    }
    return r;
}

} // namespace

namespace {

// p^-m <= r, exact
bool pow_le(const ZZ& p, long m, const QQ& r) {
    if (m >= 0) return QQ(ZZ(1), zz_pow(p, m)) <= r;
    return QQ(zz_pow(p, -m), ZZ(1)) <= r;
}

} // namespace

long conjugates_in_disc(const ZPoly& p, const QQ& alpha, const Place& v, const QQ& radius) {
    if (p.is_zero()) throw Error("conjugates_in_disc: zero polynomial");
    if (!(radius > 0)) throw Error("conjugates_in_disc: radius must be positive");
    if (!v.archimedean) {
        ZPoly shifted = shift_rational(p, alpha);
        // exact equality (zero roots of the shift) is excluded
        while (!shifted.is_zero() && shifted.constant() == 0) {
            std::vector<ZZ> sh(shifted.coeffs().begin() + 1, shifted.coeffs().end());
            shifted = ZPoly(std::move(sh));
        }
        if (shifted.deg() < 1) return 0;
        // snap r down to p^-m: smallest m with p^-m <= r
        long m = static_cast<long>(std::ceil(-std::log(radius.get_d()) / std::log(v.p.get_d())));
        while (!pow_le(v.p, m, radius)) ++m;
        while (pow_le(v.p, m - 1, radius)) --m;
        NewtonPolygon poly = newton_polygon(shifted, v.p);
        long count = 0;
        QQ mq(m);
        for (const auto& seg : poly.segments)
            if (seg.valuation > mq) count += seg.length;
        return count;
    }
    // archimedean: certified complex roots of the squarefree part
    ZPoly sf = zpoly_squarefree_part(p);
    auto roots = complex_roots(sf, 128);
    mpfr_prec_t prec = 256;
    Real r(radius, prec);
    Real are(alpha, prec);
    bool alpha_is_root = p.eval(alpha) == 0;
    long count = 0;
    for (const auto& root : roots) {
        Complex delta(root.value.re - are, root.value.im);
        Real dist = delta.abs();
        if (alpha_is_root && dist <= root.error) continue; // the root equal to alpha
        if (dist + root.error < r) ++count;
        else if (!(dist - root.error > r))
            throw Error("conjugates_in_disc: boundary tie; perturb the radius");
    }
    return count;
}

ValuationProfile pairwise_difference_valuations(const quadforms::Discriminant& d,
                                                const quadforms::Discriminant& d0, const ZZ& p,
                                                const ZPoly* precomputed) {
    if (d.value == d0.value)
        throw Error("pairwise_difference_valuations: equal discriminants rejected");
    ZPoly r;
    if (precomputed) {
        r = *precomputed;
    } else {
        ZPoly hd = classpoly::hilbert_class_poly_cached(d).poly;
        ZPoly hd0 = classpoly::hilbert_class_poly_cached(d0).poly;
        r = sunits::difference_resultant(hd, hd0);
    }
    NewtonPolygon poly = newton_polygon(r, p);
    ValuationProfile out{d, d0, p, poly.valuations()};
    return out;
}

ApproxRatio approx_ratio(const quadforms::Discriminant& d, const quadforms::Discriminant& d0,
                         const ZZ& p) {
    ValuationProfile prof = pairwise_difference_valuations(d, d0, p);
    QQ maxval(0);
    for (const auto& v : prof.valuations)
        if (v > maxval) maxval = v;
    double ratio = maxval.get_d() * std::log(p.get_d()) / std::log(-d.value.get_d());
    return {maxval, ratio};
}

std::vector<DispersalRow> dispersal_table(const modfunc::ModularRelation& rel, const QQ& alpha,
                                          const Place& v, const QQ& radius, long dmax,
                                          int parallelism,
                                          const std::function<void(long, long)>& progress) {
    if (dmax > kMaxDispersalBound) throw Error("dispersal_table: Dmax guard exceeded");
    std::vector<long> ds;
    for (long a = 3; a <= dmax; ++a) {
        long m = a % 4;
        if (m == 0 || m == 3) ds.push_back(-a); // -a = 0 or 1 mod 4
    }
    std::vector<DispersalRow> rows(ds.size());
    std::atomic<long> done{0};
    parallel_for(ds.size(), parallelism, [&](std::size_t i) {
        quadforms::Discriminant d = quadforms::decompose(ds[i]);
        auto factors = modfunc::singular_moduli_polys(rel, d);
        long total = 0, inside = 0;
        for (const auto& f : factors) {
            total += f.deg();
            inside += conjugates_in_disc(f, alpha, v, radius);
        }
        QQ frac(inside, total);
        frac.canonicalize();
        rows[i] = {ds[i], total, inside, frac};
        long k = ++done;
        if (progress) progress(k, static_cast<long>(ds.size()));
    });
    return rows;
}

std::string qq_to_string(const QQ& q) {
    QQ c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string dispersal_csv(const std::vector<DispersalRow>& rows) {
    std::string out = "D,orbit_size,in_disc,fraction\n";
    for (const auto& r : rows) {
        out += std::to_string(r.d) + "," + std::to_string(r.orbit_size) + "," +
               std::to_string(r.in_disc) + "," + qq_to_string(r.fraction) + "\n";
    }
    return out;
}

std::string dispersal_json(const std::vector<DispersalRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["D"] = r.d;
        o["orbit_size"] = r.orbit_size;
        o["in_disc"] = r.in_disc;
        o["fraction"] = qq_to_string(r.fraction);
        arr.push_back(o);
    }
    return arr.dump();
}

} // namespace padic
} // namespace cmlab
