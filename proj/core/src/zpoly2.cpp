#include "cmlab/zpoly2.hpp"

namespace cmlab {

void ZPoly2::trim() {
    while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
}

int ZPoly2::deg_y() const {
    int d = -1;
    for (const auto& c : cx_) d = std::max(d, c.deg());
    return d;
}

ZPoly2 ZPoly2::operator+(const ZPoly2& o) const {
    std::vector<ZPoly> r(std::max(cx_.size(), o.cx_.size()));
    for (std::size_t i = 0; i < cx_.size(); ++i) r[i] = r[i] + cx_[i];
    for (std::size_t i = 0; i < o.cx_.size(); ++i) r[i] = r[i] + o.cx_[i];
    return ZPoly2(std::move(r));
}

ZPoly2 ZPoly2::operator-(const ZPoly2& o) const {
    std::vector<ZPoly> r(std::max(cx_.size(), o.cx_.size()));
    for (std::size_t i = 0; i < cx_.size(); ++i) r[i] = r[i] + cx_[i];
    for (std::size_t i = 0; i < o.cx_.size(); ++i) r[i] = r[i] - o.cx_[i];
    return ZPoly2(std::move(r));
}

ZPoly2 ZPoly2::operator*(const ZPoly2& o) const {
    if (cx_.empty() || o.cx_.empty()) return {};
    std::vector<ZPoly> r(cx_.size() + o.cx_.size() - 1);
    for (std::size_t i = 0; i < cx_.size(); ++i)
        for (std::size_t j = 0; j < o.cx_.size(); ++j)
            r[i + j] = r[i + j] + cx_[i] * o.cx_[j];
    return ZPoly2(std::move(r));
}

ZPoly ZPoly2::eval_x(const ZZ& x) const {
    ZPoly r;
    for (std::size_t i = cx_.size(); i-- > 0;) {
        r = r * x;
        r = r + cx_[i];
    }
    return r;
}

ZPoly ZPoly2::eval_y(const ZZ& y) const {
    std::vector<ZZ> r(cx_.size());
    for (std::size_t i = 0; i < cx_.size(); ++i) r[i] = cx_[i].eval(y);
    return ZPoly(std::move(r));
}

ZZ ZPoly2::eval(const ZZ& x, const ZZ& y) const { return eval_y(y).eval(x); }

QQ ZPoly2::eval(const QQ& x, const QQ& y) const {
    QQ r(0);
    for (std::size_t i = cx_.size(); i-- > 0;) {
        r *= x;
        r += cx_[i].eval(y);
    }
    return r;
}

ZPoly2 ZPoly2::swapped() const {
    int dy = deg_y();
    std::vector<ZPoly> r(dy + 1);
    for (int j = 0; j <= dy; ++j) r[j] = coeff_y(j);
    return ZPoly2(std::move(r));
}

ZPoly ZPoly2::coeff_y(std::size_t j) const {
    std::vector<ZZ> r(cx_.size(), ZZ(0));
    for (std::size_t i = 0; i < cx_.size(); ++i)
        if (static_cast<int>(j) <= cx_[i].deg()) r[i] = cx_[i][j];
    return ZPoly(std::move(r));
}

ZPoly2 ZPoly2::from_x_poly(const ZPoly& p) {
    std::vector<ZPoly> r;
    for (int i = 0; i <= p.deg(); ++i) r.push_back(ZPoly::monomial(p[i], 0));
    return ZPoly2(std::move(r));
}

ZPoly2 ZPoly2::from_y_poly(const ZPoly& p) { return ZPoly2({p}); }

ZPoly2 ZPoly2::term(const ZZ& c, std::size_t i, std::size_t j) {
    std::vector<ZPoly> r(i + 1);
    r[i] = ZPoly::monomial(c, j);
    return ZPoly2(std::move(r));
}

ZPoly zpoly2_resultant_x(const ZPoly& p, const ZPoly2& phi) {
    if (p.is_zero() || phi.is_zero()) return ZPoly();
    int h = p.deg();
    if (phi.deg_x() == 0) {
        // Res(P, c(Y)) = c(Y)^deg(P)
        ZPoly base = phi.coeff_x(0);
        ZPoly r({ZZ(1)});
        for (int i = 0; i < h; ++i) r = r * base;
        return r;
    }
    if (phi.deg_x() == 1) {
        // A^h P(-B/A) = (-1)^h Res_X(P, A(Y) X + B(Y)), Horner in (-B)
        const ZPoly& A = phi.coeff_x(1);
        const ZPoly B = phi.coeff_x(0);
        ZPoly negB = -B;
        std::vector<ZPoly> apow(h + 1);
        apow[0] = ZPoly({ZZ(1)});
        for (int i = 1; i <= h; ++i) apow[i] = apow[i - 1] * A;
        ZPoly r = ZPoly::monomial(p[h], 0);
        for (int k = h - 1; k >= 0; --k) {
            r = r * negB;
            if (p[k] != 0) r = r + apow[h - k] * p[k];
        }
        if (h & 1) r = -r;
        return r;
    }
    // general case: evaluate at integer nodes, interpolate exactly
    long n = static_cast<long>(h) * phi.deg_y() + 1;
    std::vector<QQ> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    long node = 0;
    while (static_cast<long>(xs.size()) < n) {
        ZZ y0(node);
        ZPoly spec = phi.eval_y(y0);
        if (spec.deg() == phi.deg_x()) {
            xs.emplace_back(ZZ(node));
            ys.emplace_back(zpoly_resultant(p, spec));
        }
        node = node <= 0 ? -node + 1 : -node;
    }
    // Newton divided differences over Q
    std::vector<QQ> dd(ys);
    for (long j = 1; j < n; ++j)
        for (long i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    // expand Newton form
    std::vector<QQ> poly{dd[n - 1]};
    for (long i = n - 2; i >= 0; --i) {
        // poly = poly * (X - xs[i]) + dd[i]
        std::vector<QQ> next(poly.size() + 1, QQ(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    ZZ den(1);
    for (auto& q : poly) {
        q.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (den != 1) throw Error("zpoly2_resultant_x: interpolation produced non-integers");
    std::vector<ZZ> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = poly[i].get_num();
    return ZPoly(std::move(out));
}

} // namespace cmlab
