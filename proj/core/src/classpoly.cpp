#include "cmlab/classpoly.hpp"

#include "cmlab/cache.hpp"

#include "json.hpp"

#include <cmath>

namespace cmlab {
namespace classpoly {

using nlohmann::ordered_json;

namespace {

constexpr long kSeriesCap = 1L << 22;

// generalized pentagonal exponents with signs: 1 - q - q^2 + q^5 + q^7 - ...
Complex eta_series(const Complex& q, long bits) {
    mpfr_prec_t prec = q.prec();
    Real absq = q.abs();
    if (!(absq < Real(1.0, prec))) throw PrecisionInsufficient("eta: |q| >= 1");
    // number of terms: |q|^E < 2^-(bits+8)
    double lq = std::log(std::max(1e-300, absq.to_double()));
    long E = lq >= 0 ? kSeriesCap : static_cast<long>((bits + 8) * 0.6931471805599453 / -lq) + 2;
    if (E > kSeriesCap) throw PrecisionInsufficient("eta: series cap exceeded");
    Complex sum(1.0, 0.0, prec);
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 > E) break;
        Complex t = q.pow_ui(static_cast<unsigned long>(e1));
        if (e2 <= E + 3) t = t + q.pow_ui(static_cast<unsigned long>(e2));
        if (k & 1) sum = sum - t;
        else sum = sum + t;
    }
    return sum;
}

} // namespace

Complex eval_eta(const Complex& tau, long bits) {
    if (!(tau.im.sign() > 0)) throw Error("eval_eta: Im(tau) must be positive");
    mpfr_prec_t prec = bits + 64;
    // w = exp(2 pi i tau / 24), q = w^24
    Real pi = Real::pi(prec);
    Real re24 = Real(tau.re) * pi / Real(12.0, prec);
    Real im24 = Real(tau.im) * pi / Real(12.0, prec);
    // exp(i * pi tau / 12) = exp(-pi im/12) * (cos + i sin)(pi re / 12)
    Real mag = exp(-im24);
    Complex w(mag * cos(re24), mag * sin(re24));
    Complex q = w.pow_ui(24);
    return w * eta_series(q, bits);
}

Complex eval_eta_quotient(EtaVariant v, const Complex& tau, const PrecisionPolicy& policy) {
    long bits = policy.working_bits + policy.safety_margin_bits;
    mpfr_prec_t prec = bits + 64;
    Real two(2.0, prec);
    switch (v) {
        case EtaVariant::eta:
            return eval_eta(tau, bits);
        case EtaVariant::weber_f: {
            Complex shifted((tau.re + Real(1.0, prec)) / two, tau.im / two);
            Complex quot = eval_eta(shifted, bits) / eval_eta(tau, bits);
            // exp(-pi i / 24)
            Real ang = Real::pi(prec) / Real(24.0, prec);
            Complex phase(cos(ang), -sin(ang));
            return phase * quot;
        }
        case EtaVariant::weber_f1: {
            Complex half(tau.re / two, tau.im / two);
            return eval_eta(half, bits) / eval_eta(tau, bits);
        }
        case EtaVariant::weber_f2: {
            Complex dbl(tau.re * two, tau.im * two);
            return (eval_eta(dbl, bits) / eval_eta(tau, bits)) * sqrt(two);
        }
    }
    throw Error("eval_eta_quotient: unknown variant");
}

Complex reduce_to_fundamental_domain(Complex tau) {
    mpfr_prec_t prec = tau.prec();
    Real one(1.0, prec);
    for (int iter = 0; iter < 4096; ++iter) {
        Real n = round(tau.re);
        tau.re = tau.re - n;
        if (tau.norm2() < one) {
            Complex inv = tau.inv();
            tau = Complex(-inv.re, inv.im); // -1/tau
        } else {
            return tau;
        }
    }
    throw PrecisionInsufficient("fundamental-domain reduction did not terminate");
}

Complex eval_j(const Complex& tau, const PrecisionPolicy& policy) {
    if (!(tau.im.sign() > 0)) throw Error("eval_j: Im(tau) must be positive");
    long bits = policy.working_bits + policy.safety_margin_bits;
    mpfr_prec_t prec = bits + 64;
    Complex t(Real(tau.re), Real(tau.im));
    // lift to working precision before reducing
    {
        Real re(prec), im(prec);
        mpfr_set(re.get(), tau.re.get(), MPFR_RNDN);
        mpfr_set(im.get(), tau.im.get(), MPFR_RNDN);
        t = Complex(re, im);
    }
    t = reduce_to_fundamental_domain(t);
    Real two(2.0, prec);
    Complex dbl(t.re * two, t.im * two);
    Complex quot = eval_eta(dbl, bits) / eval_eta(t, bits);
    Complex u = quot.pow_ui(24) * Real(4096.0, prec); // f2^24
    Complex c16(16.0, 0.0, prec);
    Complex upow = (u + c16).pow_ui(3);
    return upow / u;
}

long heuristic_bits(const quadforms::Discriminant& d, long margin_bits) {
    auto forms = quadforms::reduced_forms(d);
    double inv_a = 0;
    for (const auto& f : forms) inv_a += 1.0 / f.a.get_d();
    double absd = -d.value.get_d();
    long bits = static_cast<long>(3.1415926535897932 * std::sqrt(absd) * inv_a / 0.6931471805599453) + 1;
    return bits + margin_bits + 4 * static_cast<long>(forms.size()) + 32;
}

ClassPolynomial hilbert_class_poly(const quadforms::Discriminant& d, const PrecisionPolicy& policy) {
    if (abs(d.value) > ZZ(quadforms::kMaxAbsDiscriminant))
        throw Error("discriminant bound exceeded: " + d.value.get_str());
    auto forms = quadforms::reduced_forms(d);
    long bits = policy.working_bits + policy.safety_margin_bits;
    mpfr_prec_t prec = bits + 64;
    Real sqrtD = sqrt(Real(-d.value, prec));
    PrecisionPolicy inner{bits, 0};

    // real-coefficient factors: linear for ambiguous forms, quadratic for
    // mirror pairs (a, b, c) / (a, -b, c)
    std::vector<std::vector<Real>> factors;
    Real max_im(0.0, prec);
    for (const auto& f : forms) {
        bool ambiguous = (f.b == 0) || (f.b == f.a) || (f.a == f.c);
        if (sgn(f.b) < 0) continue; // mirror partner of a b > 0 form
        Real a2 = Real(2 * f.a, prec);
        Complex tau(Real(-f.b, prec) / a2, sqrtD / a2);
        Complex j = eval_j(tau, inner);
        Real absim = abs(j.im);
        if (ambiguous) {
            if (max_im < absim) max_im = absim;
            factors.push_back({-j.re, Real(1.0, prec)});
        } else {
            // (X - j)(X - conj j) = X^2 - 2 Re j X + |j|^2
            factors.push_back({j.norm2(), -(j.re + j.re), Real(1.0, prec)});
        }
    }
    std::vector<Real> acc{Real(1.0, prec)};
    for (const auto& f : factors) {
        std::vector<Real> next(acc.size() + f.size() - 1, Real(0.0, prec));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t k = 0; k < f.size(); ++k)
                next[i + k] = next[i + k] + acc[i] * f[k];
        acc = std::move(next);
    }
    if (static_cast<int>(acc.size()) - 1 != static_cast<int>(forms.size()))
        throw Error("hilbert_class_poly: degree mismatch");

    Real quarter(0.25, prec);
    if (!(max_im < quarter))
        throw PrecisionInsufficient("hilbert_class_poly: ambiguous-form residual too large");
    std::vector<ZZ> coeffs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        ZZ z = acc[i].round_to_zz();
        Real resid = abs(acc[i] - Real(z, prec));
        if (!(resid < quarter))
            throw PrecisionInsufficient("hilbert_class_poly: residual >= 1/4 at coefficient " +
                                        std::to_string(i));
        coeffs[i] = z;
    }
    ZPoly poly{std::move(coeffs)};
    if (poly.lc() != 1) throw PrecisionInsufficient("hilbert_class_poly: non-monic rounding");
    return {d, poly};
}

namespace {

std::filesystem::path hclass_cache_path(const quadforms::Discriminant& d) {
    ZZ a = -d.value;
    return cache_root() / "hclass" / ("D" + a.get_str() + ".json");
}

} // namespace

ClassPolynomial hilbert_class_poly_cached(const quadforms::Discriminant& d) {
    auto path = hclass_cache_path(d);
    if (auto blob = read_file(path)) {
        auto j = nlohmann::json::parse(*blob, nullptr, false);
        if (!j.is_discarded() && j.contains("coeffs")) {
            std::vector<ZZ> coeffs;
            for (const auto& s : j["coeffs"]) coeffs.push_back(zz_from_string(s.get<std::string>()));
            return {d, ZPoly(std::move(coeffs))};
        }
    }
    long margin = 64;
    for (int attempt = 0; attempt < 8; ++attempt, margin *= 2) {
        PrecisionPolicy policy{heuristic_bits(d, margin), 0};
        try {
            ClassPolynomial cp = hilbert_class_poly(d, policy);
            ordered_json out;
            out["D"] = d.value.get_si();
            out["h"] = cp.poly.deg();
            std::vector<std::string> cs;
            for (int i = 0; i <= cp.poly.deg(); ++i) cs.push_back(cp.poly[i].get_str());
            out["coeffs"] = cs;
            atomic_write(path, out.dump());
            return cp;
        } catch (const PrecisionInsufficient&) {
            continue;
        }
    }
    throw PrecisionInsufficient("hilbert_class_poly_cached: retries exhausted for D = " +
                                d.value.get_str());
}

AlgebraicNumber AlgebraicNumber::from_minpoly(const ZPoly& p) {
    if (p.is_zero() || p.deg() < 1) throw Error("AlgebraicNumber: nonconstant minpoly required");
    return {p.primitive_part()};
}

AlgebraicNumber AlgebraicNumber::from_integer(const ZZ& n) {
    return {ZPoly({-n, ZZ(1)})};
}

AlgebraicNumber AlgebraicNumber::from_rational(const QQ& q) {
    QQ c = q;
    c.canonicalize();
    return {ZPoly({-c.get_num(), c.get_den()})};
}

std::vector<CertifiedRoot> AlgebraicNumber::embeddings(long bits) const {
    return complex_roots(minpoly, bits);
}

double weil_height(const AlgebraicNumber& alpha) {
    const ZPoly& p = alpha.minpoly;
    long bits = 96;
    mpfr_prec_t prec = 192;
    auto roots = complex_roots(p, bits);
    Real sum(0.0, prec);
    Real one(1.0, prec);
    for (const auto& r : roots) {
        Real a = r.value.abs();
        if (a > one) sum = sum + log(a);
    }
    Real lead(abs(p.lc()), prec);
    sum = sum + log(lead);
    sum = sum / Real(static_cast<double>(p.deg()), prec);
    return sum.to_double();
}

} // namespace classpoly
} // namespace cmlab
