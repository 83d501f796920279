#include "cmlab/roots.hpp"

namespace cmlab {

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& z) {
    Complex r = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) r = r * z + c[i];
    return r;
}

} // namespace

std::vector<CertifiedRoot> complex_roots(const ZPoly& f, long target_bits) {
    if (f.is_zero()) throw Error("complex_roots: zero polynomial");
    int n = f.deg();
    std::vector<CertifiedRoot> out;
    if (n == 0) return out;

    long coeff_bits = static_cast<long>(mpz_sizeinbase(f.max_abs_coeff().get_mpz_t(), 2));
    long prec = std::max<long>(128, coeff_bits + 2 * target_bits + 16 * n + 64);

    for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
        std::vector<Complex> c(n + 1), dc(n);
        for (int i = 0; i <= n; ++i) c[i] = Complex(Real(f[i], prec), Real(0.0, prec));
        for (int i = 1; i <= n; ++i) dc[i - 1] = Complex(Real(f[i] * ZZ(i), prec), Real(0.0, prec));

        // Cauchy-style radius: 1 + max |a_i / a_n|
        Real radius(1.0, prec);
        for (int i = 0; i < n; ++i) {
            Real q = Real(abs(f[i]), prec) / Real(abs(f.lc()), prec);
            if (q > radius) radius = q;
        }
        radius = radius + Real(1.0, prec);

        std::vector<Complex> z(n);
        Real pi = Real::pi(prec);
        for (int i = 0; i < n; ++i) {
            // angles spread with an offset to avoid symmetric deadlock
            Real theta = pi * Real(2.0 * i / n + 0.3779 / n + 0.21, prec);
            Real r = radius * Real(0.5 + 0.3 * ((i * 7919) % n) / static_cast<double>(n), prec);
            z[i] = Complex(r * cos(theta), r * sin(theta));
        }

        Real eps = Real::pow2(-(target_bits + 8), prec);
        bool converged = false;
        int max_iter = 60 + 12 * n;
        for (int iter = 0; iter < max_iter; ++iter) {
            bool all_small = true;
            for (int i = 0; i < n; ++i) {
                Complex pv = horner(c, z[i]);
                Complex dv = horner(dc, z[i]);
                if (dv.norm2().is_zero()) {
                    z[i] = z[i] + Complex(1e-3, 1e-3, prec);
                    all_small = false;
                    continue;
                }
                Complex newton = pv / dv;
                Complex s(0.0, 0.0, prec);
                for (int j = 0; j < n; ++j)
                    if (j != i) s = s + (z[i] - z[j]).inv();
                Complex denom = Complex(1.0, 0.0, prec) - newton * s;
                Complex w = denom.norm2().is_zero() ? newton : newton / denom;
                z[i] = z[i] - w;
                if (!(w.abs() < eps * (z[i].abs() + Real(1.0, prec)))) all_small = false;
            }
            if (all_small) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;

        // a posteriori error radius: n |P(z)/P'(z)| (simple roots)
        out.clear();
        bool certified = true;
        Real bound = Real::pow2(-target_bits, prec);
        for (int i = 0; i < n; ++i) {
            Complex pv = horner(c, z[i]);
            Complex dv = horner(dc, z[i]);
            if (dv.norm2().is_zero()) {
                certified = false;
                break;
            }
            Real err = (pv / dv).abs() * Real(static_cast<double>(n), prec);
            if (!(err < bound)) {
                certified = false;
                break;
            }
            out.push_back({z[i], err});
        }
        if (certified) return out;
    }
    throw PrecisionInsufficient("complex_roots: no certified convergence for " + f.to_string());
}

} // namespace cmlab
