#include "cmlab/sunits.hpp"

#include "cmlab/parallel.hpp"
#include "cmlab/zfactor.hpp"

#include "json.hpp"

namespace cmlab {
namespace sunits {

using nlohmann::ordered_json;

FactorizationOutcome factor_over(const ZZ& n, const std::vector<ZZ>& S) {
    if (n == 0) throw Error("factor_over: zero input");
    FactorizationOutcome out;
    ZZ m = n;
    for (const ZZ& p : S) {
        if (abs(m) == 1) break;
        unsigned long v = zz_valuation(m, p, &m);
        if (v) out.factored[p] = v;
    }
    out.cofactor = m;
    return out;
}

bool is_s_unit(const ZPoly& p, const std::vector<ZZ>& S) {
    if (p.is_zero()) throw Error("is_s_unit: zero polynomial");
    if (p.constant() == 0) return false;
    return abs(factor_over(p.lc(), S).cofactor) == 1 &&
           abs(factor_over(p.constant(), S).cofactor) == 1;
}

namespace {

// monic integer polynomial whose roots are L*alpha over the roots alpha of p
ZPoly scale_roots_monic(const ZPoly& p, const ZZ& L) {
    int d = p.deg();
    std::vector<ZZ> c(d + 1);
    c[d] = 1;
    ZZ pw(1); // L^(d-k) / lc accumulated
    for (int k = d - 1; k >= 0; --k) {
        pw *= L;
        ZZ num = p[k] * pw;
        ZZ q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), p.lc().get_mpz_t());
        if (r != 0) throw Error("scale_roots_monic: leading coefficient must divide the scale");
        c[k] = q;
    }
    return ZPoly(std::move(c));
}

} // namespace

ZPoly difference_resultant(const ZPoly& p, const ZPoly& q) {
    if (p.is_zero() || q.is_zero()) throw Error("difference_resultant: zero input");
    if (p.deg() == 0 || q.deg() == 0) return ZPoly({ZZ(1)});
    ZZ L = p.lc() * q.lc();
    ZPoly pm = scale_roots_monic(p, L);
    ZPoly qm = scale_roots_monic(q, L);
    ZPoly rl = zpoly_root_differences(pm, qm); // roots L (alpha - beta)
    return rl.scaled_arg(L).primitive_part();
}

std::vector<ZPoly> difference_minpolys(const ZPoly& p, const ZPoly& q) {
    ZPoly r = difference_resultant(p, q);
    if (r.deg() == 0) return {};
    // strip zero roots (equal-root pairs) before factoring
    std::vector<ZPoly> out;
    ZPoly g = r;
    int zero_mult = 0;
    while (g.constant() == 0) {
        std::vector<ZZ> sh(g.coeffs().begin() + 1, g.coeffs().end());
        g = ZPoly(std::move(sh));
        ++zero_mult;
    }
    if (zero_mult > 0) out.push_back(ZPoly({ZZ(0), ZZ(1)}));
    if (g.deg() >= 1)
        for (auto& f : zpoly_factor_squarefree_primitive(zpoly_squarefree_part(g)))
            out.push_back(f);
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

ZZ norm_of_difference_cm(const quadforms::Discriminant& d, const quadforms::Discriminant& d0) {
    if (d.value == d0.value)
        throw Error("norm_of_difference_cm: equal discriminants rejected");
    ZPoly hd = classpoly::hilbert_class_poly_cached(d).poly;
    ZPoly hd0 = classpoly::hilbert_class_poly_cached(d0).poly;
    return zpoly_resultant(hd, hd0);
}

SUnitBase SUnitBase::singular(std::string rel, long d0) {
    SUnitBase b;
    b.kind = Kind::singular;
    b.relation = std::move(rel);
    b.d0 = d0;
    return b;
}

SUnitBase SUnitBase::algebraic(ZPoly p) {
    SUnitBase b;
    b.kind = Kind::algebraic;
    b.poly = std::move(p).primitive_part();
    return b;
}

namespace {

/// Upper bound on the total degree of factors of r whose leading and
/// constant coefficients avoid every prime outside S that is known to
/// divide lc(r) * r(0). Zero means no S-unit factor can exist.
int s_unit_degree_bound(const ZPoly& r, const std::vector<ZZ>& S) {
    ZZ key = abs(r.lc() * r.constant());
    if (key == 0) return r.deg(); // zero constant handled by the caller
    ZZ cof;
    auto primes = trial_factor(key, 10000, cof);
    int bound = r.deg();
    for (auto& [p, e] : primes) {
        bool in_s = false;
        for (const ZZ& s : S)
            if (s == p) in_s = true;
        if (in_s) continue;
        if (p > ZZ(std::uint64_t(1) << 61)) continue;
        FpCtx F(mpz_get_ui(p.get_mpz_t()));
        FpPoly rp = zpoly_mod(r, F);
        int d = fpoly_deg(rp);
        if (d < 0) continue; // r vanishes mod p entirely: no information
        int ord = 0;
        while (ord <= d && rp[ord] == 0) ++ord;
        bound = std::min(bound, d - ord);
        if (bound == 0) break;
    }
    return bound;
}

void search_one(const modfunc::ModularRelation& rel, const SUnitBase& base,
                const std::vector<ZZ>& S, long dval, std::vector<SUnitReport>& out,
                const std::vector<ZPoly>& base_factors) {
    quadforms::Discriminant d = quadforms::decompose(dval);
    std::vector<ZPoly> factors;
    try {
        factors = modfunc::singular_moduli_polys(rel, d);
    } catch (const Error& e) {
        throw Error("sunit_search: D = " + std::to_string(dval) + ": " + e.what());
    }
    auto report = [&](const ZPoly& tested) {
        if (!is_s_unit(tested, S)) return;
        SUnitReport r;
        r.relation = rel.name;
        r.d = dval;
        r.factor = tested;
        r.s = S;
        r.unit = true;
        r.leading = factor_over(tested.lc(), S);
        r.constant = factor_over(tested.constant(), S);
        r.sign = sgn(tested.constant()) < 0 ? -1 : 1;
        out.push_back(std::move(r));
    };
    for (const ZPoly& f : factors) {
        if (base.kind == SUnitBase::Kind::zero) {
            report(f);
            continue;
        }
        for (const ZPoly& b : base_factors) {
            ZPoly r = difference_resultant(f, b);
            // cheap exclusion: no factor can have S-smooth end coefficients
            if (r.constant() != 0 && s_unit_degree_bound(r, S) == 0) continue;
            for (const ZPoly& g : difference_minpolys(f, b)) report(g);
        }
    }
}

} // namespace

std::vector<SUnitReport> sunit_search(const modfunc::ModularRelation& rel, const SUnitBase& base,
                                      const std::vector<ZZ>& S, long dmax, int parallelism,
                                      const ProgressFn& progress) {
    if (dmax > kMaxSearchBound) throw Error("sunit_search: Dmax guard exceeded");
    std::vector<ZPoly> base_factors;
    switch (base.kind) {
        case SUnitBase::Kind::zero:
            break;
        case SUnitBase::Kind::singular: {
            auto rel0 = modfunc::builtin_relation(base.relation);
            base_factors = modfunc::singular_moduli_polys(rel0, quadforms::decompose(*base.d0));
            break;
        }
        case SUnitBase::Kind::algebraic:
            base_factors = {*base.poly};
            break;
    }
    std::vector<long> ds;
    for (long a = 3; a <= dmax; ++a) {
        long n = -a;
        long m = ((n % 4) + 4) % 4;
        if (m != 0 && m != 1) continue;
        if (base.kind == SUnitBase::Kind::singular && rel.name == base.relation && n == *base.d0)
            continue; // differences of Galois conjugates are out of scope
        ds.push_back(n);
    }
    std::vector<std::vector<SUnitReport>> rows(ds.size());
    std::atomic<long> done{0};
    parallel_for(ds.size(), parallelism, [&](std::size_t i) {
        search_one(rel, base, S, ds[i], rows[i], base_factors);
        long k = ++done;
        if (progress) progress(k, static_cast<long>(ds.size()));
    });
    std::vector<SUnitReport> out;
    for (auto& r : rows)
        for (auto& item : r) out.push_back(std::move(item));
    return out;
}

std::string report_to_json_line(const SUnitReport& r) {
    ordered_json j;
    j["relation"] = r.relation;
    j["D"] = r.d.get_si();
    std::vector<std::string> coeffs;
    for (int i = 0; i <= r.factor.deg(); ++i) coeffs.push_back(r.factor[i].get_str());
    j["factor"] = coeffs;
    std::vector<std::string> s;
    for (const auto& p : r.s) s.push_back(p.get_str());
    j["S"] = s;
    j["is_s_unit"] = r.unit;
    auto emit = [](const FactorizationOutcome& f) {
        ordered_json o;
        ordered_json fac = ordered_json::object();
        for (auto& [p, e] : f.factored) fac[p.get_str()] = e;
        o["factored"] = fac;
        o["cofactor"] = f.cofactor.get_str();
        return o;
    };
    j["leading"] = emit(r.leading);
    j["constant"] = emit(r.constant);
    j["sign"] = r.sign;
    return j.dump();
}

} // namespace sunits
} // namespace cmlab
