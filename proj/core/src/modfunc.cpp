#include "cmlab/modfunc.hpp"

#include "cmlab/zfactor.hpp"

#include "json.hpp"

#include <numeric>

namespace cmlab {
namespace modfunc {

using nlohmann::ordered_json;

namespace {

void validate(const ModularRelation& rel) {
    if (rel.phi.deg_x() < 1 || rel.phi.deg_y() < 1)
        throw Error("relation must depend on both variables: " + rel.name);
    if (rel.phi.deg_x() == 1) {
        // A(Y) X + B(Y) is irreducible over Q iff gcd(A, B) is constant
        ZPoly g = zpoly_gcd(rel.phi.coeff_x(1), rel.phi.coeff_x(0));
        if (g.deg() != 0)
            throw Error("relation is reducible: " + rel.name);
    }
}

ModularRelation make(const std::string& name, ZPoly2 phi) {
    ModularRelation rel{name, std::move(phi), 0, 0};
    rel.deg_x = rel.phi.deg_x();
    rel.deg_y = rel.phi.deg_y();
    validate(rel);
    return rel;
}

ZPoly pow3(const ZPoly& p) { return p * p * p; }

} // namespace

ModularRelation builtin_relation(const std::string& name) {
    if (name == "identity") {
        // X - Y
        return make(name, ZPoly2({ZPoly({ZZ(0), ZZ(-1)}), ZPoly({ZZ(1)})}));
    }
    if (name == "weber_minus" || name == "weber_plus") {
        long s = name == "weber_minus" ? -16 : 16;
        ZPoly y24 = ZPoly::monomial(ZZ(1), 24);
        ZPoly b = pow3(y24 + ZPoly({ZZ(s)}));
        return make(name, ZPoly2({b, -y24}));
    }
    if (name == "lambda") {
        ZPoly one_my_y2({ZZ(1), ZZ(-1), ZZ(1)});   // 1 - Y + Y^2
        ZPoly one_m_y({ZZ(1), ZZ(-1)});            // 1 - Y
        ZPoly b = pow3(one_my_y2) * ZZ(256);
        ZPoly a = -(ZPoly::monomial(ZZ(1), 2) * (one_m_y * one_m_y));
        return make(name, ZPoly2({b, a}));
    }
    throw Error("unknown relation: " + name);
}

std::vector<std::string> builtin_relation_names() {
    return {"weber_minus", "weber_plus", "lambda", "identity"};
}

std::vector<classpoly::AlgebraicNumber> omitted_values(const ModularRelation& rel) {
    // common roots of all positive-X-degree coefficients
    ZPoly g;
    for (int k = 1; k <= rel.phi.deg_x(); ++k) {
        const ZPoly& c = rel.phi.coeff_x(k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : zpoly_gcd(g, c);
        if (g.deg() == 0) break;
    }
    std::vector<classpoly::AlgebraicNumber> out;
    if (g.is_zero() || g.deg() == 0) return out;
    ZPoly c0 = rel.phi.coeff_x(0);
    for (const auto& f : zpoly_factor_squarefree_primitive(zpoly_squarefree_part(g))) {
        if (f.deg() < 1) continue;
        // Phi(X, alpha) must be a nonzero constant; a common root with the
        // X-constant coefficient would contradict irreducibility
        if (!c0.is_zero() && zpoly_gcd(f, c0).deg() != 0)
            throw Error("omitted_values: relation vanishes identically at a candidate");
        out.push_back(classpoly::AlgebraicNumber::from_minpoly(f));
    }
    return out;
}

bool is_modular_unit(const ModularRelation& rel) {
    ZPoly lead = rel.phi.coeff_y(rel.phi.deg_y());
    ZPoly cons = rel.phi.coeff_y(0);
    return lead.deg() == 0 && cons.deg() == 0 && !lead.is_zero() && !cons.is_zero();
}

ZPoly singular_moduli_resultant(const ModularRelation& rel, const quadforms::Discriminant& d) {
    classpoly::ClassPolynomial h = classpoly::hilbert_class_poly_cached(d);
    // deflate common powers of Y first (the Weber relations live in Y^24)
    unsigned long e = 0;
    for (const auto& c : rel.phi.coeffs_x()) {
        for (int j = 0; j <= c.deg(); ++j)
            if (c[j] != 0) e = std::gcd(e, static_cast<unsigned long>(j));
        if (e == 1) break;
    }
    if (e <= 1) return zpoly2_resultant_x(h.poly, rel.phi);
    std::vector<ZPoly> defl;
    for (const auto& c : rel.phi.coeffs_x()) defl.push_back(c.deflate(e));
    ZPoly r = zpoly2_resultant_x(h.poly, ZPoly2(std::move(defl)));
    return r.inflate(e);
}

std::vector<ZPoly> singular_moduli_polys(const ModularRelation& rel,
                                         const quadforms::Discriminant& d) {
    if (rel.name == "identity") {
        // Res_X(H_D, X - Y) = +-H_D(Y); H_D is irreducible since the Galois
        // orbit of any of its roots has full size h(D).
        classpoly::ClassPolynomial h = classpoly::hilbert_class_poly_cached(d);
        return {h.poly};
    }
    ZPoly r = singular_moduli_resultant(rel, d);
    if (r.is_zero()) throw Error("singular_moduli_polys: zero resultant");
    ZPoly sf = zpoly_squarefree_part(r);
    auto factors = zpoly_factor_squarefree_primitive(sf);
    std::sort(factors.begin(), factors.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return factors;
}

std::string relation_to_json(const ModularRelation& rel) {
    ordered_json out;
    out["name"] = rel.name;
    out["deg_x"] = rel.deg_x;
    out["deg_y"] = rel.deg_y;
    ordered_json terms = ordered_json::array();
    for (int i = 0; i <= rel.phi.deg_x(); ++i) {
        const ZPoly& c = rel.phi.coeff_x(i);
        for (int j = 0; j <= c.deg(); ++j)
            if (c[j] != 0) terms.push_back({i, j, c[j].get_str()});
    }
    out["terms"] = terms;
    return out.dump();
}

ModularRelation relation_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<ZPoly> cx;
    for (const auto& t : j.at("terms")) {
        std::size_t i = t.at(0).get<std::size_t>();
        std::size_t k = t.at(1).get<std::size_t>();
        ZZ c = zz_from_string(t.at(2).get<std::string>());
        if (cx.size() <= i) cx.resize(i + 1);
        ZPoly add = ZPoly::monomial(c, k);
        cx[i] = cx[i] + add;
    }
    return make(j.at("name").get<std::string>(), ZPoly2(std::move(cx)));
}

} // namespace modfunc
} // namespace cmlab
