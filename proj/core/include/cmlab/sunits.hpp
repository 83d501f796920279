#ifndef CMLAB_SUNITS_HPP
#define CMLAB_SUNITS_HPP

#include "cmlab/modfunc.hpp"

#include <functional>
#include <map>
#include <optional>

namespace cmlab {
namespace sunits {

struct FactorizationOutcome {
    std::map<ZZ, unsigned long> factored; // prime -> exponent over S
    ZZ cofactor;                          // signed; +-1 when fully factored over S
};

/// Strip all factors of primes in S; no primality work on the cofactor.
FactorizationOutcome factor_over(const ZZ& n, const std::vector<ZZ>& S);

/// Leading and constant coefficients factor entirely over S and the
/// constant term is nonzero.
bool is_s_unit(const ZPoly& p, const std::vector<ZZ>& S);

/// Monic polynomial (degree deg P * deg Q) whose roots are
/// {alpha - beta : P(alpha) = 0, Q(beta) = 0}, up to a power of the
/// leading coefficients folded into the variable scaling.
ZPoly difference_resultant(const ZPoly& p, const ZPoly& q);

/// Distinct primitive irreducible factors of difference_resultant.
std::vector<ZPoly> difference_minpolys(const ZPoly& p, const ZPoly& q);

/// Res(H_D, H_D0), exact. Rejects equal discriminants.
ZZ norm_of_difference_cm(const quadforms::Discriminant& d, const quadforms::Discriminant& d0);

struct SUnitReport {
    std::string relation;
    ZZ d;
    ZPoly factor;
    std::vector<ZZ> s;
    bool unit = false;
    FactorizationOutcome leading;
    FactorizationOutcome constant;
    int sign = 1; // sign of the tested polynomial's resultant-side constant
};

struct SUnitBase {
    enum class Kind { zero, singular, algebraic };
    Kind kind = Kind::zero;
    std::string relation;            // singular base
    std::optional<long> d0;          // singular base
    std::optional<ZPoly> poly;       // algebraic base

    static SUnitBase zero() { return {}; }
    static SUnitBase singular(std::string rel, long d0);
    static SUnitBase algebraic(ZPoly p);
};

inline constexpr long kMaxSearchBound = 1000000L;

using ProgressFn = std::function<void(long done, long total)>;

/// For every valid |D| <= dmax, tests the singular-moduli factors of rel
/// (or their differences against the base factors) for S-unit status.
/// Reports are ordered by (|D|, factor index); only hits are returned.
std::vector<SUnitReport> sunit_search(const modfunc::ModularRelation& rel, const SUnitBase& base,
                                      const std::vector<ZZ>& S, long dmax, int parallelism = 1,
                                      const ProgressFn& progress = {});

std::string report_to_json_line(const SUnitReport& r);

} // namespace sunits
} // namespace cmlab

#endif
