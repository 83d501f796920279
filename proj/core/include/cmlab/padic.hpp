#ifndef CMLAB_PADIC_HPP
#define CMLAB_PADIC_HPP

#include "cmlab/modfunc.hpp"

#include <functional>

namespace cmlab {
namespace padic {

struct Place {
    bool archimedean = true;
    ZZ p; // finite places only

    static Place infinite() { return {}; }
    static Place finite(const ZZ& prime) { return {false, prime}; }
};

/// Segments carry the root valuation (negated hull slope) and its length;
/// ordered by strictly increasing valuation.
struct NewtonSegment {
    QQ valuation;
    long length = 0;
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;

    long total_length() const;
    std::vector<QQ> valuations() const; // expanded multiset, ascending
    QQ max_valuation() const;
};

/// Lower convex hull of (i, v_p(a_i)). Zero roots must be stripped by the
/// caller (P(0) != 0 required).
NewtonPolygon newton_polygon(const ZPoly& p, const ZZ& prime);

/// Count of roots of P in the open disc D_v(alpha, r); exact equality with
/// alpha is excluded. Finite places snap r down to a power of p.
/// Archimedean boundary ties within the certification radius throw.
long conjugates_in_disc(const ZPoly& p, const QQ& alpha, const Place& v, const QQ& radius);

struct ValuationProfile {
    quadforms::Discriminant d, d0;
    ZZ p;
    std::vector<QQ> valuations; // size h(D) * h(D0), ascending
};

/// Valuations v_p(j_i - j0_k) over all conjugate pairs, from the Newton
/// polygon of the difference resultant. Pass the difference resultant in
/// `precomputed` to share it across primes.
ValuationProfile pairwise_difference_valuations(const quadforms::Discriminant& d,
                                                const quadforms::Discriminant& d0, const ZZ& p,
                                                const ZPoly* precomputed = nullptr);

struct ApproxRatio {
    QQ max_valuation;
    double ratio; // max valuation * log p / log |D|
};

ApproxRatio approx_ratio(const quadforms::Discriminant& d, const quadforms::Discriminant& d0,
                         const ZZ& p);

struct DispersalRow {
    long d;
    long orbit_size;
    long in_disc;
    QQ fraction;
};

inline constexpr long kMaxDispersalBound = 100000L;

std::vector<DispersalRow> dispersal_table(const modfunc::ModularRelation& rel, const QQ& alpha,
                                          const Place& v, const QQ& radius, long dmax,
                                          int parallelism = 1,
                                          const std::function<void(long, long)>& progress = {});

std::string dispersal_csv(const std::vector<DispersalRow>& rows);
std::string dispersal_json(const std::vector<DispersalRow>& rows);

std::string qq_to_string(const QQ& q); // "num/den" (or plain integer)

} // namespace padic
} // namespace cmlab

#endif
