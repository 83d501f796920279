#ifndef CMLAB_HECKE_HPP
#define CMLAB_HECKE_HPP

#include "cmlab/fq2.hpp"
#include "cmlab/quadforms.hpp"
#include "cmlab/zpoly2.hpp"

#include <map>
#include <vector>

namespace cmlab {
namespace hecke {

inline constexpr long kMaxModularLevel = 20;
inline constexpr long kMaxSupersingularPrime = 2000;

long sigma1(long n); // sum of divisors

struct ClassicalModularPolynomial {
    long n = 0;
    ZPoly2 poly; // degree sigma1(n) in X, monic in X
};

/// Product of (X - j(sublattice tau)) over all index-n sublattices,
/// expanded exactly from integer q-series; cached on disk.
const ClassicalModularPolynomial& classical_modular_poly(long n);

struct SupersingularSet {
    long p = 0;
    std::vector<Fp2El> points; // sorted in the canonical element order
};

/// Exhaustive point-counting enumeration over F_{p^2}.
SupersingularSet supersingular_set(long p);

struct HeckeDivisor {
    long p = 0;
    std::map<Fp2El, long> entries;

    long degree() const;
    bool supported_on(const std::vector<Fp2El>& set) const;
};

/// Roots of Phi_n(X, j0) over F_{p^2} with multiplicity. Levels divisible
/// by p are rejected.
HeckeDivisor hecke_image(Fp2El j0, long n, long p);

/// Image of a whole divisor (multiplicities convolve).
HeckeDivisor hecke_image(const HeckeDivisor& d, long n);

/// deg(T_q(j0) restricted to supp(T_q(j0)) cap supp(T_q'(j0))).
long overlap_degree(Fp2El j0, long q, long qprime, long p);

struct OrbitMeasureRow {
    long n = 0;
    std::vector<QQ> mass; // indexed like the supersingular set
    QQ max_atom;
};

std::vector<OrbitMeasureRow> hecke_orbit_measure(Fp2El j0, long maxlevel, long p);

/// Roots of H_D mod p over F_{p^2}; requires non-split reduction.
HeckeDivisor cm_reduction_divisor(const quadforms::Discriminant& d, long p);

std::string divisor_to_json(const HeckeDivisor& d);

/// j-invariant q-series 1/q + 744 + 196884 q + ... to `terms` coefficients
/// past the pole (exact integers).
std::vector<ZZ> j_q_series(long terms);

} // namespace hecke
} // namespace cmlab

#endif
