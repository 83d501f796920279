#ifndef CMLAB_QUADFORMS_HPP
#define CMLAB_QUADFORMS_HPP

#include "cmlab/intutil.hpp"

#include <vector>

namespace cmlab {
namespace quadforms {

/// Negative discriminant D = fundamental * conductor^2.
struct Discriminant {
    ZZ value;
    ZZ fundamental;
    ZZ conductor;
};

/// Primitive reduced binary quadratic form (a, b, c), b^2 - 4ac = D.
struct QuadForm {
    ZZ a, b, c;
};

enum class SplitType { split, inert, ramified };

struct ReductionType {
    SplitType type;
    bool supersingular; // true iff not split
};

/// Guard shared by all discriminant-indexed operations.
inline constexpr long kMaxAbsDiscriminant = 100000000L;

/// Validates n < 0, n = 0 or 1 (mod 4) and splits off the fundamental
/// discriminant and conductor. Throws NotADiscriminant otherwise.
Discriminant decompose(const ZZ& n);
inline Discriminant decompose(long n) { return decompose(ZZ(n)); }

bool is_valid_discriminant(const ZZ& n);

/// Fundamental and divisible by a single prime: -p for p = 3 (mod 4), -4, -8.
bool is_prime_discriminant(const Discriminant& d);

/// One primitive reduced form per class, sorted lexicographically by (a, b).
std::vector<QuadForm> reduced_forms(const Discriminant& d);

long class_number(const Discriminant& d);

ReductionType reduction_type(const Discriminant& d, const ZZ& p);

} // namespace quadforms
} // namespace cmlab

#endif
