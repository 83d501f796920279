#ifndef CMLAB_ZFACTOR_HPP
#define CMLAB_ZFACTOR_HPP

#include "cmlab/zpoly.hpp"

namespace cmlab {

struct ZFactors {
    ZZ content;                                    // signed integer content
    std::vector<std::pair<ZPoly, int>> factors;    // primitive irreducible, positive lc
};

/// Complete factorization over the rationals (primitive irreducible parts).
/// Factors are sorted by (degree, coefficient order) and verified by
/// multiplying back.
ZFactors zpoly_factor(const ZPoly& f);

/// Irreducible factors of a squarefree primitive polynomial of degree >= 1.
std::vector<ZPoly> zpoly_factor_squarefree_primitive(const ZPoly& f);

bool zpoly_is_irreducible(const ZPoly& f);

} // namespace cmlab

#endif
