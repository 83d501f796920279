#ifndef CMLAB_ROOTS_HPP
#define CMLAB_ROOTS_HPP

#include "cmlab/mpreal.hpp"
#include "cmlab/zpoly.hpp"

#include <vector>

namespace cmlab {

struct CertifiedRoot {
    Complex value;
    Real error; // radius of a disc certain to contain the true root
};

/// All complex roots of a squarefree integer polynomial, each with a
/// certified error radius below 2^-target_bits. Aberth iteration with
/// precision retry.
std::vector<CertifiedRoot> complex_roots(const ZPoly& f, long target_bits);

} // namespace cmlab

#endif
