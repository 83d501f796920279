#ifndef CMLAB_MODFUNC_HPP
#define CMLAB_MODFUNC_HPP

#include "cmlab/classpoly.hpp"
#include "cmlab/zpoly2.hpp"

#include <string>
#include <vector>

namespace cmlab {
namespace modfunc {

/// Bivariate modular relation Phi(X, Y) between j (X) and a Hauptmodul f (Y).
struct ModularRelation {
    std::string name;
    ZPoly2 phi;
    int deg_x = 0;
    int deg_y = 0;
};

/// weber_minus: (Y^24 - 16)^3 - Y^24 X     (the Weber f function)
/// weber_plus:  (Y^24 + 16)^3 - Y^24 X     (f1 and f2)
/// lambda:      256 (1 - Y + Y^2)^3 - X Y^2 (1 - Y)^2
/// identity:    X - Y
ModularRelation builtin_relation(const std::string& name);
std::vector<std::string> builtin_relation_names();

/// All alpha with Phi(X, alpha) a nonzero constant, i.e. the omitted values.
std::vector<classpoly::AlgebraicNumber> omitted_values(const ModularRelation& rel);

/// True iff the Y-leading and Y-constant coefficients of Phi are X-free.
bool is_modular_unit(const ModularRelation& rel);

/// Irreducible integer polynomials whose roots are exactly the f-singular
/// moduli lying over discriminant-D values of j (multiplicities removed).
std::vector<ZPoly> singular_moduli_polys(const ModularRelation& rel,
                                         const quadforms::Discriminant& d);

/// The raw resultant Res_X(H_D, Phi) before squarefree splitting.
ZPoly singular_moduli_resultant(const ModularRelation& rel, const quadforms::Discriminant& d);

std::string relation_to_json(const ModularRelation& rel);
ModularRelation relation_from_json(const std::string& text);

} // namespace modfunc
} // namespace cmlab

#endif
