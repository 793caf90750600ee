#ifndef POLARSAMP_REALDEGREE_HPP
#define POLARSAMP_REALDEGREE_HPP

#include <utility>
#include <vector>

#include "polarsamp/upoly.hpp"

namespace polarsamp {

/// Monic rational-irreducible factors of a squarefree q, product equal to
/// q made monic; deterministic order (degree, then coefficients).
/// Zassenhaus style: factor mod a good prime, Hensel lift, recombine.
std::vector<UPoly> factor_rational(const UPoly& q);

/// Factors of q classified by whether they have a real root. q_star is the
/// product of the real factors (1 when none), delta_star its degree, m the
/// number of real factors.
struct RealPartCertificate {
    std::vector<std::pair<UPoly, int>> factors;  // (irreducible factor, real root count)
    UPoly q_star;
    int delta_star = 0;
    int m = 0;
};

RealPartCertificate real_part(const UPoly& q);

}  // namespace polarsamp

#endif
