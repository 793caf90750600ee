#ifndef POLARSAMP_REALROOTS_HPP
#define POLARSAMP_REALROOTS_HPP

#include <optional>
#include <vector>

#include "polarsamp/upoly.hpp"

namespace polarsamp {

/// One real root of a squarefree q: an isolating interval with non-root
/// endpoints, plus (once filled) the Thom sign vector of q', q'', ...,
/// q^(deg q - 1) at the root.
struct RealRoot {
    RatInterval interval;
    std::vector<int> thom;
    int index = 0;  // rank in increasing order
};

/// Signed remainder sequence of (q, q').
std::vector<UPoly> sturm_sequence(const UPoly& q);

/// Number of distinct real roots of q in (lo, hi]; nullopt endpoints mean
/// -infinity / +infinity.
int sturm_count(const UPoly& q, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

/// Sum of sign(g(u)) over the real roots u of q (optionally restricted to
/// (lo, hi]); computed from the signed remainder sequence of (q, q'*g).
int tarski_query(const UPoly& g, const UPoly& q);
int tarski_query(const UPoly& g, const UPoly& q, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

/// Disjoint isolating intervals for all real roots, sorted increasingly.
/// Thom vectors are left empty. Rejects non-squarefree input.
std::vector<RealRoot> isolate_real_roots(const UPoly& q);

/// Isolation plus Thom encoding; q must be squarefree and monic.
std::vector<RealRoot> thom_encode_roots(const UPoly& q);

/// Narrow an isolating interval below `width`, keeping the root inside.
void refine_root(const UPoly& q, RatInterval& iv, const Rat& width);

/// Thom-vector comparison for roots of the same q: returns <0, 0, >0
/// matching the numeric order of the encoded roots.
int thom_compare(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace polarsamp

#endif
