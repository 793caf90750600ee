#ifndef POLARSAMP_ELIMINATE_HPP
#define POLARSAMP_ELIMINATE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarsamp/polysys.hpp"
#include "polarsamp/upoly.hpp"

namespace polarsamp {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Genericity failure: some coordinate is not a polynomial in the last one.
/// The caller is expected to resample the coordinate change.
struct ShapePositionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EliminationLimits {
    size_t max_basis_size = 4000;
    size_t max_poly_terms = 200000;
};

/// Autoreduced lex Groebner basis (X1 > ... > Xn).
std::vector<DensePoly> groebner_basis(std::vector<DensePoly> gens, const EliminationLimits& limits = {});

/// Full normal form with respect to an arbitrary generator list under lex.
DensePoly normal_form(DensePoly f, const std::vector<DensePoly>& basis);

struct EliminationBasis {
    std::vector<DensePoly> generators;  // autoreduced lex GB
    bool saturated = false;
};

/// Basis of (equations) : Delta^infinity via the auxiliary-variable trick
/// (t*Delta - 1 adjoined with t first in the order, then eliminated).
EliminationBasis saturate_by_delta(const PolarSystem& sys, const EliminationLimits& limits = {});

enum class DimensionVerdict { Empty, ZeroDimensional, PositiveDimensional };

DimensionVerdict dimension_verdict(const EliminationBasis& basis);

/// Monomials outside the leading-term ideal; requires a zero-dimensional basis.
std::vector<Monomial> standard_monomials(const std::vector<DensePoly>& basis);

/// Adjoin the squarefree part of every variable's minimal polynomial and
/// recompute the basis (zero-dimensional input only).
EliminationBasis radicalize(const EliminationBasis& basis, const EliminationLimits& limits = {});

struct UnivariateRepresentation {
    UPoly q;               // monic, squarefree, in X_n
    std::vector<UPoly> p;  // p_1..p_n, deg p_k < deg q, p_n = X
    Rat discriminant;      // disc(q), nonzero
    CoordinateChange change;
};

UnivariateRepresentation extract_representation(const EliminationBasis& basis, const PolarSystem& sys,
                                                const EliminationLimits& limits = {});

struct VerificationReport {
    bool equations_vanish = false;  // every equation = 0 mod q under X_k <- p_k
    bool delta_coprime = false;     // gcd(Delta(p) mod q, q) = 1
    bool jacobian_unit = false;     // det of the n x n Jacobian is a unit mod q
    bool separable = false;         // gcd(q, q') = 1
    std::vector<std::string> failures;
    bool ok() const { return equations_vanish && delta_coprime && jacobian_unit && separable; }
};

VerificationReport verify_representation(const UnivariateRepresentation& rep, const PolarSystem& sys);

struct DegreeReport {
    std::map<int, long> delta;  // i -> geometric degree of W_i
    Int bezout_bound;           // d(d-1)^{n-1}
};

Int bezout_bound(int d, int n);

/// Geometric degree of W_i: for i = n-1 the number of points of the saturated
/// variety; for i < n-1 the count after slicing with n-(i+1) random affine
/// hyperplanes (resampled up to 8 times on degenerate sections).
long polar_degree(const DensePoly& f, int i, uint64_t seed, long entry_bound = 100,
                  const EliminationLimits& limits = {});

}  // namespace polarsamp

#endif
