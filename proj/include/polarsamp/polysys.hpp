#ifndef POLARSAMP_POLYSYS_HPP
#define POLARSAMP_POLYSYS_HPP

#include <cstdint>
#include <vector>

#include "polarsamp/densepoly.hpp"

namespace polarsamp {

/// Unipotent linear change x = A y with A = [[I_i, 0], [B, I_{n-i}]].
/// Only the lower-left block B (rows i+1..n, columns 1..i) is free, so
/// det A = 1 and A^{-1} = [[I, 0], [-B, I]].
struct CoordinateChange {
    int n = 0;
    int i = 0;
    uint64_t seed = 0;
    std::vector<std::vector<Rat>> block;  // (n-i) x i

    bool is_identity() const;
    std::vector<std::vector<Rat>> matrix() const;
    /// x = A y for a point y.
    std::vector<Rat> apply_point(const std::vector<Rat>& y) const;
    std::vector<RatInterval> apply_box(const std::vector<RatInterval>& y) const;
    CoordinateChange inverse() const;
};

CoordinateChange identity_change(int n, int i);
/// Deterministic in (n, i, seed, bound); block entries are integers in [-bound, bound].
CoordinateChange sample_coordinate_change(int n, int i, uint64_t seed, long bound);

/// p(A y) as a polynomial in y.
DensePoly apply_coordinate_change(const DensePoly& p, const CoordinateChange& ch);

/// Equations f, df/dY1, ..., df/dYi in the transformed coordinates, plus the
/// sum of squares of all n transformed partials as the saturation constraint.
struct PolarSystem {
    int i = 0;
    std::vector<DensePoly> equations;
    DensePoly delta;
    CoordinateChange change;
};

/// f is replaced by its squarefree part before the system is built.
PolarSystem polar_system(const DensePoly& f, int i, const CoordinateChange& ch);

}  // namespace polarsamp

#endif
