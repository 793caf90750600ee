#include "polarsamp/polysys.hpp"

#include <random>
#include <stdexcept>

namespace polarsamp {

bool CoordinateChange::is_identity() const {
    for (const auto& row : block)
        for (const auto& e : row)
            if (e != 0) return false;
    return true;
}

std::vector<std::vector<Rat>> CoordinateChange::matrix() const {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (int k = 0; k < n; ++k) a[k][k] = 1;
    for (int k = i; k < n; ++k)
        for (int l = 0; l < i; ++l) a[k][l] = block[k - i][l];
    return a;
}

std::vector<Rat> CoordinateChange::apply_point(const std::vector<Rat>& y) const {
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("point dimension mismatch");
    std::vector<Rat> x = y;
    for (int k = i; k < n; ++k)
        for (int l = 0; l < i; ++l) x[k] += block[k - i][l] * y[l];
    return x;
}

std::vector<RatInterval> CoordinateChange::apply_box(const std::vector<RatInterval>& y) const {
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("box dimension mismatch");
    std::vector<RatInterval> x = y;
    for (int k = i; k < n; ++k)
        for (int l = 0; l < i; ++l) x[k] += y[l] * block[k - i][l];
    return x;
}

CoordinateChange CoordinateChange::inverse() const {
    CoordinateChange inv = *this;
    for (auto& row : inv.block)
        for (auto& e : row) e = -e;
    return inv;
}

CoordinateChange identity_change(int n, int i) {
    CoordinateChange ch;
    ch.n = n;
    ch.i = i;
    ch.block.assign(n - i, std::vector<Rat>(i, Rat(0)));
    return ch;
}

CoordinateChange sample_coordinate_change(int n, int i, uint64_t seed, long bound) {
    if (i < 0 || i >= n) throw std::invalid_argument("polar index out of range");
    if (bound < 1) throw std::invalid_argument("entry bound must be >= 1");
    CoordinateChange ch = identity_change(n, i);
    ch.seed = seed;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(n) * 131 + static_cast<uint64_t>(i));
    uint64_t span = 2 * static_cast<uint64_t>(bound) + 1;
    for (auto& row : ch.block)
        for (auto& e : row) e = static_cast<long>(rng() % span) - bound;
    return ch;
}

DensePoly apply_coordinate_change(const DensePoly& p, const CoordinateChange& ch) {
    if (p.nvars() != ch.n) throw std::invalid_argument("dimension mismatch");
    if (ch.is_identity()) return p;
    std::vector<DensePoly> subs;
    subs.reserve(ch.n);
    for (int k = 0; k < ch.n; ++k) {
        DensePoly s = DensePoly::variable(ch.n, k);
        if (k >= ch.i)
            for (int l = 0; l < ch.i; ++l)
                if (ch.block[k - ch.i][l] != 0) s = s + DensePoly::variable(ch.n, l) * ch.block[k - ch.i][l];
        subs.push_back(std::move(s));
    }
    return p.eval_poly(subs);
}

PolarSystem polar_system(const DensePoly& f, int i, const CoordinateChange& ch) {
    int n = f.nvars();
    if (f.is_constant()) throw std::invalid_argument("polar system needs a non-constant polynomial");
    if (i < 0 || i >= n) throw std::invalid_argument("polar index out of range");
    DensePoly fs = squarefree_part(f);
    DensePoly ft = apply_coordinate_change(fs, ch);
    PolarSystem sys;
    sys.i = i;
    sys.change = ch;
    sys.equations.push_back(ft);
    DensePoly delta(n);
    for (int j = 0; j < n; ++j) {
        DensePoly pj = ft.partial_derivative(j);
        if (j < i) sys.equations.push_back(pj);
        delta = delta + pj * pj;
    }
    sys.delta = std::move(delta);
    return sys;
}

}  // namespace polarsamp
