#include "polarsamp/eliminate.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace polarsamp {

namespace {

Monomial lm_lcm(const DensePoly& a, const DensePoly& b) {
    return monomial_lcm(a.leading_monomial(), b.leading_monomial());
}

bool lcm_is_product(const Monomial& lcm, const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < lcm.size(); ++i)
        if (lcm[i] != a[i] + b[i]) return false;
    return true;
}

struct SPair {
    int i, j;
    Monomial lcm;
    unsigned deg;
};

bool pair_less(const SPair& a, const SPair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.lcm < b.lcm;
}

DensePoly spoly(const DensePoly& f, const DensePoly& g, const Monomial& lcm) {
    int n = f.nvars();
    Monomial mf(n), mg(n);
    const Monomial& lf = f.leading_monomial();
    const Monomial& lg = g.leading_monomial();
    for (int k = 0; k < n; ++k) {
        mf[k] = lcm[k] - lf[k];
        mg[k] = lcm[k] - lg[k];
    }
    DensePoly tf = DensePoly::term(n, mf, Rat(1) / f.leading_coeff());
    DensePoly tg = DensePoly::term(n, mg, Rat(1) / g.leading_coeff());
    return f * tf - g * tg;
}

/// Gebauer-Moeller pair-set update for the element G[t].
void gm_update(std::vector<SPair>& pairs, const std::vector<DensePoly>& G, int t) {
    const Monomial& lmt = G[t].leading_monomial();
    // B criterion against existing pairs.
    std::erase_if(pairs, [&](const SPair& p) {
        if (!monomial_divides(lmt, p.lcm)) return false;
        return lm_lcm(G[p.i], G[t]) != p.lcm && lm_lcm(G[p.j], G[t]) != p.lcm;
    });
    std::vector<SPair> cand;
    for (int i = 0; i < t; ++i) {
        Monomial l = lm_lcm(G[i], G[t]);
        unsigned d = total_degree(l);
        cand.push_back({i, t, std::move(l), d});
    }
    // M criterion: strict divisibility among the new lcms.
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a)
        for (size_t b = 0; b < cand.size(); ++b) {
            if (a == b || drop[a]) continue;
            if (cand[b].lcm != cand[a].lcm && monomial_divides(cand[b].lcm, cand[a].lcm)) drop[a] = true;
        }
    // F criterion: one survivor per lcm class, none if the class contains a
    // coprime pair (Buchberger's first criterion).
    for (size_t a = 0; a < cand.size(); ++a) {
        if (drop[a]) continue;
        bool coprime_in_class = false;
        for (size_t b = 0; b < cand.size(); ++b)
            if (!drop[b] && cand[b].lcm == cand[a].lcm &&
                lcm_is_product(cand[b].lcm, G[cand[b].i].leading_monomial(), lmt))
                coprime_in_class = true;
        bool first = true;
        for (size_t b = 0; b < a; ++b)
            if (!drop[b] && cand[b].lcm == cand[a].lcm) first = false;
        if (coprime_in_class || !first) drop[a] = true;
    }
    for (size_t a = 0; a < cand.size(); ++a)
        if (!drop[a]) pairs.push_back(std::move(cand[a]));
}

void autoreduce(std::vector<DensePoly>& G) {
    // Drop generators whose leading monomial is divisible by another's.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t a = 0; a < G.size(); ++a) {
            for (size_t b = 0; b < G.size(); ++b) {
                if (a == b) continue;
                if (monomial_divides(G[b].leading_monomial(), G[a].leading_monomial())) {
                    G.erase(G.begin() + a);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    // Tail-reduce each generator against the others.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t a = 0; a < G.size(); ++a) {
            std::vector<DensePoly> rest;
            for (size_t b = 0; b < G.size(); ++b)
                if (b != a) rest.push_back(G[b]);
            DensePoly r = normal_form(G[a], rest).primitive_part();
            if (!(r == G[a])) {
                G[a] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(G.begin(), G.end(),
              [](const DensePoly& x, const DensePoly& y) { return x.leading_monomial() < y.leading_monomial(); });
}

}  // namespace

DensePoly normal_form(DensePoly f, const std::vector<DensePoly>& basis) {
    if (basis.empty()) return f;
    int n = f.nvars();
    DensePoly r(n);
    while (!f.is_zero()) {
        const Monomial& lf = f.leading_monomial();
        const DensePoly* red = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && monomial_divides(g.leading_monomial(), lf)) {
                red = &g;
                break;
            }
        if (red) {
            Monomial q(n);
            const Monomial& lg = red->leading_monomial();
            for (int k = 0; k < n; ++k) q[k] = lf[k] - lg[k];
            DensePoly t = DensePoly::term(n, q, f.leading_coeff() / red->leading_coeff());
            f = f - (*red) * t;
        } else {
            DensePoly t = DensePoly::term(n, lf, f.leading_coeff());
            r = r + t;
            f = f - t;
        }
    }
    return r;
}

std::vector<DensePoly> groebner_basis(std::vector<DensePoly> gens, const EliminationLimits& limits) {
    std::vector<DensePoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.primitive_part());
    if (G.empty()) return G;
    std::vector<SPair> pairs;
    for (int t = 0; t < static_cast<int>(G.size()); ++t) gm_update(pairs, G, t);
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        SPair p = std::move(*it);
        pairs.erase(it);
        DensePoly s = spoly(G[p.i], G[p.j], p.lcm);
        DensePoly r = normal_form(std::move(s), G);
        if (r.is_zero()) continue;
        r = r.primitive_part();
        if (r.terms().size() > limits.max_poly_terms)
            throw ResourceError("basis polynomial exceeded the term cap");
        G.push_back(std::move(r));
        if (G.size() > limits.max_basis_size)
            throw ResourceError("basis exceeded the size cap (" + std::to_string(limits.max_basis_size) +
                                " generators)");
        gm_update(pairs, G, static_cast<int>(G.size()) - 1);
    }
    autoreduce(G);
    return G;
}

EliminationBasis saturate_by_delta(const PolarSystem& sys, const EliminationLimits& limits) {
    std::vector<DensePoly> G0 = groebner_basis(sys.equations, limits);
    EliminationBasis out;
    out.saturated = true;
    if (G0.size() == 1 && G0[0].is_constant()) {
        out.generators = {DensePoly::constant(sys.equations[0].nvars(), 1)};
        return out;
    }
    int n = sys.equations[0].nvars();
    std::vector<DensePoly> lifted;
    for (const auto& g : G0) lifted.push_back(g.insert_variable(0));
    DensePoly t = DensePoly::variable(n + 1, 0);
    lifted.push_back(t * sys.delta.insert_variable(0) - DensePoly::constant(n + 1, 1));
    std::vector<DensePoly> G = groebner_basis(std::move(lifted), limits);
    for (const auto& g : G)
        if (g.degree_in(0) == 0) out.generators.push_back(g.drop_variable(0));
    if (out.generators.empty()) out.generators = {DensePoly::constant(n, 1)};
    return out;
}

DimensionVerdict dimension_verdict(const EliminationBasis& basis) {
    const auto& G = basis.generators;
    if (G.size() == 1 && G[0].is_constant() && !G[0].is_zero()) return DimensionVerdict::Empty;
    if (G.empty()) return DimensionVerdict::PositiveDimensional;
    int n = G[0].nvars();
    for (int j = 0; j < n; ++j) {
        bool pure = false;
        for (const auto& g : G) {
            const Monomial& lm = g.leading_monomial();
            if (lm[j] == 0) continue;
            bool only_j = true;
            for (int k = 0; k < n; ++k)
                if (k != j && lm[k] > 0) only_j = false;
            if (only_j) {
                pure = true;
                break;
            }
        }
        if (!pure) return DimensionVerdict::PositiveDimensional;
    }
    return DimensionVerdict::ZeroDimensional;
}

std::vector<Monomial> standard_monomials(const std::vector<DensePoly>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    int n = basis[0].nvars();
    std::vector<unsigned> bound(n, 0);
    for (int j = 0; j < n; ++j) {
        bool found = false;
        for (const auto& g : basis) {
            const Monomial& lm = g.leading_monomial();
            if (lm[j] == 0) continue;
            bool only_j = true;
            for (int k = 0; k < n; ++k)
                if (k != j && lm[k] > 0) only_j = false;
            if (only_j && (!found || lm[j] < bound[j])) {
                bound[j] = lm[j];
                found = true;
            }
        }
        if (!found) throw std::domain_error("basis is not zero-dimensional");
    }
    std::vector<Monomial> out;
    Monomial m(n, 0);
    while (true) {
        bool reduced = true;
        for (const auto& g : basis)
            if (monomial_divides(g.leading_monomial(), m)) reduced = false;
        if (reduced) out.push_back(m);
        // Odometer over the box [0, bound_j).
        int j = n - 1;
        while (j >= 0) {
            if (++m[j] < bound[j]) break;
            m[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

namespace {

/// Coordinates of a fully reduced polynomial in the standard-monomial basis.
std::vector<Rat> coords_of(const DensePoly& nf, const std::map<Monomial, int>& index, size_t dim) {
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [m, c] : nf.terms()) v[index.at(m)] = c;
    return v;
}

/// Smallest m with x_j^m linearly dependent on lower powers mod the ideal;
/// returns the monic dependency as a univariate polynomial.
UPoly minimal_polynomial(int j, const std::vector<DensePoly>& basis, const std::vector<Monomial>& mons) {
    int n = basis[0].nvars();
    size_t dim = mons.size();
    std::map<Monomial, int> index;
    for (size_t k = 0; k < dim; ++k) index[mons[k]] = static_cast<int>(k);
    std::vector<std::vector<Rat>> vecs;  // coordinates of x_j^m mod I
    DensePoly cur = DensePoly::constant(n, 1);
    DensePoly xj = DensePoly::variable(n, j);
    for (size_t m = 0;; ++m) {
        if (m > 0) cur = normal_form(cur * xj, basis);
        std::vector<Rat> vm = coords_of(cur, index, dim);
        // Try to solve sum_k c_k vecs[k] = vm by Gaussian elimination.
        size_t cols = vecs.size();
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(cols + 1, Rat(0)));
        for (size_t c = 0; c < cols; ++c)
            for (size_t r = 0; r < dim; ++r) a[r][c] = vecs[c][r];
        for (size_t r = 0; r < dim; ++r) a[r][cols] = vm[r];
        size_t row = 0;
        std::vector<int> pivot_col(dim, -1);
        for (size_t c = 0; c < cols && row < dim; ++c) {
            size_t pr = row;
            while (pr < dim && a[pr][c] == 0) ++pr;
            if (pr == dim) continue;
            std::swap(a[pr], a[row]);
            Rat inv = Rat(1) / a[row][c];
            for (size_t x = c; x <= cols; ++x) a[row][x] *= inv;
            for (size_t r = 0; r < dim; ++r) {
                if (r == row || a[r][c] == 0) continue;
                Rat f = a[r][c];
                for (size_t x = c; x <= cols; ++x) a[r][x] -= f * a[row][x];
            }
            pivot_col[row] = static_cast<int>(c);
            ++row;
        }
        bool solvable = true;
        for (size_t r = row; r < dim; ++r)
            if (a[r][cols] != 0) solvable = false;
        if (solvable) {
            std::vector<Rat> coeffs(m + 1, Rat(0));
            coeffs[m] = 1;
            for (size_t r = 0; r < row; ++r) coeffs[pivot_col[r]] = -a[r][cols];
            return UPoly(std::move(coeffs));
        }
        vecs.push_back(std::move(vm));
    }
}

}  // namespace

EliminationBasis radicalize(const EliminationBasis& basis, const EliminationLimits& limits) {
    if (dimension_verdict(basis) != DimensionVerdict::ZeroDimensional)
        throw std::domain_error("radicalize needs a zero-dimensional basis");
    int n = basis.generators[0].nvars();
    std::vector<Monomial> mons = standard_monomials(basis.generators);
    std::vector<DensePoly> extra;
    for (int j = 0; j < n; ++j) {
        UPoly mj = minimal_polynomial(j, basis.generators, mons);
        UPoly sf = squarefree_part(mj).monic();
        if (!(sf == mj.monic())) extra.push_back(DensePoly::from_upoly(n, j, sf));
    }
    if (extra.empty()) return basis;
    std::vector<DensePoly> gens = basis.generators;
    gens.insert(gens.end(), extra.begin(), extra.end());
    EliminationBasis out;
    out.saturated = basis.saturated;
    out.generators = groebner_basis(std::move(gens), limits);
    return out;
}

UnivariateRepresentation extract_representation(const EliminationBasis& basis, const PolarSystem& sys,
                                                const EliminationLimits& limits) {
    if (dimension_verdict(basis) != DimensionVerdict::ZeroDimensional)
        throw std::domain_error("extract_representation needs a zero-dimensional basis");
    EliminationBasis rb = radicalize(basis, limits);
    int n = rb.generators[0].nvars();
    int last = n - 1;
    UnivariateRepresentation rep;
    rep.change = sys.change;
    // q: the univariate eliminant in X_n.
    std::optional<UPoly> q;
    for (const auto& g : rb.generators)
        if (g.is_univariate_in(last) && g.degree_in(last) > 0) q = g.to_upoly(last).monic();
    if (!q) throw ShapePositionFailure("no univariate eliminant in the last variable");
    rep.q = *q;
    rep.p.resize(n);
    for (int k = 0; k < last; ++k) {
        Monomial want(n, 0);
        want[k] = 1;
        const DensePoly* gen = nullptr;
        for (const auto& g : rb.generators)
            if (g.leading_monomial() == want) gen = &g;
        if (!gen)
            throw ShapePositionFailure("variable x" + std::to_string(k + 1) +
                                       " is not linear in the reduced basis");
        DensePoly tail = DensePoly::variable(n, k) - (*gen) * (Rat(1) / gen->leading_coeff());
        if (!tail.is_univariate_in(last))
            throw ShapePositionFailure("tail of x" + std::to_string(k + 1) + " involves other variables");
        rep.p[k] = rem(tail.to_upoly(last), rep.q);
    }
    rep.p[last] = rem(UPoly::variable(), rep.q);
    rep.discriminant = discriminant(rep.q);
    return rep;
}

namespace {

UPoly det_mod(const std::vector<std::vector<UPoly>>& m, const UPoly& q) {
    size_t n = m.size();
    // Laplace expansion over column subsets, memoized; fine for small n.
    std::map<unsigned, UPoly> memo;
    // Process rows bottom-up: det over rows [r..n) and column set `mask`.
    std::function<UPoly(size_t, unsigned)> go = [&](size_t r, unsigned mask) -> UPoly {
        if (r == n) return UPoly::constant(1);
        auto it = memo.find(mask);
        if (r == n - 1) {
            // single column left
            for (size_t c = 0; c < n; ++c)
                if (mask & (1u << c)) return m[r][c];
        }
        if (it != memo.end()) return it->second;
        UPoly acc;
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[r][c].is_zero()) {
                UPoly sub = go(r + 1, mask & ~(1u << c));
                UPoly term = mulmod(m[r][c], sub, q);
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo[mask] = acc;
        return acc;
    };
    return go(0, (1u << n) - 1);
}

}  // namespace

VerificationReport verify_representation(const UnivariateRepresentation& rep, const PolarSystem& sys) {
    VerificationReport out;
    const UPoly& q = rep.q;
    int n = sys.equations[0].nvars();
    out.equations_vanish = true;
    for (size_t r = 0; r < sys.equations.size(); ++r) {
        UPoly v = sys.equations[r].eval_upoly_mod(rep.p, q);
        if (!v.is_zero()) {
            out.equations_vanish = false;
            out.failures.push_back("equation " + std::to_string(r) + " does not vanish mod q");
        }
    }
    UPoly dlt = sys.delta.eval_upoly_mod(rep.p, q);
    out.delta_coprime = !dlt.is_zero() && gcd(dlt, q).degree() == 0;
    if (!out.delta_coprime) out.failures.push_back("Delta shares a root with q");
    if (sys.i != n - 1) {
        out.jacobian_unit = false;
        out.failures.push_back("Jacobian check requires the full polar stage i = n-1");
    } else {
        std::vector<std::vector<UPoly>> jac(n, std::vector<UPoly>(n));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) jac[r][k] = sys.equations[r].partial_derivative(k).eval_upoly_mod(rep.p, q);
        UPoly det = det_mod(jac, q);
        out.jacobian_unit = !det.is_zero() && gcd(det, q).degree() == 0;
        if (!out.jacobian_unit)
            out.failures.push_back(
                "Jacobian determinant is not a unit mod q (a point of W_{n-1} may be singular on W)");
    }
    out.separable = gcd(q, q.derivative()).degree() == 0;
    if (!out.separable) out.failures.push_back("q is not separable");
    return out;
}

Int bezout_bound(int d, int n) {
    Int b = d;
    for (int k = 0; k < n - 1; ++k) b *= (d - 1);
    return b;
}

long polar_degree(const DensePoly& f, int i, uint64_t seed, long entry_bound, const EliminationLimits& limits) {
    int n = f.nvars();
    if (i < 0 || i >= n) throw std::invalid_argument("polar index out of range");
    constexpr int kRetries = 8;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        CoordinateChange ch = sample_coordinate_change(n, i, seed + attempt, entry_bound);
        PolarSystem sys = polar_system(f, i, ch);
        EliminationBasis basis = saturate_by_delta(sys, limits);
        if (dimension_verdict(basis) == DimensionVerdict::Empty) return 0;
        int cuts = n - (i + 1);
        std::vector<DensePoly> gens = basis.generators;
        std::mt19937_64 rng((seed + attempt) * 0x2545f4914f6cdd1dull + 17);
        for (int c = 0; c < cuts; ++c) {
            DensePoly h = DensePoly::constant(n, static_cast<long>(rng() % 201) - 100);
            for (int k = 0; k < n; ++k) {
                long coef = static_cast<long>(rng() % 201) - 100;
                if (coef == 0) coef = 1;
                h = h + DensePoly::variable(n, k) * Rat(coef);
            }
            gens.push_back(std::move(h));
        }
        EliminationBasis sliced;
        sliced.saturated = true;
        sliced.generators = cuts == 0 ? std::move(gens) : groebner_basis(std::move(gens), limits);
        DimensionVerdict v = dimension_verdict(sliced);
        if (v == DimensionVerdict::Empty || v == DimensionVerdict::PositiveDimensional) continue;
        EliminationBasis rad = radicalize(sliced, limits);
        return static_cast<long>(standard_monomials(rad.generators).size());
    }
    throw DegenerateSection("no generic section found within the retry budget");
}

}  // namespace polarsamp
