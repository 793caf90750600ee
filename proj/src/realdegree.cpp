#include "polarsamp/realdegree.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "polarsamp/realroots.hpp"

namespace polarsamp {

namespace {

// ---------- arithmetic in F_p[x], p odd, p < 2^31 ----------

using PPoly = std::vector<uint64_t>;  // ascending, no trailing zeros

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

uint64_t ppow_scalar(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
        e >>= 1u;
    }
    return r;
}

uint64_t pinv(uint64_t a, uint64_t p) { return ppow_scalar(a, p - 2, p); }

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

PPoly psub(PPoly a, const PPoly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

PPoly pmonic(PPoly a, uint64_t p) {
    if (a.empty()) return a;
    uint64_t inv = pinv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

// remainder of a by b (b nonzero)
PPoly prem(PPoly a, const PPoly& b, uint64_t p) {
    int db = pdeg(b);
    uint64_t invl = pinv(b.back(), p);
    while (pdeg(a) >= db) {
        uint64_t f = a.back() * invl % p;
        int shift = pdeg(a) - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
        ptrim(a);
    }
    return a;
}

PPoly pdiv(PPoly a, const PPoly& b, uint64_t p) {
    int db = pdeg(b);
    if (pdeg(a) < db) return {};
    PPoly q(pdeg(a) - db + 1, 0);
    uint64_t invl = pinv(b.back(), p);
    while (pdeg(a) >= db) {
        uint64_t f = a.back() * invl % p;
        int shift = pdeg(a) - db;
        q[shift] = f;
        for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
        ptrim(a);
    }
    return q;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    while (!b.empty()) {
        PPoly r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    return prem(pmul(a, b, p), f, p);
}

PPoly ppowmod(PPoly base, const Int& e, const PPoly& f, uint64_t p) {
    PPoly r{1};
    base = prem(std::move(base), f, p);
    Int ex = e;
    while (ex > 0) {
        if (mpz_odd_p(ex.get_mpz_t())) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        ex >>= 1;
    }
    return r;
}

PPoly pderiv(const PPoly& a, uint64_t p) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    ptrim(r);
    return r;
}

// extended Euclid: s*a + t*b = gcd (monic)
void pxgcd(const PPoly& a, const PPoly& b, uint64_t p, PPoly& g, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        PPoly q = pdiv(r0, r1, p);
        PPoly r2 = psub(r0, pmul(q, r1, p), p);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    uint64_t inv = pinv(r0.back(), p);
    auto scale = [&](PPoly& x) {
        for (auto& c : x) c = c * inv % p;
    };
    g = r0;
    scale(g);
    s = s0;
    scale(s);
    t = t0;
    scale(t);
}

// ---------- distinct-degree + equal-degree factorization ----------

void edf(const PPoly& f, int d, uint64_t p, std::mt19937_64& rng, std::vector<PPoly>& out) {
    int r = pdeg(f) / d;
    if (r == 1) {
        out.push_back(pmonic(f, p));
        return;
    }
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;
    while (true) {
        PPoly a(pdeg(f), 0);
        for (auto& c : a) c = rng() % p;
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly b = ppowmod(a, e, f, p);
        PPoly bm1 = psub(b, PPoly{1}, p);
        PPoly g = pgcd(bm1, f, p);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf(g, d, p, rng, out);
            edf(pdiv(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(PPoly f, uint64_t p, std::mt19937_64& rng) {
    std::vector<PPoly> out;
    f = pmonic(std::move(f), p);
    PPoly h{0, 1};  // x
    int d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (2 * d > pdeg(f)) {
            out.push_back(f);
            break;
        }
        h = ppowmod(h, Int(static_cast<unsigned long>(p)), f, p);
        PPoly g = pgcd(psub(h, PPoly{0, 1}, p), f, p);
        if (pdeg(g) > 0) {
            edf(g, d, p, rng, out);
            f = pdiv(f, g, p);
            h = prem(h, f, p);
        }
    }
    return out;
}

// ---------- Hensel lifting over Z ----------

using ZPoly = std::vector<Int>;  // ascending

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zreduce(ZPoly a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(a);
    return a;
}

ZPoly zsym(ZPoly a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    ztrim(a);
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zreduce(std::move(a), m);
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zreduce(std::move(a), m);
}

// division by a monic b over Z/m
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = a;
    int db = zdeg(b);
    q.assign(std::max(0, zdeg(a) - db + 1), Int(0));
    while (zdeg(r) >= db) {
        Int f = r.back();
        int shift = zdeg(r) - db;
        q[shift] = f;
        for (int j = 0; j <= db; ++j) r[shift + j] -= f * b[j];
        r = zreduce(std::move(r), m);
        if (zdeg(r) >= db + shift) break;  // should not happen for monic b
    }
    q = zreduce(std::move(q), m);
}

struct HenselPair {
    ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
    Int m;
};

/// One quadratic lifting step: modulus m -> m^2 (vzG & Gerhard, Alg. 15.10).
void hensel_step(const ZPoly& f, HenselPair& hp) {
    Int m2 = hp.m * hp.m;
    ZPoly e = zsub(zreduce(f, m2), zmul(hp.g, hp.h, m2), m2);
    ZPoly q, r;
    zdivmod_monic(zmul(hp.s, e, m2), hp.h, m2, q, r);
    ZPoly gstar = zadd(zadd(hp.g, zmul(hp.t, e, m2), m2), zmul(q, hp.g, m2), m2);
    ZPoly hstar = zadd(hp.h, r, m2);
    ZPoly b = zsub(zadd(zmul(hp.s, gstar, m2), zmul(hp.t, hstar, m2), m2), ZPoly{Int(1)}, m2);
    ZPoly c, d;
    zdivmod_monic(zmul(hp.s, b, m2), hstar, m2, c, d);
    ZPoly sstar = zsub(hp.s, d, m2);
    ZPoly tstar = zsub(zsub(hp.t, zmul(hp.t, b, m2), m2), zmul(c, gstar, m2), m2);
    hp.g = std::move(gstar);
    hp.h = std::move(hstar);
    hp.s = std::move(sstar);
    hp.t = std::move(tstar);
    hp.m = m2;
}

ZPoly to_zpoly(const PPoly& a) {
    ZPoly r;
    for (uint64_t c : a) r.emplace_back(static_cast<unsigned long>(c));
    ztrim(r);
    return r;
}

/// Lift the modular factorization of monic f from p to at least `target`.
void hensel_tree(const ZPoly& f, const std::vector<PPoly>& factors, size_t lo, size_t hi, uint64_t p,
                 const Int& target, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        // f is already the lift of its single factor.
        out[lo] = f;
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    PPoly gp{1}, hpoly{1};
    for (size_t k = lo; k < mid; ++k) gp = pmul(gp, factors[k], p);
    for (size_t k = mid; k < hi; ++k) hpoly = pmul(hpoly, factors[k], p);
    PPoly gg, ss, tt;
    pxgcd(gp, hpoly, p, gg, ss, tt);
    if (pdeg(gg) != 0) throw std::logic_error("modular factors are not coprime");
    HenselPair hp;
    hp.g = to_zpoly(gp);
    hp.h = to_zpoly(hpoly);
    hp.s = to_zpoly(ss);
    hp.t = to_zpoly(tt);
    hp.m = Int(static_cast<unsigned long>(p));
    while (hp.m < target) hensel_step(zreduce(f, hp.m * hp.m), hp);
    hensel_tree(hp.g, factors, lo, mid, p, target, out);
    hensel_tree(hp.h, factors, mid, hi, p, target, out);
}

UPoly zpoly_to_upoly(const ZPoly& a) {
    std::vector<Rat> c;
    for (const auto& x : a) c.emplace_back(x);
    return UPoly(std::move(c));
}

bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

/// Factor a monic squarefree integer polynomial.
std::vector<UPoly> factor_monic_integer(const ZPoly& f0) {
    int m = zdeg(f0);
    if (m <= 1) return {zpoly_to_upoly(f0)};
    // good prime: f squarefree mod p
    static const uint64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                                       43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                                       101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    uint64_t p = 0;
    PPoly fp;
    for (uint64_t cand : kPrimes) {
        fp.clear();
        for (const auto& c : f0) {
            Int r = c % static_cast<unsigned long>(cand);
            if (r < 0) r += static_cast<unsigned long>(cand);
            fp.push_back(r.get_ui());
        }
        ptrim(fp);
        if (pdeg(fp) != m) continue;  // cannot happen for monic f
        if (pdeg(pgcd(fp, pderiv(fp, cand), cand)) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("no good small prime found for factorization");
    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<PPoly> modular = factor_mod_p(fp, p, rng);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {zpoly_to_upoly(f0)};
    if (modular.size() > 30) throw std::runtime_error("recombination stage resource cap exceeded");
    // Mignotte-style bound on factor coefficients: 2^m * ||f||_2.
    Int norm2 = 0;
    for (const auto& c : f0) norm2 += c * c;
    Int root = sqrt(norm2) + 1;
    Int bound = (root << m) * 2 + 1;
    Int target = bound;
    std::vector<ZPoly> lifted(modular.size());
    hensel_tree(f0, modular, 0, modular.size(), p, target, lifted);
    Int big = Int(static_cast<unsigned long>(p));
    while (big < target) big *= big;
    // Subset recombination over the lifted factors.
    std::vector<UPoly> out;
    std::vector<int> avail(modular.size());
    for (size_t k = 0; k < modular.size(); ++k) avail[k] = static_cast<int>(k);
    UPoly remaining = zpoly_to_upoly(f0);
    size_t s = 1;
    while (2 * s <= avail.size()) {
        bool found = false;
        std::vector<int> pick(s);
        std::function<bool(size_t, size_t)> search = [&](size_t start, size_t depth) -> bool {
            if (depth == s) {
                ZPoly prod{Int(1)};
                for (size_t d = 0; d < s; ++d) prod = zmul(prod, lifted[avail[pick[d]]], big);
                prod = zsym(std::move(prod), big);
                UPoly cand = zpoly_to_upoly(prod);
                try {
                    UPoly quo = exact_div(remaining, cand);
                    remaining = quo;
                    out.push_back(cand);
                    std::vector<int> next;
                    for (size_t k = 0; k < avail.size(); ++k)
                        if (std::find(pick.begin(), pick.end(), static_cast<int>(k)) == pick.end())
                            next.push_back(avail[k]);
                    avail = std::move(next);
                    return true;
                } catch (const std::domain_error&) {
                    return false;
                }
            }
            for (size_t k = start; k < avail.size(); ++k) {
                pick[depth] = static_cast<int>(k);
                if (search(k + 1, depth + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++s;
    }
    if (remaining.degree() > 0) out.push_back(remaining);
    std::sort(out.begin(), out.end(), upoly_less);
    return out;
}

}  // namespace

std::vector<UPoly> factor_rational(const UPoly& q) {
    if (q.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    if (q.degree() == 0) return {};
    UPoly qm = q.monic();
    if (gcd(qm, qm.derivative()).degree() != 0) throw std::domain_error("input must be squarefree");
    // Clear denominators, then monicize: F(x) = c^{m-1} q_z(x/c) with c = lc(q_z).
    Int den = 1;
    for (const Rat& c : qm.coeffs()) den = lcm(den, c.get_den());
    int m = qm.degree();
    std::vector<Int> az(m + 1);
    for (int i = 0; i <= m; ++i) {
        Rat scaled = qm.coeff(i) * Rat(den);
        az[i] = scaled.get_num();
    }
    Int c = az[m];
    ZPoly F(m + 1);
    F[m] = 1;
    Int cpow = 1;
    for (int i = m - 1; i >= 0; --i) {
        F[i] = az[i] * cpow;
        cpow *= c;
    }
    std::vector<UPoly> monic_factors = factor_monic_integer(F);
    // Map back: a factor g of F gives g(c*x) / c^{deg g} as a factor of q.
    std::vector<UPoly> out;
    for (const UPoly& g : monic_factors) {
        std::vector<Rat> coeffs(g.degree() + 1);
        Rat cp = 1;
        for (int i = 0; i <= g.degree(); ++i) {
            coeffs[i] = g.coeff(i) * cp;
            cp *= Rat(c);
        }
        UPoly h = UPoly(std::move(coeffs)).monic();
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), upoly_less);
    return out;
}

RealPartCertificate real_part(const UPoly& q) {
    if (q.is_zero() || q.lc() != 1) throw std::domain_error("q must be monic");
    RealPartCertificate cert;
    cert.q_star = UPoly::constant(1);
    for (const UPoly& f : factor_rational(q)) {
        int roots = sturm_count(f, std::nullopt, std::nullopt);
        if (roots > 0) {
            cert.q_star = cert.q_star * f;
            cert.delta_star += f.degree();
            cert.m += 1;
        }
        cert.factors.emplace_back(f, roots);
    }
    return cert;
}

}  // namespace polarsamp
