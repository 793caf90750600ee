#include "polarsamp/realroots.hpp"

#include <stdexcept>

namespace polarsamp {

namespace {

std::vector<UPoly> signed_remainder_sequence(const UPoly& a, const UPoly& b) {
    std::vector<UPoly> seq;
    seq.push_back(a);
    if (!b.is_zero()) seq.push_back(b);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
        UPoly r = -rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_at(const UPoly& p, const std::optional<Rat>& x, bool plus_infinity) {
    if (p.is_zero()) return 0;
    if (!x) {
        int s = sgn(p.lc());
        if (!plus_infinity && p.degree() % 2 == 1) s = -s;
        return s;
    }
    return sgn(p.eval(*x));
}

int variations(const std::vector<UPoly>& seq, const std::optional<Rat>& x, bool plus_infinity) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x, plus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int srs_count(const std::vector<UPoly>& seq, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return variations(seq, lo, false) - variations(seq, hi, true);
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& q) {
    if (q.is_zero()) throw std::domain_error("zero polynomial");
    return signed_remainder_sequence(q, q.derivative());
}

int sturm_count(const UPoly& q, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (q.is_zero()) throw std::domain_error("zero polynomial");
    if (q.degree() == 0) return 0;
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("need lo < hi");
    return srs_count(sturm_sequence(q), lo, hi);
}

int tarski_query(const UPoly& g, const UPoly& q) { return tarski_query(g, q, std::nullopt, std::nullopt); }

int tarski_query(const UPoly& g, const UPoly& q, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (q.is_zero()) throw std::domain_error("zero polynomial");
    if (q.degree() == 0) return 0;
    return srs_count(signed_remainder_sequence(q, q.derivative() * g), lo, hi);
}

std::vector<RealRoot> isolate_real_roots(const UPoly& q) {
    if (q.is_zero()) throw std::domain_error("zero polynomial");
    if (q.degree() == 0) return {};
    if (gcd(q, q.derivative()).degree() != 0) throw std::domain_error("input must be squarefree");
    std::vector<UPoly> seq = sturm_sequence(q);
    Rat bound = cauchy_root_bound(q);
    auto count = [&](const Rat& a, const Rat& b) {
        return srs_count(seq, std::optional<Rat>(a), std::optional<Rat>(b));
    };
    std::vector<RealRoot> out;
    // Depth-first, left interval first, so results come out sorted.
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = count(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            RealRoot r;
            r.interval = {lo, hi};
            out.push_back(std::move(r));
            continue;
        }
        Rat mid = (lo + hi) / 2;
        if (q.eval(mid) == 0) {
            // Exact root at the midpoint: carve out a non-root-endpoint
            // interval around it and recurse on the remainder.
            Rat eps = (hi - lo) / 4;
            while (q.eval(mid - eps) == 0 || q.eval(mid + eps) == 0) eps /= 2;
            stack.push_back({mid + eps, hi});
            stack.push_back({mid - eps, mid + eps});
            stack.push_back({lo, mid - eps});
        } else {
            stack.push_back({mid, hi});
            stack.push_back({lo, mid});
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
    return out;
}

void refine_root(const UPoly& q, RatInterval& iv, const Rat& width) {
    while (iv.width() > width) {
        Rat mid = iv.mid();
        Rat vm = q.eval(mid);
        if (vm == 0) {
            iv = {mid, mid};
            return;
        }
        if (sgn(q.eval(iv.lo)) * sgn(vm) < 0)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

std::vector<RealRoot> thom_encode_roots(const UPoly& q) {
    if (q.is_zero() || q.lc() != 1) throw std::domain_error("q must be monic");
    std::vector<RealRoot> roots = isolate_real_roots(q);
    int m = q.degree();
    std::vector<UPoly> ders;
    UPoly d = q;
    for (int k = 1; k <= m - 1; ++k) {
        d = d.derivative();
        ders.push_back(d);
    }
    for (auto& r : roots) {
        for (const UPoly& der : ders) {
            int s = 0;
            bool decided = false;
            RatInterval iv = r.interval;
            for (int step = 0; step < 64 && !decided; ++step) {
                if (iv.lo == iv.hi) {
                    s = sgn(der.eval(iv.lo));
                    decided = true;
                    break;
                }
                int slo = sgn(der.eval(iv.lo)), shi = sgn(der.eval(iv.hi));
                if (slo == shi && slo != 0 &&
                    srs_count(sturm_sequence(squarefree_part(der)), std::optional<Rat>(iv.lo),
                              std::optional<Rat>(iv.hi)) == 0) {
                    s = slo;
                    decided = true;
                    break;
                }
                Rat mid = iv.mid();
                Rat vm = q.eval(mid);
                if (vm == 0)
                    iv = {mid, mid};
                else if (sgn(q.eval(iv.lo)) * sgn(vm) < 0)
                    iv.hi = mid;
                else
                    iv.lo = mid;
            }
            if (!decided) {
                // Exact fallback: a Tarski query over the isolating interval of
                // a single root returns sign(der(root)) directly.
                s = tarski_query(der, q, std::optional<Rat>(iv.lo), std::optional<Rat>(iv.hi));
            }
            r.thom.push_back(s);
            r.interval = iv;  // keep the refinement
        }
    }
    return roots;
}

int thom_compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Thom vectors of different lengths");
    int k = static_cast<int>(a.size()) - 1;
    while (k >= 0 && a[k] == b[k]) --k;
    if (k < 0) return 0;
    // Sign of the next-higher derivative is shared; for the top position the
    // deg-th derivative of a monic q is a positive constant.
    int s = (k + 1 < static_cast<int>(a.size())) ? a[k + 1] : 1;
    int cmp = a[k] < b[k] ? -1 : 1;
    return s >= 0 ? cmp : -cmp;
}

}  // namespace polarsamp
