#ifndef SUPERALG_FACTOR_HPP
#define SUPERALG_FACTOR_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "superalg/poly.hpp"

namespace superalg {

// Exact factorization of univariate rational polynomials: Yun squarefree
// split, rational-root extraction, then Kronecker interpolation for the
// remaining degrees.  Intended for desk-scale inputs.

struct QFactorization {
    Rat unit{1};                              // f = unit * prod factors[i]^mult[i]
    std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, ascending
};

namespace detail {

inline std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> primes;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            primes.emplace_back(p, e);
        }
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : primes) {
        std::size_t base = divs.size();
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Clears denominators and content: returns an integer-coefficient
/// polynomial with positive leading coefficient, a rational multiple of f.
inline QPoly primitive_integer_form(const QPoly& f) {
    Int lcm_den = 1;
    for (const auto& c : f.c) {
        Int d = boost::multiprecision::denominator(c);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
    }
    std::vector<Rat> scaled(f.c.size());
    Int content = 0;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        scaled[i] = f.c[i] * Rat(lcm_den);
        content = boost::multiprecision::gcd(content, boost::multiprecision::numerator(scaled[i]));
    }
    if (content == 0) return QPoly();
    for (auto& c : scaled) c /= Rat(content);
    QPoly g{std::move(scaled)};
    if (g.lead() < 0) g = Rat(-1) * g;
    return g;
}

inline std::vector<Rat> rational_roots(const QPoly& f) {
    QPoly g = primitive_integer_form(f);
    std::vector<Rat> roots;
    if (g.is_zero()) return roots;
    while (!g.is_zero() && g.coeff(0) == 0) {  // root at 0
        if (roots.empty() || roots.back() != 0) roots.push_back(Rat(0));
        std::vector<Rat> shifted(g.c.begin() + 1, g.c.end());
        g = QPoly(std::move(shifted));
    }
    if (g.degree() < 1) return roots;
    Int a0 = boost::multiprecision::numerator(g.coeff(0));
    Int an = boost::multiprecision::numerator(g.lead());
    auto ps = divisors_of(a0);
    auto qs = divisors_of(an);
    for (const auto& p : ps)
        for (const auto& q : qs) {
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * p, q);
                if (g.eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline std::vector<long> kronecker_points(std::size_t count) {
    std::vector<long> pts;
    long v = 0;
    while (pts.size() < count) {
        pts.push_back(v);
        if (v > 0) v = -v;
        else v = -v + 1;
    }
    return pts;
}

// Kronecker search for a degree-d integer factor of the squarefree integer
// polynomial h (no rational roots).  Returns a monic rational factor.
inline bool kronecker_find_factor(const QPoly& h, int d, QPoly& out) {
    auto pts = kronecker_points(std::size_t(d) + 3);  // d+1 interpolation + 2 probes
    std::vector<Rat> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = h.eval(Rat(pts[i]));
    std::vector<std::vector<Int>> choices(std::size_t(d) + 1);
    for (int i = 0; i <= d; ++i) {
        auto divs = divisors_of(boost::multiprecision::numerator(vals[std::size_t(i)]));
        std::vector<Int> opts;
        for (const auto& v : divs) {
            opts.push_back(v);
            if (i > 0) opts.push_back(-v);  // fix the sign at the first point
        }
        choices[std::size_t(i)] = std::move(opts);
    }
    std::vector<Int> pick(std::size_t(d) + 1);
    // Lagrange basis over the interpolation points
    std::vector<QPoly> lagr(std::size_t(d) + 1);
    for (int i = 0; i <= d; ++i) {
        QPoly li = QPoly::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            li *= QPoly(std::vector<Rat>{Rat(-pts[std::size_t(j)]), Rat(1)});
            denom *= Rat(pts[std::size_t(i)] - pts[std::size_t(j)]);
        }
        lagr[std::size_t(i)] = (Rat(1) / denom) * li;
    }
    std::size_t total = 1;
    for (const auto& c : choices) total *= c.size();
    std::vector<std::size_t> idx(std::size_t(d) + 1, 0);
    for (std::size_t step = 0; step < total; ++step) {
        std::size_t s = step;
        for (int i = 0; i <= d; ++i) {
            pick[std::size_t(i)] = choices[std::size_t(i)][s % choices[std::size_t(i)].size()];
            s /= choices[std::size_t(i)].size();
        }
        QPoly g;
        for (int i = 0; i <= d; ++i) g += Rat(pick[std::size_t(i)]) * lagr[std::size_t(i)];
        if (g.degree() != d) continue;
        bool integral = true;
        for (const auto& c : g.c)
            if (boost::multiprecision::denominator(c) != 1) { integral = false; break; }
        if (!integral) continue;
        // cheap probes before the exact division
        bool probe_ok = true;
        for (std::size_t e = std::size_t(d) + 1; e < pts.size(); ++e) {
            Rat gv = g.eval(Rat(pts[e]));
            if (gv == 0 ||
                boost::multiprecision::numerator(vals[e]) % boost::multiprecision::numerator(gv) != 0) {
                probe_ok = false;
                break;
            }
        }
        if (!probe_ok) continue;
        if (divides(g.monic(), h)) {
            out = g.monic();
            return true;
        }
    }
    return false;
}

inline void factor_squarefree(const QPoly& f, std::vector<QPoly>& out) {
    if (f.degree() < 1) return;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return;
    }
    QPoly h = f.monic();
    for (const auto& r : rational_roots(h)) {
        QPoly lin{std::vector<Rat>{-r, Rat(1)}};
        out.push_back(lin);
        h = h / lin;
    }
    if (h.degree() < 1) return;
    if (h.degree() <= 3) {  // no rational roots left: quadratics/cubics are irreducible
        out.push_back(h.monic());
        return;
    }
    QPoly hz = primitive_integer_form(h);
    for (int d = 2; d <= hz.degree() / 2; ++d) {
        QPoly g;
        if (kronecker_find_factor(hz, d, g)) {
            factor_squarefree(g, out);
            factor_squarefree(hz / g, out);
            return;
        }
    }
    out.push_back(h.monic());
}

} // namespace detail

inline QFactorization factor_rational(const QPoly& f) {
    require(!f.is_zero(), errc::zero_function, "factorization of the zero polynomial");
    QFactorization result;
    result.unit = f.lead();
    QPoly g = f.monic();
    if (g.degree() == 0) return result;
    // Yun squarefree decomposition
    QPoly gp = g.derivative();
    QPoly a0 = gcd(g, gp);
    QPoly b = g / a0;
    QPoly c = gp / a0;
    QPoly d = c - b.derivative();
    std::vector<std::pair<QPoly, int>> square_free_parts;
    int i = 1;
    while (b.degree() > 0) {
        QPoly a = gcd(b, d);
        if (a.degree() > 0) square_free_parts.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    for (const auto& [part, mult] : square_free_parts) {
        std::vector<QPoly> irred;
        detail::factor_squarefree(part, irred);
        for (const auto& p : irred) result.factors.emplace_back(p, mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.degree() != y.first.degree())
                      return x.first.degree() < y.first.degree();
                  return x.first.c < y.first.c;
              });
    return result;
}

inline bool is_irreducible(const QPoly& p) {
    if (p.degree() < 1) return false;
    auto f = factor_rational(p);
    return f.factors.size() == 1 && f.factors[0].second == 1 &&
           f.factors[0].first.degree() == p.degree();
}

} // namespace superalg

#endif
