#ifndef SUPERALG_POLY_HPP
#define SUPERALG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "superalg/errors.hpp"
#include "superalg/numeric.hpp"

namespace superalg {

/// Dense univariate polynomial over a field K, lowest coefficient first.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const K& v) { return v == K(0) ? Poly() : Poly(std::vector<K>{v}); }
    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }

    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }
    K lead() const { return c.empty() ? K(0) : c.back(); }

    bool is_monic() const { return !c.empty() && c.back() == K(1); }

    K eval(const K& x) const {
        K r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + c[i];
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<K> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * K((long)i);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (auto& v : r.c) v = s * v;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.c < b.c; }

    Poly monic() const {
        require(!is_zero(), errc::malformed_input, "monic of zero polynomial");
        K inv = K(1) / lead();
        return inv * *this;
    }
};

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    require(!b.is_zero(), errc::malformed_input, "polynomial division by zero");
    Poly<K> r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, K(0));
    K linv = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        K f = r.lead() * linv;
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).first; }

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).second; }

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    return (a % d).is_zero();
}

/// Monic gcd.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// g, and (u, v) with u a + v b = g.
template <class K>
Poly<K> extended_gcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& u, Poly<K>& v) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::constant(K(1)), u1;
    Poly<K> v0, v1 = Poly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly<K> ut = u0 - q * u1; u0 = std::move(u1); u1 = std::move(ut);
        Poly<K> vt = v0 - q * v1; v0 = std::move(v1); v1 = std::move(vt);
    }
    if (r0.is_zero()) { u = Poly<K>(); v = Poly<K>(); return r0; }
    K inv = K(1) / r0.lead();
    u = inv * u0;
    v = inv * v0;
    return inv * r0;
}

template <class K>
Poly<K> poly_pow(Poly<K> base, unsigned e) {
    Poly<K> r = Poly<K>::constant(K(1));
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Multiplicity of the (nonconstant) factor p in f; 0 if p does not divide f.
template <class K>
int valuation(Poly<K> f, const Poly<K>& p) {
    require(!f.is_zero(), errc::zero_function, "valuation of zero polynomial");
    require(p.degree() >= 1, errc::malformed_input, "valuation at a constant");
    int v = 0;
    for (;;) {
        auto [q, r] = divmod(f, p);
        if (!r.is_zero()) return v;
        ++v;
        f = std::move(q);
    }
}

/// Composition f(g).
template <class K>
Poly<K> compose(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r;
    for (int i = f.degree(); i >= 0; --i) r = r * g + Poly<K>::constant(f.coeff(i));
    return r;
}

using QPoly = Poly<Rat>;

inline std::string poly_str(const QPoly& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Rat ci = f.coeff(i);
        if (ci == 0) continue;
        bool neg = ci < 0;
        Rat mag = neg ? Rat(-ci) : ci;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        std::string coeff = to_string(mag);
        if (i == 0) {
            out += coeff;
        } else {
            if (mag != 1) out += coeff + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace superalg

#endif
