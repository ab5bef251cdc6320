#ifndef SUPERALG_RATFUNC_HPP
#define SUPERALG_RATFUNC_HPP

#include <string>
#include <utility>

#include "superalg/poly.hpp"

namespace superalg {

/// Rational function over Q in one variable, kept reduced with a monic
/// denominator.  This is the field of even rational functions on the
/// curve models, and also serves as a coefficient field for polynomial
/// arithmetic in a second variable.
struct RatFunc {
    QPoly num;  // reduced: gcd(num, den) = 1
    QPoly den;  // monic, nonzero

    RatFunc() : den(QPoly::constant(Rat(1))) {}
    RatFunc(int v) : num(QPoly::constant(Rat(v))), den(QPoly::constant(Rat(1))) {}
    RatFunc(long v) : num(QPoly::constant(Rat(v))), den(QPoly::constant(Rat(1))) {}
    RatFunc(const Rat& v) : num(QPoly::constant(v)), den(QPoly::constant(Rat(1))) {}
    explicit RatFunc(QPoly p) : num(std::move(p)), den(QPoly::constant(Rat(1))) {}
    RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static RatFunc t() { return RatFunc(QPoly::x()); }

    void normalize() {
        require(!den.is_zero(), errc::malformed_input, "rational function with zero denominator");
        if (num.is_zero()) {
            den = QPoly::constant(Rat(1));
            return;
        }
        QPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        Rat lead = den.lead();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num = inv * num;
            den = inv * den;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a) { RatFunc r = a; r.num = -r.num; return r; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        require(!b.is_zero(), errc::zero_function, "division by the zero function");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Valuation at the place at infinity: deg(den) - deg(num).
    Int valuation_at_infinity() const {
        require(!is_zero(), errc::zero_function, "valuation of zero");
        return Int(den.degree() - num.degree());
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return poly_str(num, var);
        return "(" + poly_str(num, var) + ")/(" + poly_str(den, var) + ")";
    }
};

/// Valuation of g at the monic irreducible p.
inline Int valuation(const RatFunc& g, const QPoly& p) {
    require(!g.is_zero(), errc::zero_function, "valuation of zero");
    return Int(valuation(g.num, p)) - Int(valuation(g.den, p));
}

} // namespace superalg

#endif
