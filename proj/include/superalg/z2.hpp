#ifndef SUPERALG_Z2_HPP
#define SUPERALG_Z2_HPP

#include <string>

#include "superalg/numeric.hpp"

namespace superalg {

/// Element of the commutative ring Z x Z with the twisted product
/// (m,n)(m',n') = (mm'+nn', mn'+m'n).  Values of super lengths, orders
/// and multiplicities: `even` counts even composition factors, `odd`
/// odd ones.  Components may be negative (orders of fractions subtract).
struct Z2 {
    Int even{0};
    Int odd{0};

    Z2() = default;
    Z2(Int e, Int o) : even(std::move(e)), odd(std::move(o)) {}
    Z2(long e, long o) : even(e), odd(o) {}

    static Z2 zero() { return Z2(); }
    static Z2 one() { return Z2(1, 0); }

    bool is_zero() const { return even == 0 && odd == 0; }

    /// Image under the ring homomorphism (m,n) -> m-n.
    Int sdim() const { return even - odd; }

    /// Parity shift: exchanges even and odd counts.
    Z2 swapped() const { return Z2(odd, even); }

    friend Z2 operator+(const Z2& a, const Z2& b) { return Z2(a.even + b.even, a.odd + b.odd); }
    friend Z2 operator-(const Z2& a, const Z2& b) { return Z2(a.even - b.even, a.odd - b.odd); }
    friend Z2 operator-(const Z2& a) { return Z2(-a.even, -a.odd); }
    friend Z2 operator*(const Z2& a, const Z2& b) {
        return Z2(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even);
    }
    Z2& operator+=(const Z2& b) { even += b.even; odd += b.odd; return *this; }
    Z2& operator-=(const Z2& b) { even -= b.even; odd -= b.odd; return *this; }

    friend bool operator==(const Z2& a, const Z2& b) { return a.even == b.even && a.odd == b.odd; }
    friend bool operator!=(const Z2& a, const Z2& b) { return !(a == b); }
};

inline Z2 z2_mul(const Z2& a, const Z2& b) { return a * b; }

inline Z2 z2_scale(const Int& k, const Z2& a) { return Z2(k * a.even, k * a.odd); }

inline std::string to_string(const Z2& v) {
    return "(" + to_string(v.even) + "," + to_string(v.odd) + ")";
}

} // namespace superalg

#endif
