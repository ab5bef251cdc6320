#ifndef SUPERALG_GRASSMANN_HPP
#define SUPERALG_GRASSMANN_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superalg/errors.hpp"
#include "superalg/numeric.hpp"

namespace superalg {

/// Number of exterior generators allowed per scalar.  Dense subset maps
/// grow as 2^k, so the cap is deliberate; override with the
/// SUPERALG_MAX_GENERATORS environment variable.
inline int grassmann_generator_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("SUPERALG_MAX_GENERATORS")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 24) return v;
        }
        return 8;
    }();
    return cap;
}

/// Element of the exterior algebra Q<e_1..e_k>: a map from generator
/// subsets (bitmasks) to rational coefficients.  e_i e_j = -e_j e_i and
/// e_i^2 = 0; monomials are kept with ascending generator order.
class Grassmann {
public:
    Grassmann() : k_(0) {}

    explicit Grassmann(int k) : k_(k) { check_k(k); }

    Grassmann(int k, const Rat& body) : k_(k) {
        check_k(k);
        set(0u, body);
    }

    static Grassmann scalar(const Rat& body) { return Grassmann(0, body); }

    /// The generator e_i (1-based index).
    static Grassmann generator(int i, int k) {
        require(i >= 1 && i <= k, errc::malformed_input, "generator index out of range");
        Grassmann g(k);
        g.set(1u << (i - 1), Rat(1));
        return g;
    }

    int generators() const { return k_; }
    bool is_zero() const { return coeff_.empty(); }

    /// Coefficient of the empty monomial.
    Rat body() const {
        auto it = coeff_.find(0u);
        return it == coeff_.end() ? Rat(0) : it->second;
    }

    /// The scalar minus its body (the nilpotent part).
    Grassmann soul() const {
        Grassmann s = *this;
        s.coeff_.erase(0u);
        return s;
    }

    Rat coeff(std::uint32_t mask) const {
        auto it = coeff_.find(mask);
        return it == coeff_.end() ? Rat(0) : it->second;
    }

    void set(std::uint32_t mask, const Rat& c) {
        require(k_ >= 0 && mask < (1u << k_), errc::malformed_input, "monomial outside algebra");
        if (c == 0)
            coeff_.erase(mask);
        else
            coeff_[mask] = c;
    }

    const std::map<std::uint32_t, Rat>& terms() const { return coeff_; }

    bool is_homogeneous(int parity) const {
        for (const auto& [m, c] : coeff_)
            if ((std::popcount(m) & 1) != parity) return false;
        return true;
    }
    bool is_even() const { return is_homogeneous(0); }
    bool is_odd() const { return is_homogeneous(1); }

    /// Parity of a homogeneous scalar; 0 for the zero scalar.
    int parity() const {
        if (coeff_.empty()) return 0;
        int p = std::popcount(coeff_.begin()->first) & 1;
        require(is_homogeneous(p), errc::odd_parity_violation, "inhomogeneous scalar has no parity");
        return p;
    }

    friend Grassmann operator+(const Grassmann& a, const Grassmann& b) {
        Grassmann r(std::max(a.k_, b.k_));
        r.coeff_ = a.coeff_;
        for (const auto& [m, c] : b.coeff_) {
            auto it = r.coeff_.find(m);
            if (it == r.coeff_.end())
                r.coeff_[m] = c;
            else {
                it->second += c;
                if (it->second == 0) r.coeff_.erase(it);
            }
        }
        return r;
    }

    friend Grassmann operator-(const Grassmann& a) {
        Grassmann r = a;
        for (auto& [m, c] : r.coeff_) c = -c;
        return r;
    }

    friend Grassmann operator-(const Grassmann& a, const Grassmann& b) { return a + (-b); }

    friend Grassmann operator*(const Grassmann& a, const Grassmann& b) {
        Grassmann r(std::max(a.k_, b.k_));
        for (const auto& [ma, ca] : a.coeff_)
            for (const auto& [mb, cb] : b.coeff_) {
                if (ma & mb) continue;  // repeated generator
                Rat c = ca * cb;
                if (merge_sign(ma, mb) < 0) c = -c;
                std::uint32_t m = ma | mb;
                auto it = r.coeff_.find(m);
                if (it == r.coeff_.end()) {
                    if (c != 0) r.coeff_[m] = c;
                } else {
                    it->second += c;
                    if (it->second == 0) r.coeff_.erase(it);
                }
            }
        return r;
    }

    friend Grassmann operator*(const Rat& c, const Grassmann& a) {
        Grassmann r(a.k_);
        if (c == 0) return r;
        r.coeff_ = a.coeff_;
        for (auto& [m, v] : r.coeff_) v *= c;
        return r;
    }

    Grassmann& operator+=(const Grassmann& b) { return *this = *this + b; }
    Grassmann& operator-=(const Grassmann& b) { return *this = *this - b; }
    Grassmann& operator*=(const Grassmann& b) { return *this = *this * b; }

    friend bool operator==(const Grassmann& a, const Grassmann& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Grassmann& a, const Grassmann& b) { return !(a == b); }

    /// An even scalar is invertible iff its body is nonzero.
    bool invertible() const { return is_even() && body() != 0; }

    /// Inverse via the finite geometric series: for x = a + n with n
    /// nilpotent even, x^-1 = a^-1 sum_i (-n/a)^i, i <= k/2.
    Grassmann inverse() const {
        require(is_even(), errc::odd_parity_violation, "inverse of a non-even scalar");
        Rat a = body();
        require(a != 0, errc::non_invertible_block, "even scalar with zero body");
        Rat ainv = Rat(1) / a;
        Grassmann step = (-ainv) * soul();
        Grassmann acc(k_, Rat(1));
        Grassmann power(k_, Rat(1));
        for (int i = 1; i <= k_ / 2; ++i) {
            power *= step;
            if (power.is_zero()) break;
            acc += power;
        }
        return ainv * acc;
    }

    std::string str() const {
        if (coeff_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : coeff_) {
            if (!out.empty()) out += " + ";
            out += to_string(c);
            for (int i = 0; i < k_; ++i)
                if (m & (1u << i)) out += "*e" + std::to_string(i + 1);
        }
        return out;
    }

private:
    static void check_k(int k) {
        require(k >= 0 && k <= grassmann_generator_cap(), errc::generator_cap_exceeded,
                "generator count " + std::to_string(k) + " exceeds cap " +
                    std::to_string(grassmann_generator_cap()));
    }

    // Sign of sorting e_A * e_B into ascending order: (-1)^t with t the
    // number of pairs i in A, j in B with i > j.
    static int merge_sign(std::uint32_t a, std::uint32_t b) {
        int t = 0;
        for (std::uint32_t mb = b; mb; mb &= mb - 1) {
            int j = std::countr_zero(mb);
            t += std::popcount(a >> (j + 1));
        }
        return (t & 1) ? -1 : 1;
    }

    int k_;
    std::map<std::uint32_t, Rat> coeff_;
};

} // namespace superalg

#endif
