#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "earoot/rational.hpp"

namespace earoot {

/// Element of the m-th cyclotomic field Q(zeta_m), stored as a rational
/// polynomial in zeta of degree < deg Phi_m, reduced modulo the m-th
/// cyclotomic polynomial. Arithmetic is exact; inversion uses the
/// extended Euclidean algorithm in Q[x].
///
/// Elements of different orders do not mix; a computation fixes one m
/// (m = 1 and m = 2 both give plain rationals).
class Cyc {
public:
    Cyc() : order_(1), coeffs_(1, Rat(0)) {}
    explicit Cyc(Int n) : order_(1), coeffs_(1, Rat(n)) {}
    Cyc(Int order, Rat constant) : order_(order), coeffs_(degree(order), Rat(0)) {
        coeffs_[0] = constant;
    }
    Cyc(Int order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        reduce();
    }

    /// zeta_m^k
    static Cyc zeta_pow(Int order, Int k);
    static Cyc zero(Int order) { return Cyc(order, Rat(0)); }
    static Cyc one(Int order) { return Cyc(order, Rat(1)); }

    Int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // throws unless is_rational()

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend bool operator==(const Cyc& a, const Cyc& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyc conj() const;

    Cyc inverse() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Cyc& c);

    /// deg Phi_m (Euler phi of m).
    static int degree(Int order);
    /// Coefficients of Phi_m, lowest degree first, leading coefficient 1.
    static const std::vector<Rat>& cyclotomic_polynomial(Int order);

private:
    void check_order(const Cyc& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("Cyc: mixed cyclotomic orders");
    }
    void reduce();  // mod Phi_m, then trim to fixed length

    Int order_;
    std::vector<Rat> coeffs_;  // length deg Phi_m, index = power of zeta
};

inline Cyc abs(const Cyc& c) { return c; }  // Eigen pivot hook; exact pivoting is by is_zero

}  // namespace earoot

namespace Eigen {
template <>
struct NumTraits<earoot::Cyc> : GenericNumTraits<earoot::Cyc> {
    typedef earoot::Cyc Real;
    typedef earoot::Cyc NonInteger;
    typedef earoot::Cyc Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return earoot::Cyc(); }
    static inline Real dummy_precision() { return earoot::Cyc(); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
