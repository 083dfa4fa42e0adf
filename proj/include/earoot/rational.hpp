#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace earoot {

using Int = std::int64_t;

/// Exact rational scalar over checked 64-bit integers.
///
/// All intermediate products go through 128-bit arithmetic and throw
/// std::overflow_error on narrowing failure instead of wrapping. The
/// computations in this library are desk scale (matrix ranks <= 10,
/// entries of magnitude a few dozen), so 64-bit components are ample;
/// the check turns a wrong answer into a loud one.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(n), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    Int as_integer() const {
        if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
        return num_;
    }

    Rat operator-() const { return Rat(raw(), -num_, den_); }

    Rat& operator+=(const Rat& o) {
        I128 n = I128(num_) * o.den_ + I128(o.num_) * den_;
        I128 d = I128(den_) * o.den_;
        assign(n, d);
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        assign(I128(num_) * o.num_, I128(den_) * o.den_);
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        assign(I128(num_) * o.den_, I128(den_) * o.num_);
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    using I128 = __int128;
    struct raw {};
    Rat(raw, Int n, Int d) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static Int narrow(I128 v) {
        if (v > I128(INT64_MAX) || v < I128(INT64_MIN))
            throw std::overflow_error("Rat: 64-bit overflow");
        return Int(v);
    }

    void assign(I128 n, I128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        I128 an = n < 0 ? -n : n;
        I128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = narrow(n);
        den_ = narrow(d);
    }

    static I128 gcd128(I128 a, I128 b) {
        while (b != 0) { I128 t = a % b; a = b; b = t; }
        return a;
    }

    Int num_;
    Int den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace earoot

namespace Eigen {
template <>
struct NumTraits<earoot::Rat> : GenericNumTraits<earoot::Rat> {
    typedef earoot::Rat Real;
    typedef earoot::Rat NonInteger;
    typedef earoot::Rat Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 6
    };
    static inline Real epsilon() { return earoot::Rat(0); }
    static inline Real dummy_precision() { return earoot::Rat(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
