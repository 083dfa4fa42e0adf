#include "earoot/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>

namespace earoot {

namespace {

// Polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division a = q*b + r, deg r < deg b; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

const std::vector<Rat>& Cyc::cyclotomic_polynomial(Int order) {
    static std::map<Int, Poly> cache;
    static std::recursive_mutex mtx;  // the Phi_m recursion reenters
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    if (order < 1) throw std::invalid_argument("Cyc: order must be >= 1");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(order + 1, Rat(0));
    num[0] = Rat(-1);
    num[order] = Rat(1);
    for (Int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        const Poly& phi_d = cyclotomic_polynomial(d);
        auto [q, r] = divmod(num, phi_d);
        if (!r.empty()) throw std::logic_error("Cyc: cyclotomic division not exact");
        num = q;
    }
    return cache.emplace(order, std::move(num)).first->second;
}

int Cyc::degree(Int order) {
    return int(cyclotomic_polynomial(order).size()) - 1;
}

void Cyc::reduce() {
    const Poly& phi = cyclotomic_polynomial(order_);
    auto [q, r] = divmod(coeffs_, phi);
    (void)q;
    r.resize(size_t(degree(order_)), Rat(0));
    coeffs_ = std::move(r);
}

Cyc Cyc::zeta_pow(Int order, Int k) {
    k %= order;
    if (k < 0) k += order;
    std::vector<Rat> c(size_t(k) + 1, Rat(0));
    c[size_t(k)] = Rat(1);
    return Cyc(order, std::move(c));
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& r) { return r.is_zero(); });
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rat Cyc::rational_part() const {
    if (!is_rational()) throw std::domain_error("Cyc: not rational: " + str());
    return coeffs_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    check_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    check_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    check_order(o);
    coeffs_ = mul(coeffs_, o.coeffs_);
    reduce();
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) {
    check_order(o);
    return *this *= o.inverse();
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    // Extended Euclid in Q[x]: s*coeffs + t*Phi = gcd = const.
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {Rat(1)};  // coefficients of coeffs_ in r0, r1
    while (true) {
        auto [q, r] = divmod(r0, r1);
        if (r.empty()) break;
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.size() != 1)
        throw std::logic_error("Cyc: element not invertible (Phi_m reducible factor?)");
    Rat lead = r1[0];
    for (auto& c : s1) c /= lead;
    return Cyc(order_, std::move(s1));
}

Cyc Cyc::conj() const {
    Cyc r = Cyc::zero(order_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        r += Cyc(order_, coeffs_[k]) * zeta_pow(order_, -Int(k));
    }
    return r;
}

std::string Cyc::str() const {
    if (is_rational()) return coeffs_[0].str();
    std::string s;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += coeffs_[k].str();
        if (k >= 1) s += "*z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace earoot
