#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "earoot/lattice.hpp"
#include "earoot/linalg.hpp"

namespace earoot {

enum class Family { A, B, C, D, E, F, G, BC };

std::string family_name(Family f);

/// An irreducible finite type X_l. Legal ranks: A >= 1, B/C >= 2,
/// D >= 3, E in {6,7,8}, F = 4, G = 2, BC >= 1.
struct FiniteType {
    Family family;
    int rank;

    std::string str() const { return family_name(family) + std::to_string(rank); }
    static FiniteType parse(const std::string& s);
    void validate() const;  // throws "illegal rank for family"
    bool simply_laced() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }
    /// Does the type carry a long-root class (B, C, F, G, BC with rank >= 2)?
    bool has_long_class() const;
    /// Does the type carry an extra-long class (BC)?
    bool has_extra_class() const { return family == Family::BC; }

    friend bool operator==(const FiniteType& a, const FiniteType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const FiniteType& a, const FiniteType& b) { return !(a == b); }
};

enum class LengthClass { Short, Long, ExtraLong };

/// A finite root system realized in simple-root coordinates: roots are
/// integer vectors, the Gram matrix comes from the Cartan matrix with
/// short roots normalized to squared length 2.
class FiniteRootSystem {
public:
    static FiniteRootSystem build(FiniteType t);

    const FiniteType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<IntVec>& roots() const { return roots_; }
    const QMat& gram() const { return gram_; }
    const IntMat& cartan() const { return cartan_; }

    bool contains(const IntVec& v) const;
    /// Length class of a root (throws if v is not a root).
    LengthClass class_of(const IntVec& v) const;
    std::vector<IntVec> roots_in_class(LengthClass c) const;

    Rat inner(const IntVec& a, const IntVec& b) const;
    Rat norm2(const IntVec& a) const { return inner(a, a); }

    /// Reflection r_a(b) = b - (2(b,a)/(a,a)) a in simple coordinates.
    IntVec reflect(const IntVec& a, const IntVec& b) const;

private:
    FiniteType type_{Family::A, 1};
    std::vector<IntVec> roots_;
    std::map<IntVec, LengthClass, LexLess> class_of_;
    QMat gram_;
    IntMat cartan_;
};

struct RootString {
    Int d = 0;
    Int u = 0;
};

/// Root string of beta through nonisotropic alpha against an exact
/// membership predicate (the predicate must accept 0, which every root
/// system contains). Enumerates {beta + n*alpha : |n| <= window}, checks
/// the chain is unbroken and stays inside the window, and checks
/// d - u = 2(alpha,beta)/(alpha,alpha) exactly.
///
/// Throws std::runtime_error("string anomaly") on a broken or
/// window-touching chain and ("string formula violation") when the
/// d - u identity fails; both signal invalid root data.
RootString root_string(const std::function<bool(const QVec&)>& member,
                       const std::function<Rat(const QVec&, const QVec&)>& inner,
                       const QVec& alpha, const QVec& beta, Int window = 8);

struct ClassifiedComponent {
    FiniteType type;
    std::vector<QVec> roots;          // the component, extras included
    std::vector<QVec> simple_system;  // catalog node order
};

/// Classify a finite set of nonisotropic rational vectors (closed under
/// negation) into orthogonality-connected components of known finite
/// type. D3 is reported as A3 and D2 as two A1 components; the presence
/// of both v and 2v marks a BC component. The rank-2 B/C coincidence is
/// canonicalized to B2. Throws std::runtime_error("not a root system")
/// when the set fails reflection closure or catalog matching.
std::vector<ClassifiedComponent> classify(const std::vector<QVec>& vectors,
                                          const QMat& gram);

}  // namespace earoot
