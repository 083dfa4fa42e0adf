#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "earoot/linalg.hpp"
#include "earoot/rational.hpp"

namespace earoot {

/// A mod-2 coset of 2Z^nu inside Z^nu, packed as a bit mask.
/// Bit j (least significant first) is coordinate j+1; the serialized
/// bit-string form puts coordinate 1 in the leftmost character.
using Mask = std::uint64_t;

Mask mask_of(const IntVec& v);
std::string mask_to_string(Mask m, int nullity);
Mask mask_from_string(const std::string& s);

/// A semilattice of full rank in Z^nu, stored as the finite set of mod-2
/// cosets it covers. Every semilattice containing 0 is a union of cosets
/// of 2Z^nu, so this representation is faithful and makes membership,
/// sums and spans finite computations. With the zero coset present,
/// 0 in S, S = -S and S + 2S <= S hold automatically.
///
/// Translated semilattices (used for the extra-long root class of
/// non-reduced systems) reuse the representation with a flag that lifts
/// the zero-coset requirement.
class Semilattice {
public:
    Semilattice(int nullity, std::set<Mask> cosets, bool translated = false);

    /// All of Z^nu.
    static Semilattice full(int nullity);
    /// 2Z^nu (the zero coset only).
    static Semilattice two_lambda(int nullity);

    int nullity() const { return nullity_; }
    bool translated() const { return translated_; }
    const std::set<Mask>& cosets() const { return cosets_; }

    bool contains(const IntVec& v) const;
    bool contains_mask(Mask m) const { return cosets_.count(m) > 0; }

    /// Do the cosets form a subgroup of F_2^nu (i.e. is S an additive
    /// subgroup of Z^nu)?
    bool is_lattice() const;

    std::vector<std::string> to_strings() const;
    static Semilattice from_strings(const std::vector<std::string>& bits,
                                    bool translated = false);

    friend bool operator==(const Semilattice& a, const Semilattice& b) {
        return a.nullity_ == b.nullity_ && a.translated_ == b.translated_ &&
               a.cosets_ == b.cosets_;
    }

private:
    int nullity_;
    bool translated_;
    std::set<Mask> cosets_;
};

/// Pointwise sums {s + t mod 2}.
Semilattice semilattice_sum(const Semilattice& a, const Semilattice& b);

/// Smallest lattice (subgroup coset set) containing S. Idempotent.
Semilattice lattice_span(const Semilattice& s);

/// Enumerates the M^nu representatives {0..M-1}^nu exactly once each,
/// in odometer order (last coordinate fastest).
class CosetEnumerator {
public:
    CosetEnumerator(Int modulus, int rank);

    Int modulus() const { return modulus_; }
    int rank() const { return rank_; }
    Int count() const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        IntVec v = IntVec::Zero(rank_);
        while (true) {
            fn(static_cast<const IntVec&>(v));
            int i = rank_ - 1;
            for (; i >= 0; --i) {
                if (++v[i] < modulus_) break;
                v[i] = 0;
            }
            if (i < 0) break;
        }
    }

    std::vector<IntVec> all() const;

private:
    Int modulus_;
    int rank_;
};

/// A rational symmetric bilinear form with its radical split off: the
/// leading finite_rank coordinates carry the positive semidefinite part,
/// the trailing block (isotropic coordinates) is identically zero.
struct RationalForm {
    QMat gram;
    Eigen::Index finite_rank = 0;

    Eigen::Index dim() const { return gram.rows(); }

    Rat operator()(const QVec& a, const QVec& b) const;

    /// symmetric, radical block zero, and every principal minor of the
    /// finite block nonnegative (exact positive semidefiniteness test).
    void validate() const;
};

}  // namespace earoot
