#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "earoot/finroot.hpp"
#include "earoot/lattice.hpp"

namespace earoot {

/// A root of an extended affine root system presented over a finite
/// type: a finite part in simple-root coordinates (zero iff the root is
/// isotropic) plus an integer vector in the isotropic directions.
struct Root {
    IntVec finite;
    IntVec iso;

    bool is_isotropic() const { return finite.isZero(); }
    bool is_zero() const { return finite.isZero() && iso.isZero(); }
    friend Root operator+(const Root& a, const Root& b) {
        return Root{a.finite + b.finite, a.iso + b.iso};
    }
    friend Root operator-(const Root& a) { return Root{-a.finite, -a.iso}; }
    friend bool operator==(const Root& a, const Root& b) {
        return a.finite == b.finite && a.iso == b.iso;
    }
    std::string str() const;
};

/// Residue class of isotropic roots: all isotropic vectors congruent to
/// `residue` componentwise mod `modulus`. Isolation is constant on such
/// classes, which is what makes the isolation questions finite.
struct IsolatedClass {
    Int modulus = 2;
    IntVec residue;

    bool matches(const IntVec& v) const;
    friend bool operator==(const IsolatedClass& a, const IsolatedClass& b) {
        return a.modulus == b.modulus && a.residue == b.residue;
    }
};

struct IsoClassification {
    bool isolated = false;
    std::optional<Root> witness;  // nonisotropic, witness + delta in R
};

/// Finitely presented extended affine root system: a finite type, a
/// nullity, and the semilattices attached to the length classes. The
/// infinite set presented is
///
///   (S+S)  u  (shorts + S)  u  (longs + L)  u  (extralongs + E)
///
/// together with any adjoined isolated isotropic residue classes.
/// L exists exactly for the multi-length types, E exactly for BC; E may
/// be translated (zero coset not required).
class EarsPresentation {
public:
    EarsPresentation(FiniteType type, int nullity, Semilattice S,
                     std::optional<Semilattice> L = std::nullopt,
                     std::optional<Semilattice> E = std::nullopt,
                     std::vector<IsolatedClass> extra_isolated = {});

    const FiniteType& type() const { return type_; }
    int nullity() const { return nullity_; }
    const Semilattice& S() const { return S_; }
    const std::optional<Semilattice>& L() const { return L_; }
    const std::optional<Semilattice>& E() const { return E_; }
    const std::vector<IsolatedClass>& extra_isolated() const { return extra_isolated_; }
    const FiniteRootSystem& finite() const { return finite_; }

    const Semilattice& class_semilattice(LengthClass c) const;
    /// Masks of S+S (the isotropic residues of the structural part).
    const std::set<Mask>& isotropic_masks() const { return iso_masks_; }

    Eigen::Index dim() const { return Eigen::Index(type_.rank + nullity_); }
    /// Root embedded as a rational vector (finite coords, iso coords).
    QVec embed(const Root& x) const;
    RationalForm form() const;
    Rat inner(const Root& a, const Root& b) const;

    Root make_root(const IntVec& finite, const IntVec& iso) const;  // checks sizes
    Root zero_root() const;

private:
    FiniteType type_;
    int nullity_;
    Semilattice S_;
    std::optional<Semilattice> L_;
    std::optional<Semilattice> E_;
    std::vector<IsolatedClass> extra_isolated_;
    FiniteRootSystem finite_;
    std::set<Mask> iso_masks_;
};

bool ears_contains(const EarsPresentation& P, const Root& x);

/// Exact isolated/nonisolated decision for an isotropic root of R.
/// Membership of the candidate witnesses depends only on residues mod 2,
/// so the enumeration over length classes x S-cosets is complete.
IsoClassification classify_isotropic(const EarsPresentation& P, const Root& delta);

/// All window roots of the presentation: finite parts over the finite
/// system (or zero), isotropic parts in [-r, r]^nu. Excludes 0.
std::vector<Root> window_roots(const EarsPresentation& P, Int r);

struct AxiomFailure {
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    bool r1 = false, r2 = false, r3 = false, r4 = false;
    bool r5 = false, r6 = false, r7 = false;
    std::vector<AxiomFailure> failures;

    bool ears_ok() const { return r1 && r2 && r3 && r4; }
    bool tame() const { return r5; }
    bool indecomposable() const { return r6; }
    bool reduced() const { return r7; }
};

/// R1/R3 verified structurally from the presentation (plus a window
/// sweep), R2 by a rank computation, R4 by root strings over all window
/// pairs, R5 by exact isolation of every isotropic residue class, R6 by
/// classification of the finite quotient, R7 by 2x membership.
AxiomReport axioms_check(const EarsPresentation& P, Int window_r);

/// Presentation of R_t: the same structural data with the adjoined
/// isolated classes removed. Idempotent; the result satisfies R5.
EarsPresentation tame_core(const EarsPresentation& P);

// ---------------------------------------------------------------------------
// Decomposition of explicit root sets.
//
// Fixed-point root systems are discovered pointwise, so their structure
// data is not known a priori; they arrive here as explicit window sets.
// All claims about such sets are exact within the window box.
// ---------------------------------------------------------------------------

struct ExplicitRoots {
    std::vector<QVec> roots;     // nonzero vectors, finite block then iso block
    QMat gram;                   // radical = iso block
    Eigen::Index finite_dim = 0;
    Eigen::Index nu = 0;
};

struct DecomposedComponent {
    FiniteType type;
    std::vector<QVec> nonisotropic;
    std::vector<QVec> isotropic;       // attached: delta + alpha in set for alpha here
    std::vector<QVec> span_isotropic;  // isotropic roots in the Z-span of the component
    std::vector<QVec> simple_system;
};

struct DecomposeResult {
    std::vector<DecomposedComponent> components;
    std::vector<QVec> isolated;  // isotropic roots with no in-window witness
};

/// Lemma-style decomposition of an explicit set: orthogonality-connected
/// nonisotropic components, their attached nonisolated isotropic roots,
/// the span extension of each component, and the leftover isolated roots.
/// Validates negation closure and interior root strings first; throws
/// std::runtime_error("not an EARS") on violation.
DecomposeResult decompose(const ExplicitRoots& in);

}  // namespace earoot
