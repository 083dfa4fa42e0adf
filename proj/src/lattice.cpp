#include "earoot/lattice.hpp"

#include <stdexcept>

namespace earoot {

Mask mask_of(const IntVec& v) {
    Mask m = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Int r = v[i] & 1;  // two's complement: works for negatives
        if (r) m |= Mask(1) << i;
    }
    return m;
}

std::string mask_to_string(Mask m, int nullity) {
    std::string s(size_t(nullity), '0');
    for (int j = 0; j < nullity; ++j)
        if (m & (Mask(1) << j)) s[size_t(j)] = '1';
    return s;
}

Mask mask_from_string(const std::string& s) {
    Mask m = 0;
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            m |= Mask(1) << j;
        else if (s[j] != '0')
            throw std::invalid_argument("semilattice coset string: expected 0/1, got '" +
                                        s + "'");
    }
    return m;
}

Semilattice::Semilattice(int nullity, std::set<Mask> cosets, bool translated)
    : nullity_(nullity), translated_(translated), cosets_(std::move(cosets)) {
    if (nullity < 0 || nullity > 62)
        throw std::invalid_argument("semilattice: nullity out of range");
    for (Mask m : cosets_)
        if (nullity < 64 && (m >> nullity) != 0)
            throw std::invalid_argument("semilattice: coset exceeds nullity");
    if (!translated_ && cosets_.count(0) == 0)
        throw std::invalid_argument("semilattice: zero coset missing");
    if (cosets_.empty())
        throw std::invalid_argument("semilattice: empty coset set");
}

Semilattice Semilattice::full(int nullity) {
    std::set<Mask> cs;
    for (Mask m = 0; m < (Mask(1) << nullity); ++m) cs.insert(m);
    return Semilattice(nullity, std::move(cs));
}

Semilattice Semilattice::two_lambda(int nullity) {
    return Semilattice(nullity, {Mask(0)});
}

bool Semilattice::contains(const IntVec& v) const {
    if (v.size() != nullity_)
        throw std::invalid_argument("semilattice_contains: rank mismatch");
    return contains_mask(mask_of(v));
}

bool Semilattice::is_lattice() const {
    for (Mask a : cosets_)
        for (Mask b : cosets_)
            if (cosets_.count(a ^ b) == 0) return false;
    return true;
}

std::vector<std::string> Semilattice::to_strings() const {
    std::vector<std::string> out;
    out.reserve(cosets_.size());
    for (Mask m : cosets_) out.push_back(mask_to_string(m, nullity_));
    return out;
}

Semilattice Semilattice::from_strings(const std::vector<std::string>& bits,
                                      bool translated) {
    if (bits.empty()) throw std::invalid_argument("semilattice: empty coset list");
    int nu = int(bits.front().size());
    std::set<Mask> cs;
    for (const auto& s : bits) {
        if (int(s.size()) != nu)
            throw std::invalid_argument("semilattice: mixed coset string lengths");
        cs.insert(mask_from_string(s));
    }
    return Semilattice(nu, std::move(cs), translated);
}

Semilattice semilattice_sum(const Semilattice& a, const Semilattice& b) {
    if (a.nullity() != b.nullity())
        throw std::invalid_argument("semilattice_sum: rank mismatch");
    std::set<Mask> cs;
    for (Mask x : a.cosets())
        for (Mask y : b.cosets()) cs.insert(x ^ y);
    return Semilattice(a.nullity(), std::move(cs),
                       a.translated() || b.translated());
}

Semilattice lattice_span(const Semilattice& s) {
    std::set<Mask> span = s.cosets();
    span.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> cur(span.begin(), span.end());
        for (Mask a : cur)
            for (Mask b : cur)
                if (span.insert(a ^ b).second) grew = true;
    }
    return Semilattice(s.nullity(), std::move(span));
}

CosetEnumerator::CosetEnumerator(Int modulus, int rank)
    : modulus_(modulus), rank_(rank) {
    if (modulus < 1) throw std::invalid_argument("coset enumerator: modulus < 1");
    if (rank < 0) throw std::invalid_argument("coset enumerator: negative rank");
}

Int CosetEnumerator::count() const {
    Int c = 1;
    for (int i = 0; i < rank_; ++i) c *= modulus_;
    return c;
}

std::vector<IntVec> CosetEnumerator::all() const {
    std::vector<IntVec> out;
    out.reserve(size_t(count()));
    for_each([&](const IntVec& v) { out.push_back(v); });
    return out;
}

Rat RationalForm::operator()(const QVec& a, const QVec& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw std::invalid_argument("rational form: rank mismatch");
    Rat r(0);
    for (Eigen::Index i = 0; i < finite_rank; ++i)
        for (Eigen::Index j = 0; j < finite_rank; ++j)
            r += a[i] * gram(i, j) * b[j];
    return r;
}

namespace {
// determinant of the principal submatrix indexed by idx
Rat principal_minor(const QMat& g, const std::vector<Eigen::Index>& idx) {
    QMat sub(Eigen::Index(idx.size()), Eigen::Index(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            sub(Eigen::Index(i), Eigen::Index(j)) = g(idx[i], idx[j]);
    return determinant(sub);
}
}  // namespace

void RationalForm::validate() const {
    if (gram.rows() != gram.cols())
        throw std::invalid_argument("rational form: gram not square");
    if (finite_rank < 0 || finite_rank > dim())
        throw std::invalid_argument("rational form: bad finite rank");
    for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index j = 0; j < dim(); ++j) {
            if (gram(i, j) != gram(j, i))
                throw std::invalid_argument("rational form: not symmetric");
            if ((i >= finite_rank || j >= finite_rank) && !gram(i, j).is_zero())
                throw std::invalid_argument("rational form: radical block not zero");
        }
    // Positive semidefiniteness needs every principal minor (not only the
    // leading ones) to be nonnegative; finite_rank <= 8 keeps this cheap.
    const Eigen::Index n = finite_rank;
    for (std::uint64_t subset = 1; subset < (std::uint64_t(1) << n); ++subset) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < n; ++i)
            if (subset & (std::uint64_t(1) << i)) idx.push_back(i);
        if (principal_minor(gram, idx).sign() < 0)
            throw std::invalid_argument("rational form: not positive semidefinite");
    }
}

}  // namespace earoot
