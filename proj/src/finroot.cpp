#include "earoot/finroot.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "earoot/union_find.hpp"

namespace earoot {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::BC: return "BC";
    }
    throw std::logic_error("unknown family");
}

FiniteType FiniteType::parse(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string fam = s.substr(0, i);
    if (i == 0 || i == s.size()) throw std::invalid_argument("bad finite type: " + s);
    int rank = std::stoi(s.substr(i));
    Family f;
    if (fam == "A") f = Family::A;
    else if (fam == "B") f = Family::B;
    else if (fam == "C") f = Family::C;
    else if (fam == "D") f = Family::D;
    else if (fam == "E") f = Family::E;
    else if (fam == "F") f = Family::F;
    else if (fam == "G") f = Family::G;
    else if (fam == "BC") f = Family::BC;
    else throw std::invalid_argument("bad finite type family: " + s);
    FiniteType t{f, rank};
    t.validate();
    return t;
}

void FiniteType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
        case Family::BC: ok = rank >= 1; break;
    }
    if (!ok) throw std::invalid_argument("illegal rank for family: " + str());
}

bool FiniteType::has_long_class() const {
    switch (family) {
        case Family::B:
        case Family::C:
        case Family::F:
        case Family::G: return true;
        case Family::BC: return rank >= 2;
        default: return false;
    }
}

namespace {

// Cartan matrix and squared-length halves d_i = (a_i,a_i)/2 for the
// reduced simple system of a type (BC uses the B system; BC1 uses A1).
struct SimpleData {
    IntMat cartan;       // a_ij = 2(a_i,a_j)/(a_j,a_j)
    std::vector<Int> d;  // half squared lengths, short = 1
};

SimpleData simple_data(FiniteType t) {
    const int l = t.rank;
    SimpleData sd;
    sd.cartan = IntMat::Zero(l, l);
    for (int i = 0; i < l; ++i) sd.cartan(i, i) = 2;
    sd.d.assign(size_t(l), 1);
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) {
            sd.cartan(i, i + 1) = -1;
            sd.cartan(i + 1, i) = -1;
        }
    };
    Family fam = t.family;
    if (fam == Family::BC) fam = (l == 1) ? Family::A : Family::B;
    switch (fam) {
        case Family::A:
            chain(0, l - 1);
            break;
        case Family::B:
            chain(0, l - 1);
            sd.cartan(l - 2, l - 1) = -2;  // last node short
            for (int i = 0; i + 1 < l; ++i) sd.d[size_t(i)] = 2;
            break;
        case Family::C:
            chain(0, l - 1);
            sd.cartan(l - 1, l - 2) = -2;  // last node long
            sd.d[size_t(l - 1)] = 2;
            break;
        case Family::D:
            chain(0, l - 2);
            sd.cartan(l - 3, l - 1) = -1;
            sd.cartan(l - 1, l - 3) = -1;
            sd.cartan(l - 2, l - 1) = 0;
            sd.cartan(l - 1, l - 2) = 0;
            break;
        case Family::E: {
            // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 on node 4.
            auto link = [&](int a, int b) {
                sd.cartan(a - 1, b - 1) = -1;
                sd.cartan(b - 1, a - 1) = -1;
            };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (l >= 7) link(6, 7);
            if (l == 8) link(7, 8);
            link(2, 4);
            break;
        }
        case Family::F:
            chain(0, 3);
            sd.cartan(1, 2) = -2;  // nodes 1,2 long; 3,4 short
            sd.d[0] = sd.d[1] = 2;
            break;
        case Family::G:
            sd.cartan(0, 1) = -1;
            sd.cartan(1, 0) = -3;
            sd.d[1] = 3;  // second node long
            break;
        default:
            throw std::logic_error("simple_data: unreachable");
    }
    return sd;
}

Int expected_count(FiniteType t) {
    const Int l = t.rank;
    switch (t.family) {
        case Family::A: return l * (l + 1);
        case Family::B:
        case Family::C: return 2 * l * l;
        case Family::D: return 2 * l * (l - 1);
        case Family::E: return t.rank == 6 ? 72 : (t.rank == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
        case Family::BC: return 2 * l * (l + 1);
    }
    throw std::logic_error("expected_count: unreachable");
}

}  // namespace

FiniteRootSystem FiniteRootSystem::build(FiniteType t) {
    t.validate();
    FiniteRootSystem rs;
    rs.type_ = t;
    const int l = t.rank;
    SimpleData sd = simple_data(t);
    rs.cartan_ = sd.cartan;
    rs.gram_ = QMat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            rs.gram_(i, j) = Rat(sd.cartan(i, j) * sd.d[size_t(j)]);

    // Orbit of the simple roots under the simple reflections.
    std::set<IntVec, LexLess> orbit;
    std::vector<IntVec> frontier;
    for (int i = 0; i < l; ++i) {
        IntVec e = IntVec::Zero(l);
        e[i] = 1;
        orbit.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& b : frontier) {
            for (int i = 0; i < l; ++i) {
                Int c = 0;
                for (int j = 0; j < l; ++j) c += b[j] * sd.cartan(j, i);
                IntVec r = b;
                r[i] -= c;
                if (orbit.insert(r).second) next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    // Orbit of simples covers the whole reduced system; add negatives
    // (reflections already produce them, this is belt and braces).
    std::vector<IntVec> reduced(orbit.begin(), orbit.end());
    for (const IntVec& b : reduced) orbit.insert(IntVec(-b));
    reduced.assign(orbit.begin(), orbit.end());

    for (const IntVec& b : reduced) rs.roots_.push_back(b);
    if (t.family == Family::BC) {
        for (const IntVec& b : reduced) {
            QVec qb = to_rat(b);
            Rat n2(0);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) n2 += qb[i] * rs.gram_(i, j) * qb[j];
            if (n2 == Rat(2)) rs.roots_.push_back(IntVec(2 * b));
        }
        std::sort(rs.roots_.begin(), rs.roots_.end(),
                  [](const IntVec& a, const IntVec& b) { return LexLess{}(a, b); });
    }

    for (const IntVec& b : rs.roots_) {
        Rat n2 = rs.norm2(b);
        LengthClass cls;
        if (t.simply_laced()) {
            cls = LengthClass::Short;
        } else if (n2 == Rat(2)) {
            cls = LengthClass::Short;
        } else if (n2 == Rat(8) && t.family == Family::BC) {
            cls = LengthClass::ExtraLong;
        } else {
            cls = LengthClass::Long;
        }
        rs.class_of_.emplace(b, cls);
    }

    if (Int(rs.roots_.size()) != expected_count(t))
        throw std::logic_error("finite root generation: count mismatch for " + t.str());
    return rs;
}

bool FiniteRootSystem::contains(const IntVec& v) const {
    return class_of_.count(v) > 0;
}

LengthClass FiniteRootSystem::class_of(const IntVec& v) const {
    auto it = class_of_.find(v);
    if (it == class_of_.end())
        throw std::invalid_argument("class_of: not a root of " + type_.str());
    return it->second;
}

std::vector<IntVec> FiniteRootSystem::roots_in_class(LengthClass c) const {
    std::vector<IntVec> out;
    for (const auto& [r, cls] : class_of_)
        if (cls == c) out.push_back(r);
    return out;
}

Rat FiniteRootSystem::inner(const IntVec& a, const IntVec& b) const {
    Rat r(0);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            r += Rat(a[i]) * gram_(i, j) * Rat(b[j]);
    return r;
}

IntVec FiniteRootSystem::reflect(const IntVec& a, const IntVec& b) const {
    Rat c = Rat(2) * inner(b, a) / inner(a, a);
    if (!c.is_integer()) throw std::runtime_error("reflect: non-integral pairing");
    IntVec r = b;
    r -= c.as_integer() * a;
    return r;
}

RootString root_string(const std::function<bool(const QVec&)>& member,
                       const std::function<Rat(const QVec&, const QVec&)>& inner,
                       const QVec& alpha, const QVec& beta, Int window) {
    Rat aa = inner(alpha, alpha);
    if (aa.is_zero()) throw std::invalid_argument("root_string: isotropic direction");
    std::vector<bool> in(size_t(2 * window + 1), false);
    for (Int n = -window; n <= window; ++n) {
        QVec v = beta + Rat(n) * alpha;
        in[size_t(n + window)] = member(v);
    }
    if (!in[size_t(window)])
        throw std::invalid_argument("root_string: beta is not a root");
    Int d = 0, u = 0;
    while (d < window && in[size_t(window - d - 1)]) ++d;
    while (u < window && in[size_t(window + u + 1)]) ++u;
    if (d == window || u == window) {
        // chain touches the enumeration boundary: cannot certify it ends
        throw std::runtime_error("string anomaly");
    }
    for (Int n = -window; n <= window; ++n) {
        bool in_run = (n >= -d && n <= u);
        if (in[size_t(n + window)] != in_run) throw std::runtime_error("string anomaly");
    }
    Rat target = Rat(2) * inner(alpha, beta) / aa;
    if (Rat(d - u) != target) throw std::runtime_error("string formula violation");
    return RootString{d, u};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

using QSet = std::set<QVec, VecLexLess<Rat>>;

bool lex_positive(const QVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return v[i].sign() > 0;
    }
    return false;
}

// permutation pi with cat(pi(i),pi(j)) == c(i,j), lexicographically first
std::optional<std::vector<int>> match_cartan(const IntMat& c, const IntMat& cat) {
    const int n = int(c.rows());
    std::vector<int> perm(size_t(n), -1);
    std::vector<bool> used(size_t(n), false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int p = 0; p < n; ++p) {
            if (used[size_t(p)]) continue;
            bool ok = cat(p, p) == c(i, i);
            for (int j = 0; j < i && ok; ++j) {
                if (cat(p, perm[size_t(j)]) != c(i, j)) ok = false;
                if (ok && cat(perm[size_t(j)], p) != c(j, i)) ok = false;
            }
            if (!ok) continue;
            perm[size_t(i)] = p;
            used[size_t(p)] = true;
            if (rec(i + 1)) return true;
            perm[size_t(i)] = -1;
            used[size_t(p)] = false;
        }
        return false;
    };
    if (rec(0)) return perm;
    return std::nullopt;
}

std::vector<FiniteType> candidates(int rank) {
    std::vector<FiniteType> out;
    out.push_back({Family::A, rank});
    if (rank >= 3) out.push_back({Family::D, rank});
    if (rank >= 6 && rank <= 8) out.push_back({Family::E, rank});
    if (rank >= 2) out.push_back({Family::B, rank});
    if (rank >= 2) out.push_back({Family::C, rank});
    if (rank == 4) out.push_back({Family::F, rank});
    if (rank == 2) out.push_back({Family::G, rank});
    return out;
}

}  // namespace

std::vector<ClassifiedComponent> classify(const std::vector<QVec>& vectors,
                                          const QMat& gram) {
    auto inner = [&](const QVec& a, const QVec& b) -> Rat {
        Rat r(0);
        for (Eigen::Index i = 0; i < gram.rows(); ++i)
            for (Eigen::Index j = 0; j < gram.cols(); ++j)
                if (!gram(i, j).is_zero()) r += a[i] * gram(i, j) * b[j];
        return r;
    };

    QSet all;
    for (const QVec& v : vectors) all.insert(v);
    std::vector<QVec> vs(all.begin(), all.end());
    const size_t n = vs.size();
    if (n == 0) return {};

    for (const QVec& v : vs) {
        if (inner(v, v).is_zero())
            throw std::runtime_error("not a root system: isotropic vector");
        if (!all.count(QVec(-v)))
            throw std::runtime_error("not a root system: negation closure fails");
    }
    for (const QVec& a : vs) {
        Rat aa = inner(a, a);
        for (const QVec& b : vs) {
            Rat c = Rat(2) * inner(b, a) / aa;
            if (!c.is_integer())
                throw std::runtime_error("not a root system: non-integral pairing");
            QVec refl = b - c * a;
            if (!all.count(refl))
                throw std::runtime_error("not a root system: reflection closure fails");
        }
    }

    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!inner(vs[i], vs[j]).is_zero()) uf.merge(i, j);

    std::map<size_t, std::vector<QVec>> comps;
    for (size_t i = 0; i < n; ++i) comps[uf.find(i)].push_back(vs[i]);

    std::vector<std::vector<QVec>> ordered;
    for (auto& [root, comp] : comps) ordered.push_back(std::move(comp));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  return VecLexLess<Rat>{}(a.front(), b.front());
              });

    std::vector<ClassifiedComponent> result;
    for (auto& comp : ordered) {
        QSet comp_set(comp.begin(), comp.end());
        // BC detection: v and 2v both present
        std::vector<QVec> reduced, extras;
        for (const QVec& v : comp) {
            QVec half = v * Rat(1, 2);
            if (comp_set.count(half)) extras.push_back(v);
            else reduced.push_back(v);
        }
        bool is_bc = !extras.empty();

        QSet red_set(reduced.begin(), reduced.end());
        std::vector<QVec> positives;
        for (const QVec& v : reduced)
            if (lex_positive(v)) positives.push_back(v);
        QSet pos_set(positives.begin(), positives.end());
        std::vector<QVec> simples;
        for (const QVec& p : positives) {
            bool is_sum = false;
            for (const QVec& q : positives) {
                if (pos_set.count(QVec(p - q))) { is_sum = true; break; }
            }
            if (!is_sum) simples.push_back(p);
        }
        const int rank = int(simples.size());
        if (rank == 0) throw std::runtime_error("not a root system: empty simple system");

        IntMat cart(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                Rat c = Rat(2) * inner(simples[size_t(i)], simples[size_t(j)]) /
                        inner(simples[size_t(j)], simples[size_t(j)]);
                if (!c.is_integer())
                    throw std::runtime_error("not a root system: non-integral Cartan entry");
                cart(i, j) = c.as_integer();
                if (i != j && cart(i, j) > 0)
                    throw std::runtime_error("not a root system: positive Cartan entry");
            }

        std::optional<FiniteType> matched;
        std::vector<int> perm;
        for (FiniteType cand : candidates(rank)) {
            SimpleData sd = simple_data(cand);
            if (auto p = match_cartan(cart, sd.cartan)) {
                matched = cand;
                perm = *p;
                break;
            }
        }
        if (!matched) throw std::runtime_error("not a root system: no catalog match");
        if (Int(reduced.size()) != expected_count(*matched))
            throw std::runtime_error("not a root system: root count mismatch for " +
                                     matched->str());

        FiniteType final_type = *matched;
        if (is_bc) {
            if (!(matched->family == Family::B ||
                  (matched->family == Family::A && rank == 1)))
                throw std::runtime_error("not a root system: doubled roots outside BC shape");
            final_type = FiniteType{Family::BC, rank};
            // extras must be exactly the doubles of the short roots
            Rat short2 = inner(simples.front(), simples.front());
            for (const QVec& s : simples) {
                Rat n2 = inner(s, s);
                if (n2 < short2) short2 = n2;
            }
            QSet extra_set(extras.begin(), extras.end());
            size_t expect = 0;
            for (const QVec& v : reduced) {
                if (inner(v, v) == short2) {
                    ++expect;
                    if (!extra_set.count(QVec(v * Rat(2))))
                        throw std::runtime_error(
                            "not a root system: missing doubled short root");
                }
            }
            if (expect != extras.size())
                throw std::runtime_error("not a root system: stray doubled roots");
        }

        // order the simple system by catalog node order
        std::vector<QVec> simple_ordered{size_t(rank), QVec{}};
        for (int i = 0; i < rank; ++i)
            simple_ordered[size_t(perm[size_t(i)])] = simples[size_t(i)];

        std::sort(comp.begin(), comp.end(), [](const QVec& a, const QVec& b) {
            return VecLexLess<Rat>{}(a, b);
        });
        result.push_back(ClassifiedComponent{final_type, comp, simple_ordered});
    }
    return result;
}

}  // namespace earoot
