#include "galrep/gl2.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace galrep {

int two_adic_valuation(int m) {
    int r = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++r;
    }
    return r;
}

std::vector<uint16_t> subgroup_S(int ell, int level) {
    int r = two_adic_valuation(ell - 1);
    if (level < 0 || level > r) throw std::domain_error("subgroup_S: level exceeds ord_2(ell-1)");
    std::set<int> s;
    for (int x = 1; x < ell; ++x) {
        long v = 1;
        long e = 1 << level;
        for (long k = 0; k < e; ++k) v = (v * x) % ell;
        s.insert(static_cast<int>(v));
    }
    return std::vector<uint16_t>(s.begin(), s.end());
}

namespace {

inline uint8_t mulm(int x, int y, int ell) { return static_cast<uint8_t>((x * y) % ell); }

Mat2 mat_mul(const Mat2& x, const Mat2& y, int ell) {
    return Mat2{static_cast<uint8_t>((x.a * y.a + x.b * y.c) % ell),
                static_cast<uint8_t>((x.a * y.b + x.b * y.d) % ell),
                static_cast<uint8_t>((x.c * y.a + x.d * y.c) % ell),
                static_cast<uint8_t>((x.c * y.b + x.d * y.d) % ell)};
}

Mat2 mat_scale(int s, const Mat2& m, int ell) {
    return Mat2{mulm(s, m.a, ell), mulm(s, m.b, ell), mulm(s, m.c, ell), mulm(s, m.d, ell)};
}

int mat_det(const Mat2& m, int ell) {
    int d = (m.a * m.d - m.b * m.c) % ell;
    if (d < 0) d += ell;
    return d;
}

int mat_trace(const Mat2& m, int ell) { return (m.a + m.d) % ell; }

int inv_mod(int a, int ell) {
    for (int x = 1; x < ell; ++x)
        if ((a * x) % ell == 1) return x;
    throw std::domain_error("inv_mod: not invertible");
}

Mat2 mat_inv(const Mat2& m, int ell) {
    int di = inv_mod(mat_det(m, ell), ell);
    auto nrm = [&](int v) {
        v %= ell;
        if (v < 0) v += ell;
        return static_cast<uint8_t>(v);
    };
    return Mat2{nrm(di * m.d), nrm(-di * m.b), nrm(-di * m.c), nrm(di * m.a)};
}

bool lex_less(const Mat2& x, const Mat2& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

}  // namespace

int GL2Quot::pack(const Mat2& m) const {
    return ((m.a * ell_ + m.b) * ell_ + m.c) * ell_ + m.d;
}

GL2Quot::GL2Quot(int ell, int level) : GL2Quot(ell, subgroup_S(ell, level), level) {}

GL2Quot::GL2Quot(int ell, std::vector<uint16_t> S, int level_label)
    : ell_(ell), level_(level_label), r_(two_adic_valuation(ell - 1)), S_(std::move(S)) {
    if (ell < 3 || ell % 2 == 0) throw std::domain_error("GL2Quot: ell must be an odd prime");
    if (S_.empty() || S_[0] != 1) throw std::domain_error("GL2Quot: S must contain 1");
    for (uint16_t s : S_) {
        uint16_t s2 = static_cast<uint16_t>((s * s) % ell);
        if (std::find(S2_.begin(), S2_.end(), s2) == S2_.end()) S2_.push_back(s2);
    }
    std::sort(S2_.begin(), S2_.end());
    build_elements();
    build_points();
    build_classes();
}

void GL2Quot::build_elements() {
    int n4 = ell_ * ell_ * ell_ * ell_;
    coset_id_.assign(static_cast<size_t>(n4), -1);
    Mat2 m;
    for (int a = 0; a < ell_; ++a)
        for (int b = 0; b < ell_; ++b)
            for (int c = 0; c < ell_; ++c)
                for (int d = 0; d < ell_; ++d) {
                    m = Mat2{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                             static_cast<uint8_t>(c), static_cast<uint8_t>(d)};
                    if (mat_det(m, ell_) == 0) continue;
                    if (coset_id_[static_cast<size_t>(pack(m))] >= 0) continue;
                    int id = static_cast<int>(elems_.size());
                    elems_.push_back(m);  // first-seen member is the lex-min coset rep
                    for (uint16_t s : S_)
                        coset_id_[static_cast<size_t>(pack(mat_scale(s, m, ell_)))] = id;
                }
}

void GL2Quot::build_points() {
    orbit_id_.assign(static_cast<size_t>(ell_ * ell_), -1);
    for (int x = 0; x < ell_; ++x)
        for (int y = 0; y < ell_; ++y) {
            if (x == 0 && y == 0) continue;
            if (orbit_id_[static_cast<size_t>(x * ell_ + y)] >= 0) continue;
            int id = static_cast<int>(orbits_.size());
            orbits_.emplace_back(static_cast<uint8_t>(x), static_cast<uint8_t>(y));
            for (uint16_t s : S_)
                orbit_id_[static_cast<size_t>(mulm(s, x, ell_) * ell_ + mulm(s, y, ell_))] = id;
        }
}

int GL2Quot::id_of(const Mat2& m) const {
    int id = coset_id_[static_cast<size_t>(pack(m))];
    if (id < 0) throw std::domain_error("GL2Quot: singular matrix");
    return id;
}

int GL2Quot::mul(int x, int y) const {
    return coset_id_[static_cast<size_t>(
        pack(mat_mul(elems_[static_cast<size_t>(x)], elems_[static_cast<size_t>(y)], ell_)))];
}

int GL2Quot::inverse(int x) const {
    return coset_id_[static_cast<size_t>(pack(mat_inv(elems_[static_cast<size_t>(x)], ell_)))];
}

int GL2Quot::point_of(uint8_t x, uint8_t y) const {
    int id = orbit_id_[static_cast<size_t>(x * ell_ + y)];
    if (id < 0) throw std::domain_error("GL2Quot: zero vector has no orbit");
    return id;
}

int GL2Quot::act(int g, int w) const {
    const Mat2& m = elems_[static_cast<size_t>(g)];
    auto [x, y] = orbits_[static_cast<size_t>(w)];
    uint8_t nx = static_cast<uint8_t>((m.a * x + m.b * y) % ell_);
    uint8_t ny = static_cast<uint8_t>((m.c * x + m.d * y) % ell_);
    return orbit_id_[static_cast<size_t>(nx * ell_ + ny)];
}

uint16_t GL2Quot::trace_of(int id) const {
    return static_cast<uint16_t>(mat_trace(elems_[static_cast<size_t>(id)], ell_));
}

uint16_t GL2Quot::det_of(int id) const {
    return static_cast<uint16_t>(mat_det(elems_[static_cast<size_t>(id)], ell_));
}

uint16_t GL2Quot::trace_class_rep(uint16_t t) const {
    int best = ell_;
    for (uint16_t s : S_) best = std::min(best, (s * t) % ell_);
    return static_cast<uint16_t>(best);
}

uint16_t GL2Quot::det_class_rep(uint16_t d) const {
    int best = ell_;
    for (uint16_t s : S2_) best = std::min(best, (s * d) % ell_);
    return static_cast<uint16_t>(best);
}

void GL2Quot::build_classes() {
    // conjugating by a generating set reaches the whole class
    int g = 2;
    while (true) {
        // primitive root mod ell
        bool ok = true;
        int v = 1;
        for (int k = 1; k < ell_ - 1; ++k) {
            v = (v * g) % ell_;
            if (v == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        ++g;
    }
    std::vector<int> gens;
    gens.push_back(id_of(Mat2{static_cast<uint8_t>(g), 0, 0, 1}));
    gens.push_back(id_of(Mat2{1, 1, 0, 1}));
    gens.push_back(id_of(Mat2{0, 1, 1, 0}));
    std::vector<int> gens_inv;
    for (int x : gens) gens_inv.push_back(inverse(x));

    class_of_.assign(elems_.size(), -1);
    for (int e = 0; e < order(); ++e) {
        if (class_of_[static_cast<size_t>(e)] >= 0) continue;
        int cid = static_cast<int>(classes_.size());
        ClassInfo info;
        std::queue<int> bfs;
        bfs.push(e);
        class_of_[static_cast<size_t>(e)] = cid;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            info.members.push_back(x);
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = mul(gens_inv[k], mul(x, gens[k]));
                if (class_of_[static_cast<size_t>(y)] < 0) {
                    class_of_[static_cast<size_t>(y)] = cid;
                    bfs.push(y);
                }
            }
        }
        std::sort(info.members.begin(), info.members.end());
        info.rep = info.members.front();
        info.trace_cls = trace_class_rep(trace_of(info.rep));
        info.det_cls = det_class_rep(det_of(info.rep));
        classes_.push_back(std::move(info));
    }
}

std::vector<int> GL2Quot::cyclic_candidates() const {
    std::vector<int> out;
    int n = num_points();
    int base = base_point();
    for (int e = 0; e < order(); ++e) {
        int w = base;
        int steps = 0;
        do {
            w = act(e, w);
            ++steps;
        } while (w != base && steps <= n);
        if (steps == n) out.push_back(e);
    }
    return out;
}

std::vector<int> GL2Quot::commutator_subgroup() const {
    std::set<int> gens;
    for (int x = 0; x < order(); ++x)
        for (int y = 0; y < order(); ++y)
            gens.insert(mul(mul(x, y), mul(inverse(x), inverse(y))));
    // closure
    std::set<int> grp(gens.begin(), gens.end());
    std::queue<int> bfs;
    for (int x : grp) bfs.push(x);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : gens) {
            int z = mul(x, y);
            if (grp.insert(z).second) bfs.push(z);
        }
    }
    return std::vector<int>(grp.begin(), grp.end());
}

std::string factored_minpoly(const GL2Class& c) {
    int ell = c.ell;
    auto modl = [&](int v) {
        v %= ell;
        if (v < 0) v += ell;
        return v;
    };
    std::ostringstream os;
    if (c.kind == ClassKind::Scalar) {
        os << "(x-" << modl(c.trace * inv_mod(2, ell)) << ")";
        return os.str();
    }
    if (c.kind == ClassKind::NonSemisimple) {
        os << "(x-" << modl(c.trace * inv_mod(2, ell)) << ")^2";
        return os.str();
    }
    if (c.kind == ClassKind::SplitSemisimple) {
        int disc = modl(c.trace * c.trace - 4 * c.det);
        int s = -1;
        for (int x = 0; x < ell; ++x)
            if (modl(x * x) == disc) {
                s = x;
                break;
            }
        if (s < 0) throw std::logic_error("factored_minpoly: split class with non-square disc");
        int inv2 = inv_mod(2, ell);
        int lam = modl((c.trace + s) * inv2);
        int mu = modl((c.trace - s) * inv2);
        if (lam < mu) std::swap(lam, mu);  // larger root printed first, as in the tables
        os << "(x-" << lam << ")(x-" << mu << ")";
        return os.str();
    }
    // irreducible x^2 - t x + n with canonical coefficients
    int b = modl(-c.trace);
    int cc = modl(c.det);
    os << "x^2";
    if (b != 0) {
        os << " + ";
        if (b != 1) os << b;
        os << "x";
    }
    os << " + " << cc;
    return os.str();
}

GL2Class lift_class_by_det(const GL2Quot& G, int class_id, uint16_t d) {
    int ell = G.ell();
    if (G.level() != G.r())
        throw std::domain_error("lift_class_by_det: lift defined at the top level r only");
    const auto& S = G.S();
    const Mat2 rep = G.elem(G.cls(class_id).rep);
    int det0 = mat_det(rep, ell);
    int u = (d * inv_mod(det0, ell)) % ell;
    if (std::find(S.begin(), S.end(), static_cast<uint16_t>(u)) == S.end())
        throw std::domain_error("lift_class_by_det: determinant class mismatch");
    // square root inside the odd-order group S: u^{(|S|+1)/2}
    long e = (static_cast<long>(S.size()) + 1) / 2;
    long s = 1;
    for (long k = 0; k < e; ++k) s = (s * u) % ell;
    Mat2 M = mat_scale(static_cast<int>(s), rep, ell);
    GL2Class out;
    out.ell = ell;
    out.trace = static_cast<uint16_t>(mat_trace(M, ell));
    out.det = static_cast<uint16_t>(d % ell);
    int disc = ((out.trace * out.trace - 4 * out.det) % ell + ell) % ell;
    if (disc == 0) {
        bool scalar = (M.b == 0 && M.c == 0 && M.a == M.d);
        out.kind = scalar ? ClassKind::Scalar : ClassKind::NonSemisimple;
    } else {
        bool square = false;
        for (int x = 1; x < ell && !square; ++x)
            if ((x * x) % ell == disc) square = true;
        out.kind = square ? ClassKind::SplitSemisimple : ClassKind::NonsplitSemisimple;
    }
    return out;
}

int conjugation_fixed_points(int ell, int r, uint16_t d) {
    if (d != static_cast<uint16_t>(ell - 1))
        throw std::domain_error("conjugation_fixed_points: determinant must be -1");
    GL2Quot G(ell, r);
    int c = G.id_of(Mat2{1, 0, 0, static_cast<uint8_t>(ell - 1)});
    int count = 0;
    for (int w = 0; w < G.num_points(); ++w)
        if (G.act(c, w) == w) ++count;
    return count;
}

BorelIndex2 index2_subgroups_of_borel(int ell, const std::vector<uint16_t>& S,
                                      const std::vector<uint16_t>& Sp) {
    if (S.size() <= 1 || Sp.size() <= 1)
        throw std::domain_error("index2_subgroups_of_borel: S and S' must be nontrivial");
    if (S.size() % 2 != 0 || Sp.size() % 2 != 0)
        throw std::domain_error(
            "index2_subgroups_of_borel: S and S' must have even order (odd-order groups "
            "admit no index-2 subgroups on their side)");
    BorelIndex2 out;
    std::map<int, int> index;  // packed -> element index
    auto pk = [&](const Mat2& m) { return ((m.a * ell + m.b) * ell + m.c) * ell + m.d; };
    for (uint16_t s : S)
        for (uint16_t sp : Sp)
            for (int x = 0; x < ell; ++x) {
                Mat2 m{static_cast<uint8_t>(s), static_cast<uint8_t>(x), 0,
                       static_cast<uint8_t>(sp)};
                index[pk(m)] = static_cast<int>(out.elements.size());
                out.elements.push_back(m);
            }
    int N = static_cast<int>(out.elements.size());
    auto mulB = [&](int i, int j) {
        return index.at(pk(mat_mul(out.elements[static_cast<size_t>(i)],
                                   out.elements[static_cast<size_t>(j)], ell)));
    };
    // subgroup generated by a set, brute-force closure
    auto closure = [&](std::vector<int> gens) {
        std::set<int> grp(gens.begin(), gens.end());
        grp.insert(index.at(pk(Mat2{1, 0, 0, 1})));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(grp.begin(), grp.end());
            for (int x : cur)
                for (int y : cur)
                    if (grp.insert(mulB(x, y)).second) grew = true;
        }
        return std::vector<int>(grp.begin(), grp.end());
    };
    // squares generate the subgroup below which every index-2 subgroup lives
    std::vector<int> sq;
    for (int i = 0; i < N; ++i) sq.push_back(mulB(i, i));
    std::vector<int> Q2 = closure(sq);
    std::set<int> q2set(Q2.begin(), Q2.end());
    // candidate index-2 subgroups: unions of Q2-cosets; enumerate subgroups of
    // the elementary abelian quotient B/Q2 of index 2 by brute force
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(static_cast<size_t>(N), -1);
    for (int i = 0; i < N; ++i) {
        if (coset_of[static_cast<size_t>(i)] >= 0) continue;
        int cid = static_cast<int>(cosets.size());
        std::vector<int> cs;
        for (int q : Q2) {
            int e = mulB(i, q);
            if (coset_of[static_cast<size_t>(e)] < 0) {
                coset_of[static_cast<size_t>(e)] = cid;
                cs.push_back(e);
            }
        }
        cosets.push_back(std::move(cs));
    }
    int ncos = static_cast<int>(cosets.size());
    // quotient multiplication on coset ids
    auto qmul = [&](int x, int y) {
        return coset_of[static_cast<size_t>(mulB(cosets[static_cast<size_t>(x)][0],
                                                 cosets[static_cast<size_t>(y)][0]))];
    };
    int qid = coset_of[static_cast<size_t>(index.at(pk(Mat2{1, 0, 0, 1}))) ];
    for (unsigned mask = 1; mask < (1u << ncos); ++mask) {
        if (!(mask & (1u << qid))) continue;
        if (__builtin_popcount(mask) * 2 != ncos) continue;
        // closed under multiplication?
        bool closed = true;
        for (int x = 0; x < ncos && closed; ++x) {
            if (!(mask & (1u << x))) continue;
            for (int y = 0; y < ncos && closed; ++y) {
                if (!(mask & (1u << y))) continue;
                if (!(mask & (1u << qmul(x, y)))) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<int> sub;
        for (int x = 0; x < ncos; ++x)
            if (mask & (1u << x))
                for (int e : cosets[static_cast<size_t>(x)]) sub.push_back(e);
        std::sort(sub.begin(), sub.end());
        out.subgroups.push_back(std::move(sub));
    }
    return out;
}

std::vector<std::vector<int>> projection_fibers(const GL2Quot& upper) {
    int ell = upper.ell();
    if (upper.level() < 1) throw std::domain_error("projection_fibers: need level >= 1");
    std::vector<uint16_t> Sdown = subgroup_S(ell, upper.level() - 1);
    std::map<int, std::vector<int>> by_lower;
    for (int w = 0; w < upper.num_points(); ++w) {
        auto [x, y] = upper.point(w);
        // canonical representative of the lower orbit
        int best = ell * ell;
        for (uint16_t s : Sdown) {
            int nx = (s * x) % ell, ny = (s * y) % ell;
            best = std::min(best, nx * ell + ny);
        }
        by_lower[best].push_back(w);
    }
    std::vector<std::vector<int>> fibers;
    fibers.reserve(by_lower.size());
    for (auto& [key, ws] : by_lower) fibers.push_back(std::move(ws));
    return fibers;
}

}  // namespace galrep
