#include "galrep/resolvent.hpp"

#include "galrep/factor.hpp"
#include "galrep/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <mutex>
#include <thread>

namespace galrep {

uint64_t select_inert_prime(const Poly<ZRing>& F, uint64_t floor_val, uint64_t max_tries) {
    if (F.deg() < 2) throw std::domain_error("select_inert_prime: degree must be at least 2");
    uint64_t p = floor_val >= 3 ? floor_val - 1 : 2;
    for (uint64_t tries = 0; tries < max_tries; ++tries) {
        p = next_prime_u64(p);
        if (is_irreducible_mod(F, p)) return p;
    }
    throw std::runtime_error("select_inert_prime: search cap exceeded");
}

// ---- engine -------------------------------------------------------------------

ResolventEngine::ResolventEngine(int ell, int weight, int r, std::string form, Poly<ZRing> F)
    : ell_(ell), weight_(weight), r_(r), form_(std::move(form)), F_(std::move(F)) {
    G_ = std::make_unique<GL2Quot>(ell_, r_);
    n_ = F_.deg();
    if (n_ != G_->num_points())
        throw std::domain_error("ResolventEngine: deg F does not match |V_r|");
}

uint64_t ResolventEngine::choose_prime(uint64_t floor_val) const {
    return select_inert_prime(F_, floor_val);
}

Indexation ResolventEngine::make_indexation(int phi) const {
    Indexation idx;
    idx.phi = phi;
    idx.orbit_at.resize(static_cast<size_t>(n_));
    idx.index_of.assign(static_cast<size_t>(n_), -1);
    int w = G_->base_point();
    for (int j = 0; j < n_; ++j) {
        idx.orbit_at[static_cast<size_t>(j)] = w;
        idx.index_of[static_cast<size_t>(w)] = j;
        w = G_->act(phi, w);
    }
    return idx;
}

std::vector<Indexation> ResolventEngine::candidate_indexations(uint64_t p) const {
    (void)p;  // the candidate set is pure group data; p enters at the filter
    std::vector<int> phis = G_->cyclic_candidates();
    if (phis.empty()) throw std::runtime_error("candidate_indexations: no n-cycle elements");
    std::vector<Indexation> out;
    std::vector<std::pair<uint64_t, uint64_t>> seen;
    for (int phi : phis) {
        Indexation idx = make_indexation(phi);
        // hash the per-class multiset of index patterns j -> index(g * Phi^j base)
        uint64_t h1 = 1469598103934665603ull, h2 = 0x2b992ddfa23249d6ull;
        auto feed = [&](uint64_t v) {
            h1 = (h1 ^ v) * 1099511628211ull;
            h2 = (h2 + v) * 0x9e3779b97f4a7c15ull;
            h2 ^= h2 >> 29;
        };
        std::vector<std::vector<uint16_t>> pats;
        for (int ci = 0; ci < G_->num_classes(); ++ci) {
            const auto& C = G_->cls(ci);
            pats.clear();
            for (int g : C.members) {
                std::vector<uint16_t> pat(static_cast<size_t>(n_));
                for (int j = 0; j < n_; ++j)
                    pat[static_cast<size_t>(j)] = static_cast<uint16_t>(
                        idx.index_of[static_cast<size_t>(G_->act(g, idx.orbit_at[static_cast<size_t>(j)]))]);
                pats.push_back(std::move(pat));
            }
            std::sort(pats.begin(), pats.end());
            feed(static_cast<uint64_t>(ci) << 32 | static_cast<uint64_t>(pats.size()));
            for (const auto& pat : pats)
                for (uint16_t v : pat) feed(v);
        }
        bool dup = false;
        for (auto& s : seen)
            if (s.first == h1 && s.second == h2) {
                dup = true;
                break;
            }
        if (!dup) {
            seen.emplace_back(h1, h2);
            out.push_back(std::move(idx));
        }
    }
    return out;
}

std::vector<Indexation> ResolventEngine::filter_fiber_sums(const std::vector<Indexation>& cands,
                                                           uint64_t p) const {
    if (cands.empty()) return {};
    // bound for the coefficients of prod(x - z_f), |z_f| <= 2B
    BigInt B;
    {
        BigRat rb = cauchy_root_bound(F_);
        BigInt fl;
        mpz_fdiv_q(fl.raw(), rb.num().raw(), rb.den().raw());
        B = fl + BigInt(1);
    }
    int n_low = n_ / 2;
    BigInt bound = pow(BigInt(4) * B + BigInt(2), static_cast<unsigned long>(n_low));
    BigInt pb(static_cast<long>(p));
    int K = 1;
    {
        BigInt pK = pb;
        BigInt need = bound + bound + BigInt(1);
        while (pK <= need) {
            pK *= pb;
            ++K;
        }
    }
    UnramExt E(p, K, F_);
    const auto& roots = E.roots_cycle();
    const PolyQuotCtx& ctx = E.ctx();
    auto fibers = projection_fibers(*G_);

    std::vector<Indexation> out;
    for (const auto& idx : cands) {
        std::vector<PolyQuotCtx::Elem> pc{ctx.one()};
        for (const auto& fib : fibers) {
            PolyQuotCtx::Elem z = ctx.zero();
            for (int w : fib)
                ctx.add_assign(z, roots[static_cast<size_t>(idx.index_of[static_cast<size_t>(w)])]);
            std::vector<PolyQuotCtx::Elem> next(pc.size() + 1, ctx.zero());
            for (size_t i = 0; i < pc.size(); ++i) {
                next[i + 1] = ctx.add(next[i + 1], pc[i]);
                next[i] = ctx.sub(next[i], ctx.mul(pc[i], z));
            }
            pc = std::move(next);
        }
        bool ok = true;
        for (const auto& coeff : pc) {
            if (ctx.elem_deg(coeff) > 0) {
                ok = false;
                break;
            }
            BigInt c = symmetric_mod(coeff[0], E.pK());
            if (c.abs() > bound) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(idx);
    }
    return out;
}

std::vector<Indexation> ResolventEngine::integrality_filter(const std::vector<Indexation>& cands,
                                                            uint64_t p,
                                                            const Poly<ZRing>& h) const {
    if (cands.empty()) return {};
    if (h.deg() < 1) throw std::domain_error("integrality_filter: constant h is rejected");
    // smallest non-central class
    int best = -1;
    for (int ci = 0; ci < G_->num_classes(); ++ci) {
        if (G_->cls(ci).size() < 2) continue;
        if (best < 0 || G_->cls(ci).size() < G_->cls(best).size()) best = ci;
    }
    if (best < 0) throw std::runtime_error("integrality_filter: no usable class");
    const auto& C = G_->cls(best);
    size_t m = C.members.size();

    // |lambda| <= S; the x^1 coefficient is a sum of |C| products of |C|-1
    // lambdas, so |coeff| <= |C| S^{|C|-1}
    BigInt B;
    {
        BigRat rb = cauchy_root_bound(F_);
        BigInt fl;
        mpz_fdiv_q(fl.raw(), rb.num().raw(), rb.den().raw());
        B = fl + BigInt(1);
    }
    BigInt Bh(0), Bpow(1);
    for (int i = 0; i <= h.deg(); ++i) {
        Bh += h.c[static_cast<size_t>(i)].abs() * Bpow;
        Bpow *= B;
    }
    BigInt S = BigInt(static_cast<long>(n_)) * Bh * B;
    BigInt bound = BigInt(static_cast<long>(m)) * pow(S, static_cast<unsigned long>(m - 1));
    BigInt pb(static_cast<long>(p));
    int K = 1;
    {
        BigInt pK = pb;
        BigInt need = bound + bound + BigInt(1);
        while (pK <= need) {
            pK *= pb;
            ++K;
        }
    }
    UnramExt E(p, K, F_);
    const auto& roots = E.roots_cycle();
    const PolyQuotCtx& ctx = E.ctx();
    std::vector<PolyQuotCtx::Elem> hr;
    hr.reserve(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) hr.push_back(ctx.eval_zpoly(h, roots[static_cast<size_t>(j)]));

    std::vector<Indexation> out;
    for (const auto& idx : cands) {
        std::vector<PolyQuotCtx::Elem> lam;
        lam.reserve(m);
        for (int g : C.members) {
            PolyQuotCtx::Elem acc = ctx.zero();
            for (int j = 0; j < n_; ++j) {
                int w = idx.orbit_at[static_cast<size_t>(j)];
                int tw = idx.index_of[static_cast<size_t>(G_->act(g, w))];
                PolyQuotCtx::Elem prod =
                    ctx.mul(hr[static_cast<size_t>(j)], roots[static_cast<size_t>(tw)]);
                ctx.add_assign(acc, prod);
            }
            lam.push_back(std::move(acc));
        }
        // x^1 coefficient of prod (x - lam_i) up to sign, via prefix/suffix
        std::vector<PolyQuotCtx::Elem> pre(m + 1), suf(m + 1);
        pre[0] = ctx.one();
        for (size_t i = 0; i < m; ++i) pre[i + 1] = ctx.mul(pre[i], lam[i]);
        suf[m] = ctx.one();
        for (size_t i = m; i-- > 0;) suf[i] = ctx.mul(suf[i + 1], lam[i]);
        PolyQuotCtx::Elem coeff = ctx.zero();
        for (size_t i = 0; i < m; ++i)
            ctx.add_assign(coeff, ctx.mul(pre[i], suf[i + 1]));
        bool ok = ctx.elem_deg(coeff) <= 0;
        if (ok) {
            BigInt c = symmetric_mod(coeff[0], E.pK());
            ok = c.abs() <= bound;
        }
        if (ok) out.push_back(idx);
    }
    return out;
}

namespace {

BigInt ceil_of_rat(const BigRat& q) {
    BigInt n = q.num(), d = q.den();
    BigInt fl;
    mpz_fdiv_q(fl.raw(), n.raw(), d.raw());
    if (BigRat(fl) == q) return fl;
    return fl + BigInt(1);
}

}  // namespace

ResolventTable ResolventEngine::build_resolvents(const Indexation& idx, uint64_t p,
                                                 const Poly<ZRing>& h, int threads,
                                                 int precision_slack) const {
    if (h.deg() < 1) throw std::domain_error("build_resolvents: non-constant h required");
    const GL2Quot& G = *G_;

    // archimedean bounds: |lambda| <= n * B_h * B, coefficient j of Gamma_C
    // bounded by binom(|C|, j) S^{|C|-j} <= (S+1)^{|C|}
    BigInt B = ceil_of_rat(cauchy_root_bound(F_));
    BigInt Bh(0), Bpow(1);
    for (int i = 0; i <= h.deg(); ++i) {
        Bh += h.c[static_cast<size_t>(i)].abs() * Bpow;
        Bpow *= B;
    }
    BigInt S = BigInt(static_cast<long>(n_)) * Bh * B;
    int maxC = 0;
    for (int ci = 0; ci < G.num_classes(); ++ci) maxC = std::max(maxC, G.cls(ci).size());
    BigInt Bgamma = pow(S + BigInt(1), static_cast<unsigned long>(maxC));

    BigInt pb(static_cast<long>(p));
    int K = 1;
    {
        BigInt pK = pb;
        BigInt need = Bgamma + Bgamma + BigInt(1);
        while (pK <= need) {
            pK *= pb;
            ++K;
        }
    }
    K += precision_slack;

    UnramExt E(p, K, F_);
    const auto& roots = E.roots_cycle();
    const PolyQuotCtx& ctx = E.ctx();
    ctx.trace(ctx.zero());  // warm the power-sum cache before threads share it
    const BigInt& pK = E.pK();

    // h(r_j) per root index
    std::vector<PolyQuotCtx::Elem> hr;
    hr.reserve(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) hr.push_back(ctx.eval_zpoly(h, roots[static_cast<size_t>(j)]));

    int phi_inv = G.inverse(idx.phi);
    auto conj_phi = [&](int g) { return G.mul(G.mul(idx.phi, g), phi_inv); };

    auto lambda_of = [&](int g) {
        PolyQuotCtx::Elem acc = ctx.zero();
        for (int j = 0; j < n_; ++j) {
            int w = idx.orbit_at[static_cast<size_t>(j)];
            int tw = idx.index_of[static_cast<size_t>(G.act(g, w))];
            PolyQuotCtx::Elem prod = ctx.mul(hr[static_cast<size_t>(j)], roots[static_cast<size_t>(tw)]);
            ctx.add_assign(acc, prod);
        }
        return acc;
    };

    std::vector<ResolventClassEntry> entries(static_cast<size_t>(G.num_classes()));
    std::atomic<int> next_class{0};
    std::atomic<bool> failed{false};
    std::string fail_msg;
    std::mutex fail_mutex;

    auto worker = [&]() {
        ZModRing RK(pK);
        while (true) {
            int ci = next_class.fetch_add(1);
            if (ci >= G.num_classes() || failed.load()) break;
            try {
                const auto& C = G.cls(ci);
                // partition the class into Phi-conjugation orbits
                std::vector<char> used(C.members.size(), 0);
                Poly<ZModRing> gamma = poly_one(RK);
                for (size_t mi = 0; mi < C.members.size(); ++mi) {
                    if (used[mi]) continue;
                    int g0 = C.members[mi];
                    // walk the orbit
                    int d = 0;
                    int g = g0;
                    do {
                        auto it = std::lower_bound(C.members.begin(), C.members.end(), g);
                        used[static_cast<size_t>(it - C.members.begin())] = 1;
                        g = conj_phi(g);
                        ++d;
                    } while (g != g0);
                    // power sums s_m = (d/n) Tr(lambda^m), m = 1..d
                    PolyQuotCtx::Elem lam = lambda_of(g0);
                    BigInt ratio = *invmod(BigInt(static_cast<long>(n_ / d)), pK);
                    std::vector<BigInt> s(static_cast<size_t>(d) + 1);
                    PolyQuotCtx::Elem pw = lam;
                    for (int m = 1; m <= d; ++m) {
                        s[static_cast<size_t>(m)] = (ctx.trace(pw) * ratio).mod(pK);
                        if (m < d) pw = ctx.mul(pw, lam);
                    }
                    // Newton: m e_m = sum_{i=1}^m (-1)^{i-1} e_{m-i} s_i
                    std::vector<BigInt> e(static_cast<size_t>(d) + 1);
                    e[0] = BigInt(1);
                    for (int m = 1; m <= d; ++m) {
                        BigInt acc(0);
                        for (int i = 1; i <= m; ++i) {
                            BigInt term = (e[static_cast<size_t>(m - i)] * s[static_cast<size_t>(i)]).mod(pK);
                            if (i % 2 == 1)
                                acc += term;
                            else
                                acc -= term;
                        }
                        BigInt minv = *invmod(BigInt(m), pK);
                        e[static_cast<size_t>(m)] = (acc * minv).mod(pK);
                    }
                    // orbit factor: x^d - e1 x^{d-1} + ... + (-1)^d e_d
                    Poly<ZModRing> fac;
                    fac.c.resize(static_cast<size_t>(d) + 1);
                    for (int m = 0; m <= d; ++m) {
                        BigInt v = e[static_cast<size_t>(m)];
                        if (m % 2 == 1) v = RK.neg(v);
                        fac.c[static_cast<size_t>(d - m)] = std::move(v);
                    }
                    poly_normalize(RK, fac);
                    gamma = poly_mul(RK, gamma, fac);
                }
                if (gamma.deg() != C.size())
                    throw std::logic_error("build_resolvents: degree mismatch in Gamma_C");
                // reconstruct integer coefficients within the per-class bound
                BigInt Bc = pow(S + BigInt(1), static_cast<unsigned long>(C.size()));
                ResolventClassEntry ent;
                ent.trace_cls = C.trace_cls;
                ent.det_cls = C.det_cls;
                ent.size = C.size();
                ent.rep = G.elem(C.rep);
                ent.gamma.reserve(gamma.c.size());
                for (const auto& c : gamma.c) ent.gamma.push_back(reconstruct_integer(c, Bc, pK));
                entries[static_cast<size_t>(ci)] = std::move(ent);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lk(fail_mutex);
                if (!failed.exchange(true))
                    fail_msg = std::string("class ") + std::to_string(ci) + ": " + ex.what();
            }
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load())
        throw bound_exceeded("build_resolvents: non-integral resolvent data (wrong indexation or "
                             "insufficient precision): " +
                             fail_msg);

    ResolventTable table;
    table.ell = ell_;
    table.weight = weight_;
    table.r = r_;
    table.form = form_;
    table.p = p;
    table.K = K;
    table.h = h;
    table.F = F_;
    table.phi = G.elem(idx.phi);
    table.bound = Bgamma;
    table.classes = std::move(entries);
    return table;
}

ResolventTable ResolventEngine::build(const Poly<ZRing>& h, int threads, int precision_slack,
                                      uint64_t prime_floor) const {
    uint64_t p = choose_prime(prime_floor);
    std::vector<Indexation> cands = candidate_indexations(p);
    std::vector<Indexation> stage1 = filter_fiber_sums(cands, p);
    if (stage1.empty())
        throw ambiguous_indexation("fiber-sum filter removed every candidate indexation");
    std::vector<Indexation> stage2 = integrality_filter(stage1, p, h);
    if (stage2.empty())
        throw ambiguous_indexation("resolvent-coefficient filter removed every candidate");

    ResolventTable table = build_resolvents(stage2[0], p, h, threads, precision_slack);
    if (stage2.size() > 1) {
        // survivors must agree on two probe primes
        std::vector<BigInt> probes;
        for (uint64_t v = 101; probes.size() < 2; v = next_prime_u64(v)) {
            if (v == static_cast<uint64_t>(ell_)) continue;
            if (!is_squarefree_mod(F_, v)) continue;
            probes.push_back(BigInt(static_cast<long>(v)));
        }
        for (size_t i = 1; i < stage2.size(); ++i) {
            ResolventTable other = build_resolvents(stage2[i], p, h, threads, precision_slack);
            for (const auto& v : probes) {
                if (frobenius_class(table, v) != frobenius_class(other, v))
                    throw ambiguous_indexation(
                        "surviving indexations disagree at probe prime " + v.str());
            }
        }
    }
    return table;
}

uint16_t ResolventEngine::frobenius_class(const ResolventTable& table, const BigInt& v) const {
    if (!is_probable_prime(v)) throw bad_prime("frobenius_class: v is not prime");
    if (v == BigInt(static_cast<long>(ell_))) throw bad_prime("frobenius_class: v = ell is ramified");
    // v must not divide disc(F_r): equivalent to F_r squarefree mod v
    ZModRing Rv(v, true);
    Poly<ZModRing> fv = poly_reduce(Rv, F_);
    if (fv.deg() != n_) throw bad_prime("frobenius_class: v divides the leading coefficient");
    Poly<ZModRing> g = poly_gcd(Rv, fv, poly_derivative(Rv, fv));
    if (g.deg() != 0) throw bad_prime("frobenius_class: v divides disc(F_r)");

    PolyQuotCtx ctx(v, F_);
    PolyQuotCtx::Elem xv = ctx.pow_gen(v);
    PolyQuotCtx::Elem hx = ctx.from_poly(table.h);
    BigInt u = ctx.trace(ctx.mul(hx, xv));

    int found = -1;
    for (size_t ci = 0; ci < table.classes.size(); ++ci) {
        const auto& ent = table.classes[ci];
        // Horner evaluation of Gamma_C mod v at u
        BigInt acc(0);
        for (size_t i = ent.gamma.size(); i-- > 0;) {
            acc = (acc * u + ent.gamma[i]).mod(v);
        }
        if (acc.is_zero()) {
            if (found >= 0)
                throw ambiguous_class("frobenius_class: several resolvents vanish at v = " + v.str());
            found = static_cast<int>(ci);
        }
    }
    if (found < 0) throw no_class("frobenius_class: no resolvent vanishes at v = " + v.str());
    return static_cast<uint16_t>(found);
}

FrobeniusResult ResolventEngine::a_p(const ResolventTable& table, const BigInt& v) const {
    FrobeniusResult out;
    out.class_index = frobenius_class(table, v);
    uint64_t vl = mpz_fdiv_ui(v.raw(), static_cast<unsigned long>(ell_));
    uint64_t d = powmod_u64(vl, static_cast<uint64_t>(weight_ - 1), static_cast<uint64_t>(ell_));
    const auto& ent = table.classes[static_cast<size_t>(out.class_index)];
    int cid = G_->class_of(G_->id_of(ent.rep));
    out.lifted = lift_class_by_det(*G_, cid, static_cast<uint16_t>(d));
    out.trace = out.lifted.trace;
    out.minpoly = factored_minpoly(out.lifted);
    return out;
}

// ---- table io -------------------------------------------------------------------

void ResolventTable::save(std::ostream& os) const {
    os << "GALREP-RESOLVENT v1\n";
    os << "ell " << ell << "\n";
    os << "weight " << weight << "\n";
    os << "r " << r << "\n";
    os << "form " << form << "\n";
    os << "p " << p << "\n";
    os << "K " << K << "\n";
    os << "h";
    for (const auto& c : h.c) os << " " << c.str();
    os << "\n";
    os << "F";
    for (const auto& c : F.c) os << " " << c.str();
    os << "\n";
    os << "phi " << int(phi.a) << " " << int(phi.b) << " " << int(phi.c) << " " << int(phi.d) << "\n";
    os << "bound " << bound.str() << "\n";
    for (const auto& ent : classes) {
        os << "class " << ent.trace_cls << " " << ent.det_cls << " " << ent.size << " "
           << int(ent.rep.a) << " " << int(ent.rep.b) << " " << int(ent.rep.c) << " "
           << int(ent.rep.d) << "\n";
        os << "gamma\n";
        for (const auto& c : ent.gamma) os << c.str() << "\n";
    }
}

namespace {

std::string expect_key(std::istream& is, const std::string& key) {
    std::string k;
    if (!(is >> k) || k != key)
        throw std::runtime_error("ResolventTable: expected field '" + key + "'");
    std::string rest;
    std::getline(is, rest);
    if (!rest.empty() && rest[0] == ' ') rest = rest.substr(1);
    return rest;
}

}  // namespace

ResolventTable ResolventTable::load(std::istream& is) {
    ResolventTable t;
    std::string line;
    std::getline(is, line);
    if (line != "GALREP-RESOLVENT v1") throw std::runtime_error("ResolventTable: bad header");
    t.ell = std::stoi(expect_key(is, "ell"));
    t.weight = std::stoi(expect_key(is, "weight"));
    t.r = std::stoi(expect_key(is, "r"));
    t.form = expect_key(is, "form");
    t.p = std::stoull(expect_key(is, "p"));
    t.K = std::stoi(expect_key(is, "K"));
    {
        std::istringstream hs(expect_key(is, "h"));
        std::string tok;
        ZRing ZZ;
        while (hs >> tok) t.h.c.push_back(BigInt(tok));
        poly_normalize(ZZ, t.h);
    }
    {
        std::istringstream fs(expect_key(is, "F"));
        std::string tok;
        ZRing ZZ;
        while (fs >> tok) t.F.c.push_back(BigInt(tok));
        poly_normalize(ZZ, t.F);
    }
    {
        std::istringstream ps(expect_key(is, "phi"));
        int a, b, c, d;
        ps >> a >> b >> c >> d;
        t.phi = Mat2{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c),
                     static_cast<uint8_t>(d)};
    }
    t.bound = BigInt(expect_key(is, "bound"));
    std::string key;
    while (is >> key) {
        if (key != "class") throw std::runtime_error("ResolventTable: expected 'class'");
        ResolventClassEntry ent;
        int tc, dc, a, b, c, d;
        is >> tc >> dc >> ent.size >> a >> b >> c >> d;
        ent.trace_cls = static_cast<uint16_t>(tc);
        ent.det_cls = static_cast<uint16_t>(dc);
        ent.rep = Mat2{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c),
                       static_cast<uint8_t>(d)};
        std::string g;
        is >> g;
        if (g != "gamma") throw std::runtime_error("ResolventTable: expected 'gamma'");
        ent.gamma.reserve(static_cast<size_t>(ent.size) + 1);
        for (int i = 0; i <= ent.size; ++i) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("ResolventTable: truncated gamma block");
            ent.gamma.push_back(BigInt(tok));
        }
        t.classes.push_back(std::move(ent));
    }
    return t;
}

}  // namespace galrep
