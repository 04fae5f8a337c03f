#include "galrep/factor.hpp"

#include "galrep/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galrep {

namespace {

// splitmix64: per-call deterministic randomness for equal-degree splitting
struct SplitMix {
    uint64_t s;
    explicit SplitMix(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

Poly<WordRing> random_poly(const WordRing& R, int deg, SplitMix& rng) {
    Poly<WordRing> f;
    f.c.resize(static_cast<size_t>(deg) + 1);
    for (auto& c : f.c) c = rng.next() % R.p;
    poly_normalize(R, f);
    return f;
}

Poly<WordRing> poly_pow_p_mod(const WordRing& R, const Poly<WordRing>& g, const Poly<WordRing>& F) {
    return poly_powmod(R, g, BigInt(static_cast<long>(R.p)), F);
}

// squarefree decomposition (Yun) over F_p, handling p-th power parts
void squarefree_decompose(const WordRing& R, const Poly<WordRing>& f, int mult,
                          std::vector<std::pair<Poly<WordRing>, int>>& out) {
    if (f.deg() <= 0) return;
    Poly<WordRing> df = poly_derivative(R, f);
    if (df.is_zero()) {
        // f = g(x^p); descend with multiplicity * p
        Poly<WordRing> g;
        g.c.resize(static_cast<size_t>(f.deg() / static_cast<int>(R.p)) + 1, 0);
        for (int i = 0; i <= f.deg(); i += static_cast<int>(R.p))
            g.c[static_cast<size_t>(i / static_cast<int>(R.p))] = f.c[static_cast<size_t>(i)];
        poly_normalize(R, g);
        squarefree_decompose(R, g, mult * static_cast<int>(R.p), out);
        return;
    }
    Poly<WordRing> a = poly_gcd(R, f, df);
    Poly<WordRing> b = poly_divrem(R, f, a).first;  // squarefree part (up to p-th powers)
    int i = 1;
    while (b.deg() > 0) {
        Poly<WordRing> c = poly_gcd(R, a, b);
        Poly<WordRing> piece = poly_divrem(R, b, c).first;
        if (piece.deg() > 0) out.emplace_back(piece, mult * i);
        b = std::move(c);
        a = poly_divrem(R, a, b).first;
        ++i;
    }
    if (a.deg() > 0) squarefree_decompose(R, a, mult, out);
}

// distinct-degree: split monic squarefree f into products of factors of equal degree
std::vector<std::pair<Poly<WordRing>, int>> distinct_degree(const WordRing& R, Poly<WordRing> f) {
    std::vector<std::pair<Poly<WordRing>, int>> out;
    Poly<WordRing> x = poly_x(R);
    Poly<WordRing> h = x;  // x^{p^d} mod f
    int d = 0;
    while (f.deg() > 0) {
        ++d;
        if (f.deg() < 2 * d) {
            out.emplace_back(f, f.deg());  // remaining factor is irreducible
            break;
        }
        h = poly_pow_p_mod(R, h, f);
        Poly<WordRing> g = poly_gcd(R, poly_sub(R, h, x), f);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            f = poly_divrem(R, f, g).first;
            h = poly_rem(R, h, f);
        }
    }
    return out;
}

// equal-degree (Cantor-Zassenhaus) on a monic squarefree product of degree-d irreducibles
void equal_degree(const WordRing& R, const Poly<WordRing>& f, int d, SplitMix& rng,
                  std::vector<Poly<WordRing>>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    // e = (p^d - 1)/2; p odd throughout this project
    BigInt e = (pow(BigInt(static_cast<long>(R.p)), static_cast<unsigned long>(d)) - BigInt(1)) / BigInt(2);
    while (true) {
        Poly<WordRing> a = random_poly(R, f.deg() - 1, rng);
        if (a.deg() < 1) continue;
        Poly<WordRing> g = poly_gcd(R, a, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(R, g, d, rng, out);
            equal_degree(R, poly_divrem(R, f, g).first, d, rng, out);
            return;
        }
        Poly<WordRing> b = poly_powmod(R, a, e, f);
        b = poly_sub(R, b, poly_one(R));
        g = poly_gcd(R, b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(R, g, d, rng, out);
            equal_degree(R, poly_divrem(R, f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

FactorizationFp factor_mod_p(const Poly<WordRing>& F, const WordRing& R, uint64_t seed) {
    if (F.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial mod p");
    FactorizationFp out;
    out.p = R.p;
    out.unit = F.c.back();
    if (F.deg() == 0) return out;
    uint64_t inv;
    R.invert(inv, F.c.back());
    Poly<WordRing> f = poly_scale(R, F, inv);
    std::vector<std::pair<Poly<WordRing>, int>> sqfree;
    squarefree_decompose(R, f, 1, sqfree);
    SplitMix rng(seed * 0x1000003ull + R.p);
    for (auto& [part, mult] : sqfree) {
        for (auto& [block, d] : distinct_degree(R, part)) {
            std::vector<Poly<WordRing>> irr;
            equal_degree(R, block, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            if (a.first.c[static_cast<size_t>(i)] != b.first.c[static_cast<size_t>(i)])
                return a.first.c[static_cast<size_t>(i)] < b.first.c[static_cast<size_t>(i)];
        }
        return false;
    });
    return out;
}

FactorizationFp factor_mod_p(const Poly<ZRing>& F, uint64_t p, uint64_t seed) {
    WordRing R(p);
    Poly<WordRing> f = poly_reduce(R, F);
    if (F.deg() >= 0 && f.deg() != F.deg())
        throw std::domain_error("factor_mod_p: p divides the leading coefficient");
    return factor_mod_p(f, R, seed);
}

std::vector<int> degree_pattern(const Poly<ZRing>& F, uint64_t v, uint64_t seed) {
    FactorizationFp fac = factor_mod_p(F, v, seed);
    std::vector<int> degs;
    for (const auto& [g, m] : fac.factors)
        for (int i = 0; i < m; ++i) degs.push_back(g.deg());
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool is_squarefree_mod(const Poly<ZRing>& F, uint64_t v) {
    WordRing R(v);
    Poly<WordRing> f = poly_reduce(R, F);
    if (f.deg() != F.deg()) throw std::domain_error("is_squarefree_mod: v divides lc");
    if (f.deg() <= 0) return true;
    Poly<WordRing> g = poly_gcd(R, f, poly_derivative(R, f));
    return g.deg() == 0;
}

bool totally_split(const Poly<ZRing>& F, uint64_t v) {
    WordRing R(v);
    Poly<WordRing> f = poly_reduce(R, F);
    if (f.deg() != F.deg()) throw std::domain_error("totally_split: v divides lc");
    if (!is_squarefree_mod(F, v)) return false;
    // squarefree and totally split iff x^v = x mod (f, v)
    Poly<WordRing> xv = poly_pow_p_mod(R, poly_x(R), f);
    return poly_eq(R, xv, poly_rem(R, poly_x(R), f));
}

bool is_irreducible_mod(const Poly<WordRing>& F, const WordRing& R) {
    int n = F.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint64_t inv;
    R.invert(inv, F.c.back());
    Poly<WordRing> f = poly_scale(R, F, inv);
    // x^{p^n} = x mod f, and x^{p^{n/q}} - x coprime to f for primes q | n
    Poly<WordRing> x = poly_x(R);
    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    // iterate Frobenius powers, checking at n/q and n
    std::vector<Poly<WordRing>> frob(static_cast<size_t>(n) + 1);
    frob[0] = x;
    for (int i = 1; i <= n; ++i) frob[static_cast<size_t>(i)] = poly_pow_p_mod(R, frob[static_cast<size_t>(i - 1)], f);
    if (!poly_eq(R, frob[static_cast<size_t>(n)], x)) return false;
    for (int q : prime_divs) {
        Poly<WordRing> diff = poly_sub(R, frob[static_cast<size_t>(n / q)], x);
        if (poly_gcd(R, diff, f).deg() != 0) return false;
    }
    return true;
}

bool is_irreducible_mod(const Poly<ZRing>& F, uint64_t p) {
    WordRing R(p);
    Poly<WordRing> f = poly_reduce(R, F);
    if (f.deg() != F.deg()) return false;
    return is_irreducible_mod(f, R);
}

// ---- Hensel lifting ---------------------------------------------------------

namespace {

Poly<ZModRing> lift_poly(const ZModRing& R, const Poly<WordRing>& f) {
    Poly<ZModRing> out;
    out.c.reserve(f.c.size());
    for (uint64_t c : f.c) out.c.push_back(BigInt(static_cast<long>(c)).mod(R.m));
    poly_normalize(R, out);
    return out;
}

Poly<ZModRing> rering(const ZModRing& R, const Poly<ZModRing>& f) {
    Poly<ZModRing> out;
    out.c.reserve(f.c.size());
    for (const auto& c : f.c) out.c.push_back(c.mod(R.m));
    poly_normalize(R, out);
    return out;
}

// one quadratic step: given F = prod g_i mod m, lift to mod m^2 (m = p^k)
void hensel_step(const Poly<ZRing>& F, std::vector<Poly<ZModRing>>& gs, const BigInt& m,
                 const BigInt& m2) {
    ZModRing Rm2(m2);
    ZModRing Rm(m);
    size_t r = gs.size();
    // product tree would be asymptotically better; linear sweep is fine at our sizes
    std::vector<Poly<ZModRing>> lifted;
    lifted.reserve(r);
    for (auto& g : gs) lifted.push_back(rering(Rm2, g));

    // normalize F monic mod m2 (lc unit)
    Poly<ZModRing> Fm = poly_reduce(Rm2, F);
    BigInt lcinv;
    if (!Rm2.invert(lcinv, Fm.c.back())) throw std::domain_error("hensel: lc not a unit");
    Fm = poly_scale(Rm2, Fm, lcinv);

    for (size_t i = 0; i < r; ++i) {
        // split F = g_i * h_i mod m2 with h_i = prod_{j != i} g_j
        Poly<ZModRing> h = poly_one(Rm2);
        for (size_t j = 0; j < r; ++j)
            if (j != i) h = poly_mul(Rm2, h, lifted[j]);
        // e = (F - g h)/m  mod m
        Poly<ZModRing> gh = poly_mul(Rm2, lifted[i], h);
        Poly<ZModRing> diff = poly_sub(Rm2, Fm, gh);
        Poly<ZModRing> e;
        e.c.reserve(diff.c.size());
        for (auto& c : diff.c) e.c.push_back(c.divexact(m).mod(m));
        poly_normalize(Rm, e);
        // solve s g + t h = e mod m with deg s < deg h, deg t < deg g:
        // via extended euclid on (g, h) mod m (both images coprime mod p)
        // compute bezout: a g + b h = 1 mod m
        // euclid over Z/m works because every leading coeff met is a unit here;
        // to stay safe we run it mod p and lift the correction iteratively.
        // Simpler: run extended euclid mod m directly.
        Poly<ZModRing> g0 = rering(Rm, lifted[i]);
        Poly<ZModRing> h0 = rering(Rm, h);
        // extended euclid mod m
        Poly<ZModRing> r0 = g0, r1 = h0;
        Poly<ZModRing> s0 = poly_one(Rm), s1 = poly_zero(Rm);
        Poly<ZModRing> t0 = poly_zero(Rm), t1 = poly_one(Rm);
        while (r1.deg() > 0) {
            auto qr = poly_divrem(Rm, r0, r1);
            Poly<ZModRing> r2 = qr.second;
            Poly<ZModRing> s2 = poly_sub(Rm, s0, poly_mul(Rm, qr.first, s1));
            Poly<ZModRing> t2 = poly_sub(Rm, t0, poly_mul(Rm, qr.first, t1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.is_zero() || r1.deg() != 0)
            throw std::domain_error("hensel_lift_factors: seed factors not coprime");
        BigInt cinv;
        if (!Rm.invert(cinv, r1.c[0]))
            throw std::domain_error("hensel_lift_factors: non-unit gcd");
        // r1 * (s1 g + t1 h) = r1; scale so s g + t h = e
        Poly<ZModRing> s = poly_scale(Rm, s1, cinv);
        Poly<ZModRing> t = poly_scale(Rm, t1, cinv);
        // correction: g' = g + m * (t e mod g), ensures deg correction < deg g
        Poly<ZModRing> te = poly_rem(Rm, poly_mul(Rm, t, e), g0);
        for (int k = 0; k <= te.deg(); ++k) {
            BigInt add = te.c[static_cast<size_t>(k)] * m;
            size_t kk = static_cast<size_t>(k);
            if (kk < lifted[i].c.size())
                lifted[i].c[kk] = Rm2.add(lifted[i].c[kk], add.mod(m2));
            else
                throw std::logic_error("hensel: correction beyond factor degree");
        }
        (void)s;
    }
    gs = std::move(lifted);
}

}  // namespace

std::vector<Poly<ZModRing>> hensel_lift_factors(const Poly<ZRing>& F,
                                                const std::vector<Poly<WordRing>>& factors,
                                                uint64_t p, int target_K) {
    if (target_K < 1) throw std::domain_error("hensel_lift_factors: K < 1");
    // verify seeds pairwise coprime mod p and product matches
    WordRing R(p);
    {
        Poly<WordRing> prod = poly_one(R);
        for (const auto& g : factors) prod = poly_mul(R, prod, g);
        Poly<WordRing> f = poly_reduce(R, F);
        uint64_t inv;
        if (f.is_zero() || !R.invert(inv, f.c.back()))
            throw std::domain_error("hensel_lift_factors: bad input mod p");
        f = poly_scale(R, f, inv);
        if (!poly_eq(R, prod, f))
            throw std::domain_error("hensel_lift_factors: factor product mismatch mod p");
        for (size_t i = 0; i < factors.size(); ++i)
            for (size_t j = i + 1; j < factors.size(); ++j)
                if (poly_gcd(R, factors[i], factors[j]).deg() != 0)
                    throw std::domain_error("hensel_lift_factors: seed factors not coprime");
    }
    BigInt pb(static_cast<long>(p));
    int K = 1;
    BigInt m = pb;
    std::vector<Poly<ZModRing>> gs;
    {
        ZModRing R1(m);
        for (const auto& g : factors) gs.push_back(lift_poly(R1, g));
    }
    while (K < target_K) {
        int K2 = std::min(2 * K, target_K);
        BigInt m2 = pow(pb, static_cast<unsigned long>(K2));
        hensel_step(F, gs, m, m2);
        K = K2;
        m = std::move(m2);
    }
    return gs;
}

// ---- Zassenhaus over Z --------------------------------------------------------

namespace {

BigInt norm_sq(const Poly<ZRing>& f) {
    BigInt s(0);
    for (const auto& c : f.c) s.addmul(c, c);
    return s;
}

// Mignotte: any divisor h of f (in Z[x]) has ||h||_inf <= 2^{deg f} ||f||_2;
// candidates are tested with an extra lc(f) scaling, hence the final factor.
BigInt factor_coeff_bound(const Poly<ZRing>& f) {
    BigInt norm = isqrt(norm_sq(f)) + BigInt(1);
    return (norm * f.c.back().abs()) * pow2(static_cast<unsigned long>(f.deg()) + 1);
}

// exact division over Z; nullopt if b does not divide a
std::optional<Poly<ZRing>> poly_divexact_z(const Poly<ZRing>& a, const Poly<ZRing>& b) {
    QRing QQ;
    auto qr = poly_divrem(QQ, poly_to_q(a), poly_to_q(b));
    if (!qr.second.is_zero()) return std::nullopt;
    Poly<ZRing> q;
    q.c.reserve(qr.first.c.size());
    for (const auto& c : qr.first.c) {
        if (!c.is_integer()) return std::nullopt;
        q.c.push_back(c.num());
    }
    return q;
}

// squarefree decomposition over Z (Yun); input primitive with lc > 0
std::vector<std::pair<Poly<ZRing>, int>> squarefree_z(const Poly<ZRing>& f) {
    ZRing ZZ;
    std::vector<std::pair<Poly<ZRing>, int>> out;
    Poly<ZRing> df = poly_derivative(ZZ, f);
    Poly<ZRing> d = poly_gcd_z(f, df);
    if (d.deg() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly<ZRing> C = *poly_divexact_z(f, d);
    Poly<ZRing> D = poly_sub(ZZ, *poly_divexact_z(df, d), poly_derivative(ZZ, C));
    int i = 1;
    while (C.deg() > 0) {
        Poly<ZRing> P = poly_gcd_z(C, D);
        if (P.deg() > 0) out.emplace_back(P, i);
        C = *poly_divexact_z(C, P);
        D = poly_sub(ZZ, *poly_divexact_z(D, P), poly_derivative(ZZ, C));
        ++i;
    }
    return out;
}

// smallest good prime >= 257 with f squarefree mod p; among the first 10
// candidates keep the one with the fewest modular factors
uint64_t pick_good_prime(const Poly<ZRing>& f, uint64_t seed, int* nfactors_out) {
    uint64_t p = 256;
    uint64_t best_p = 0;
    int best_n = 1 << 30;
    int seen = 0;
    while (seen < 10) {
        p = next_prime_u64(p);
        WordRing R(p);
        if (R.reduce(f.c.back()) == 0) continue;
        Poly<WordRing> fp = poly_reduce(R, f);
        if (poly_gcd(R, fp, poly_derivative(R, fp)).deg() != 0) continue;
        int n = 0;
        for (const auto& blk : distinct_degree(R, poly_scale(R, fp, [&] {
                 uint64_t inv;
                 R.invert(inv, fp.c.back());
                 return inv;
             }())))
            n += blk.first.deg() / blk.second;
        ++seen;
        if (n < best_n) {
            best_n = n;
            best_p = p;
        }
        if (n == 1) break;  // already irreducible mod p
    }
    if (best_p == 0) throw std::domain_error("factor_over_Z: no good prime found");
    if (nfactors_out) *nfactors_out = best_n;
    (void)seed;
    return best_p;
}

// degree sums achievable from a factor degree multiset, as a bitset
std::vector<char> achievable_degrees(const std::vector<int>& degs, int n) {
    std::vector<char> can(static_cast<size_t>(n) + 1, 0);
    can[0] = 1;
    for (int d : degs)
        for (int s = n; s >= d; --s)
            if (can[static_cast<size_t>(s - d)]) can[static_cast<size_t>(s)] = 1;
    return can;
}

// factor a primitive squarefree polynomial with lc > 0
std::vector<Poly<ZRing>> zassenhaus_squarefree(const Poly<ZRing>& G0, uint64_t seed) {
    ZRing ZZ;
    std::vector<Poly<ZRing>> out;
    Poly<ZRing> G = G0;
    if (G.deg() == 1) {
        out.push_back(G);
        return out;
    }
    int nfac = 0;
    uint64_t p = pick_good_prime(G, seed, &nfac);
    if (nfac == 1) {
        out.push_back(G);
        return out;
    }
    FactorizationFp fp = factor_mod_p(G, p, seed);
    std::vector<Poly<WordRing>> seeds;
    for (auto& [g, m] : fp.factors) seeds.push_back(g);

    // degree-set pruning: intersect achievable degree sums over >= 3 extra primes
    std::vector<char> allowed(static_cast<size_t>(G.deg()) + 1, 1);
    {
        uint64_t q = p;
        int found = 0;
        while (found < 3 && q < p + 4000) {
            q = next_prime_u64(q);
            WordRing R(q);
            if (R.reduce(G.c.back()) == 0) continue;
            if (!is_squarefree_mod(G, q)) continue;
            auto degs = degree_pattern(G, q, seed);
            auto can = achievable_degrees(degs, G.deg());
            for (size_t i = 0; i < allowed.size(); ++i) allowed[i] &= can[i];
            ++found;
        }
        auto can0 = achievable_degrees(degree_pattern(G, p, seed), G.deg());
        for (size_t i = 0; i < allowed.size(); ++i) allowed[i] &= can0[i];
    }

    // lift past twice the factor bound
    BigInt bound = factor_coeff_bound(G);
    BigInt pb(static_cast<long>(p));
    int K = 1;
    BigInt pK = pb;
    BigInt need = bound + bound + BigInt(1);
    while (pK < need) {
        pK *= pb;
        ++K;
    }
    std::vector<Poly<ZModRing>> lifted = hensel_lift_factors(G, seeds, p, K);
    ZModRing RK(pK);

    std::vector<int> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), 0);

    auto candidate_poly = [&](const std::vector<int>& subset) {
        Poly<ZModRing> prod;
        prod.c.push_back(G.c.back().mod(pK));
        for (int idx : subset) prod = poly_mul(RK, prod, lifted[static_cast<size_t>(idx)]);
        Poly<ZRing> cand;
        cand.c.reserve(prod.c.size());
        for (const auto& c : prod.c) cand.c.push_back(symmetric_mod(c, pK));
        poly_normalize(ZZ, cand);
        return poly_primitive_part(cand);
    };

    // subsets smallest-first; indices into `remaining`
    size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool restarted = false;
        std::vector<int> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            int degsum = 0;
            for (int i : pick) degsum += lifted[static_cast<size_t>(remaining[static_cast<size_t>(i)])].deg();
            if (degsum <= G.deg() && allowed[static_cast<size_t>(degsum)]) {
                std::vector<int> subset;
                for (int i : pick) subset.push_back(remaining[static_cast<size_t>(i)]);
                Poly<ZRing> cand = candidate_poly(subset);
                if (auto quot = poly_divexact_z(G, cand)) {
                    out.push_back(cand);
                    G = poly_primitive_part(*quot);
                    std::vector<int> rest;
                    for (int idx : remaining)
                        if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                            rest.push_back(idx);
                    remaining = std::move(rest);
                    restarted = true;
                    break;
                }
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] ==
                                 static_cast<int>(remaining.size() - s) + i)
                --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (!restarted) ++s;
    }
    if (G.deg() > 0) out.push_back(G);
    return out;
}

}  // namespace

FactorizationZ factor_over_Z(const Poly<ZRing>& F, uint64_t seed) {
    if (F.is_zero()) throw std::domain_error("factor_over_Z: zero polynomial");
    ZRing ZZ;
    FactorizationZ out;
    out.content = poly_content(F);
    if (F.c.back().sign() < 0) out.content = -out.content;
    if (F.deg() == 0) {
        return out;
    }
    Poly<ZRing> prim = poly_primitive_part(F);
    for (auto& [sqf, mult] : squarefree_z(prim)) {
        for (auto& irr : zassenhaus_squarefree(sqf, seed)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            int c = a.first.c[static_cast<size_t>(i)].cmp(b.first.c[static_cast<size_t>(i)]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace galrep
