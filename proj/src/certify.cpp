#include "galrep/certify.hpp"

#include "galrep/factor.hpp"
#include "galrep/resultant.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace galrep {

std::string CheckResult::line() const {
    const char* s = status == Status::Pass ? "pass" : (status == Status::Fail ? "fail" : "skipped");
    std::string out = "CHECK " + name + " " + s;
    if (!witness.empty()) out += " " + witness;
    return out;
}

bool CertReport::all_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckResult::Status::Fail) return false;
    return true;
}

CheckResult sanity_disc(const Poly<ZRing>& F, int ell) {
    CheckResult out;
    out.name = "sanity_disc";
    BigInt disc = discriminant_z(F);
    if (disc.is_zero()) throw std::domain_error("sanity_disc: discriminant vanishes");
    SquarePartSplit sp = square_part_split(disc, static_cast<unsigned long>(ell));
    std::ostringstream w;
    if (!sp.ok) {
        out.status = CheckResult::Status::Fail;
        w << "obstruction " << sp.obstruction.str();
        out.witness = w.str();
        return out;
    }
    // sign law applies to the full degree ell^2 - 1 polynomial
    if (F.deg() == ell * ell - 1) {
        int expected = ((static_cast<long>(ell) * (ell - 1) / 2) % 2 == 0) ? 1 : -1;
        if (sp.sign != expected) {
            out.status = CheckResult::Status::Fail;
            w << "sign " << sp.sign << " expected " << expected;
            out.witness = w.str();
            return out;
        }
    }
    out.status = CheckResult::Status::Pass;
    w << "sign " << (sp.sign > 0 ? "+" : "-") << " exp " << sp.ell_exp << " M " << sp.root.str();
    out.witness = w.str();
    return out;
}

CheckResult sanity_real_roots(const Poly<ZRing>& Fr, int ell, int r) {
    CheckResult out;
    out.name = "sanity_real_roots";
    int count = sturm_count_z(Fr);
    int expected = conjugation_fixed_points(ell, r, static_cast<uint16_t>(ell - 1));
    std::ostringstream w;
    w << "sturm " << count << " fixed_points " << expected;
    out.witness = w.str();
    out.status = (count == expected) ? CheckResult::Status::Pass : CheckResult::Status::Fail;
    return out;
}

// ---- finite abelian groups (Z/M)* (x) Z/2^t --------------------------------------

namespace {

// one cyclic component of the tensor group, with brute-force discrete logs
struct TensorComponent {
    long modulus;    // q^e or 2^e
    long generator;  // generator of the cyclic part ((Z/2^e)* splits in two)
    long order;      // order after tensoring (a 2-power)
    bool sign_part = false;  // the {+-1} component of (Z/2^e)*
};

struct TensorGroup {
    std::vector<TensorComponent> comps;
    long total_order = 1;

    // factored modulus: list of (prime, exponent); 2-part handled specially
    TensorGroup(const std::vector<std::pair<long, int>>& modulus_factors, int t) {
        long twot = 1L << t;
        for (auto [q, e] : modulus_factors) {
            long qe = 1;
            for (int i = 0; i < e; ++i) qe *= q;
            if (q == 2) {
                if (e >= 2) {
                    // <-1> of order 2
                    TensorComponent c;
                    c.modulus = qe;
                    c.generator = qe - 1;
                    c.order = std::min(2L, twot);
                    c.sign_part = true;
                    if (c.order > 1) comps.push_back(c);
                }
                if (e >= 3) {
                    // <3> of order 2^{e-2}
                    TensorComponent c;
                    c.modulus = qe;
                    c.generator = 3;
                    long ord = 1L << (e - 2);
                    c.order = std::min(ord, twot);
                    if (c.order > 1) comps.push_back(c);
                }
            } else {
                long phi = (q - 1) * (qe / q);
                long ord = 1;
                long ph2 = phi;
                while (ph2 % 2 == 0) {
                    ord *= 2;
                    ph2 /= 2;
                }
                ord = std::min(ord, twot);
                if (ord == 1) continue;
                // primitive root mod q^e by brute force
                long g = 2;
                for (;; ++g) {
                    if (g % q == 0) continue;
                    long v = 1;
                    bool prim = true;
                    for (long k = 1; k < phi; ++k) {
                        v = (v * (g % qe)) % qe;
                        if (v == 1) {
                            prim = false;
                            break;
                        }
                    }
                    if (prim) break;
                }
                TensorComponent c;
                c.modulus = qe;
                c.generator = g;
                c.order = ord;
                comps.push_back(c);
            }
        }
        for (const auto& c : comps) total_order *= c.order;
    }

    // v = +-3^k mod 2^e (e >= 2); returns (sign, k)
    static std::pair<long, long> dlog_2power(long vr, long m) {
        long x = 1;
        for (long k = 0; k < m; ++k) {
            if (x == vr) return {0, k};
            if (m - x == vr) return {1, k};
            x = (x * 3) % m;
        }
        throw std::logic_error("TensorGroup: 2-power discrete log failed");
    }

    // image of v as exponent vector (component-wise, reduced mod the order)
    std::vector<long> image(const BigInt& v) const {
        std::vector<long> out;
        for (const auto& c : comps) {
            long vr = static_cast<long>(mpz_fdiv_ui(v.raw(), static_cast<unsigned long>(c.modulus)));
            if ((c.modulus & (c.modulus - 1)) == 0) {
                auto [sign, k] = dlog_2power(vr, c.modulus);
                out.push_back(c.sign_part ? sign : k % c.order);
            } else {
                long x = 1;
                long k = 0;
                for (;; ++k) {
                    if (x == vr) break;
                    x = (x * (c.generator % c.modulus)) % c.modulus;
                    if (k > 4 * c.modulus)
                        throw std::logic_error("TensorGroup: discrete log failed");
                }
                out.push_back(k % c.order);
            }
        }
        return out;
    }

    bool spans(const std::vector<std::vector<long>>& images) const {
        if (comps.empty()) return true;
        std::set<std::vector<long>> closure;
        std::vector<long> zero(comps.size(), 0);
        closure.insert(zero);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<long>> cur(closure.begin(), closure.end());
            for (const auto& x : cur)
                for (const auto& g : images) {
                    std::vector<long> y(comps.size());
                    for (size_t i = 0; i < comps.size(); ++i)
                        y[i] = (x[i] + g[i]) % comps[i].order;
                    if (closure.insert(y).second) grew = true;
                }
        }
        return static_cast<long>(closure.size()) == total_order;
    }
};

std::vector<std::pair<long, int>> factor_long(long n) {
    std::vector<std::pair<long, int>> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

CheckResult check_A1(const Poly<ZRing>& Fr, int ell, long N, int r, uint64_t cap) {
    CheckResult out;
    out.name = "A1";
    // target group (Z/2^{r+3} N)* tensor Z/2^{r+1}
    std::vector<std::pair<long, int>> mf = factor_long(N);
    mf.emplace_back(2L, r + 3);
    TensorGroup tg(mf, r + 1);
    std::vector<std::vector<long>> images;
    std::vector<uint64_t> witnesses;
    uint64_t v = 2;
    while (v <= cap) {
        v = next_prime_u64(v);
        if (v > cap) break;
        if (v == static_cast<uint64_t>(ell)) continue;
        if (v % static_cast<uint64_t>(ell) != 1) continue;
        if (N % static_cast<long>(v) == 0 || v == 2) continue;
        WordRing R(v);
        if (R.reduce(Fr.c.back()) == 0) continue;
        if (!totally_split(Fr, v)) continue;
        witnesses.push_back(v);
        images.push_back(tg.image(BigInt(static_cast<long>(v))));
        if (tg.spans(images)) {
            out.status = CheckResult::Status::Pass;
            std::ostringstream w;
            w << "primes";
            for (uint64_t x : witnesses) w << " " << x;
            out.witness = w.str();
            return out;
        }
    }
    out.status = CheckResult::Status::Skipped;
    std::ostringstream w;
    w << "cap-exceeded partial";
    for (uint64_t x : witnesses) w << " " << x;
    out.witness = w.str();
    return out;
}

CheckResult check_A3(const Poly<ZRing>& Fi, const Poly<ZRing>& Fi1, uint64_t cap) {
    CheckResult out;
    out.name = "A3";
    uint64_t v = 2;
    while (v <= cap) {
        if (is_prime_u64(v)) {
            WordRing R(v);
            if (R.reduce(Fi.c.back()) != 0 && R.reduce(Fi1.c.back()) != 0) {
                if (totally_split(Fi, v) && !totally_split(Fi1, v)) {
                    out.status = CheckResult::Status::Pass;
                    std::ostringstream w;
                    w << "v " << v;
                    // informational: predicted quadratic splitting above
                    auto degs = degree_pattern(Fi1, v);
                    w << " upper-pattern";
                    for (int d : degs) w << " " << d;
                    out.witness = w.str();
                    return out;
                }
            }
        }
        ++v;
    }
    out.status = CheckResult::Status::Fail;
    out.witness = "unknown cap-exceeded";
    return out;
}

// ---- Q_i and the kappa subfields ---------------------------------------------------

namespace {

// exact Lagrange interpolation through integer points (x_i, y_i)
Poly<ZRing> interpolate_z(const std::vector<long>& xs, const std::vector<BigInt>& ys) {
    QRing QQ;
    Poly<QRing> acc;  // running interpolant, Newton form accumulation
    Poly<QRing> basis = poly_one(QQ);
    // Newton divided differences
    size_t n = xs.size();
    std::vector<BigRat> table;
    table.reserve(n);
    for (const auto& y : ys) table.push_back(BigRat(y));
    std::vector<BigRat> coef;
    coef.push_back(table[0]);
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            table[i] = (table[i + 1] - table[i]) /
                       BigRat(BigInt(xs[i + k] - xs[i]));
        coef.push_back(table[0]);
    }
    for (size_t k = 0; k < n; ++k) {
        Poly<QRing> term = poly_scale(QQ, basis, coef[k]);
        acc = poly_add(QQ, acc, term);
        if (k + 1 < n) {
            Poly<QRing> lin = poly_from_longs(QQ, {-xs[k], 1});
            basis = poly_mul(QQ, basis, lin);
        }
    }
    Poly<ZRing> out;
    out.c.reserve(acc.c.size());
    for (const auto& c : acc.c) {
        if (!c.is_integer()) throw std::logic_error("interpolate_z: non-integer result");
        out.c.push_back(c.num());
    }
    ZRing ZZ;
    poly_normalize(ZZ, out);
    return out;
}

}  // namespace

Poly<ZRing> build_Qi(const Poly<ZRing>& delta_i) {
    ZRing ZZ;
    int D = delta_i.deg();
    if (D < 1) {
        // degree-0: no nontrivial root ratios
        return poly_one(ZZ);
    }
    if (delta_i.c[0].is_zero()) throw std::domain_error("build_Qi: Delta_i(0) = 0");
    // Res_y(Delta(y), Delta(x y)) has x-degree D^2; evaluate at D^2 + 1 nonzero points
    int npts = D * D + 1;
    std::vector<long> xs;
    std::vector<BigInt> ys;
    long e = 0;
    while (static_cast<int>(xs.size()) < npts) {
        ++e;
        for (long s : {e, -e}) {
            if (static_cast<int>(xs.size()) >= npts) break;
            // Delta(s*y) coefficients: d_k s^k
            Poly<ZRing> g;
            g.c.reserve(delta_i.c.size());
            BigInt sp(1);
            for (int k = 0; k <= D; ++k) {
                g.c.push_back(delta_i.c[static_cast<size_t>(k)] * sp);
                sp *= BigInt(s);
            }
            poly_normalize(ZZ, g);
            xs.push_back(s);
            ys.push_back(resultant_z(delta_i, g));
        }
    }
    Poly<ZRing> res = interpolate_z(xs, ys);
    // exact division by (x-1)^D
    for (int k = 0; k < D; ++k) {
        // synthetic division by (x - 1): quotient via running sums
        Poly<ZRing> q;
        if (res.is_zero()) throw std::domain_error("build_Qi: inexact division by (x-1)");
        q.c.assign(res.c.size() - 1, BigInt(0));
        BigInt carry(0);
        for (size_t i = res.c.size(); i-- > 1;) {
            carry += res.c[i];
            q.c[i - 1] = carry;
        }
        BigInt rem = carry + res.c[0];
        if (!rem.is_zero()) throw std::domain_error("build_Qi: inexact division by (x-1)");
        poly_normalize(ZZ, q);
        res = std::move(q);
    }
    return res;
}

Poly<ZRing> kappa_minpoly(int ell, int j) {
    ZRing ZZ;
    if (((ell - 1) >> j) << j != ell - 1 || (1 << j) > ell - 1)
        throw std::domain_error("kappa_minpoly: 2^j must divide ell - 1");
    if ((ell - 1) % (1 << j) != 0) throw std::domain_error("kappa_minpoly: 2^j must divide ell - 1");
    // cyclotomic modulus 1 + z + ... + z^{ell-1}
    Poly<ZRing> cyc;
    cyc.c.assign(static_cast<size_t>(ell), BigInt(1));
    // H = subgroup of index 2^j, cosets enumerated by powers of a primitive root
    int g = 2;
    for (;; ++g) {
        int v = 1;
        bool prim = true;
        for (int k = 1; k < ell - 1; ++k) {
            v = (v * g) % ell;
            if (v == 1) {
                prim = false;
                break;
            }
        }
        if (prim) break;
    }
    int m = 1 << j;
    int hsize = (ell - 1) / m;
    // period eta_c = sum_{i} z^{g^{c + m i}} as elements of Z[z]/cyc
    std::vector<Poly<ZRing>> periods;
    for (int c = 0; c < m; ++c) {
        Poly<ZRing> eta;
        eta.c.assign(static_cast<size_t>(ell), BigInt(0));
        long gc = 1;
        for (int k = 0; k < c; ++k) gc = (gc * g) % ell;
        long gm = 1;
        for (int k = 0; k < m; ++k) gm = (gm * g) % ell;
        long cur = gc;
        for (int i = 0; i < hsize; ++i) {
            eta.c[static_cast<size_t>(cur)] += BigInt(1);
            cur = (cur * gm) % ell;
        }
        poly_normalize(ZZ, eta);
        periods.push_back(poly_rem(ZZ, eta, cyc));
    }
    // m(y) = prod (y - eta_c), coefficients in Z[z]/cyc
    std::vector<Poly<ZRing>> coeffs;  // ascending in y
    coeffs.push_back(poly_one(ZZ));
    for (const auto& eta : periods) {
        std::vector<Poly<ZRing>> next(coeffs.size() + 1);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = poly_add(ZZ, next[i + 1], coeffs[i]);
            Poly<ZRing> t = poly_mul(ZZ, coeffs[i], eta);
            t = poly_rem(ZZ, t, cyc);
            next[i] = poly_sub(ZZ, next[i], t);
        }
        for (auto& c : next) c = poly_rem(ZZ, c, cyc);
        coeffs = std::move(next);
    }
    Poly<ZRing> out;
    out.c.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.deg() > 0)
            throw std::logic_error("kappa_minpoly: non-rational symmetric function");
        out.c.push_back(c.is_zero() ? BigInt(0) : c.c[0]);
    }
    poly_normalize(ZZ, out);
    return out;
}

CheckResult check_A2_noncontainment(const Poly<ZRing>& R, int ell, int j, uint64_t cap) {
    CheckResult out;
    out.name = "A2_noncontainment";
    long mod2 = 1L << (j + 1);
    uint64_t v = 1;
    while (v <= cap) {
        v = next_prime_u64(v);
        if (v > cap) break;
        if (v == static_cast<uint64_t>(ell)) continue;
        WordRing Rv(v);
        if (Rv.reduce(R.c.back()) == 0) continue;
        // v's Frobenius in kappa_{j+1} must have full order 2^{j+1}: the image
        // of v in (Z/ell)* tensor Z/2^{j+1} has order 2^{j+1}
        {
            long order = 1;
            uint64_t x = v % static_cast<uint64_t>(ell);
            // image order = smallest 2-power 2^a with v^{2^a} a 2^{j+1}-th power residue
            int r = two_adic_valuation(ell - 1);
            long d = std::min(mod2, 1L << r);
            uint64_t test_exp = static_cast<uint64_t>((ell - 1) / d);
            long a = 1;
            uint64_t y = x;
            while (a <= d) {
                if (powmod_u64(y, test_exp, static_cast<uint64_t>(ell)) == 1) break;
                y = mulmod_u64(y, y, static_cast<uint64_t>(ell));
                a *= 2;
            }
            order = a;
            if (order != mod2) continue;
        }
        if (!is_squarefree_mod(R, v)) continue;
        auto degs = degree_pattern(R, v);
        bool all_div = true;
        for (int d : degs)
            if (d % mod2 != 0) all_div = false;
        if (!all_div) {
            out.status = CheckResult::Status::Pass;
            std::ostringstream w;
            w << "v " << v << " pattern";
            for (int d : degs) w << " " << d;
            out.witness = w.str();
            return out;
        }
    }
    out.status = CheckResult::Status::Fail;
    out.witness = "unknown cap-exceeded";
    return out;
}

// ---- A2 containment: roots of kappa generator in Q[x]/R(x^2) ---------------------

namespace {

// rational reconstruction a/b = x mod M with |a|, b <= sqrt(M/2)
std::optional<BigRat> rational_reconstruct(const BigInt& x, const BigInt& M) {
    BigInt bound = isqrt(M / BigInt(2));
    BigInt r0 = M, r1 = x.mod(M);
    BigInt t0(0), t1(1);
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1.is_zero() || t1.abs() > bound) return std::nullopt;
    if (!gcd(r1, t1).is_one()) return std::nullopt;
    if (t1.sign() < 0) return BigRat(-r1, -t1);
    return BigRat(r1, t1);
}

// extension field F_q[x]/g as a ring context for generic polynomial code
struct FqExtRing {
    WordRing base;
    Poly<WordRing> g;

    using Elem = Poly<WordRing>;
    static constexpr bool is_field = true;
    Elem zero() const { return Poly<WordRing>{}; }
    Elem one() const { return poly_one(base); }
    Elem from_long(long v) const {
        Poly<WordRing> e;
        e.c.push_back(base.from_long(v));
        poly_normalize(base, e);
        return e;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base, a, b); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_rem(base, poly_mul(base, a, b), g); }
    Elem neg(const Elem& a) const { return poly_neg(base, a); }
    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc = add(acc, mul(a, b)); }
    bool invert(Elem& out, const Elem& a) const {
        if (a.is_zero()) return false;
        // euclid in F_q[x]
        Elem r0 = g, r1 = a;
        Elem t0 = zero(), t1 = one();
        while (!r1.is_zero() && r1.deg() > 0) {
            auto qr = poly_divrem(base, r0, r1);
            Elem r2 = qr.second;
            Elem t2 = poly_sub(base, t0, poly_rem(base, poly_mul(base, qr.first, t1), g));
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.is_zero()) return false;
        uint64_t ci;
        base.invert(ci, r1.c[0]);
        out = poly_rem(base, poly_scale(base, t1, ci), g);
        return true;
    }
};

// all roots of m (integer coefficients) in F_q[x]/g, by gcd with Y^{q^d} - Y
// and recursive random splitting
std::vector<Poly<WordRing>> roots_in_extension(const Poly<ZRing>& m, const FqExtRing& E,
                                               uint64_t seed) {
    Poly<FqExtRing> me;
    me.c.reserve(m.c.size());
    for (const auto& c : m.c) {
        Poly<WordRing> e;
        e.c.push_back(E.base.reduce(c));
        poly_normalize(E.base, e);
        me.c.push_back(e);
    }
    poly_normalize(E, me);
    // linear-root part: gcd(me, Y^{Q} - Y), Q = q^{deg g}
    BigInt Q = pow(BigInt(static_cast<long>(E.base.p)), static_cast<unsigned long>(E.g.deg()));
    Poly<FqExtRing> y = poly_x(E);
    Poly<FqExtRing> yq = poly_powmod(E, y, Q, me);
    Poly<FqExtRing> lin = poly_gcd(E, poly_sub(E, yq, y), me);
    std::vector<Poly<WordRing>> out;
    // peel roots by splitting with gcd(lin, (Y + c)^{(Q-1)/2} - 1)
    std::vector<Poly<FqExtRing>> stack{lin};
    uint64_t state = seed;
    BigInt half = (Q - BigInt(1)) / BigInt(2);
    while (!stack.empty()) {
        Poly<FqExtRing> f = stack.back();
        stack.pop_back();
        if (f.deg() <= 0) continue;
        if (f.deg() == 1) {
            // root = -c0/c1
            FqExtRing::Elem inv;
            E.invert(inv, f.c[1]);
            out.push_back(E.neg(E.mul(f.c[0], inv)));
            continue;
        }
        // random shift by a full extension-field element
        Poly<FqExtRing> shift = poly_x(E);
        Poly<WordRing> cst;
        for (int i = 0; i < E.g.deg(); ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            cst.c.push_back(state % E.base.p);
        }
        poly_normalize(E.base, cst);
        shift.c[0] = cst;
        Poly<FqExtRing> pw = poly_powmod(E, shift, half, f);
        pw = poly_sub(E, pw, poly_one(E));
        Poly<FqExtRing> gg = poly_gcd(E, pw, f);
        if (gg.deg() > 0 && gg.deg() < f.deg()) {
            stack.push_back(gg);
            stack.push_back(poly_divrem(E, f, gg).first);
        } else {
            stack.push_back(f);  // retry with the next shift
        }
    }
    return out;
}

// invert a mod (R2, q^K): euclid mod q, then Newton lift of the inverse
Poly<ZModRing> invert_in_quot(const Poly<ZModRing>& a, const Poly<ZRing>& R2, uint64_t q, int K,
                              const BigInt& qK) {
    WordRing Rq(q);
    Poly<WordRing> aq;
    for (const auto& c : a.c) aq.c.push_back(Rq.reduce(c));
    poly_normalize(Rq, aq);
    Poly<WordRing> gq = poly_reduce(Rq, R2);
    // euclid over the field
    Poly<WordRing> r0 = gq, r1 = aq;
    Poly<WordRing> t0, t1 = poly_one(Rq);
    while (!r1.is_zero() && r1.deg() > 0) {
        auto qr = poly_divrem(Rq, r0, r1);
        Poly<WordRing> r2 = qr.second;
        Poly<WordRing> t2 = poly_sub(Rq, t0, poly_rem(Rq, poly_mul(Rq, qr.first, t1), gq));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.is_zero()) throw std::domain_error("invert_in_quot: not invertible mod q");
    uint64_t ci;
    Rq.invert(ci, r1.c[0]);
    t1 = poly_scale(Rq, t1, ci);
    // lift: u <- u (2 - a u) mod R2, doubling precision
    ZModRing RK(qK);
    Poly<ZModRing> u;
    for (uint64_t c : t1.c) u.c.push_back(BigInt(static_cast<long>(c)));
    poly_normalize(RK, u);
    Poly<ZModRing> R2m = poly_reduce(RK, R2);
    BigInt lcinv = *invmod(R2m.c.back(), qK);
    Poly<ZModRing> R2monic = poly_scale(RK, R2m, lcinv);
    int prec = 1;
    while (prec < K) {
        prec = std::min(2 * prec, K);
        Poly<ZModRing> au = poly_rem(RK, poly_mul(RK, u, a), R2monic);
        Poly<ZModRing> two = poly_from_longs(RK, {2});
        u = poly_rem(RK, poly_mul(RK, u, poly_sub(RK, two, au)), R2monic);
    }
    return u;
}

}  // namespace

CheckResult check_A2_containment(const Poly<ZRing>& R, int ell, int j) {
    CheckResult out;
    out.name = "A2_containment";
    ZRing ZZ;
    int D = 1 << (j + 1);
    // R(x^2)
    Poly<ZRing> R2;
    R2.c.assign(static_cast<size_t>(2 * R.deg()) + 1, BigInt(0));
    for (int i = 0; i <= R.deg(); ++i) R2.c[static_cast<size_t>(2 * i)] = R.c[static_cast<size_t>(i)];
    poly_normalize(ZZ, R2);
    if (D > R2.deg()) {
        out.status = CheckResult::Status::Fail;
        out.witness = "pigeonhole";
        return out;
    }
    Poly<ZRing> m = kappa_minpoly(ell, j + 1);

    // good prime: R2 and m squarefree mod q, q not dividing the leading coeffs
    uint64_t q = 101;
    while (true) {
        q = next_prime_u64(q);
        if (q == static_cast<uint64_t>(ell)) continue;
        WordRing Rq(q);
        if (Rq.reduce(R2.c.back()) == 0) continue;
        if (!is_squarefree_mod(R2, q)) continue;
        if (!is_squarefree_mod(m, q)) continue;
        break;
    }
    FactorizationFp fq = factor_mod_p(R2, q, 7);
    // roots of m in each component field
    std::vector<std::vector<Poly<WordRing>>> comp_roots;
    for (const auto& [gq, mult] : fq.factors) {
        FqExtRing E{WordRing(q), gq};
        auto roots = roots_in_extension(m, E, 11);
        if (roots.empty()) {
            out.status = CheckResult::Status::Fail;
            std::ostringstream w;
            w << "no-embedding-mod " << q;
            out.witness = w.str();
            return out;
        }
        comp_roots.push_back(std::move(roots));
    }
    // cartesian tuples, capped
    size_t tuples = 1;
    for (const auto& r : comp_roots) tuples *= r.size();
    if (tuples > 64) tuples = 64;

    int verified = 0;
    std::vector<Poly<QRing>> found;
    int K = 16;
    for (int attempt = 0; attempt < 3; ++attempt, K *= 2) {
        verified = 0;
        found.clear();
        BigInt qK = pow(BigInt(static_cast<long>(q)), static_cast<unsigned long>(K));
        ZModRing RK(qK);
        Poly<ZModRing> R2m = poly_reduce(RK, R2);
        BigInt lcinv = *invmod(R2m.c.back(), qK);
        Poly<ZModRing> R2monic = poly_scale(RK, R2m, lcinv);
        Poly<ZModRing> mm = poly_reduce(RK, m);
        Poly<ZModRing> md = poly_derivative(RK, mm);
        // lift the factorization of R2 to CRT the component roots together
        std::vector<Poly<WordRing>> seeds;
        for (auto& [gq, mult] : fq.factors) seeds.push_back(gq);
        std::vector<Poly<ZModRing>> lifted = hensel_lift_factors(R2, seeds, q, K);

        bool reconstruction_ok = true;
        for (size_t tup = 0; tup < tuples; ++tup) {
            // decode the tuple index into per-component root choices
            std::vector<size_t> choice(comp_roots.size());
            size_t t = tup;
            for (size_t i = 0; i < comp_roots.size(); ++i) {
                choice[i] = t % comp_roots[i].size();
                t /= comp_roots[i].size();
            }
            // CRT the component roots into Z/q[x]/R2, then Newton-lift to q^K
            Poly<ZModRing> y0;
            {
                WordRing Rq(q);
                Poly<WordRing> acc;
                // y = sum_e root_e * (R2/g_e) * ((R2/g_e)^{-1} mod g_e)
                Poly<WordRing> R2q = poly_reduce(Rq, R2);
                uint64_t li;
                Rq.invert(li, R2q.c.back());
                R2q = poly_scale(Rq, R2q, li);
                for (size_t e = 0; e < comp_roots.size(); ++e) {
                    const Poly<WordRing>& ge = fq.factors[e].first;
                    Poly<WordRing> cof = poly_divrem(Rq, R2q, ge).first;
                    // inverse of cof mod ge
                    FqExtRing Ee{Rq, ge};
                    FqExtRing::Elem inv;
                    if (!Ee.invert(inv, poly_rem(Rq, cof, ge)))
                        throw std::logic_error("A2 containment: CRT inverse failed");
                    Poly<WordRing> term =
                        poly_mul(Rq, poly_mul(Rq, comp_roots[e][choice[e]], inv), cof);
                    acc = poly_add(Rq, acc, poly_rem(Rq, term, R2q));
                }
                acc = poly_rem(Rq, acc, R2q);
                for (uint64_t c : acc.c) y0.c.push_back(BigInt(static_cast<long>(c)));
                poly_normalize(RK, y0);
            }
            // Newton: y <- y - m(y)/m'(y) mod (R2, q^{2^i})
            Poly<ZModRing> y = y0;
            int prec = 1;
            while (prec < K) {
                prec = std::min(2 * prec, K);
                BigInt qp = pow(BigInt(static_cast<long>(q)), static_cast<unsigned long>(prec));
                ZModRing Rp(qp);
                Poly<ZModRing> yq;
                for (const auto& c : y.c) yq.c.push_back(c.mod(qp));
                poly_normalize(Rp, yq);
                Poly<ZModRing> R2p = poly_scale(Rp, poly_reduce(Rp, R2), *invmod(BigInt(R2.c.back()), qp));
                auto evalp = [&](const Poly<ZRing>& f, const Poly<ZModRing>& at) {
                    Poly<ZModRing> acc;
                    for (int i = f.deg(); i >= 0; --i) {
                        acc = poly_rem(Rp, poly_mul(Rp, acc, at), R2p);
                        acc = poly_add(Rp, acc, poly_from<ZModRing>(Rp, {f.c[static_cast<size_t>(i)].mod(qp)}));
                    }
                    return acc;
                };
                Poly<ZModRing> my = evalp(m, yq);
                ZRing zz;
                Poly<ZRing> mdz = poly_derivative(zz, m);
                Poly<ZModRing> mdy = evalp(mdz, yq);
                Poly<ZModRing> inv = invert_in_quot(mdy, R2, q, prec, qp);
                y = poly_sub(Rp, yq, poly_rem(Rp, poly_mul(Rp, my, inv), R2p));
            }
            // rational reconstruction coefficient-wise
            Poly<QRing> root;
            bool ok = true;
            for (int i = 0; i <= y.deg(); ++i) {
                auto rc = rational_reconstruct(y.c[static_cast<size_t>(i)], qK);
                if (!rc) {
                    ok = false;
                    break;
                }
                root.c.push_back(*rc);
            }
            if (!ok) {
                reconstruction_ok = false;
                continue;
            }
            QRing QQ;
            poly_normalize(QQ, root);
            // exact verification m(root) = 0 in Q[x]/R2
            Poly<QRing> R2q = poly_to_q(R2);
            Poly<QRing> acc;
            for (int i = m.deg(); i >= 0; --i) {
                acc = poly_rem(QQ, poly_mul(QQ, acc, root), R2q);
                acc = poly_add(QQ, acc, poly_from<QRing>(QQ, {BigRat(m.c[static_cast<size_t>(i)])}));
            }
            if (acc.is_zero()) {
                bool dup = false;
                for (const auto& f : found)
                    if (poly_eq(QQ, f, root)) dup = true;
                if (!dup) {
                    found.push_back(root);
                    ++verified;
                }
            }
        }
        if (verified == D) break;
        if (reconstruction_ok) break;  // precision was enough; the count is the answer
    }
    std::ostringstream w;
    w << "roots " << verified << " of " << D << " mod-prime " << q;
    out.witness = w.str();
    out.status = (verified == D) ? CheckResult::Status::Pass : CheckResult::Status::Fail;
    return out;
}

Poly<ZRing> trace_down_pairs(const UnramExt& E, const std::vector<std::vector<int>>& index_fibers) {
    const PolyQuotCtx& ctx = E.ctx();
    const auto& roots = E.roots_cycle();
    size_t max_fiber = 1;
    std::vector<PolyQuotCtx::Elem> zs;
    zs.reserve(index_fibers.size());
    for (const auto& fib : index_fibers) {
        max_fiber = std::max(max_fiber, fib.size());
        PolyQuotCtx::Elem acc = ctx.zero();
        for (int j : fib) ctx.add_assign(acc, roots[static_cast<size_t>(j)]);
        zs.push_back(std::move(acc));
    }
    // prod (x - z_f); coefficients must come out as bounded integers
    std::vector<PolyQuotCtx::Elem> pc{ctx.one()};
    for (const auto& z : zs) {
        std::vector<PolyQuotCtx::Elem> next(pc.size() + 1, ctx.zero());
        for (size_t i = 0; i < pc.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], pc[i]);
            next[i] = ctx.sub(next[i], ctx.mul(pc[i], z));
        }
        pc = std::move(next);
    }
    // |z_f| <= fiber_size * B
    BigInt B;
    {
        BigRat rb = cauchy_root_bound(E.poly());
        BigInt fl;
        mpz_fdiv_q(fl.raw(), rb.num().raw(), rb.den().raw());
        B = fl + BigInt(1);
    }
    BigInt zb = BigInt(static_cast<long>(max_fiber)) * B;
    BigInt bound = pow(zb + zb + BigInt(1), static_cast<unsigned long>(index_fibers.size()));
    Poly<ZRing> out;
    out.c.reserve(pc.size());
    for (auto& coeff : pc) {
        if (ctx.elem_deg(coeff) > 0)
            throw bound_exceeded("trace_down: coefficient not in the base ring");
        out.c.push_back(reconstruct_integer(coeff.empty() ? BigInt(0) : coeff[0], bound, E.pK()));
    }
    ZRing ZZ;
    poly_normalize(ZZ, out);
    return out;
}

Poly<ZRing> trace_down(const UnramExt& E, const GL2Quot& upper, const Indexation& idx) {
    auto fibers = projection_fibers(upper);
    std::vector<std::vector<int>> index_fibers;
    index_fibers.reserve(fibers.size());
    for (const auto& fib : fibers) {
        std::vector<int> jf;
        for (int w : fib) jf.push_back(idx.index_of[static_cast<size_t>(w)]);
        index_fibers.push_back(std::move(jf));
    }
    return trace_down_pairs(E, index_fibers);
}

CheckResult certify_twist(const ResolventEngine& engine, const ResolventTable& table,
                          const ModformsOracle& oracle, long N, uint64_t cap) {
    CheckResult out;
    out.name = "twist";
    int ell = table.ell;
    int r = table.r;
    TensorGroup tg(factor_long(N), r);
    std::vector<std::vector<long>> images;
    std::vector<uint64_t> witnesses;
    uint64_t v = 1;
    while (v <= cap) {
        v = next_prime_u64(v);
        if (v > cap) break;
        if (v == static_cast<uint64_t>(ell)) continue;
        if (N % static_cast<long>(v) == 0) continue;
        if (static_cast<long>(v) > oracle.truncation()) break;
        FrobeniusResult fr;
        try {
            fr = engine.a_p(table, BigInt(static_cast<long>(v)));
        } catch (const bad_prime&) {
            continue;
        } catch (const ambiguous_class&) {
            continue;
        }
        // trace class must be nonzero in F_ell / S_r
        if (fr.trace == 0) continue;
        uint64_t want = oracle.tau_mod(table.weight, static_cast<long>(v),
                                       static_cast<uint64_t>(ell));
        if (fr.trace % static_cast<uint64_t>(ell) != want) {
            out.status = CheckResult::Status::Fail;
            std::ostringstream w;
            w << "mismatch v " << v << " pipeline " << fr.trace << " oracle " << want;
            out.witness = w.str();
            return out;
        }
        witnesses.push_back(v);
        images.push_back(tg.image(BigInt(static_cast<long>(v))));
        if (tg.spans(images)) {
            out.status = CheckResult::Status::Pass;
            std::ostringstream w;
            w << "primes";
            for (uint64_t x : witnesses) w << " " << x;
            out.witness = w.str();
            return out;
        }
    }
    out.status = CheckResult::Status::Skipped;
    std::ostringstream w;
    w << "cap-exceeded partial";
    for (uint64_t x : witnesses) w << " " << x;
    out.witness = w.str();
    return out;
}

bool tensor_group_spans(const std::vector<std::pair<long, int>>& modulus_factors, int t,
                        const std::vector<long>& witnesses) {
    TensorGroup tg(modulus_factors, t);
    std::vector<std::vector<long>> images;
    for (long w : witnesses) images.push_back(tg.image(BigInt(w)));
    return tg.spans(images);
}

bool projective_order2_test(const Poly<ZRing>& F0, uint64_t v) {
    if (!is_squarefree_mod(F0, v))
        throw std::domain_error("projective_order2_test: F0 not squarefree mod v");
    auto degs = degree_pattern(F0, v);
    bool has2 = false;
    for (int d : degs) {
        if (d > 2) return false;
        if (d == 2) has2 = true;
    }
    return has2;
}

}  // namespace galrep
