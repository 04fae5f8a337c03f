#include "galrep/resultant.hpp"

#include <stdexcept>

namespace galrep {

uint64_t resultant_mod(const WordRing& F, Poly<WordRing> a, Poly<WordRing> b) {
    if (a.is_zero() || b.is_zero()) return 0;
    uint64_t s = 1;
    bool negate = false;
    while (true) {
        int da = a.deg(), db = b.deg();
        if (db == 0) {
            s = F.mul(s, powmod_u64(b.c[0], static_cast<uint64_t>(da), F.p));
            break;
        }
        Poly<WordRing> r = poly_rem(F, a, b);
        if (r.is_zero()) return 0;
        // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b,r)
        if ((da & 1) && (db & 1)) negate = !negate;
        s = F.mul(s, powmod_u64(b.c.back(), static_cast<uint64_t>(da - r.deg()), F.p));
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? F.neg(s) : s;
}

namespace {

BigInt norm2_sq(const Poly<ZRing>& f) {
    BigInt s(0);
    for (const auto& c : f.c) s.addmul(c, c);
    return s;
}

// |Res(a,b)| <= ||a||_2^{deg b} * ||b||_2^{deg a}
BigInt hadamard_resultant_bound(const Poly<ZRing>& a, const Poly<ZRing>& b) {
    BigInt sq = pow(norm2_sq(a), static_cast<unsigned long>(b.deg())) *
                pow(norm2_sq(b), static_cast<unsigned long>(a.deg()));
    return isqrt(sq) + BigInt(1);
}

}  // namespace

BigInt resultant_z(const Poly<ZRing>& a, const Poly<ZRing>& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant_z: zero polynomial");
    if (a.deg() == 0) return pow(a.c[0], static_cast<unsigned long>(b.deg()));
    if (b.deg() == 0) return pow(b.c[0], static_cast<unsigned long>(a.deg()));
    BigInt bound = hadamard_resultant_bound(a, b);
    BigInt target = bound + bound + BigInt(1);  // need product of moduli > 2*bound

    static thread_local WordPrimePool pool;
    BigInt acc(0), mod(1);
    size_t pi = 0;
    while (mod < target) {
        uint64_t q = pool.prime(pi++);
        WordRing Fq(q);
        if (Fq.reduce(a.c.back()) == 0 || Fq.reduce(b.c.back()) == 0) continue;  // degree drop
        uint64_t r = resultant_mod(Fq, poly_reduce(Fq, a), poly_reduce(Fq, b));
        BigInt qb(static_cast<long>(q));
        if (mod.is_one()) {
            acc = BigInt(static_cast<long>(r));
            mod = qb;
        } else {
            acc = crt_pair(acc, mod, BigInt(static_cast<long>(r)), qb);
            mod *= qb;
        }
    }
    return symmetric_mod(acc, mod);
}

BigInt resultant_subres(const Poly<ZRing>& A, const Poly<ZRing>& B) {
    if (A.is_zero() || B.is_zero()) throw std::domain_error("resultant_subres: zero polynomial");
    ZRing ZZ;
    Poly<ZRing> a = A, b = B;
    bool negate = false;
    if (a.deg() < b.deg()) {
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        std::swap(a, b);
    }
    if (b.deg() == 0) {
        BigInt r = pow(b.c[0], static_cast<unsigned long>(a.deg()));
        return negate ? -r : r;
    }
    BigInt g(1), h(1);
    while (true) {
        int delta = a.deg() - b.deg();
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        // pseudo-remainder lc(b)^{delta+1} * a mod b, exact over Z
        Poly<ZRing> r = a;
        BigInt lcb = b.c.back();
        {
            // repeated scale-and-eliminate; classical pseudo-division
            int k = r.deg() - b.deg();
            while (!r.is_zero() && r.deg() >= b.deg()) {
                BigInt lead = r.c.back();
                int shift = r.deg() - b.deg();
                for (auto& c : r.c) c *= lcb;
                for (int j = 0; j <= b.deg(); ++j)
                    r.c[static_cast<size_t>(shift + j)].submul(lead, b.c[static_cast<size_t>(j)]);
                poly_normalize(ZZ, r);
                --k;
            }
            // bring to the full lc(b)^{delta+1} scaling
            for (; k >= 0; --k)
                for (auto& c : r.c) c *= lcb;
        }
        a = std::move(b);
        if (r.is_zero()) {
            if (a.deg() > 0) return BigInt(0);
            throw std::logic_error("resultant_subres: unreachable");
        }
        // b = r / (g h^delta)
        BigInt divisor = g * pow(h, static_cast<unsigned long>(delta));
        b.c.clear();
        b.c.reserve(r.c.size());
        for (auto& c : r.c) b.c.push_back(c.divexact(divisor));
        g = a.c.back();
        // h = g^delta h^{1-delta}
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = pow(g, static_cast<unsigned long>(delta)).divexact(pow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.deg() == 0) {
            // res = s * lc(b)^{deg a} / h^{deg a - 1}
            BigInt num = pow(b.c[0], static_cast<unsigned long>(a.deg()));
            BigInt res = a.deg() >= 1
                             ? num.divexact(pow(h, static_cast<unsigned long>(a.deg() - 1)))
                             : num * h;
            return negate ? -res : res;
        }
    }
}

BigInt discriminant_z(const Poly<ZRing>& f) {
    if (f.deg() < 1) throw std::domain_error("discriminant_z: degree < 1");
    ZRing ZZ;
    Poly<ZRing> df = poly_derivative(ZZ, f);
    if (df.is_zero()) return BigInt(0);
    BigInt res = resultant_z(f, df);
    long n = f.deg();
    BigInt d = res.divexact(f.c.back());
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

Poly<ZRing> poly_gcd_z(Poly<ZRing> a, Poly<ZRing> b) {
    ZRing ZZ;
    if (a.is_zero()) return poly_primitive_part(b);
    if (b.is_zero()) return poly_primitive_part(a);
    a = poly_primitive_part(a);
    b = poly_primitive_part(b);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        // primitive PRS step: prem then strip content
        Poly<ZRing> r = a;
        BigInt lcb = b.c.back();
        while (!r.is_zero() && r.deg() >= b.deg()) {
            BigInt lead = r.c.back();
            int shift = r.deg() - b.deg();
            for (auto& c : r.c) c *= lcb;
            for (int j = 0; j <= b.deg(); ++j)
                r.c[static_cast<size_t>(shift + j)].submul(lead, b.c[static_cast<size_t>(j)]);
            poly_normalize(ZZ, r);
        }
        if (!r.is_zero()) r = poly_primitive_part(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace {

int sign_variations(const std::vector<int>& s) {
    int v = 0, prev = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (prev != 0 && x != prev) ++v;
        prev = x;
    }
    return v;
}

}  // namespace

int sturm_count_z(const Poly<ZRing>& f) {
    if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (f.deg() == 0) return 0;
    ZRing ZZ;
    // squarefree primitive part
    Poly<ZRing> g = poly_gcd_z(f, poly_derivative(ZZ, f));
    Poly<ZRing> P = f;
    if (g.deg() > 0) {
        QRing QQ;
        auto qr = poly_divrem(QQ, poly_to_q(f), poly_to_q(g));
        P = poly_q_to_primitive_z(qr.first);
    } else {
        P = poly_primitive_part(P);
    }
    // Sturm chain with positive rescaling only: each term agrees in sign with
    // the classical -rem sequence
    std::vector<Poly<ZRing>> chain;
    chain.push_back(P);
    chain.push_back(poly_derivative(ZZ, P));
    while (chain.back().deg() >= 0 && chain.back().deg() > 0) {
        const Poly<ZRing>& A = chain[chain.size() - 2];
        const Poly<ZRing>& B = chain.back();
        Poly<ZRing> r = A;
        BigInt lcb = B.c.back();
        int delta = A.deg() - B.deg();
        int steps = 0;
        while (!r.is_zero() && r.deg() >= B.deg()) {
            BigInt lead = r.c.back();
            int shift = r.deg() - B.deg();
            for (auto& c : r.c) c *= lcb;
            for (int j = 0; j <= B.deg(); ++j)
                r.c[static_cast<size_t>(shift + j)].submul(lead, B.c[static_cast<size_t>(j)]);
            poly_normalize(ZZ, r);
            ++steps;
        }
        if (r.is_zero()) break;  // squarefree input: only at the end, deg B == 0 handled by loop cond
        // r = lc(B)^steps * (A mod B); normalize to the sign of -(A mod B)
        bool flip = true;  // the leading minus of the Sturm recurrence
        if (lcb.sign() < 0 && (steps & 1)) flip = !flip;
        Poly<ZRing> next = poly_primitive_part(r);  // positive rescale, lc > 0 times sign(r)
        // primitive_part normalizes lc > 0, losing r's sign; recover it
        if (r.c.back().sign() < 0) next = poly_neg(ZZ, next);
        if (flip) next = poly_neg(ZZ, next);
        chain.push_back(std::move(next));
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& h : chain) {
        if (h.is_zero()) continue;
        int s = h.c.back().sign();
        at_pos.push_back(s);
        at_neg.push_back((h.deg() % 2 == 0) ? s : -s);
    }
    return sign_variations(at_neg) - sign_variations(at_pos);
}

int sturm_count(const Poly<QRing>& f) {
    return sturm_count_z(poly_q_to_primitive_z(f));
}

BigRat cauchy_root_bound(const Poly<ZRing>& f) {
    if (f.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    BigInt lead = f.c.back().abs();
    BigInt mx(0);
    for (int i = 0; i < f.deg(); ++i) {
        BigInt a = f.c[static_cast<size_t>(i)].abs();
        if (a > mx) mx = a;
    }
    return BigRat(1L) + BigRat(mx, lead);
}

}  // namespace galrep
