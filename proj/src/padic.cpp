#include "galrep/padic.hpp"

#include "galrep/factor.hpp"

namespace galrep {

UnramExt::UnramExt(uint64_t p, int K, const Poly<ZRing>& F)
    : p_(p),
      K_(K),
      n_(F.deg()),
      pK_(pow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(K))),
      F_(F),
      ctx_(pK_, F) {
    if (p % 2 == 0) throw std::domain_error("UnramExt: p must be odd");
    if (K < 1) throw std::domain_error("UnramExt: K >= 1 required");
    if (!is_irreducible_mod(F, p)) throw std::domain_error("UnramExt: F reducible mod p");
}

const UnramExt::Elem& UnramExt::frobenius() const {
    if (frob_) return *frob_;
    ZRing ZZ;
    Poly<ZRing> dF = poly_derivative(ZZ, F_);
    // seed: t^p in F_p[t]/F, plus the inverse of F'(seed) there
    BigInt pb(static_cast<long>(p_));
    PolyQuotCtx c1(pb, F_);
    Elem s = c1.pow_gen(pb);
    Elem u = c1.invert(c1.eval_zpoly(dF, s));
    int prec = 1;
    while (prec < K_) {
        int next = std::min(2 * prec, K_);
        PolyQuotCtx c2(pow(pb, static_cast<unsigned long>(next)), F_);
        // re-embed (coefficients are canonical mod p^prec, already canonical mod p^next)
        s.resize(static_cast<size_t>(n_), BigInt(0));
        u.resize(static_cast<size_t>(n_), BigInt(0));
        // s <- s - F(s) * u ; u <- u (2 - F'(s) u)
        Elem fs = c2.eval_zpoly(F_, s);
        s = c2.sub(s, c2.mul(fs, u));
        Elem dfs = c2.eval_zpoly(dF, s);
        Elem two = c2.zero();
        two[0] = BigInt(2).mod(c2.modulus());
        u = c2.mul(u, c2.sub(two, c2.mul(dfs, u)));
        prec = next;
    }
    // verify F(sigma) = 0 at full precision and sigma = t^p mod p
    Elem fs = ctx_.eval_zpoly(F_, s);
    if (!ctx_.is_zero(fs)) throw std::runtime_error("UnramExt: Newton iteration failed");
    frob_ = std::make_unique<Elem>(std::move(s));
    return *frob_;
}

UnramExt::Elem UnramExt::frobenius_of(const Elem& a) const {
    const Elem& sig = frobenius();
    // Horner composition: a(sigma(t))
    Elem acc = ctx_.zero();
    for (int i = n_ - 1; i >= 0; --i) {
        acc = ctx_.mul(acc, sig);
        acc[0] += a[static_cast<size_t>(i)];
        if (acc[0] >= pK_) acc[0] -= pK_;
    }
    return acc;
}

const std::vector<UnramExt::Elem>& UnramExt::roots_cycle() const {
    if (!roots_.empty()) return roots_;
    std::vector<Elem> rs;
    rs.reserve(static_cast<size_t>(n_));
    rs.push_back(ctx_.gen());
    for (int j = 1; j < n_; ++j) rs.push_back(frobenius_of(rs.back()));
    // closure and distinctness mod p
    Elem back = frobenius_of(rs.back());
    if (!ctx_.eq(back, rs[0])) throw std::runtime_error("UnramExt: Frobenius cycle does not close");
    BigInt pb(static_cast<long>(p_));
    std::vector<std::vector<BigInt>> seen;
    for (const auto& r : rs) {
        std::vector<BigInt> red;
        red.reserve(r.size());
        for (const auto& c : r) red.push_back(c.mod(pb));
        for (const auto& other : seen)
            if (red == other) throw std::runtime_error("UnramExt: roots collide mod p");
        seen.push_back(std::move(red));
    }
    roots_ = std::move(rs);
    return roots_;
}

BigInt reconstruct_integer(const BigInt& x, const BigInt& bound, const BigInt& modulus) {
    if (bound + bound >= modulus)
        throw std::domain_error("reconstruct_integer: need 2B < modulus");
    BigInt c = symmetric_mod(x, modulus);
    if (c.abs() > bound)
        throw bound_exceeded("reconstruct_integer: |" + c.str() + "| exceeds bound");
    return c;
}

}  // namespace galrep
