#include "galrep/poly.hpp"

#include <sstream>

namespace galrep {

BigInt poly_content(const Poly<ZRing>& f) {
    BigInt g(0);
    for (const auto& c : f.c) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly<ZRing> poly_primitive_part(const Poly<ZRing>& f) {
    if (f.is_zero()) return f;
    BigInt g = poly_content(f);
    if (f.c.back().sign() < 0) g = -g;
    Poly<ZRing> r;
    r.c.reserve(f.c.size());
    for (const auto& c : f.c) r.c.push_back(c.divexact(g));
    return r;
}

Poly<ZRing> poly_q_to_primitive_z(const Poly<QRing>& f) {
    BigInt den(1);
    for (const auto& c : f.c) {
        BigInt d = c.den();
        den = den.divexact(gcd(den, d)) * d;  // lcm
    }
    Poly<ZRing> z;
    z.c.reserve(f.c.size());
    for (const auto& c : f.c) z.c.push_back(c.num() * den.divexact(c.den()));
    ZRing ZZ;
    poly_normalize(ZZ, z);
    return poly_primitive_part(z);
}

std::string poly_str(const Poly<ZRing>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.deg(); i >= 0; --i) {
        const BigInt& c = f.c[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        BigInt a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || !a.is_one()) os << a.str();
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace galrep
