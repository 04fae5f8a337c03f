#include "galrep/repdata.hpp"

#include <fstream>
#include <sstream>

namespace galrep {

void RepDataFile::validate() const {
    if (ell < 3 || !is_prime_u64(static_cast<uint64_t>(ell)))
        throw parse_error("RepDataFile: ell must be an odd prime");
    if (weight < 2 || weight % 2 != 0) throw parse_error("RepDataFile: even weight >= 2 required");
    int expect = (1 << r) * (ell + 1);
    if (F.deg() != expect)
        throw parse_error("RepDataFile: deg F = " + std::to_string(F.deg()) + ", expected " +
                          std::to_string(expect));
    if (!F.c.back().is_one()) throw parse_error("RepDataFile: F must be monic");
    if (embedding != 0 && embedding != 5 && embedding != 27)
        throw parse_error("RepDataFile: embedding must be l5 or l27");
}

void RepDataFile::save(std::ostream& os) const {
    os << "GALREP-DATA v1\n";
    os << "ell " << ell << "\n";
    os << "weight " << weight << "\n";
    os << "r " << r << "\n";
    os << "form " << form << "\n";
    if (embedding != 0) os << "embedding l" << embedding << "\n";
    os << "poly\n";
    for (size_t i = 0; i < F.c.size(); ++i)
        os << F.c[i].str() << ((i + 1) % 8 == 0 || i + 1 == F.c.size() ? "\n" : " ");
    os << "end\n";
}

namespace {

// whitespace-separated tokens with '#' line comments
std::vector<std::string> tokenize(std::istream& is) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
    }
    return toks;
}

}  // namespace

RepDataFile RepDataFile::load(std::istream& is) {
    auto toks = tokenize(is);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= toks.size()) throw parse_error("RepDataFile: unexpected end of file");
        return toks[i++];
    };
    if (toks.size() < 2 || toks[0] != "GALREP-DATA" || toks[1] != "v1")
        throw parse_error("RepDataFile: missing GALREP-DATA v1 header");
    i = 2;
    RepDataFile d;
    bool have_poly = false;
    while (i < toks.size()) {
        const std::string key = next();
        if (key == "ell")
            d.ell = std::stoi(next());
        else if (key == "weight")
            d.weight = std::stoi(next());
        else if (key == "r")
            d.r = std::stoi(next());
        else if (key == "form")
            d.form = next();
        else if (key == "embedding") {
            const std::string e = next();
            if (e == "l5")
                d.embedding = 5;
            else if (e == "l27")
                d.embedding = 27;
            else
                throw parse_error("RepDataFile: bad embedding '" + e + "'");
        } else if (key == "poly") {
            ZRing ZZ;
            while (true) {
                const std::string& t = next();
                if (t == "end") break;
                try {
                    d.F.c.push_back(BigInt(t));
                } catch (const std::invalid_argument&) {
                    throw parse_error("RepDataFile: bad coefficient '" + t + "'");
                }
            }
            poly_normalize(ZZ, d.F);
            have_poly = true;
        } else {
            throw parse_error("RepDataFile: unknown field '" + key + "'");
        }
    }
    if (!have_poly) throw parse_error("RepDataFile: missing poly block");
    d.validate();
    return d;
}

RepDataFile RepDataFile::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    return load(f);
}

PrimeExpr parse_prime_expr(const std::string& s) {
    PrimeExpr out;
    out.display = s;
    auto caret = s.find('^');
    if (caret == std::string::npos) {
        out.value = BigInt(s);
        return out;
    }
    if (s.substr(0, caret) != "10") throw parse_error("prime expression: base must be 10");
    size_t pos = caret + 1;
    size_t end = pos;
    while (end < s.size() && isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw parse_error("prime expression: missing exponent");
    unsigned long e = std::stoul(s.substr(pos, end - pos));
    BigInt v = pow(BigInt(10), e);
    if (end < s.size()) {
        char sign = s[end];
        if (sign != '+' && sign != '-') throw parse_error("prime expression: expected + or -");
        BigInt c(s.substr(end + 1));
        v = (sign == '+') ? v + c : v - c;
    }
    out.value = std::move(v);
    return out;
}

}  // namespace galrep
