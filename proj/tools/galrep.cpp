// Command-line front end: certification checks, resolvent cache construction,
// Frobenius queries at arbitrary primes, table reproduction, q-expansions.

#include "galrep/certify.hpp"
#include "galrep/factor.hpp"
#include "galrep/modforms.hpp"
#include "galrep/repdata.hpp"
#include "galrep/resolvent.hpp"
#include "galrep/resultant.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

using namespace galrep;

namespace {

Poly<ZRing> parse_hpoly(const std::string& spec) {
    ZRing ZZ;
    Poly<ZRing> h;
    std::istringstream is(spec);
    std::string tok;
    while (is >> tok) h.c.push_back(BigInt(tok));
    poly_normalize(ZZ, h);
    if (h.deg() < 1) throw parse_error("hpoly: a non-constant polynomial is required");
    return h;
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ResolventTable load_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open cache " + path);
    return ResolventTable::load(f);
}

ResolventEngine engine_for(const ResolventTable& t) {
    return ResolventEngine(t.ell, t.weight, t.r, t.form, t.F);
}

struct TableRow {
    std::string prime;
    std::string minpoly;
    uint16_t trace;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular Galois representation evaluator"};
    app.require_subcommand(1);

    std::string data_path, cache_path, out_path, lower_path, hspec = "0 0 1", prime_expr,
                start_expr, delta_spec, factor_spec, embedding;
    uint64_t cap = 1000000;
    int threads = 0, count = 40, slack = 0, qk = 12, qell = 0;
    long qn = 10, oracle_T = 10000, a2_ell = 5, a2_j = 0;
    uint64_t seed = 1;

    auto* c_check = app.add_subcommand("check", "sanity checks and assertion A1 on a data file");
    c_check->add_option("file", data_path)->required();
    c_check->add_option("--cap", cap, "search cap for split primes");

    auto* c_res = app.add_subcommand("resolvents", "build and persist the resolvent cache");
    c_res->add_option("file", data_path)->required();
    c_res->add_option("out", out_path)->required();
    c_res->add_option("--hpoly", hspec, "ascending coefficients of h, default x^2");
    c_res->add_option("--threads", threads);
    c_res->add_option("--precision-slack", slack);
    c_res->add_option("--seed", seed);

    auto* c_ap = app.add_subcommand("ap", "Frobenius data at one prime");
    c_ap->add_option("cache", cache_path)->required();
    c_ap->add_option("prime", prime_expr)->required();

    auto* c_table = app.add_subcommand("table", "rows for the first <count> primes >= start");
    c_table->add_option("cache", cache_path)->required();
    c_table->add_option("start", start_expr)->required();
    c_table->add_option("count", count);
    c_table->add_option("--threads", threads);

    auto* c_cert = app.add_subcommand("certify", "twist elimination against the oracle (+A3)");
    c_cert->add_option("file", data_path)->required();
    c_cert->add_option("cache", cache_path)->required();
    c_cert->add_option("--lower", lower_path, "lower-level data file for A3");
    c_cert->add_option("--cap", cap);
    c_cert->add_option("--oracle-T", oracle_T);

    auto* c_qexp = app.add_subcommand("qexp", "q-expansion coefficients");
    c_qexp->add_option("weight", qk)->required();
    c_qexp->add_option("n", qn)->required();
    c_qexp->add_option("--mod", qell);
    c_qexp->add_option("--embedding", embedding, "l5 or l27 for weight 24");

    auto* c_a2 = app.add_subcommand("a2", "assertion A2 on a synthetic delta or single factor");
    c_a2->add_option("--delta", delta_spec, "ascending coefficients of Delta_i");
    c_a2->add_option("--factor", factor_spec, "ascending coefficients of one factor R");
    c_a2->add_option("--ell", a2_ell)->required();
    c_a2->add_option("--j", a2_j)->required();
    c_a2->add_option("--cap", cap);
    c_a2->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_check) {
            RepDataFile d = RepDataFile::load_file(data_path);
            CertReport rep;
            rep.add(sanity_disc(d.F, d.ell));
            rep.add(sanity_real_roots(d.F, d.ell, d.r));
            long N = 1;  // level one: no odd ramified primes besides ell
            rep.add(check_A1(d.F, d.ell, N, d.r, cap));
            for (const auto& c : rep.checks) std::cout << c.line() << "\n";
            return rep.all_pass() ? 0 : 1;
        }

        if (*c_res) {
            RepDataFile d = RepDataFile::load_file(data_path);
            Poly<ZRing> h = parse_hpoly(hspec);
            ResolventEngine eng(d.ell, d.weight, d.r, d.form, d.F);
            auto t0 = std::chrono::steady_clock::now();
            ResolventTable table = eng.build(h, thread_count(threads), slack);
            auto t1 = std::chrono::steady_clock::now();
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw parse_error("cannot write " + out_path);
            table.save(out);
            double secs = std::chrono::duration<double>(t1 - t0).count();
            std::cout << "p " << table.p << " K " << table.K << " classes "
                      << table.classes.size() << " elapsed " << secs << "s\n";
            return 0;
        }

        if (*c_ap) {
            ResolventTable table = load_table(cache_path);
            PrimeExpr pe = parse_prime_expr(prime_expr);
            if (!is_probable_prime(pe.value)) {
                std::cerr << "error: " << pe.display << " is not prime\n";
                return 2;
            }
            ResolventEngine eng = engine_for(table);
            FrobeniusResult fr = eng.a_p(table, pe.value);
            std::cout << pe.display << " " << fr.minpoly << " " << fr.trace << "\n";
            return 0;
        }

        if (*c_table) {
            ResolventTable table = load_table(cache_path);
            PrimeExpr pe = parse_prime_expr(start_expr);
            ResolventEngine eng = engine_for(table);
            // enumerate the first <count> primes >= start
            std::vector<PrimeExpr> primes;
            BigInt v = pe.value - BigInt(1);
            while (static_cast<int>(primes.size()) < count) {
                v = next_probable_prime(v);
                PrimeExpr px;
                px.value = v;
                if (pe.display.find('^') != std::string::npos) {
                    BigInt off = v - pe.value;
                    px.display = pe.display + (off.sign() >= 0 ? "+" : "") + off.str();
                } else {
                    px.display = v.str();
                }
                primes.push_back(px);
            }
            std::vector<TableRow> rows(primes.size());
            std::atomic<size_t> next{0};
            std::atomic<int> failures{0};
            auto work = [&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= primes.size()) break;
                    try {
                        FrobeniusResult fr = eng.a_p(table, primes[i].value);
                        rows[i] = TableRow{primes[i].display, fr.minpoly, fr.trace};
                    } catch (const std::exception& ex) {
                        rows[i] = TableRow{primes[i].display, std::string("error: ") + ex.what(), 0};
                        failures.fetch_add(1);
                    }
                }
            };
            int nt = thread_count(threads);
            std::vector<std::thread> pool;
            for (int t = 1; t < nt; ++t) pool.emplace_back(work);
            work();
            for (auto& th : pool) th.join();
            for (const auto& row : rows)
                std::cout << row.prime << " " << row.minpoly << " " << row.trace << "\n";
            return failures.load() == 0 ? 0 : 3;
        }

        if (*c_cert) {
            RepDataFile d = RepDataFile::load_file(data_path);
            ResolventTable table = load_table(cache_path);
            if (!poly_eq(ZRing{}, d.F, table.F))
                throw parse_error("certify: data file and cache disagree on F");
            ResolventEngine eng = engine_for(table);
            ModformsOracle oracle(static_cast<int>(oracle_T));
            CertReport rep;
            long N = d.ell;  // level one: ramified set {ell}
            rep.add(certify_twist(eng, table, oracle, N, std::min<uint64_t>(cap, 100000)));
            if (!lower_path.empty()) {
                RepDataFile low = RepDataFile::load_file(lower_path);
                rep.add(check_A3(low.F, d.F, cap));
            }
            for (const auto& c : rep.checks) std::cout << c.line() << "\n";
            return rep.all_pass() ? 0 : 1;
        }

        if (*c_qexp) {
            if (qk == 24) {
                if (embedding != "l5" && embedding != "l27")
                    throw parse_error("weight 24 needs --embedding l5|l27 with --mod 31");
            }
            ModformsOracle oracle(static_cast<int>(std::max<long>(qn, 2)));
            for (long n = 1; n <= qn; ++n) {
                std::cout << n << " ";
                if (qk == 24) {
                    const QSeriesQuad& f = oracle.form24();
                    const BigInt& x = f.x[static_cast<size_t>(n)];
                    const BigInt& y = f.y[static_cast<size_t>(n)];
                    if (y.is_zero())
                        std::cout << x.str();
                    else
                        std::cout << x.str() << (y.sign() < 0 ? "" : "+") << y.str() << "a";
                    if (qell) {
                        int emb = (embedding == "l5") ? 5 : 27;
                        std::cout << " " << oracle.tau_mod(24, n, static_cast<uint64_t>(qell), emb);
                    }
                } else {
                    std::cout << oracle.tau(qk, n).str();
                    if (qell) std::cout << " " << oracle.tau_mod(qk, n, static_cast<uint64_t>(qell));
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (*c_a2) {
            std::vector<std::pair<Poly<ZRing>, int>> factors;
            if (!delta_spec.empty()) {
                Poly<ZRing> delta = parse_hpoly(delta_spec);
                Poly<ZRing> Q = build_Qi(delta);
                std::cout << "Q_i = " << poly_str(Q) << "\n";
                FactorizationZ fz = factor_over_Z(Q, seed);
                for (auto& [f, m] : fz.factors) factors.emplace_back(f, m);
            } else if (!factor_spec.empty()) {
                factors.emplace_back(parse_hpoly(factor_spec), 1);
            } else {
                throw parse_error("a2: give --delta or --factor");
            }
            CertReport rep;
            for (auto& [R, mult] : factors) {
                std::cout << "factor " << poly_str(R) << "\n";
                rep.add(check_A2_noncontainment(R, static_cast<int>(a2_ell), static_cast<int>(a2_j), cap));
                rep.add(check_A2_containment(R, static_cast<int>(a2_ell), static_cast<int>(a2_j)));
                std::cout << rep.checks[rep.checks.size() - 2].line() << "\n";
                std::cout << rep.checks.back().line() << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ambiguous_class& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: rebuild the cache with --hpoly \"0 1 0 1\" (x^3 + x)\n";
        return 3;
    } catch (const ambiguous_indexation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
