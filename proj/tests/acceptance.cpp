// Acceptance suite: runs each criterion end to end, prints one PASS/FAIL line
// per criterion with its wall time, and exits nonzero when anything fails.
//
//   ./acceptance /path/to/degenmat

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "degenmat/combinatorics.hpp"
#include "degenmat/families.hpp"
#include "degenmat/ledger.hpp"
#include "degenmat/sequences.hpp"

using namespace degenmat;

namespace {

std::string g_cli;
int g_failures = 0;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    CommandResult res;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) res.output += buf;
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void criterion(int number, const char* title, double budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (ms > budget_ms) {
        ok = false;
        detail += " [over budget " + std::to_string(budget_ms) + " ms]";
    }
    std::printf("%s criterion-%d (%7.1f ms, budget %6.0f ms)  %s%s%s\n", ok ? "PASS" : "FAIL",
                number, ms, budget_ms, title, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

const char* const kExampleRows[4] = {
    "1",
    "x,1",
    "x^2 - x*lambda,2*x,1",
    "x^3 - 3*x^2*lambda + 2*x*lambda^2,3*x^2 - 3*x*lambda,3*x,1",
};

bool example_reproduction(std::string& detail) {
    const auto res = run_cli("matrix pascal --n 4 --format csv");
    if (res.exit_code != 0) {
        detail = "CLI exit " + std::to_string(res.exit_code);
        return false;
    }
    const auto lines = split(res.output, '\n');
    for (int i = 0; i < 4; ++i) {
        const auto want = split(kExampleRows[i], ',');
        const auto got = split(i < static_cast<int>(lines.size()) ? lines[i] : "", ',');
        if (want.size() != got.size()) {
            detail = "row " + std::to_string(i + 1) + " has wrong arity";
            return false;
        }
        for (std::size_t j = 0; j < want.size(); ++j) {
            if (MultiPoly::parse(want[j]) != MultiPoly::parse(got[j])) {
                detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + got[j];
                return false;
            }
        }
    }

    // Product of the G factors, symbolically and at rational bindings.
    const MultiPoly L = sym_lambda(), X = sym_x();
    LowerTri prod = g_factor(4, 4, L, X);
    for (long k = 3; k >= 1; --k) prod = prod.mul(g_factor(4, k, L, X));
    if (prod != pascal(4, L, X)) {
        detail = "symbolic G-product differs from P_4";
        return false;
    }
    for (auto [lam0, x0] : {std::pair<Rational, Rational>{{1, 2}, {3, 1}},
                            std::pair<Rational, Rational>{{-1, 1}, {2, 3}}}) {
        LowerTri num = r_matrix(4, lam0, x0);  // G_4 at the binding
        for (long k = 3; k >= 2; --k) {
            num = num.mul(LowerTri::identity(4 - k).direct_sum(r_matrix(k, lam0, x0)));
        }
        if (num != pascal(4, MultiPoly(lam0), MultiPoly(x0))) {
            detail = "bound G-product differs from P_4 at lambda=" + lam0.str() + " x=" + x0.str();
            return false;
        }
    }
    return true;
}

bool first_betas(std::string& detail) {
    const char* listed[5] = {
        "1",
        "x + 1/2*lambda - 1/2",
        "x^2 - x - 1/6*lambda^2 + 1/6",
        "x^3 - 3/2*x^2*lambda - 3/2*x^2 + 3/2*x*lambda + 1/2*x + 1/4*lambda^3 - 1/4*lambda",
        "x^4 - 4*x^3*lambda - 2*x^3 + 4*x^2*lambda^2 + 6*x^2*lambda + x^2 - 4*x*lambda^2 "
        "- 2*x*lambda - 19/30*lambda^4 + 2/3*lambda^2 - 1/30",
    };
    for (long m = 0; m <= 4; ++m) {
        if (beta(m, 1, sym_lambda(), sym_x()) != MultiPoly::parse(listed[m])) {
            detail = "beta_" + std::to_string(m) + " differs";
            return false;
        }
    }
    const auto res = run_cli("compute beta --m 2 --w 1 --lambda lambda --x x");
    if (res.exit_code != 0 || res.output != "x^2 - x - 1/6*lambda^2 + 1/6\n") {
        detail = "CLI beta_2 output: " + res.output;
        return false;
    }
    return true;
}

bool oracle_triangles(std::string& detail) {
    const StirlingParams classical(1, 0, 0);
    for (int m = 0; m <= 6; ++m) {
        for (int k = 0; k <= m; ++k) {
            const Rational s2 = stirling2_gen(m, k, classical).constant_value();
            const Rational s1 = stirling1_gen(m, k, classical).constant_value();
            if (s2 != Rational(count_set_partitions(m, k))) {
                detail = "S2 GF vs partitions at (" + std::to_string(m) + "," +
                         std::to_string(k) + ")";
                return false;
            }
            if (s1.abs() != Rational(count_cycle_permutations(m, k))) {
                detail = "S1 GF vs cycles at (" + std::to_string(m) + "," + std::to_string(k) +
                         ")";
                return false;
            }
            if (stirling_by_recurrence(1, m, k, classical).constant_value() != s1 ||
                stirling_by_recurrence(2, m, k, classical).constant_value() != s2) {
                detail = "recurrence oracle disagrees at (" + std::to_string(m) + "," +
                         std::to_string(k) + ")";
                return false;
            }
        }
    }
    return true;
}

bool quick_ledger(std::string& detail) {
    const auto res = run_cli("verify --identity all --profile quick");
    if (res.exit_code != 0) {
        detail = "CLI exit " + std::to_string(res.exit_code);
        return false;
    }
    if (res.output.find(" 0 failures") == std::string::npos) {
        detail = "summary line not clean";
        return false;
    }
    const auto reports = Catalog::instance().verify_all(Profile::quick);
    if (reports.size() < 40) {
        detail = "catalog too small: " + std::to_string(reports.size());
        return false;
    }
    for (const auto& r : reports) {
        if (!r.clean()) {
            detail = r.id + " has failures";
            return false;
        }
    }
    return true;
}

bool nilpotency_and_powers(std::string& detail) {
    const MultiPoly L = sym_lambda(), X = sym_x();
    for (long n = 1; n <= 6; ++n) {
        const LowerTri nilp = bernoulli_matrix(n, 1, L, X).sub(LowerTri::identity(n));
        for (long h = n; h <= 6; ++h) {
            if (nilp.pow(h) != LowerTri(n)) {
                detail = "(B - I)^" + std::to_string(h) + " != 0 at n=" + std::to_string(n);
                return false;
            }
        }
    }
    for (long n = 1; n <= 5; ++n) {
        for (long w : {-1L, 1L, 2L}) {
            const LowerTri b = bernoulli_matrix(n, w, L, X);
            for (long k = 0; k <= 3; ++k) {
                if (b.pow(k) != bernoulli_matrix(n, k * w, L, Rational(k) * X)) {
                    detail = "power law fails at n=" + std::to_string(n) +
                             " w=" + std::to_string(w) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    return true;
}

bool specialization_spots(std::string& detail) {
    for (long m = 1; m <= 6; ++m) {
        const Rational got = stirling1_gen(m, 1, StirlingParams(1, 0, 1)).constant_value();
        const Rational want = (m == 1) ? Rational(1) : alt_sign(m) * factorial(m - 2);
        if (got != want) {
            detail = "Eq.(17) fails at m=" + std::to_string(m);
            return false;
        }
    }
    for (long m = 1; m <= 6; ++m) {
        for (long r = 0; r <= 4; ++r) {
            if (factorial(m) * hyperharmonic(m, r) != r_stirling1(m + r, 1 + r, r)) {
                detail = "hyperharmonic bracket fails at m=" + std::to_string(m) +
                         " r=" + std::to_string(r);
                return false;
            }
        }
    }
    for (long m = 0; m <= 6; ++m) {
        for (long k = 0; k <= m; ++k) {
            if (MultiPoly(lah(m, k)) != stirling2_gen(m, k, StirlingParams(1, -1, 0)) ||
                MultiPoly(lah(m, k)) != stirling1_gen(m, k, StirlingParams(-1, 1, 0))) {
                detail = "Lah closed form vs GF fails at (" + std::to_string(m) + "," +
                         std::to_string(k) + ")";
                return false;
            }
        }
    }
    return true;
}

bool defect_sensitivity(std::string& detail) {
    Grid grid = Grid::defaults(Profile::quick);
    grid.set_range("n", 1, 3).set_range("m", 0, 3).set_range("i", 0, 3);
    const auto& catalog = Catalog::instance();
    for (const auto& entry : catalog.entries()) {
        const VerifyReport r = catalog.verify(entry.id, grid, /*perturb_rhs=*/true);
        if (r.failures.empty() || r.passed != 0 ||
            r.passed + static_cast<long>(r.failures.size()) != r.attempted) {
            detail = "perturbed " + entry.id + " did not fail everywhere";
            return false;
        }
    }
    if (run_cli("verify --identity thm-2.1 --perturb").exit_code != 1) {
        detail = "perturbed CLI run did not exit 1";
        return false;
    }
    if (run_cli("verify --identity nonsense").exit_code != 2) {
        detail = "unknown identity did not exit 2";
        return false;
    }
    if (run_cli("verify --identity thm-2.1").exit_code != 0) {
        detail = "clean CLI run did not exit 0";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-degenmat-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "paper Example reproduction (P_4 and its G-factorization)", 1000,
              example_reproduction);
    criterion(2, "first five beta polynomials", 1000, first_betas);
    criterion(3, "oracle triangle equivalence (GF = recurrence = enumeration), m <= 6", 5000,
              oracle_triangles);
    criterion(4, "verify --identity all --profile quick: zero failures", 60000, quick_ledger);
    criterion(5, "nilpotency (B-I)^h = 0 and power law B^k, symbolic", 10000,
              nilpotency_and_powers);
    criterion(6, "specialization spot checks (Eq.(17), hyperharmonic bracket, Lah)", 2000,
              specialization_spots);
    criterion(7, "defect sensitivity: +1 on any rhs is caught, exit codes honored", 60000,
              defect_sensitivity);

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
