#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "degenmat/errors.hpp"
#include "degenmat/families.hpp"
#include "degenmat/ledger.hpp"
#include "degenmat/sequences.hpp"
#include "json.hpp"

namespace {

using namespace degenmat;
using nlohmann::json;

MultiPoly parse_param(const std::string& text) {
    if (auto s = sym_from_name(text)) return MultiPoly::symbol(*s);
    return MultiPoly(Rational::parse(text));
}

Rational parse_rational_param(const std::string& text, const char* flag) {
    if (sym_from_name(text))
        throw Error(std::string(flag) + " must be rational here (got symbol \"" + text + "\")");
    return Rational::parse(text);
}

// Inclusive "a..b" range, or a single integer.
std::vector<long> parse_index_range(const std::string& text, const char* flag) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stol(text)};
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw Error(std::string(flag) + ": empty range \"" + text + "\"");
        std::vector<long> out;
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    } catch (const std::invalid_argument&) {
        throw Error(std::string(flag) + ": expected N or A..B, got \"" + text + "\"");
    } catch (const std::out_of_range&) {
        throw Error(std::string(flag) + ": value out of range in \"" + text + "\"");
    }
}

struct ComputeOptions {
    std::string sequence;
    std::string m = "0";
    std::optional<std::string> k;
    long w = 1;
    long r = 1;
    std::string lambda = "lambda";
    std::string mu = "mu";
    std::string x = "x";
    std::string y = "y";
};

struct MatrixOptions {
    std::string family;
    long n = 4;
    long k = -1;  // factor index; -1 = n
    long w = 1;
    long h = 0;
    std::string lambda = "lambda";
    std::string mu = "mu";
    std::string x = "x";
};

struct VerifyOptions {
    std::string identity = "all";
    std::string profile = "quick";
    bool perturb = false;
};

struct ValueRow {
    std::map<std::string, long> indices;
    std::string value;
};

const char* const kIndexOrder[] = {"m", "k", "r"};

void print_values(const std::string& sequence, const std::vector<ValueRow>& rows,
                  const std::string& format) {
    if (format == "json") {
        json out;
        out["sequence"] = sequence;
        out["values"] = json::array();
        for (const auto& row : rows) {
            json v;
            for (const char* name : kIndexOrder)
                if (row.indices.count(name)) v[name] = row.indices.at(name);
            v["value"] = row.value;
            out["values"].push_back(v);
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::string header;
        for (const char* name : kIndexOrder)
            if (!rows.empty() && rows.front().indices.count(name))
                header += std::string(name) + ",";
        std::cout << header << "value\n";
        for (const auto& row : rows) {
            for (const char* name : kIndexOrder)
                if (row.indices.count(name)) std::cout << row.indices.at(name) << ",";
            std::cout << row.value << "\n";
        }
        return;
    }
    // text
    if (rows.size() == 1) {
        std::cout << rows.front().value << "\n";
        return;
    }
    for (const auto& row : rows) {
        std::string label;
        for (const char* name : kIndexOrder)
            if (row.indices.count(name))
                label += (label.empty() ? "" : " ") + std::string(name) + "=" +
                         std::to_string(row.indices.at(name));
        std::cout << label << ": " << row.value << "\n";
    }
}

int cmd_compute(const ComputeOptions& opt, const std::string& format) {
    const auto ms = parse_index_range(opt.m, "--m");
    const MultiPoly lam = parse_param(opt.lambda);
    const MultiPoly mu = parse_param(opt.mu);
    const MultiPoly xx = parse_param(opt.x);

    std::vector<ValueRow> rows;
    auto emit1 = [&](long m, const std::string& value) {
        rows.push_back(ValueRow{{{"m", m}}, value});
    };

    if (opt.sequence == "beta" || opt.sequence == "alpha") {
        for (long m : ms)
            emit1(m, (opt.sequence == "beta" ? beta(m, opt.w, lam, xx)
                                             : alpha(m, opt.w, lam, xx))
                         .str());
    } else if (opt.sequence == "bernoulli" || opt.sequence == "bernoulli2") {
        for (long m : ms)
            emit1(m, (opt.sequence == "bernoulli" ? bernoulli_classic(m, opt.w, xx)
                                                  : bernoulli_second(m, opt.w, xx))
                         .str());
    } else if (opt.sequence == "gff") {
        for (long m : ms) emit1(m, gff(xx, lam, m).str());
    } else if (opt.sequence == "rising") {
        for (long m : ms) emit1(m, rising(xx, m).str());
    } else if (opt.sequence == "hyperharmonic") {
        for (long m : ms)
            rows.push_back(ValueRow{{{"m", m}, {"r", opt.r}}, hyperharmonic(m, opt.r).str()});
    } else {
        const auto ks = parse_index_range(opt.k.value_or(opt.m), "--k");
        for (long m : ms) {
            for (long k : ks) {
                std::string value;
                if (opt.sequence == "stirling1") {
                    value = stirling1(m, k).str();
                } else if (opt.sequence == "stirling2") {
                    value = stirling2(m, k).str();
                } else if (opt.sequence == "stirling1-gen") {
                    value = stirling1_gen(m, k, StirlingParams(mu, lam, xx)).str();
                } else if (opt.sequence == "stirling2-gen") {
                    value = stirling2_gen(m, k, StirlingParams(mu, lam, xx)).str();
                } else if (opt.sequence == "r-stirling1") {
                    value = r_stirling1(m, k, opt.r).str();
                } else if (opt.sequence == "r-stirling2") {
                    value = r_stirling2(m, k, opt.r).str();
                } else if (opt.sequence == "lah") {
                    value = lah(m, k).str();
                } else {
                    throw Error("unknown sequence \"" + opt.sequence + "\"");
                }
                rows.push_back(ValueRow{{{"m", m}, {"k", k}}, value});
            }
        }
    }
    print_values(opt.sequence, rows, format);
    return 0;
}

LowerTri build_matrix(const MatrixOptions& opt) {
    const MultiPoly lam = parse_param(opt.lambda);
    const MultiPoly mu = parse_param(opt.mu);
    const MultiPoly xx = parse_param(opt.x);
    const long k = opt.k < 0 ? opt.n : opt.k;

    if (opt.family == "pascal") return pascal(opt.n, lam, xx);
    if (opt.family == "r")
        return r_matrix(opt.n, parse_rational_param(opt.lambda, "--lambda"),
                        parse_rational_param(opt.x, "--x"));
    if (opt.family == "t") return t_matrix(opt.n, lam, xx);
    if (opt.family == "g") return g_factor(opt.n, k, lam, xx);
    if (opt.family == "q") return q_factor(opt.n, k, lam, xx);
    if (opt.family == "bernoulli") return bernoulli_matrix(opt.n, opt.w, lam, xx);
    if (opt.family == "l") return l_matrix(opt.n, opt.w, lam, xx);
    if (opt.family == "stirling1-t1")
        return stirling_matrix_first_type(opt.n, StirlingParams(mu, lam, xx), 1);
    if (opt.family == "stirling2-t1")
        return stirling_matrix_first_type(opt.n, StirlingParams(mu, lam, xx), 2);
    if (opt.family == "stirling1-t2")
        return stirling_matrix_second_type(opt.n, opt.h, lam, xx, 1);
    if (opt.family == "stirling2-t2")
        return stirling_matrix_second_type(opt.n, opt.h, lam, xx, 2);
    throw Error("unknown matrix family \"" + opt.family + "\"");
}

int cmd_matrix(const MatrixOptions& opt, const std::string& format) {
    const LowerTri m = build_matrix(opt);
    const long n = m.size();
    if (format == "json") {
        json rows = json::array();
        for (long i = 1; i <= n; ++i) {
            json row = json::array();
            for (long j = 1; j <= i; ++j) row.push_back(m.at(i, j).str());
            rows.push_back(row);
        }
        std::cout << json{{"n", n}, {"entries", rows}}.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        for (long i = 1; i <= n; ++i) {
            for (long j = 1; j <= i; ++j) std::cout << (j > 1 ? "," : "") << m.at(i, j).str();
            std::cout << "\n";
        }
        return 0;
    }
    // text: aligned columns
    std::vector<std::size_t> width(static_cast<std::size_t>(n), 0);
    for (long j = 1; j <= n; ++j)
        for (long i = j; i <= n; ++i)
            width[static_cast<std::size_t>(j - 1)] =
                std::max(width[static_cast<std::size_t>(j - 1)], m.at(i, j).str().size());
    for (long i = 1; i <= n; ++i) {
        std::string line;
        for (long j = 1; j <= i; ++j) {
            std::string cell = m.at(i, j).str();
            if (j < i) cell.resize(width[static_cast<std::size_t>(j - 1)] + 2, ' ');
            line += cell;
        }
        std::cout << line << "\n";
    }
    return 0;
}

json report_to_json(const VerifyReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"bindings", f.bindings}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"id", r.id},         {"anchor", r.anchor}, {"attempted", r.attempted},
                {"passed", r.passed}, {"failures", fails},  {"elapsed_ms", r.elapsed_ms}};
}

int cmd_verify(const VerifyOptions& opt, const std::string& format) {
    const Profile profile = (opt.profile == "full") ? Profile::full : Profile::quick;
    const auto& catalog = Catalog::instance();

    std::vector<VerifyReport> reports;
    if (opt.identity == "all") {
        reports = catalog.verify_all(profile, 0, opt.perturb);
    } else {
        if (catalog.find(opt.identity) == nullptr) {
            std::cerr << "unknown identity \"" << opt.identity
                      << "\"; run `degenmat list` for the catalog\n";
            return 2;
        }
        reports.push_back(catalog.verify(opt.identity, Grid::defaults(profile), opt.perturb));
    }

    long cases = 0, failures = 0;
    for (const auto& r : reports) {
        cases += r.attempted;
        failures += static_cast<long>(r.failures.size());
    }

    if (format == "json") {
        json out = json::array();
        for (const auto& r : reports) out.push_back(report_to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::printf("%-24s %ld/%ld passed  (%.1f ms)\n", (r.id + ":").c_str(), r.passed,
                        r.attempted, r.elapsed_ms);
            std::size_t shown = 0;
            for (const auto& f : r.failures) {
                if (++shown > 5) {
                    std::printf("    ... %zu more failures\n", r.failures.size() - 5);
                    break;
                }
                std::printf("    FAIL at %s\n      lhs = %s\n      rhs = %s\n", f.bindings.c_str(),
                            f.lhs.c_str(), f.rhs.c_str());
            }
        }
        std::printf("summary: %zu identities, %ld cases, %ld failures\n", reports.size(), cases,
                    failures);
    }
    return failures == 0 ? 0 : 1;
}

int cmd_list(const std::string& format) {
    const auto& entries = Catalog::instance().entries();
    if (format == "json") {
        json out = json::array();
        for (const auto& e : entries)
            out.push_back({{"id", e.id}, {"anchor", e.anchor}, {"domain", e.domain}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : entries) std::printf("%-24s %s\n", e.id.c_str(), e.anchor.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator and identity ledger for degenerate Bernoulli polynomials,\n"
                 "generalized Stirling numbers, and their Pascal-type matrix factorizations"};
    app.require_subcommand(1);
    app.fallthrough();
    // --h names the shift parameter of the second-type Stirling matrices, so
    // help stays on --help only.
    app.set_help_flag("--help", "print help and exit");

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "evaluate a sequence at exact parameters");
    compute
        ->add_option("sequence", copt.sequence,
                     "one of: beta alpha bernoulli bernoulli2 stirling1 stirling2 stirling1-gen "
                     "stirling2-gen r-stirling1 r-stirling2 lah hyperharmonic gff rising")
        ->required();
    compute->add_option("--m", copt.m, "index m, N or A..B");
    std::string kopt;
    auto* kflag = compute->add_option("--k", kopt, "second index k, N or A..B");
    compute->add_option("--w", copt.w, "integer order w");
    compute->add_option("--r", copt.r, "rank r (r-Stirling, hyperharmonic)");
    compute->add_option("--lambda", copt.lambda, "rational or symbol (default lambda)");
    compute->add_option("--mu", copt.mu, "rational or symbol (default mu)");
    compute->add_option("--x", copt.x, "rational or symbol (default x)");
    compute->add_option("--y", copt.y, "rational or symbol (default y)");

    MatrixOptions mopt;
    auto* matrix = app.add_subcommand("matrix", "print a matrix family member");
    matrix
        ->add_option("family", mopt.family,
                     "one of: pascal r t g q bernoulli l stirling1-t1 stirling2-t1 "
                     "stirling1-t2 stirling2-t2")
        ->required();
    matrix->add_option("--n", mopt.n, "matrix order");
    matrix->add_option("--k", mopt.k, "factor index for g/q (default n)");
    matrix->add_option("--w", mopt.w, "integer order for bernoulli/l");
    matrix->add_option("--h", mopt.h, "shift for the second-type Stirling matrices");
    matrix->add_option("--lambda", mopt.lambda, "rational or symbol (default lambda)");
    matrix->add_option("--mu", mopt.mu, "rational or symbol (default mu)");
    matrix->add_option("--x", mopt.x, "rational or symbol (default x)");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "check catalog identities by exact evaluation");
    verify->add_option("--identity", vopt.identity, "catalog id or \"all\"");
    verify->add_option("--profile", vopt.profile, "grid size")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--perturb", vopt.perturb,
                     "add 1 to every instantiated right-hand side (harness self-test)");

    auto* list = app.add_subcommand("list", "list the identity catalog");

    for (CLI::App* sub : {compute, matrix, verify, list})
        sub->set_help_flag("--help", "print help and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) {
            if (kflag->count() > 0) copt.k = kopt;
            return cmd_compute(copt, format);
        }
        if (matrix->parsed()) return cmd_matrix(mopt, format);
        if (verify->parsed()) return cmd_verify(vopt, format);
        if (list->parsed()) return cmd_list(format);
    } catch (const degenmat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
