#ifndef DEGENMAT_LEDGER_HPP
#define DEGENMAT_LEDGER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "degenmat/lower_tri.hpp"
#include "degenmat/multipoly.hpp"

namespace degenmat {

enum class Profile { quick, full };

/// Named integer ranges and the rational sample list an identity is
/// instantiated over. Identities intersect these with their own side
/// conditions; a grid that leaves an identity with no admissible case at all
/// raises DomainViolation from verify().
class Grid {
public:
    /// Standard grids: quick caps orders at 5, full at 6/7.
    static Grid defaults(Profile p);

    Grid& set_range(const std::string& name, long lo, long hi);
    Grid& set_values(const std::string& name, std::vector<long> values);
    Grid& set_samples(std::vector<Rational> samples);

    const std::vector<long>& values(const std::string& name) const;
    long hi(const std::string& name) const;
    const std::vector<Rational>& samples() const { return samples_; }

private:
    std::map<std::string, std::vector<long>> ranges_;
    std::vector<Rational> samples_;
};

struct Failure {
    std::string bindings;
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one identity over a grid. passed + failures = attempted.
struct VerifyReport {
    std::string id;
    std::string anchor;
    long attempted = 0;
    long passed = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;

    bool clean() const { return failures.empty(); }
};

/// Collects instantiated cases. When perturb_rhs is set, every right-hand
/// side is shifted by +1 before comparison (harness self-test).
class CaseSink {
public:
    explicit CaseSink(VerifyReport& report, bool perturb_rhs)
        : report_(report), perturb_(perturb_rhs) {}

    void scalar(const std::string& bindings, const MultiPoly& lhs, const MultiPoly& rhs);
    void scalar(const std::string& bindings, const Rational& lhs, const Rational& rhs);
    void matrix(const std::string& bindings, const LowerTri& lhs, const LowerTri& rhs);
    /// Compares only entries (i, j) with j >= min_col (and j <= i <= n).
    void matrix_cols_from(const std::string& bindings, const LowerTri& lhs, const LowerTri& rhs,
                          long min_col);

    long attempted() const { return report_.attempted; }

private:
    void record(const std::string& bindings, bool ok, const std::string& lhs,
                const std::string& rhs);

    VerifyReport& report_;
    bool perturb_;
};

/// One catalog entry: a checkable identity with its anchor (section reference
/// plus a short verbatim quote) and human-readable domain description.
struct Identity {
    std::string id;
    std::string anchor;
    std::string domain;
    std::function<void(const Grid&, CaseSink&)> instantiate;
};

/// The identity catalog: immutable after construction, stable order.
class Catalog {
public:
    static const Catalog& instance();

    const std::vector<Identity>& entries() const { return entries_; }
    const Identity* find(const std::string& id) const;

    /// Checks one identity over the grid. Throws UnknownIdentity for a missing
    /// id and DomainViolation when the grid admits no case.
    VerifyReport verify(const std::string& id, const Grid& grid, bool perturb_rhs = false) const;

    /// Runs the whole catalog on the profile's default grid. threads = 0 means
    /// the DEGENMAT_THREADS environment variable, defaulting to 1.
    std::vector<VerifyReport> verify_all(Profile profile, unsigned threads = 0,
                                         bool perturb_rhs = false) const;

private:
    Catalog();
    VerifyReport run_entry(const Identity& entry, const Grid& grid, bool perturb_rhs) const;

    std::vector<Identity> entries_;
    std::map<std::string, std::size_t> by_id_;
};

}  // namespace degenmat

#endif
