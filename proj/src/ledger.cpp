#include "degenmat/ledger.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "degenmat/errors.hpp"

namespace degenmat {

Grid Grid::defaults(Profile p) {
    Grid g;
    const bool full = (p == Profile::full);
    g.set_range("n", 1, full ? 6 : 5);
    g.set_range("m", 0, full ? 7 : 5);
    g.set_range("i", 0, full ? 7 : 5);
    g.set_range("h", full ? -3 : -2, full ? 3 : 2);
    g.set_range("w", full ? -2 : -1, full ? 3 : 2);
    g.set_range("z", -1, 2);
    g.set_range("r", 0, full ? 4 : 3);
    g.set_range("p", 0, full ? 4 : 3);
    g.set_samples({Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2),
                   Rational(3, 5)});
    return g;
}

Grid& Grid::set_range(const std::string& name, long lo, long hi) {
    std::vector<long> v;
    for (long t = lo; t <= hi; ++t) v.push_back(t);
    return set_values(name, std::move(v));
}

Grid& Grid::set_values(const std::string& name, std::vector<long> values) {
    if (values.empty()) throw DomainViolation("empty range for \"" + name + "\"");
    ranges_[name] = std::move(values);
    return *this;
}

Grid& Grid::set_samples(std::vector<Rational> samples) {
    if (samples.empty()) throw DomainViolation("empty sample list");
    samples_ = std::move(samples);
    return *this;
}

const std::vector<long>& Grid::values(const std::string& name) const {
    auto it = ranges_.find(name);
    if (it == ranges_.end()) throw DomainViolation("grid has no range named \"" + name + "\"");
    return it->second;
}

long Grid::hi(const std::string& name) const {
    const auto& v = values(name);
    long m = v.front();
    for (long t : v) m = std::max(m, t);
    return m;
}

void CaseSink::record(const std::string& bindings, bool ok, const std::string& lhs,
                      const std::string& rhs) {
    ++report_.attempted;
    if (ok) {
        ++report_.passed;
    } else {
        report_.failures.push_back(Failure{bindings, lhs, rhs});
    }
}

void CaseSink::scalar(const std::string& bindings, const MultiPoly& lhs, const MultiPoly& rhs) {
    const MultiPoly r = perturb_ ? rhs + MultiPoly(Rational(1)) : rhs;
    if (lhs == r) {
        record(bindings, true, {}, {});
    } else {
        record(bindings, false, lhs.str(), r.str());
    }
}

void CaseSink::scalar(const std::string& bindings, const Rational& lhs, const Rational& rhs) {
    scalar(bindings, MultiPoly(lhs), MultiPoly(rhs));
}

void CaseSink::matrix(const std::string& bindings, const LowerTri& lhs, const LowerTri& rhs) {
    matrix_cols_from(bindings, lhs, rhs, 1);
}

void CaseSink::matrix_cols_from(const std::string& bindings, const LowerTri& lhs,
                                const LowerTri& rhs, long min_col) {
    if (lhs.size() != rhs.size()) {
        record(bindings, false, "order " + std::to_string(lhs.size()),
               "order " + std::to_string(rhs.size()));
        return;
    }
    if (min_col > lhs.size()) return;  // empty comparison region: not a case
    const MultiPoly shift(Rational(perturb_ ? 1 : 0));
    for (long i = 1; i <= lhs.size(); ++i) {
        for (long j = std::max(min_col, 1L); j <= i; ++j) {
            const MultiPoly want = rhs.at(i, j) + shift;
            if (lhs.at(i, j) != want) {
                record(bindings + " entry(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       false, lhs.at(i, j).str(), want.str());
                return;
            }
        }
    }
    record(bindings, true, {}, {});
}

const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

const Identity* Catalog::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

VerifyReport Catalog::run_entry(const Identity& entry, const Grid& grid, bool perturb_rhs) const {
    VerifyReport report;
    report.id = entry.id;
    report.anchor = entry.anchor;
    CaseSink sink(report, perturb_rhs);
    const auto start = std::chrono::steady_clock::now();
    entry.instantiate(grid, sink);
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (report.attempted == 0)
        throw DomainViolation("grid admits no case of identity \"" + entry.id + "\"");
    return report;
}

VerifyReport Catalog::verify(const std::string& id, const Grid& grid, bool perturb_rhs) const {
    const Identity* entry = find(id);
    if (entry == nullptr) throw UnknownIdentity(id);
    return run_entry(*entry, grid, perturb_rhs);
}

std::vector<VerifyReport> Catalog::verify_all(Profile profile, unsigned threads,
                                              bool perturb_rhs) const {
    const Grid grid = Grid::defaults(profile);
    if (threads == 0) {
        if (const char* env = std::getenv("DEGENMAT_THREADS")) {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed > 0) threads = static_cast<unsigned>(parsed);
        }
    }
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(entries_.size()));

    std::vector<VerifyReport> reports(entries_.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            reports[i] = run_entry(entries_[i], grid, perturb_rhs);
        return reports;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= entries_.size()) return;
                reports[i] = run_entry(entries_[i], grid, perturb_rhs);
            }
        });
    }
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace degenmat
