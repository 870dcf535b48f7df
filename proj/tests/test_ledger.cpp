#include <algorithm>
#include <set>

#include "degenmat/errors.hpp"
#include "degenmat/ledger.hpp"
#include "doctest.h"

using namespace degenmat;

TEST_SUITE("ledger") {

TEST_CASE("catalog shape") {
    const auto& entries = Catalog::instance().entries();
    CHECK(entries.size() >= 40);
    std::set<std::string> ids;
    for (const auto& e : entries) {
        CHECK(!e.anchor.empty());
        CHECK(!e.domain.empty());
        ids.insert(e.id);
    }
    CHECK(ids.size() == entries.size());
    CHECK(ids.count("thm-2.1") == 1);
    CHECK(ids.count("eq-13") == 1);
    CHECK(ids.count("eq-17") == 1);
    CHECK(ids.count("thm-bs") == 1);
}

TEST_CASE("verify single identities on the quick grid") {
    const auto& catalog = Catalog::instance();
    const Grid grid = Grid::defaults(Profile::quick);
    for (const char* id : {"thm-2.1", "eq-0", "eq-9", "eq-13", "example-p4"}) {
        const VerifyReport r = catalog.verify(id, grid);
        CHECK(r.clean());
        CHECK(r.attempted > 0);
        CHECK(r.passed == r.attempted);
        CHECK(r.id == id);
    }
}

TEST_CASE("eq-6 on its spec grid") {
    Grid grid = Grid::defaults(Profile::quick);
    grid.set_range("i", 0, 6).set_range("h", 0, 2);
    const VerifyReport r = Catalog::instance().verify("eq-6", grid);
    CHECK(r.clean());
}

TEST_CASE("unknown identity") {
    CHECK_THROWS_AS(Catalog::instance().verify("nonsense", Grid::defaults(Profile::quick)),
                    UnknownIdentity);
    CHECK(Catalog::instance().find("nonsense") == nullptr);
}

TEST_CASE("side conditions raise DomainViolation instead of failing spuriously") {
    Grid grid = Grid::defaults(Profile::quick);
    grid.set_values("m", {5}).set_range("h", 0, 2);  // every pair violates 0 <= m < h
    CHECK_THROWS_AS(Catalog::instance().verify("h-sum-beta", grid), DomainViolation);
}

TEST_CASE("perturbed entries always fail") {
    const auto& catalog = Catalog::instance();
    Grid grid = Grid::defaults(Profile::quick);
    grid.set_range("n", 1, 3).set_range("m", 0, 3).set_range("i", 0, 3);
    for (const char* id : {"thm-2.1", "eq-0", "eq-9", "sec5.3-sum-kH", "pascal-addition"}) {
        const VerifyReport r = catalog.verify(id, grid, /*perturb_rhs=*/true);
        CHECK(r.passed == 0);
        CHECK(r.failures.size() == static_cast<std::size_t>(r.attempted));
        for (const auto& f : r.failures) {
            CHECK(!f.bindings.empty());
            CHECK(f.lhs != f.rhs);
        }
    }
}

TEST_CASE("reports are deterministic") {
    const auto& catalog = Catalog::instance();
    const Grid grid = Grid::defaults(Profile::quick);
    const VerifyReport a = catalog.verify("eq-0", grid);
    const VerifyReport b = catalog.verify("eq-0", grid);
    CHECK(a.attempted == b.attempted);
    CHECK(a.passed == b.passed);
    CHECK(a.failures.size() == b.failures.size());
}

TEST_CASE("verify_all quick profile is clean") {
    const auto reports = Catalog::instance().verify_all(Profile::quick);
    CHECK(reports.size() == Catalog::instance().entries().size());
    for (const auto& r : reports) {
        CHECK(r.clean());
        CHECK(r.passed == r.attempted);
    }
}

TEST_CASE("verify_all respects an explicit thread count") {
    const auto seq = Catalog::instance().verify_all(Profile::quick, 1);
    const auto par = Catalog::instance().verify_all(Profile::quick, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].id == par[i].id);
        CHECK(seq[i].attempted == par[i].attempted);
        CHECK(seq[i].passed == par[i].passed);
    }
}

}
