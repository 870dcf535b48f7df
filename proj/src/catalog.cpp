#include "degenmat/ledger.hpp"

#include "catalog_util.hpp"

namespace degenmat {

Catalog::Catalog() {
    cat::register_pascal(entries_);
    cat::register_bernoulli(entries_);
    cat::register_stirling_first(entries_);
    cat::register_stirling_second(entries_);
    cat::register_carlitz(entries_);
    cat::register_r_stirling(entries_);
    cat::register_hyperharmonic(entries_);
    cat::register_lah(entries_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto [it, inserted] = by_id_.emplace(entries_[i].id, i);
        if (!inserted) throw Error("duplicate catalog id: " + entries_[i].id);
    }
}

}  // namespace degenmat
