#pragma once

#include <memory>

#include "chiral/blt_search.h"
#include "chiral/errors.h"

namespace chiral {

/// Thrown when the sigma-tuple enumeration runs past cfg.hhl_budget.
class BudgetExceeded : public CapacityError {
 public:
  BudgetExceeded(const std::string& what, SearchStats partial)
      : CapacityError(what), partial_(partial) {}
  const SearchStats& partial_stats() const noexcept { return partial_; }

 private:
  SearchStats partial_;
};

/// Baseline classification over tuples of distinguished rotations
/// (s_1, ..., s_{n-1}), every s_i of order >= 3. Output goes through
/// alpha_from_sigma so it is directly comparable with classify().
SearchResult classify_hhl(std::shared_ptr<const PermGroup> group, const SearchConfig& cfg = {});

}  // namespace chiral
