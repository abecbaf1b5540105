#pragma once

#include <memory>
#include <span>
#include <vector>

#include "chiral/cplus.h"
#include "chiral/search_types.h"

namespace chiral {

struct SearchResult {
  std::vector<PolytopeRecord> records;
  SearchStats stats;
};

/// Chiral (and, with include_regular, directly regular) polytopes whose
/// rotation group is `group`, by extending one representative per
/// conjugacy class of elements of order >= 3 with involutions.
///
/// Records come out sorted by rank, Schläfli type and generator order, one
/// per isomorphism class.
SearchResult classify(std::shared_ptr<const PermGroup> group, const SearchConfig& cfg = {});

/// Every tuple (seed, a_2, ..., a_k) with a_i drawn from `pool` in pool
/// order whose last generator completes generation of the group and which
/// survives the pruning rules and the intersection check. `seed` holds a_1
/// only. Counters are added to *stats when given.
std::vector<AlphaTuple> extend_tuple(const AlphaTuple& seed, std::span<const Permutation> pool,
                                     const SearchConfig& cfg, SearchStats* stats = nullptr);

/// First tuple of each isomorphism class, in input order. Tuples must all
/// generate the same group.
std::vector<AlphaTuple> deduplicate(std::span<const AlphaTuple> tuples, const SearchConfig& cfg);

/// Throws InvariantViolation unless the record generates its group, passes
/// the linear diagram and intersection checks, and carries the right
/// chirality flag (and is chiral when regular tuples were not requested).
void check_record(const PolytopeRecord& record, const SearchConfig& cfg);

}  // namespace chiral
