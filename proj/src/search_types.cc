#include "chiral/search_types.h"

#include <string>

#include "chiral/errors.h"

namespace chiral {

void SearchConfig::validate() const {
  if (max_rank < 3 || max_rank > 11)
    throw InputError("max_rank must lie in 3..11, got " + std::to_string(max_rank));
  if (enumeration_cap < 1) throw InputError("enumeration_cap must be positive");
  if (threads < 0) throw InputError("threads must be non-negative");
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  classes_seeded += o.classes_seeded;
  tuples_tested += o.tuples_tested;
  ic_checks += o.ic_checks;
  chirality_checks += o.chirality_checks;
  records_emitted += o.records_emitted;
  truncated_branches += o.truncated_branches;
  degenerate_second_rotation += o.degenerate_second_rotation;
  candidates_before_dedup += o.candidates_before_dedup;
  wall_time += o.wall_time;
  return *this;
}

}  // namespace chiral
