#include "chiral/group_order.h"

#include <algorithm>

#include "chiral/errors.h"

namespace chiral {

GroupOrder& GroupOrder::operator*=(std::uint64_t factor) {
  if (factor != 0 && value_ > static_cast<Rep>(-1) / factor)
    throw CapacityError("group order exceeds 128-bit capacity");
  value_ *= factor;
  return *this;
}

std::uint64_t GroupOrder::to_u64() const {
  if (!fits_u64()) throw CapacityError("group order " + to_string() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string GroupOrder::to_string() const {
  if (value_ == 0) return "0";
  std::string s;
  for (Rep v = value_; v != 0; v /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace chiral
