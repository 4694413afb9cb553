#pragma once

#include <string>

#include "bpw/error.hpp"

namespace bpw {

/// Resource limits turned into ResourceGuardError when exceeded.
struct ResourceGuards {
  long max_weight = 8;
  long max_depth = 64;
  long max_slice_dimension = 20000;

  void check_weight(long w, const char* what) const {
    if (w > max_weight)
      throw ResourceGuardError(std::string(what) + ": weight " + std::to_string(w) + " exceeds guard " +
                               std::to_string(max_weight));
  }
  void check_depth(long d) const {
    if (d > max_depth) throw ResourceGuardError("recursion depth guard " + std::to_string(max_depth) + " exceeded");
  }
  void check_dimension(std::size_t d, const char* what) const {
    if (static_cast<long>(d) > max_slice_dimension)
      throw ResourceGuardError(std::string(what) + ": slice dimension " + std::to_string(d) + " exceeds guard " +
                               std::to_string(max_slice_dimension));
  }
};

}  // namespace bpw
