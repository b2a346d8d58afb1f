#pragma once

#include <vector>

#include "tlink/polynomial.hpp"
#include "tlink/thompson.hpp"

namespace tlink::cli {

struct FindexEntry {
  TreePair pair;
  LaurentPoly bracket;
  int components = 0;
};

struct FindexReport {
  int max_leaves = 0;
  int pairs = 0;
  int trivial = 0;
  std::vector<FindexEntry> nontrivial;
};

/// Whether p = +-A^(3m) d^(k-1) for some integer m; on success stores m.
bool unlink_certificate(const LaurentPoly& p, int components, int* m = nullptr);

/// Checks the unlink certificate on the link of every reduced pair with at
/// most max_leaves (<= 6) leaves.
FindexReport findex_scan(int max_leaves);

}  // namespace tlink::cli
