#include "findex.hpp"

#include "tlink/diagram.hpp"
#include "tlink/error.hpp"
#include "tlink/invariants.hpp"

namespace tlink::cli {

bool unlink_certificate(const LaurentPoly& p, int components, int* m) {
  if (p.is_zero() || components < 1) return false;
  const LaurentPoly unlink = LaurentPoly::loop_value().pow(components - 1);
  const int shift = p.min_exponent() - unlink.min_exponent();
  if (shift % 3 != 0) return false;
  // unlink has leading coefficient +-1, so the sign is a ratio of those.
  const auto sign = p.coefficient(p.min_exponent()) * unlink.coefficient(unlink.min_exponent());
  if (sign != 1 && sign != -1) return false;
  if (p != LaurentPoly::constant(sign) * unlink.shifted(shift)) return false;
  if (m) *m = shift / 3;
  return true;
}

FindexReport findex_scan(int max_leaves) {
  if (max_leaves < 1) throw DomainError("max_leaves must be positive");
  if (max_leaves > 6) throw CapExceeded("findex scan supports at most 6 leaves");
  FindexReport report;
  report.max_leaves = max_leaves;
  for (int n = 1; n <= max_leaves; ++n)
    for (const auto& pair : enumerate_reduced_pairs(n)) {
      const auto link = link_of_unreduced(pair);
      FindexEntry entry{pair, bracket(link), component_count(link)};
      ++report.pairs;
      if (unlink_certificate(entry.bracket, entry.components))
        ++report.trivial;
      else
        report.nontrivial.push_back(std::move(entry));
    }
  return report;
}

}  // namespace tlink::cli
