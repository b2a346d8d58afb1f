#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlink/invariants.hpp"
#include "tlink/numeric.hpp"
#include "tlink/thompson.hpp"

namespace tlink {

/// Which normalized function to evaluate and at which parameters.
struct InvariantSpec {
  InvariantKind kind = InvariantKind::chromatic;
  int q = 2;
  double k = 1.0;  ///< Potts coupling, tutte_potts only
  int root = 1;    ///< index into roots_for_Q, bracket only
  /// Explicit Tutte point overriding (Q, K) when both are set.
  std::optional<Rational> x;
  std::optional<Rational> y;

  /// Throws DomainError on parameters outside the kind's domain.
  void validate() const;
  /// Whether Gram matrices for this spec have exact rational entries.
  bool exact() const;
  /// The Tutte evaluation point: (x, y) if given, otherwise the Potts point
  /// y = e^K, x = (y + Q - 1) / (y - 1).
  std::pair<double, double> tutte_point() const;
  std::complex<double> bracket_root() const;
};

std::string kind_name(InvariantKind kind);
/// Accepts chromatic, tutte, tutte_potts, potts, bracket, colourings, fox.
InvariantKind parse_kind(const std::string& name);

enum class Verdict { psd, not_psd, not_self_adjoint };

std::string verdict_name(Verdict v);

/// Roots of A^4 + sqrt(Q) A^2 + 1, with A^2 = (-sqrt(Q) +- sqrt(Q-4)) / 2 and
/// both square roots of each, sorted by argument in [0, 2 pi) then modulus.
std::array<std::complex<double>, 4> roots_for_Q(int q);

struct GramReport {
  InvariantSpec spec;
  int n = 0;  ///< common leaf count of the padded representatives
  Eigen::MatrixXcd matrix;
  /// Present for chromatic and colourings.
  std::optional<std::vector<std::vector<Rational>>> exact;
  bool self_adjoint = true;
  double max_asym = 0;
  Verdict verdict = Verdict::psd;
  /// Smallest eigenvalue of the Hermitian part; NaN if not self-adjoint.
  double min_eigenvalue = 0;
  /// Indices of a principal submatrix that is not PSD (exact path only).
  std::vector<int> witness;
  double tolerance = 1e-9;
  std::optional<std::uint64_t> seed;
};

/// Raw invariants of reduced pairs, reused across Gram matrices.
class EvaluationCache {
 public:
  const NormalizedValue& get(const TreePair& pair, const InvariantSpec& spec);
  std::size_t size() const { return values_.size(); }
  void clear() { values_.clear(); }

 private:
  // (kind, Q or 0 when the raw value does not depend on Q, pair)
  std::map<std::tuple<int, int, TreePair>, NormalizedValue> values_;
};

struct GramOptions {
  /// Evaluate g(T^i, T^j) on the padded pair as given instead of reducing.
  bool unreduced = false;
  EvaluationCache* cache = nullptr;
};

/// Matrix (phi(g_i g_j^-1)) where g_i g_j^-1 = g(T^i, T^j) for the tops of
/// common_form(elements). Fills matrix, exact and n; the check fields are
/// left default.
GramReport gram_matrix(std::span<const TreePair> elements, const InvariantSpec& spec, const GramOptions& opts = {});

/// Value of the normalized function of `spec` on g.
std::complex<double> evaluate(const TreePair& g, const InvariantSpec& spec, EvaluationCache* cache = nullptr);

/// Self-adjointness within tol (1 + max |entry|), then the spectrum of the
/// Hermitian part against the same bound.
GramReport psd_check(const Eigen::MatrixXcd& m, double tol = 1e-9);

/// Exact test by symmetric pivoting and Schur complements. A negative pivot
/// or a zero pivot with a nonzero row is reported with the indices of the
/// offending principal submatrix. min_eigenvalue is filled numerically.
GramReport psd_check_exact(const std::vector<std::vector<Rational>>& m);

/// Builds the matrix and runs the matching check.
GramReport gram_report(std::span<const TreePair> elements, const InvariantSpec& spec, double tol = 1e-9,
                       const GramOptions& opts = {});

/// x0^-1, x1^-1, x1 x0^-1, x0 x1^-1.
std::vector<TreePair> reference_quadruple();

struct SweepSummary {
  InvariantSpec spec;
  int r = 0;
  int max_leaves = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int psd = 0;
  int not_psd = 0;
  int not_self_adjoint = 0;
  /// Trials violating phi(e) > 0 real or phi(e) >= |phi(g)|.
  int necessary_failures = 0;
  double worst_min_eigenvalue = 0;
  double worst_asym = 0;
  std::optional<int> first_failure;  ///< first trial whose verdict is not PSD
  std::optional<GramReport> failure_report;
};

/// `trials` random r-tuples of elements with at most max_leaves leaves. For
/// bracket with r = 4, trial 0 is reference_quadruple().
SweepSummary positivity_sweep(int r, int max_leaves, const InvariantSpec& spec, int trials, std::uint64_t seed,
                              double tol = 1e-9, EvaluationCache* cache = nullptr);

}  // namespace tlink
