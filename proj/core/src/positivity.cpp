#include "tlink/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "tlink/error.hpp"

namespace tlink {

void InvariantSpec::validate() const {
  switch (kind) {
    case InvariantKind::chromatic:
      if (q < 2) throw DomainError("chromatic needs Q >= 2");
      break;
    case InvariantKind::tutte_potts:
      if (x && y) {
        if (*x + *y == 0) throw DomainError("x + y must be nonzero");
        break;
      }
      if (x || y) throw DomainError("give both x and y");
      if (q < 2) throw DomainError("tutte_potts needs Q >= 2");
      if (k == 0.0) throw DomainError("tutte_potts needs K != 0");
      break;
    case InvariantKind::bracket:
      if (q < 2) throw DomainError("bracket needs Q >= 2");
      if (root < 1 || root > 4) throw DomainError("root selector must be 1..4");
      break;
    case InvariantKind::colourings:
      if (q < 1 || q % 2 == 0) throw DomainError("colourings need odd Q >= 1");
      break;
  }
}

bool InvariantSpec::exact() const {
  return kind == InvariantKind::chromatic || kind == InvariantKind::colourings;
}

std::pair<double, double> InvariantSpec::tutte_point() const {
  if (x && y) return {to_double(*x), to_double(*y)};
  const double yy = std::exp(k);
  return {(yy + q - 1) / (yy - 1), yy};
}

std::complex<double> InvariantSpec::bracket_root() const { return roots_for_Q(q)[root - 1]; }

std::string kind_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::chromatic:
      return "chromatic";
    case InvariantKind::tutte_potts:
      return "tutte_potts";
    case InvariantKind::bracket:
      return "bracket";
    case InvariantKind::colourings:
      return "colourings";
  }
  return "?";
}

InvariantKind parse_kind(const std::string& name) {
  if (name == "chromatic" || name == "chr") return InvariantKind::chromatic;
  if (name == "tutte" || name == "tutte_potts" || name == "potts") return InvariantKind::tutte_potts;
  if (name == "bracket" || name == "kauffman") return InvariantKind::bracket;
  if (name == "colourings" || name == "colorings" || name == "fox" || name == "col")
    return InvariantKind::colourings;
  throw DomainError("unknown invariant kind '" + name + "'");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::psd:
      return "PSD";
    case Verdict::not_psd:
      return "NOT_PSD";
    case Verdict::not_self_adjoint:
      return "NOT_SELF_ADJOINT";
  }
  return "?";
}

std::array<std::complex<double>, 4> roots_for_Q(int q) {
  if (q < 2) throw DomainError("roots need Q >= 2");
  const double sq = std::sqrt(static_cast<double>(q));
  const std::complex<double> disc = std::sqrt(std::complex<double>(q - 4.0, 0.0));
  std::array<std::complex<double>, 4> roots;
  int i = 0;
  for (double sign : {1.0, -1.0}) {
    const std::complex<double> a2 = (-sq + sign * disc) / 2.0;
    const auto a = std::sqrt(a2);
    roots[i++] = a;
    roots[i++] = -a;
  }
  auto angle = [](std::complex<double> z) {
    double t = std::arg(z);
    if (t < -1e-12) t += 2 * std::numbers::pi;
    return std::max(t, 0.0);
  };
  std::sort(roots.begin(), roots.end(), [&](auto a, auto b) {
    const double ta = angle(a);
    const double tb = angle(b);
    if (std::abs(ta - tb) > 1e-12) return ta < tb;
    return std::abs(a) < std::abs(b);
  });
  return roots;
}

const NormalizedValue& EvaluationCache::get(const TreePair& pair, const InvariantSpec& spec) {
  const bool by_q = spec.exact();
  std::tuple<int, int, TreePair> key{static_cast<int>(spec.kind), by_q ? spec.q : 0, pair};
  auto it = values_.find(key);
  if (it == values_.end()) it = values_.emplace(std::move(key), normalized_value(pair, spec.kind, spec.q)).first;
  return it->second;
}

namespace {

std::complex<double> value_at(const NormalizedValue& v, const InvariantSpec& spec) {
  switch (spec.kind) {
    case InvariantKind::chromatic:
    case InvariantKind::colourings:
      return to_double(v.exact());
    case InvariantKind::tutte_potts: {
      if (spec.x && spec.y) return to_double(v.at(*spec.x, *spec.y));
      auto [x, y] = spec.tutte_point();
      return v.at(x, y);
    }
    case InvariantKind::bracket:
      return v.at(spec.bracket_root());
  }
  return 0;
}

}  // namespace

std::complex<double> evaluate(const TreePair& g, const InvariantSpec& spec, EvaluationCache* cache) {
  spec.validate();
  if (cache) return value_at(cache->get(g, spec), spec);
  return value_at(normalized_value(g, spec.kind, spec.q), spec);
}

GramReport gram_matrix(std::span<const TreePair> elements, const InvariantSpec& spec, const GramOptions& opts) {
  if (elements.empty()) throw DomainError("empty element list");
  spec.validate();
  EvaluationCache local;
  EvaluationCache& cache = opts.cache ? *opts.cache : local;

  const auto form = common_form(elements);
  const int r = static_cast<int>(elements.size());
  GramReport report;
  report.spec = spec;
  report.n = form.bottom.leaf_count();
  report.matrix = Eigen::MatrixXcd::Zero(r, r);
  if (spec.exact()) report.exact.emplace(r, std::vector<Rational>(r));

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      TreePair pair(form.tops[i], form.tops[j]);
      if (!opts.unreduced) pair = reduce(pair);
      const auto& value = cache.get(pair, spec);
      if (report.exact) {
        (*report.exact)[i][j] = value.exact();
        report.matrix(i, j) = to_double((*report.exact)[i][j]);
      } else {
        report.matrix(i, j) = value_at(value, spec);
      }
    }
  return report;
}

GramReport psd_check(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  GramReport report;
  report.matrix = m;
  report.tolerance = tol;
  const double scale = 1.0 + (m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  report.max_asym = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  report.self_adjoint = report.max_asym <= tol * scale;
  if (!report.self_adjoint) {
    report.verdict = Verdict::not_self_adjoint;
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  if (m.size() == 0) return report;
  const Eigen::MatrixXcd hermitian = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.verdict = report.min_eigenvalue >= -tol * scale ? Verdict::psd : Verdict::not_psd;
  return report;
}

GramReport psd_check_exact(const std::vector<std::vector<Rational>>& m) {
  const int r = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != r) throw DomainError("matrix is not square");

  Eigen::MatrixXcd numeric(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) numeric(i, j) = to_double(m[i][j]);
  GramReport report = psd_check(numeric, 0.0);
  report.tolerance = 0.0;
  report.exact = m;

  report.max_asym = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (m[i][j] != m[j][i]) report.max_asym = std::max(report.max_asym, std::abs(to_double(m[i][j] - m[j][i])));
  report.self_adjoint = report.max_asym == 0;
  report.witness.clear();
  if (!report.self_adjoint) {
    report.verdict = Verdict::not_self_adjoint;
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  if (r > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(numeric, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
  }

  // Symmetric elimination; `active` holds original indices still present.
  auto a = m;
  std::vector<int> active(r);
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> pivots;
  report.verdict = Verdict::psd;
  while (!active.empty()) {
    int best = -1;
    for (int i : active) {
      if (a[i][i] < 0) {
        report.verdict = Verdict::not_psd;
        report.witness = pivots;
        report.witness.push_back(i);
        break;
      }
      if (a[i][i] > 0 && (best < 0 || a[i][i] > a[best][best])) best = i;
    }
    if (report.verdict == Verdict::not_psd) break;
    if (best < 0) {
      // Every remaining diagonal entry is zero, so the block must vanish.
      for (int i : active)
        for (int j : active)
          if (a[i][j] != 0 && report.verdict == Verdict::psd) {
            report.verdict = Verdict::not_psd;
            report.witness = pivots;
            report.witness.push_back(std::min(i, j));
            report.witness.push_back(std::max(i, j));
          }
      break;
    }
    pivots.push_back(best);
    active.erase(std::find(active.begin(), active.end(), best));
    for (int i : active)
      for (int j : active) a[i][j] -= a[i][best] * a[best][j] / a[best][best];
  }
  std::sort(report.witness.begin(), report.witness.end());
  return report;
}

GramReport gram_report(std::span<const TreePair> elements, const InvariantSpec& spec, double tol,
                       const GramOptions& opts) {
  GramReport built = gram_matrix(elements, spec, opts);
  GramReport checked = built.exact ? psd_check_exact(*built.exact) : psd_check(built.matrix, tol);
  checked.spec = built.spec;
  checked.n = built.n;
  checked.matrix = built.matrix;
  if (built.exact) checked.tolerance = tol;
  return checked;
}

std::vector<TreePair> reference_quadruple() {
  return {word_to_pair(parse_word("x0^-1")), word_to_pair(parse_word("x1^-1")),
          word_to_pair(parse_word("x1 x0^-1")), word_to_pair(parse_word("x0 x1^-1"))};
}

SweepSummary positivity_sweep(int r, int max_leaves, const InvariantSpec& spec, int trials, std::uint64_t seed,
                              double tol, EvaluationCache* cache) {
  if (r < 1) throw DomainError("r must be positive");
  if (max_leaves < 1) throw DomainError("max_leaves must be positive");
  if (trials < 0) throw DomainError("trials must be nonnegative");
  spec.validate();
  EvaluationCache local;
  GramOptions opts;
  opts.cache = cache ? cache : &local;

  SweepSummary summary;
  summary.spec = spec;
  summary.r = r;
  summary.max_leaves = max_leaves;
  summary.trials = trials;
  summary.seed = seed;
  summary.worst_min_eigenvalue = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<TreePair> elements;
    if (t == 0 && r == 4 && spec.kind == InvariantKind::bracket) {
      elements = reference_quadruple();
    } else {
      for (int i = 0; i < r; ++i) elements.push_back(random_element(max_leaves, rng));
    }
    GramReport report = gram_report(elements, spec, tol, opts);
    report.seed = seed;

    const double scale = 1.0 + report.matrix.cwiseAbs().maxCoeff();
    bool necessary = true;
    for (int i = 0; i < r; ++i) {
      const auto e = report.matrix(i, i);
      necessary = necessary && e.real() > 0 && std::abs(e.imag()) <= tol * scale;
      for (int j = 0; j < r; ++j) necessary = necessary && e.real() + tol * scale >= std::abs(report.matrix(i, j));
    }
    summary.necessary_failures += !necessary;
    summary.worst_asym = std::max(summary.worst_asym, report.max_asym);
    if (!std::isnan(report.min_eigenvalue))
      summary.worst_min_eigenvalue = std::min(summary.worst_min_eigenvalue, report.min_eigenvalue);

    switch (report.verdict) {
      case Verdict::psd:
        ++summary.psd;
        break;
      case Verdict::not_psd:
        ++summary.not_psd;
        break;
      case Verdict::not_self_adjoint:
        ++summary.not_self_adjoint;
        break;
    }
    if (report.verdict != Verdict::psd && !summary.first_failure) {
      summary.first_failure = t;
      summary.failure_report = report;
    }
  }
  if (trials == 0) summary.worst_min_eigenvalue = 0;
  return summary;
}

}  // namespace tlink
