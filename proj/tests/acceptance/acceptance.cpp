// One line per acceptance criterion: [PASS]/[FAIL], number, name, seconds,
// detail. Exit status is the number of failures. TLINK_TIME_SCALE relaxes
// the time budgets (for instrumented builds).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "findex.hpp"
#include "tlink/diagram.hpp"
#include "tlink/gamma.hpp"
#include "tlink/invariants.hpp"
#include "tlink/oracles.hpp"
#include "tlink/positivity.hpp"
#include "tlink/thompson.hpp"

using namespace tlink;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later ones are counted.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (out_.pass) out_.detail = what;
    out_.pass = false;
    ++failures_;
  }
  Outcome done(const std::string& summary) {
    if (out_.pass) out_.detail = summary;
    if (failures_ > 1) out_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    return out_;
  }

 private:
  Outcome out_;
  int failures_ = 0;
};

std::vector<TreePair> reduced_pairs_up_to(int leaves) {
  std::vector<TreePair> all;
  for (int n = 1; n <= leaves; ++n)
    for (auto& p : enumerate_reduced_pairs(n)) all.push_back(p);
  return all;
}

LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

bool near(cd a, cd b, double tol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

// 1. A 4-tuple of T4 reproducing the chromatic example matrix at Q=4.
Outcome chromatic_example() {
  const std::vector<std::vector<int>> target{
      {108, 84, 72, 48}, {84, 108, 72, 72}, {72, 72, 108, 48}, {48, 72, 48, 108}};
  const auto trees = all_trees(4);
  const int t = static_cast<int>(trees.size());
  std::vector<std::vector<BigInt>> chr(t, std::vector<BigInt>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) chr[i][j] = chromatic(gamma_graph(TreePair(trees[i], trees[j])).underlying(), 4);

  Check c;
  int matches = 0;
  int tuples = 0;
  std::vector<int> found;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      for (int d = 0; d < t; ++d)
        for (int e = 0; e < t; ++e) {
          std::vector<int> tuple{a, b, d, e};
          if (std::set<int>(tuple.begin(), tuple.end()).size() != 4) continue;
          ++tuples;
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) ok = chr[tuple[i]][tuple[j]] == target[i][j];
          if (ok) {
            ++matches;
            if (found.empty()) found = tuple;
          }
        }
  c.expect(t == 5, "|T4| = " + std::to_string(t));
  c.expect(tuples == 120, "searched " + std::to_string(tuples) + " tuples");
  c.expect(matches > 0, "no 4-tuple reproduces the matrix");
  if (!found.empty()) {
    // Same matrix through the normalized Gram path: entries / 27.
    std::vector<TreePair> elements;
    for (int i : found) elements.emplace_back(trees[i], Tree::parse("(((l l) l) l)"));
    InvariantSpec spec;
    spec.kind = InvariantKind::chromatic;
    spec.q = 4;
    const auto m = gram_matrix(elements, spec);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        c.expect((*m.exact)[i][j] == Rational(target[i][j], 27), "normalized Gram entry differs from /27 value");
  }
  std::string tuple_text;
  for (int i : found) tuple_text += (tuple_text.empty() ? "" : ", ") + trees[i].str();
  return c.done(std::to_string(matches) + " of 120 tuples match, e.g. [" + tuple_text + "]");
}

// 2. Trefoil.
Outcome trefoil() {
  Check c;
  const auto g = cli::element_of("(x1 x0^-1)^2");
  const auto b = bracket(link_of(g));
  c.expect(b == poly({{0, 1}, {4, -1}, {-8, 1}}), "bracket = " + b.str());
  c.expect(component_count(link_of(g)) == 1, "not a knot");
  return c.done("<L> = " + b.str() + ", leaves " + std::to_string(g.leaf_count()));
}

// 3. Hopf link.
Outcome hopf() {
  Check c;
  const auto g = cli::element_of("x0^-1 x1 x0^-1");
  const auto b = bracket(link_of(g));
  c.expect(b == poly({{4, -1}, {-4, -1}}), "bracket = " + b.str());
  c.expect(component_count(link_of(g)) == 2, "not two components");
  return c.done("<L> = " + b.str());
}

Eigen::MatrixXcd scaled(std::vector<std::vector<cd>> rows, double factor) {
  Eigen::MatrixXcd m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j] * factor;
  return m;
}

// 4. Reference bracket Gram matrices at Q=2 and Q=4.
Outcome bracket_gram() {
  Check c;
  const auto elements = reference_quadruple();
  const cd I(0, 1);
  const auto q2 = scaled({{4, 1, 2, 0}, {1, 4, 1, 2}, {2, 1, 4, I}, {0, 2, -I, 4}}, std::pow(2.0, -2.5));
  const auto q4 = scaled({{16, 1, 4, -2}, {1, 16, 1, 4}, {4, 1, 16, 1}, {-2, 4, 1, 16}}, std::pow(2.0, -5));
  std::string summary;
  for (auto [q, expected] : {std::pair{2, q2}, std::pair{4, q4}}) {
    InvariantSpec spec;
    spec.kind = InvariantKind::bracket;
    spec.q = q;
    spec.root = 1;
    const cd root = spec.bracket_root();
    const cd want = q == 2 ? std::polar(1.0, 3 * std::numbers::pi / 8) : I;
    c.expect(near(root, want, 1e-12), "root 1 for Q=" + std::to_string(q) + " is not the reference root");
    const auto report = gram_report(elements, spec);
    const double err = (report.matrix - expected).cwiseAbs().maxCoeff();
    c.expect(err <= 1e-9, "Q=" + std::to_string(q) + " entries off by " + num(err));
    c.expect(report.verdict == Verdict::psd, "Q=" + std::to_string(q) + " verdict " + verdict_name(report.verdict));
    c.expect(report.min_eigenvalue >= -1e-9, "negative eigenvalue");
    summary += "Q=" + std::to_string(q) + " max err " + num(err) + " min eig " + num(report.min_eigenvalue) + "; ";
  }
  return c.done(summary);
}

// 5. Q=5: not self-adjoint.
Outcome bracket_q5() {
  Check c;
  InvariantSpec spec;
  spec.kind = InvariantKind::bracket;
  spec.q = 5;
  spec.root = 1;
  const cd a = spec.bracket_root();
  const auto report = gram_report(reference_quadruple(), spec);
  const double scale = std::pow(5.0, 2.5);
  const cd e34 = std::pow(a, -8) - std::pow(a, 4) + 1.0;
  const cd e43 = std::pow(a, 8) - std::pow(a, -4) + 1.0;
  c.expect(near(report.matrix(2, 3) * scale, e34, 1e-9), "entry (3,4) differs");
  c.expect(near(report.matrix(3, 2) * scale, e43, 1e-9), "entry (4,3) differs");
  c.expect(report.max_asym > 1e-6, "max asymmetry only " + num(report.max_asym));
  c.expect(report.verdict == Verdict::not_self_adjoint, "verdict " + verdict_name(report.verdict));
  return c.done("A = " + num(a.real()) + (a.imag() < 0 ? "" : "+") + num(a.imag()) + "i, max asym " +
                num(report.max_asym) + ", " + verdict_name(report.verdict));
}

// 6. Roots of Q.
Outcome roots() {
  Check c;
  const double pi = std::numbers::pi;
  auto same_multiset = [](std::array<cd, 4> got, std::vector<cd> want) {
    for (const auto& w : want) {
      auto it = std::find_if(got.begin(), got.end(), [&](cd g) { return std::abs(g - w) <= 1e-12; });
      if (it == got.end()) return false;
      *it = cd(1e300, 0);
    }
    return true;
  };
  auto pm = [](double angle) {
    const cd z = std::polar(1.0, angle);
    return std::vector<cd>{z, -z, std::conj(z), -std::conj(z)};
  };
  c.expect(same_multiset(roots_for_Q(2), pm(3 * pi / 8)), "Q=2 roots");
  c.expect(same_multiset(roots_for_Q(3), pm(5 * pi / 12)), "Q=3 roots");
  c.expect(same_multiset(roots_for_Q(4), {cd(0, 1), cd(0, 1), cd(0, -1), cd(0, -1)}), "Q=4 roots");
  for (int q = 5; q <= 10; ++q)
    for (const auto& a : roots_for_Q(q)) {
      c.expect(std::abs(std::abs(a) - 1.0) > 1e-6, "unit modulus root at Q=" + std::to_string(q));
      c.expect(std::abs(a.real()) <= 1e-12, "root not purely imaginary at Q=" + std::to_string(q));
      c.expect(is_bracket_root(q, a, 1e-12), "not a root at Q=" + std::to_string(q));
    }
  return c.done("Q=2,3,4 closed forms and Q=5..10 imaginary, |A| != 1");
}

// 7. Potts partition function against the Tutte polynomial.
Outcome potts_tutte() {
  Check c;
  const auto pairs = reduced_pairs_up_to(5);
  double worst = 0;
  int cases = 0;
  for (const auto& p : pairs) {
    const auto g = gamma_graph(p).underlying();
    const auto t = tutte(g);
    for (int q : {2, 3, 4})
      for (double k : {-2.0, -0.5, 0.7, 1.3}) {
        const double y = std::exp(k);
        const double x = (y + q - 1) / (y - 1);
        const double want = q * std::pow(y - 1, g.vertex_count - 1) *
                            std::pow(y, -static_cast<double>(g.edges.size())) * t.evaluate(x, y);
        const double z = potts_partition(g, q, k);
        const double rel = std::abs(z - want) / std::abs(want);
        worst = std::max(worst, rel);
        c.expect(rel <= 1e-9, "relative error " + num(rel) + " on " + p.str());
        ++cases;
      }
  }
  return c.done(std::to_string(cases) + " cases over " + std::to_string(pairs.size()) + " graphs, worst rel " +
                num(worst));
}

// 8. Chromatic limit K -> -infinity.
Outcome chromatic_limit() {
  Check c;
  const std::vector<double> ks{-5, -10, -20, -30};
  int graphs = 0;
  double worst = 0;
  for (const auto& p : reduced_pairs_up_to(5)) {
    const auto g = gamma_graph(p).underlying();
    if (g.vertex_count > 5) continue;
    ++graphs;
    const auto rows = chromatic_limit_check(g, 3, ks);
    c.expect(rows.back().relative < 1e-6, "relative residual " + num(rows.back().relative) + " at K=-30");
    for (std::size_t i = 1; i < rows.size(); ++i)
      c.expect(rows[i].residual <= rows[i - 1].residual, "residuals not decreasing on " + p.str());
    worst = std::max(worst, rows.back().relative);
  }
  return c.done(std::to_string(graphs) + " graphs, worst relative residual at K=-30 " + num(worst));
}

// 9. Oracle equivalences.
Outcome oracle_suite() {
  Check c;
  std::set<std::int64_t> seen;
  const auto t4 = all_trees(4);
  for (const auto& a : t4)
    for (const auto& b : t4) {
      const auto va = chromatic_vector(a, 4);
      const auto vb = chromatic_vector(b, 4);
      std::int64_t pairing = 0;
      for (std::size_t s = 0; s < va.size(); ++s) pairing += va[s] * vb[s];
      const auto chr = chromatic(gamma_graph(TreePair(a, b)).underlying(), 4);
      c.expect(BigInt(pairing) == chr, "chromatic pairing differs on " + a.str() + " | " + b.str());
      seen.insert(pairing);
    }
  c.expect(seen.count(84) && seen.count(72) && seen.count(48), "84/72/48 not among the pairings");

  int brackets = 0;
  double worst = 0;
  for (const auto& p : reduced_pairs_up_to(5)) {
    const auto graph = gamma_graph(p);
    const auto poly = bracket(medial_link(graph));
    for (int q : {2, 3, 4}) {
      const cd a = roots_for_Q(q)[0];
      const cd z = kauffman_partition(graph, q, a);
      const double err = std::abs(z - poly.evaluate(a));
      worst = std::max(worst, err);
      c.expect(err <= 1e-9, "kauffman partition differs on " + p.str());
      ++brackets;
    }
  }

  int colourings = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_trees(n))
      for (const auto& b : all_trees(n)) {
        const auto link = link_of_unreduced(TreePair(a, b));
        for (int q : {3, 5}) {
          c.expect(colouring_partition(link, q) == col_count(link, q),
                   "colouring partition differs on " + a.str() + " | " + b.str());
          ++colourings;
        }
      }

  int semilinks = 0;
  for (const auto& a : all_trees(3))
    for (const auto& b : all_trees(3)) {
      const auto va = fox_semilink_vector(a, 3);
      const auto vb = fox_semilink_vector(b, 3);
      BigInt pairing = 0;
      for (std::size_t s = 0; s < va.size(); ++s) pairing += BigInt(va[s]) * vb[s];
      c.expect(pairing == col_count(link_of_unreduced(TreePair(a, b)), 3),
               "semi-link pairing differs on " + a.str() + " | " + b.str());
      ++semilinks;
    }
  return c.done("chromatic 25, bracket " + std::to_string(brackets) + " (worst " + num(worst) + "), colourings " +
                std::to_string(colourings) + ", semi-links " + std::to_string(semilinks));
}

// 10. Invariance under caret padding.
Outcome well_defined() {
  Check c;
  std::mt19937_64 rng(20240610);
  InvariantSpec potts;
  potts.kind = InvariantKind::tutte_potts;
  potts.q = 3;
  potts.k = 1.0;
  const auto [x, y] = potts.tutte_point();
  const cd a = roots_for_Q(2)[0];
  const TuttePoly x_plus_y = TuttePoly::x() + TuttePoly::y();
  const LaurentPoly d = LaurentPoly::loop_value();
  int checks = 0;
  for (int s = 0; s < 200; ++s) {
    const auto g = random_element(7, rng);
    const auto chr = chr_fn(g, 4);
    const double tut = tutte_fn(g, x, y);
    const cd br = bracket_fn(g, a);
    const auto col = colq_fn(g, 3);
    auto rep = g;
    for (int k = 0; k < 3; ++k) {
      const auto before = rep;
      std::uniform_int_distribution<int> leaf(0, rep.leaf_count() - 1);
      rep = pad_with_caret(rep, leaf(rng));
      // adding a caret rescales the raw invariants
      const auto gb = gamma_graph(before).underlying();
      const auto ga = gamma_graph(rep).underlying();
      c.expect(tutte(ga) == x_plus_y * tutte(gb), "Tutte caret rule fails");
      c.expect(bracket(link_of_unreduced(rep)) == d * bracket(link_of_unreduced(before)), "bracket caret rule fails");
      c.expect(col_count(link_of_unreduced(rep), 3) == 3 * col_count(link_of_unreduced(before), 3),
               "colouring caret rule fails");

      c.expect(chr_fn(rep, 4) == chr, "chr_fn changes under padding");
      c.expect(std::abs(tutte_fn(rep, x, y) - tut) <= 1e-12 * std::max(1.0, std::abs(tut)),
               "tutte_fn changes under padding");
      c.expect(std::abs(bracket_fn(rep, a) - br) <= 1e-12 * std::max(1.0, std::abs(br)),
               "bracket_fn changes under padding");
      c.expect(colq_fn(rep, 3) == col, "colq_fn changes under padding");
      ++checks;
    }
  }
  return c.done(std::to_string(checks) + " padded representatives agree");
}

// 11. Random positivity sweeps.
Outcome sweeps() {
  Check c;
  EvaluationCache cache;
  std::vector<InvariantSpec> specs;
  for (int q : {2, 3, 4}) specs.push_back({InvariantKind::chromatic, q});
  specs.push_back({InvariantKind::tutte_potts, 3, 1.0});
  for (int q : {2, 3, 4}) specs.push_back({InvariantKind::bracket, q, 1.0, 1});
  for (int q : {3, 5}) specs.push_back({InvariantKind::colourings, q});
  std::string summary;
  for (const auto& spec : specs) {
    const auto s = positivity_sweep(4, 6, spec, 100, 7777, 1e-9, &cache);
    const std::string label = kind_name(spec.kind) + " Q=" + std::to_string(spec.q);
    c.expect(s.psd == 100, label + ": " + std::to_string(s.psd) + "/100 PSD");
    c.expect(s.necessary_failures == 0, label + ": necessary conditions fail");
    c.expect(s.worst_asym <= 1e-11, label + ": asymmetry " + num(s.worst_asym));
    c.expect(s.worst_min_eigenvalue >= -1e-9, label + ": eigenvalue " + num(s.worst_min_eigenvalue));
    summary += label + " min eig " + num(s.worst_min_eigenvalue) + "; ";
  }
  return c.done("9 specs x 100 trials PSD; " + summary);
}

// 12. F-index scan.
Outcome findex() {
  Check c;
  const auto four = cli::findex_scan(4);
  c.expect(four.nontrivial.empty() && four.trivial == four.pairs, "a pair with <= 4 leaves is not certified trivial");
  const auto five = cli::findex_scan(5);
  const auto omega2 = reduce(cli::element_of("(x1 x0^-1)^2"));
  const bool flagged = std::any_of(five.nontrivial.begin(), five.nontrivial.end(),
                                   [&](const auto& e) { return e.pair == omega2; });
  c.expect(flagged, "omega^2 not reported");
  return c.done("<=4 leaves: " + std::to_string(four.pairs) + " trivial; <=5 leaves: " +
                std::to_string(five.nontrivial.size()) + " of " + std::to_string(five.pairs) +
                " nontrivial incl. omega^2");
}

Word random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(1, 6), index(0, 3), power(1, 2), sign(0, 1);
  Word w;
  for (int i = length(rng); i > 0; --i) w.push_back({index(rng), power(rng) * (sign(rng) ? 1 : -1)});
  return w;
}

// 13. Group relations, action homomorphism and mirror property.
Outcome group_theory() {
  Check c;
  c.expect(word_to_pair(parse_word("x2 x1")) == word_to_pair(parse_word("x1 x3")), "x2 x1 != x1 x3");
  c.expect(word_to_pair(parse_word("x3 x1")) == word_to_pair(parse_word("x1 x4")), "x3 x1 != x1 x4");
  std::mt19937_64 rng(99);
  for (int s = 0; s < 500; ++s) {
    const auto a = word_to_pair(random_word(rng));
    const auto b = word_to_pair(random_word(rng));
    std::uniform_int_distribution<int> ex(0, 20);
    const int e = ex(rng);
    std::uniform_int_distribution<std::uint64_t> nu(0, std::uint64_t{1} << e);
    const Dyadic t(nu(rng), e);
    c.expect(apply(multiply(a, b), t) == apply(b, apply(a, t)), "apply(ab, t) != apply(b, apply(a, t))");
  }
  const cd a(0.9 * std::cos(0.7), 0.9 * std::sin(0.7));
  for (int s = 0; s < 100; ++s) {
    const auto g = random_element(6, rng);
    const auto lhs = bracket_fn(invert(g), a);
    const auto rhs = bracket_fn(g, 1.0 / a);
    c.expect(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)), "mirror property fails on " + g.str());
    c.expect(bracket(link_of(invert(g))) == bracket(link_of(g)).substitute_inverse(), "mirror polynomial differs");
  }
  return c.done("relations hold; 500 action samples; 100 mirror samples");
}

}  // namespace

int main() {
  double time_scale = 1.0;
  if (const char* s = std::getenv("TLINK_TIME_SCALE")) time_scale = std::max(1.0, std::atof(s));

  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"chromatic example matrix", 1, chromatic_example},
      {"trefoil bracket", 1, trefoil},
      {"Hopf link bracket", 1, hopf},
      {"bracket Gram matrices Q=2,4", 5, bracket_gram},
      {"non-positivity at Q=5", 5, bracket_q5},
      {"roots of Q", 1, roots},
      {"Potts-Tutte identity", 30, potts_tutte},
      {"chromatic limit K->-inf", 10, chromatic_limit},
      {"oracle equivalences", 60, oracle_suite},
      {"well-definedness under padding", 60, well_defined},
      {"positivity sweeps", 120, sweeps},
      {"F-index scan", 30, findex},
      {"group theory", 30, group_theory},
  };

  int failures = 0;
  double total = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (secs > cr.budget * time_scale) {
      out.pass = false;
      out.detail = "over time budget " + num(cr.budget) + " s; " + out.detail;
    }
    failures += !out.pass;
    std::printf("[%s] %2zu %-32s %7.2fs  %s\n", out.pass ? "PASS" : "FAIL", i + 1, cr.name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures;
}
