#pragma once

#include <complex>
#include <optional>
#include <variant>

#include "tlink/diagram.hpp"
#include "tlink/gamma.hpp"
#include "tlink/numeric.hpp"
#include "tlink/polynomial.hpp"
#include "tlink/thompson.hpp"

namespace tlink {

/// Number of proper Q-colourings, by deletion-contraction. Parallel edges
/// collapse; any loop gives 0.
BigInt chromatic(const Multigraph& g, int q);

/// Tutte polynomial by deletion-contraction over parallel classes, memoized
/// on relabelled multiplicity matrices.
TuttePoly tutte(const Multigraph& g);

inline constexpr int kDefaultBracketCap = 26;

/// Kauffman bracket by the full state sum over all 2^c smoothings:
/// sum of A^(#A - #B) d^(loops - 1), loops including the free loops.
/// Throws CapExceeded above `max_crossings` crossings.
LaurentPoly bracket(const LinkDiagram& d, int max_crossings = kDefaultBracketCap);

/// Number of Fox Q-colourings (Q odd): colours in Z_Q on the over-arcs with
/// 2 * over = under_in + under_out at every crossing; each free loop adds a
/// factor Q. Throws DomainError for even or nonpositive Q.
BigInt col_count(const LinkDiagram& d, int q);

enum class InvariantKind { chromatic, tutte_potts, bracket, colourings };

/// A raw invariant of one tree-pair representative, kept with that
/// representative's leaf count n. Normalized values divide by
/// (Q-1)^(n-1), (x+y)^(n-1), d^n or Q^n according to the kind; the result
/// does not depend on the representative.
struct NormalizedValue {
  InvariantKind kind = InvariantKind::chromatic;
  int leaves = 1;
  int q = 0;  ///< colour count for chromatic and colourings
  std::variant<BigInt, TuttePoly, LaurentPoly> raw;

  /// chromatic and colourings only.
  Rational exact() const;
  /// tutte_potts only.
  double at(double x, double y) const;
  Rational at(const Rational& x, const Rational& y) const;
  /// bracket only.
  std::complex<double> at(std::complex<double> a) const;
};

/// Computes the raw invariant on `representative` exactly as given.
NormalizedValue normalized_value(const TreePair& representative, InvariantKind kind, int q = 0);

/// Chr(Gamma(g), Q) / (Q-1)^(n-1); Q >= 2.
Rational chr_fn(const TreePair& g, int q);
/// T_Gamma(g)(x, y) / (x+y)^(n-1); x + y != 0.
Rational tutte_fn(const TreePair& g, const Rational& x, const Rational& y);
double tutte_fn(const TreePair& g, double x, double y);
/// <L(g)>(A) / d^n with d = -A^2 - A^-2 != 0.
std::complex<double> bracket_fn(const TreePair& g, std::complex<double> a);
/// Col_Q(L(g)) / Q^n; Q odd.
Rational colq_fn(const TreePair& g, int q);

}  // namespace tlink
