#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "tlink/diagram.hpp"
#include "tlink/gamma.hpp"
#include "tlink/numeric.hpp"
#include "tlink/polynomial.hpp"
#include "tlink/tree.hpp"

// Brute-force partition functions and Gram vectors. Spin configurations and
// edge states are indexed by sum(sigma_i * Q^i), vertex (or arc) 0 least
// significant; spins take values 0..Q-1.
namespace tlink {

inline constexpr std::uint64_t kSpinCap = 10'000'000;
inline constexpr std::uint64_t kNodeCap = 100'000'000;

/// Q^k, throwing CapExceeded if it exceeds cap.
std::uint64_t checked_power(int q, int k, std::uint64_t cap);

/// Indicator of the proper Q-colourings of gamma_half(t), length Q^n.
std::vector<std::uint8_t> chromatic_vector(const Tree& t, int q, std::uint64_t cap = kSpinCap);

/// sum over sigma of exp(-K * #{edges with different end spins}).
double potts_partition(const Multigraph& g, int q, double k, std::uint64_t cap = kSpinCap);

/// Whether A^4 + sqrt(Q) A^2 + 1 vanishes to within tol.
bool is_bracket_root(int q, std::complex<double> a, double tol = 1e-9);

/// Q^(-(|V|+1)/2) sum_sigma prod w(edge) with w = -A^3 on equal spins and
/// A^-1 otherwise on below edges, and w^-1 on above edges. Equals the
/// bracket of medial_link(g) at A.
std::complex<double> kauffman_partition(const SignedPlaneGraph& g, int q, std::complex<double> a,
                                        std::uint64_t cap = kSpinCap);

/// Entry sigma: product over gamma_half(t) of w^-1(sigma_u, sigma_v). For
/// |A| = 1 the Hermitian pairing of the vectors of T+ and T- times
/// Q^(-(n+1)/2) is the partition function of Gamma(T+, T-).
std::vector<std::complex<double>> kauffman_vector(const Tree& t, int q, std::complex<double> a,
                                                  std::uint64_t cap = kSpinCap);

/// Number of arc labellings in Z_Q with weight 1 at every crossing (over
/// labels equal, and 2 * over = sum of under labels), times Q per free
/// loop. Depth-first over arcs with pruning; throws CapExceeded after
/// node_cap search nodes.
BigInt colouring_partition(const LinkDiagram& d, int q, std::uint64_t node_cap = kNodeCap);

/// Entry at boundary tuple tau in Z_Q^(2n): number of labellings of the
/// internal arcs of upper_semilink(t) with weight 1 at every crossing. For a
/// single leaf the entry is 1 iff the two boundary labels agree.
std::vector<std::uint64_t> fox_semilink_vector(const Tree& t, int q, std::uint64_t cap = kSpinCap);

struct ChromaticLimitRow {
  double k = 0;
  double scaled = 0;    ///< e^(K|E|) Z(G; Q, K)
  double residual = 0;  ///< |scaled - Chr(G, Q)|
  double relative = 0;  ///< residual / max(1, Chr(G, Q))
};

/// e^(K|E|) Z(G; Q, K) tends to Chr(G, Q) as K -> -infinity.
std::vector<ChromaticLimitRow> chromatic_limit_check(const Multigraph& g, int q, std::span<const double> ks,
                                                     std::uint64_t cap = kSpinCap);

/// Tutte polynomial from the subset expansion
/// sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)). At most 24 edges.
TuttePoly tutte_rank_nullity(const Multigraph& g);

/// Kauffman bracket by the skein recursion on the first crossing, memoized
/// on relabelled diagrams.
LaurentPoly bracket_skein(const LinkDiagram& d);

}  // namespace tlink
