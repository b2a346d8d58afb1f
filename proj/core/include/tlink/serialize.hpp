#pragma once

#include <complex>

#include <nlohmann/json.hpp>

#include "tlink/diagram.hpp"
#include "tlink/gamma.hpp"
#include "tlink/oracles.hpp"
#include "tlink/polynomial.hpp"
#include "tlink/positivity.hpp"
#include "tlink/thompson.hpp"

// JSON documents emitted by the command-line tool. Key order is fixed so
// output is byte-stable.
namespace tlink {

using Json = nlohmann::ordered_json;

/// [re, im]
Json to_json(std::complex<double> z);
/// Integers as numbers when they fit in 64 bits, otherwise decimal strings.
Json to_json(const BigInt& v);
/// "p/q" or "p".
std::string rational_str(const Rational& r);

/// {"plus": ..., "minus": ..., "leaves": n}
Json to_json(const TreePair& p);
/// {"n": ..., "edges": [[u, v, "above"|"below"], ...]}
Json to_json(const SignedPlaneGraph& g);
/// {"crossings": [{"arcs": [...], "type": ...}], "arcs": ..., "free_loops": ...,
///  "components": ...}
Json to_json(const LinkDiagram& d);
/// {"terms": {"exponent": coefficient, ...}} with exponents ascending.
Json to_json(const LaurentPoly& p);
/// {"terms": [[i, j, c], ...]} for c x^i y^j.
Json to_json(const TuttePoly& t);
Json to_json(const InvariantSpec& s);
/// {"kind", "params", "n", "matrix", "self_adjoint", "max_asym", "verdict",
///  "min_eigenvalue", "seed"} plus "exact" and "witness" when present.
Json to_json(const GramReport& r);
Json to_json(const SweepSummary& s);
Json to_json(const ChromaticLimitRow& row);

}  // namespace tlink
