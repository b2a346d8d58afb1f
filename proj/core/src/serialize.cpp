#include "tlink/serialize.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tlink {

namespace {

Json number_or_null(double v) {
  if (std::isnan(v) || std::isinf(v)) return nullptr;
  return v;
}

}  // namespace

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string rational_str(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json to_json(const TreePair& p) {
  return Json{{"plus", p.plus().str()}, {"minus", p.minus().str()}, {"leaves", p.leaf_count()}};
}

Json to_json(const SignedPlaneGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.side == Side::above ? "above" : "below"}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json to_json(const LinkDiagram& d) {
  Json crossings = Json::array();
  for (const auto& c : d.crossings())
    crossings.push_back(Json{{"arcs", c.arcs}, {"type", c.type == CrossingType::slash_over ? "slash_over" : "back_over"}});
  return Json{{"crossings", std::move(crossings)},
              {"arcs", d.arc_count()},
              {"free_loops", d.free_loops()},
              {"components", component_count(d)}};
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::object();
  for (auto [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const TuttePoly& t) {
  Json terms = Json::array();
  for (auto [key, c] : t.terms()) terms.push_back(Json::array({key.first, key.second, c}));
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const InvariantSpec& s) {
  Json params = Json::object();
  switch (s.kind) {
    case InvariantKind::chromatic:
    case InvariantKind::colourings:
      params["Q"] = s.q;
      break;
    case InvariantKind::tutte_potts: {
      if (s.x && s.y) {
        params["x"] = rational_str(*s.x);
        params["y"] = rational_str(*s.y);
      } else {
        params["Q"] = s.q;
        params["K"] = s.k;
      }
      auto [x, y] = s.tutte_point();
      params["point"] = Json::array({x, y});
      break;
    }
    case InvariantKind::bracket:
      params["Q"] = s.q;
      params["root"] = s.root;
      params["A"] = to_json(s.bracket_root());
      break;
  }
  return params;
}

Json to_json(const GramReport& r) {
  Json matrix = Json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < r.matrix.cols(); ++j) row.push_back(to_json(r.matrix(i, j)));
    matrix.push_back(std::move(row));
  }
  Json out{{"kind", kind_name(r.spec.kind)},
           {"params", to_json(r.spec)},
           {"n", r.n},
           {"matrix", std::move(matrix)},
           {"self_adjoint", r.self_adjoint},
           {"max_asym", r.max_asym},
           {"verdict", verdict_name(r.verdict)},
           {"min_eigenvalue", number_or_null(r.min_eigenvalue)},
           {"seed", r.seed ? Json(*r.seed) : Json(nullptr)}};
  if (r.exact) {
    Json exact = Json::array();
    for (const auto& row : *r.exact) {
      Json line = Json::array();
      for (const auto& v : row) line.push_back(rational_str(v));
      exact.push_back(std::move(line));
    }
    out["exact"] = std::move(exact);
  }
  if (!r.witness.empty()) out["witness"] = r.witness;
  out["tolerance"] = r.tolerance;
  return out;
}

Json to_json(const SweepSummary& s) {
  Json out{{"kind", kind_name(s.spec.kind)},
           {"params", to_json(s.spec)},
           {"r", s.r},
           {"max_leaves", s.max_leaves},
           {"trials", s.trials},
           {"seed", s.seed},
           {"psd", s.psd},
           {"not_psd", s.not_psd},
           {"not_self_adjoint", s.not_self_adjoint},
           {"necessary_failures", s.necessary_failures},
           {"worst_min_eigenvalue", number_or_null(s.worst_min_eigenvalue)},
           {"worst_asym", s.worst_asym}};
  if (s.first_failure) {
    out["first_failure"] = *s.first_failure;
    out["failure_report"] = to_json(*s.failure_report);
  }
  return out;
}

Json to_json(const ChromaticLimitRow& row) {
  return Json{{"K", row.k}, {"scaled", row.scaled}, {"residual", row.residual}, {"relative", row.relative}};
}

}  // namespace tlink
