#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "findex.hpp"
#include "tlink/error.hpp"
#include "tlink/invariants.hpp"
#include "tlink/oracles.hpp"
#include "tlink/positivity.hpp"
#include "tlink/serialize.hpp"

namespace tlink::cli {

namespace {

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->index, -it->exponent});
  return out;
}

// Parses "p/q", an integer or a decimal literal exactly.
Rational parse_rational(const std::string& text) {
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Rational r(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
      return r;
    }
    std::string digits = text;
    int scale = 0;
    if (auto e = digits.find_first_of("eE"); e != std::string::npos) {
      scale -= std::stoi(digits.substr(e + 1));
      digits.resize(e);
    }
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      scale += static_cast<int>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument(text);
    if (digits.front() == '+') digits.erase(0, 1);
    Rational r{BigInt(digits)};
    if (scale > 0) r /= Rational(ipow(BigInt(10), scale));
    if (scale < 0) r *= Rational(ipow(BigInt(10), -scale));
    return r;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'", 0);
  }
}

struct Options {
  std::string kind = "chromatic";
  int q = 2;
  double k = 1.0;
  int root = 1;
  std::string x;
  std::string y;
  std::string words_file;
  std::vector<std::string> words;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool check_psd = false;
  bool expect_psd = false;
  int max_leaves = 4;
  bool unreduced = false;
  int trials = 0;
  int r = 4;
  std::vector<double> ks;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--word", o.words, "element as a word, e.g. \"(x1 x0^-1)^2\"");
  app->add_option("--words", o.words_file, "file with one word per line")->check(CLI::ExistingFile);
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--unreduced", o.unreduced, "use representatives as given");
}

void add_invariant(CLI::App* app, Options& o) {
  app->add_option("--kind", o.kind, "chromatic | tutte | bracket | colourings");
  app->add_option("--q", o.q, "Q");
  app->add_option("--k", o.k, "Potts coupling K");
  app->add_option("--root", o.root, "bracket root index")->check(CLI::Range(1, 4));
  app->add_option("--x", o.x, "Tutte x (rational)");
  app->add_option("--y", o.y, "Tutte y (rational)");
}

InvariantSpec spec_of(const Options& o) {
  InvariantSpec s;
  s.kind = parse_kind(o.kind);
  s.q = o.q;
  s.k = o.k;
  s.root = o.root;
  if (!o.x.empty()) s.x = parse_rational(o.x);
  if (!o.y.empty()) s.y = parse_rational(o.y);
  s.validate();
  return s;
}

std::vector<std::string> word_texts(const Options& o) {
  std::vector<std::string> texts;
  if (!o.words_file.empty()) texts = read_words(o.words_file);
  texts.insert(texts.end(), o.words.begin(), o.words.end());
  return texts;
}

struct Element {
  std::string text;
  TreePair pair;
};

std::vector<Element> elements_of(const Options& o) {
  std::vector<Element> out;
  for (const auto& text : word_texts(o)) out.push_back({text, element_of(text)});
  if (out.empty()) throw ParseError("no element given; use --word or --words", 0);
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// A JSON document for a single element, or an array for several.
Json one_or_many(std::vector<Json> docs) {
  if (docs.size() == 1) return std::move(docs.front());
  Json arr = Json::array();
  for (auto& d : docs) arr.push_back(std::move(d));
  return arr;
}

int cmd_parse(const Options& o, std::ostream& out) {
  const auto elements = elements_of(o);
  if (o.format == "csv") {
    out << "word,plus,minus,leaves\n";
    for (const auto& e : elements)
      out << '"' << e.text << "\",\"" << e.pair.plus().str() << "\",\"" << e.pair.minus().str() << "\","
          << e.pair.leaf_count() << '\n';
    return kOk;
  }
  std::vector<Json> docs;
  for (const auto& e : elements) {
    Json doc = to_json(e.pair);
    doc["word"] = format_word(parse_word(expand_powers(e.text)));
    docs.push_back(std::move(doc));
  }
  out << one_or_many(std::move(docs)).dump(2) << '\n';
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const auto elements = elements_of(o);
  std::vector<Json> docs;
  if (o.format == "csv") out << "element,u,v,side\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto g = gamma_graph(elements[i].pair);
    if (o.format == "csv") {
      for (const auto& e : g.edges())
        out << i << ',' << e.u << ',' << e.v << ',' << (e.side == Side::above ? "above" : "below") << '\n';
    } else {
      docs.push_back(to_json(g));
    }
  }
  if (o.format == "json") out << one_or_many(std::move(docs)).dump(2) << '\n';
  return kOk;
}

int cmd_link(const Options& o, std::ostream& out) {
  const auto elements = elements_of(o);
  std::vector<Json> docs;
  if (o.format == "csv") out << "element,crossing,ne,nw,sw,se,type\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto d = link_of_unreduced(elements[i].pair);
    if (o.format == "csv") {
      for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& x = d.crossings()[c];
        out << i << ',' << c;
        for (int a : x.arcs) out << ',' << a;
        out << ',' << (x.type == CrossingType::slash_over ? "slash_over" : "back_over") << '\n';
      }
    } else {
      docs.push_back(to_json(d));
    }
  }
  if (o.format == "json") out << one_or_many(std::move(docs)).dump(2) << '\n';
  return kOk;
}

int cmd_invariant(const Options& o, const std::vector<std::string>& given, std::ostream& out) {
  const auto spec = spec_of(o);
  const bool root_given = std::find(given.begin(), given.end(), "--root") != given.end();
  const auto elements = elements_of(o);
  std::vector<Json> docs;
  std::ostringstream csv;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& g = elements[i].pair;
    const auto value = normalized_value(g, spec.kind, spec.q);
    Json doc;
    switch (spec.kind) {
      case InvariantKind::chromatic:
      case InvariantKind::colourings: {
        const auto& raw = std::get<BigInt>(value.raw);
        doc = Json{{"count", to_json(raw)}, {"normalized", rational_str(value.exact())}};
        csv << i << ',' << raw.str() << ',' << rational_str(value.exact()) << '\n';
        break;
      }
      case InvariantKind::tutte_potts: {
        const auto& raw = std::get<TuttePoly>(value.raw);
        doc = to_json(raw);
        if (spec.x && spec.y) {
          doc["value"] = rational_str(raw.evaluate(*spec.x, *spec.y));
          doc["normalized"] = rational_str(value.at(*spec.x, *spec.y));
        }
        for (auto [key, c] : raw.terms()) csv << i << ',' << key.first << ',' << key.second << ',' << c << '\n';
        break;
      }
      case InvariantKind::bracket: {
        const auto& raw = std::get<LaurentPoly>(value.raw);
        doc = to_json(raw);
        if (root_given) {
          doc["A"] = to_json(spec.bracket_root());
          doc["value"] = to_json(raw.evaluate(spec.bracket_root()));
          doc["normalized"] = to_json(value.at(spec.bracket_root()));
        }
        for (auto [e, c] : raw.terms()) csv << i << ',' << e << ',' << c << '\n';
        break;
      }
    }
    docs.push_back(std::move(doc));
  }
  if (o.format == "csv") {
    switch (spec.kind) {
      case InvariantKind::chromatic:
      case InvariantKind::colourings:
        out << "element,count,normalized\n";
        break;
      case InvariantKind::tutte_potts:
        out << "element,x_power,y_power,coefficient\n";
        break;
      case InvariantKind::bracket:
        out << "element,exponent,coefficient\n";
        break;
    }
    out << csv.str();
  } else {
    out << one_or_many(std::move(docs)).dump(2) << '\n';
  }
  return kOk;
}

void write_matrix_csv(const GramReport& r, std::ostream& out) {
  const auto n = r.matrix.cols();
  for (Eigen::Index j = 0; j < n; ++j) out << (j ? "," : "") << "re" << j + 1 << ",im" << j + 1;
  out << '\n';
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j)
      out << (j ? "," : "") << fmt(r.matrix(i, j).real()) << ',' << fmt(r.matrix(i, j).imag());
    out << '\n';
  }
}

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = spec_of(o);
  const bool sweep = word_texts(o).empty();
  if (sweep) {
    if (o.trials < 1) throw ParseError("gram needs --word/--words or --trials", 0);
    const auto summary = positivity_sweep(o.r, o.max_leaves, spec, o.trials, o.seed, o.tol);
    if (o.format == "csv") {
      out << "kind,r,max_leaves,trials,seed,psd,not_psd,not_self_adjoint,necessary_failures,"
             "worst_min_eigenvalue,worst_asym\n"
          << kind_name(spec.kind) << ',' << o.r << ',' << o.max_leaves << ',' << o.trials << ',' << o.seed << ','
          << summary.psd << ',' << summary.not_psd << ',' << summary.not_self_adjoint << ','
          << summary.necessary_failures << ',' << fmt(summary.worst_min_eigenvalue) << ','
          << fmt(summary.worst_asym) << '\n';
    } else {
      out << to_json(summary).dump(2) << '\n';
    }
    const bool all_psd = summary.psd == summary.trials;
    return o.expect_psd && !all_psd ? kCheckFailed : kOk;
  }

  std::vector<TreePair> elements;
  for (const auto& e : elements_of(o)) elements.push_back(e.pair);
  GramOptions opts;
  opts.unreduced = o.unreduced;
  const bool check = o.check_psd || o.expect_psd;
  GramReport report = check ? gram_report(elements, spec, o.tol, opts) : gram_matrix(elements, spec, opts);
  report.seed = o.seed;
  if (o.format == "csv") {
    write_matrix_csv(report, out);
    if (check) err << "verdict: " << verdict_name(report.verdict) << ", min eigenvalue " << fmt(report.min_eigenvalue)
                   << ", max asym " << fmt(report.max_asym) << '\n';
  } else {
    Json doc = to_json(report);
    if (!check) {
      for (const char* key : {"self_adjoint", "max_asym", "verdict", "min_eigenvalue", "witness"}) doc.erase(key);
    }
    out << doc.dump(2) << '\n';
  }
  return o.expect_psd && report.verdict != Verdict::psd ? kCheckFailed : kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto elements = elements_of(o);
  std::vector<Json> docs;
  bool all_agree = true;
  std::ostringstream csv;
  csv << "element,oracle,check,oracle_value,invariant_value,agree\n";
  auto record = [&](Json& doc, std::size_t i, const std::string& name, const std::string& a, const std::string& b,
                    bool agree) {
    doc["checks"].push_back(Json{{"oracle", name}, {"oracle_value", a}, {"invariant_value", b}, {"agree", agree}});
    csv << i << ',' << name << ',' << a << ',' << b << ',' << (agree ? "true" : "false") << '\n';
    all_agree = all_agree && agree;
  };
  auto close = [&](double a, double b) { return std::abs(a - b) <= o.tol * std::max(1.0, std::abs(b)); };
  const bool limit = o.kind == "limit";
  const InvariantKind kind = limit ? InvariantKind::chromatic : parse_kind(o.kind);

  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& g = elements[i].pair;
    const auto graph = gamma_graph(g);
    const auto G = graph.underlying();
    Json doc{{"pair", to_json(g)}, {"checks", Json::array()}};
    if (limit) {
      std::vector<double> ks = o.ks.empty() ? std::vector<double>{-5, -10, -20, -30} : o.ks;
      const auto rows = chromatic_limit_check(G, o.q, ks);
      Json table = Json::array();
      bool monotone = true;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        table.push_back(to_json(rows[k]));
        if (k > 0 && rows[k].residual > rows[k - 1].residual) monotone = false;
      }
      doc["chromatic"] = to_json(chromatic(G, o.q));
      doc["limit"] = std::move(table);
      const bool agree = monotone && rows.back().relative < 1e-6;
      record(doc, i, "chromatic_limit", fmt(rows.back().scaled), to_json(chromatic(G, o.q)).dump(), agree);
      docs.push_back(std::move(doc));
      continue;
    }
    switch (kind) {
      case InvariantKind::chromatic: {
        const auto a = chromatic_vector(g.plus(), o.q);
        const auto b = chromatic_vector(g.minus(), o.q);
        std::uint64_t pairing = 0;
        for (std::size_t s = 0; s < a.size(); ++s) pairing += a[s] * b[s];
        const auto chr = chromatic(G, o.q);
        record(doc, i, "chromatic_vector", std::to_string(pairing), chr.str(), BigInt(pairing) == chr);
        break;
      }
      case InvariantKind::tutte_potts: {
        const double z = potts_partition(G, o.q, o.k);
        const double y = std::exp(o.k);
        const double x = (y + o.q - 1) / (y - 1);
        const double identity = o.q * std::pow(y - 1, G.vertex_count - 1) *
                                std::pow(y, -static_cast<double>(G.edges.size())) * tutte(G).evaluate(x, y);
        record(doc, i, "potts_partition", fmt(z), fmt(identity), close(z, identity));
        break;
      }
      case InvariantKind::bracket: {
        const auto a = roots_for_Q(o.q)[o.root - 1];
        const auto z = kauffman_partition(graph, o.q, a);
        const auto b = bracket(link_of_unreduced(g)).evaluate(a);
        record(doc, i, "kauffman_partition", to_json(z).dump(), to_json(b).dump(),
               std::abs(z - b) <= o.tol * std::max(1.0, std::abs(b)));
        const auto skein = bracket_skein(link_of_unreduced(g));
        const auto poly = bracket(link_of_unreduced(g));
        record(doc, i, "bracket_skein", to_json(skein).dump(), to_json(poly).dump(), skein == poly);
        break;
      }
      case InvariantKind::colourings: {
        const auto link = link_of_unreduced(g);
        const auto z = colouring_partition(link, o.q);
        const auto col = col_count(link, o.q);
        record(doc, i, "colouring_partition", z.str(), col.str(), z == col);
        const auto a = fox_semilink_vector(g.plus(), o.q);
        const auto b = fox_semilink_vector(g.minus(), o.q);
        BigInt pairing = 0;
        for (std::size_t s = 0; s < a.size(); ++s) pairing += BigInt(a[s]) * b[s];
        record(doc, i, "fox_semilink_vector", pairing.str(), col.str(), pairing == col);
        break;
      }
    }
    docs.push_back(std::move(doc));
  }
  if (o.format == "csv")
    out << csv.str();
  else
    out << one_or_many(std::move(docs)).dump(2) << '\n';
  return all_agree ? kOk : kCheckFailed;
}

int cmd_findex(const Options& o, std::ostream& out) {
  const auto report = findex_scan(o.max_leaves);
  if (o.format == "csv") {
    out << "plus,minus,leaves,components\n";
    for (const auto& e : report.nontrivial)
      out << '"' << e.pair.plus().str() << "\",\"" << e.pair.minus().str() << "\"," << e.pair.leaf_count() << ','
          << e.components << '\n';
    return kOk;
  }
  Json nontrivial = Json::array();
  for (const auto& e : report.nontrivial) {
    Json entry = to_json(e.pair);
    entry["components"] = e.components;
    entry["bracket"] = to_json(e.bracket);
    nontrivial.push_back(std::move(entry));
  }
  out << Json{{"max_leaves", report.max_leaves},
              {"pairs", report.pairs},
              {"trivial", report.trivial},
              {"nontrivial", std::move(nontrivial)}}
             .dump(2)
      << '\n';
  return kOk;
}

}  // namespace

std::string expand_powers(std::string_view text) {
  std::string s(text);
  for (;;) {
    const auto open = s.rfind('(');
    if (open == std::string::npos) break;
    const auto shut = s.find(')', open);
    if (shut == std::string::npos) throw ParseError("unbalanced '('", open);
    Word inner = parse_word(s.substr(open + 1, shut - open - 1));
    std::size_t end = shut + 1;
    long power = 1;
    if (end < s.size() && s[end] == '^') {
      std::size_t pos = end + 1;
      std::size_t digits_start = pos;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == digits_start || !std::isdigit(static_cast<unsigned char>(s[pos - 1])))
        throw ParseError("expected an integer exponent", end + 1);
      power = std::stol(s.substr(digits_start, pos - digits_start));
      end = pos;
    }
    const Word unit = power < 0 ? inverse_word(inner) : inner;
    Word expanded;
    for (long k = 0; k < std::labs(power); ++k) expanded.insert(expanded.end(), unit.begin(), unit.end());
    s = s.substr(0, open) + " " + format_word(expanded) + " " + s.substr(end);
  }
  if (auto stray = s.find(')'); stray != std::string::npos) throw ParseError("unbalanced ')'", stray);
  return s;
}

TreePair element_of(std::string_view text) { return word_to_pair(parse_word(expand_powers(text))); }

std::vector<std::string> read_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open word file '" + path + "'", 0);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    words.push_back(line);
  }
  return words;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thompson group elements, their links, invariants and Gram matrices", "tlink"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "reduced tree pair of a word");
  add_common(parse, o);
  auto* graph = app.add_subcommand("graph", "signed plane graph of an element");
  add_common(graph, o);
  auto* link = app.add_subcommand("link", "link diagram of an element");
  add_common(link, o);

  auto* invariant = app.add_subcommand("invariant", "raw invariant of an element");
  add_common(invariant, o);
  add_invariant(invariant, o);

  auto* gram = app.add_subcommand("gram", "Gram matrix or random positivity sweep");
  add_common(gram, o);
  add_invariant(gram, o);
  gram->add_option("--tol", o.tol, "tolerance");
  gram->add_option("--seed", o.seed, "random seed");
  gram->add_flag("--check-psd", o.check_psd, "certify positive semidefiniteness");
  gram->add_flag("--expect-psd", o.expect_psd, "exit 2 unless PSD");
  gram->add_option("--max-leaves", o.max_leaves, "sweep: leaf bound for random elements");
  gram->add_option("--trials", o.trials, "sweep: number of random tuples");
  gram->add_option("--r", o.r, "sweep: tuple size");

  auto* oracle = app.add_subcommand("oracle", "cross-check an invariant against its brute-force oracle");
  add_common(oracle, o);
  oracle->add_option("--kind", o.kind, "chromatic | tutte | bracket | colourings | limit");
  oracle->add_option("--q", o.q, "Q");
  oracle->add_option("--k", o.k, "Potts coupling K");
  oracle->add_option("--ks", o.ks, "K values for the chromatic limit");
  oracle->add_option("--root", o.root, "bracket root index")->check(CLI::Range(1, 4));
  oracle->add_option("--tol", o.tol, "tolerance");

  auto* findex = app.add_subcommand("findex", "unlink certificate for every small reduced pair");
  findex->add_option("--max-leaves", o.max_leaves, "leaf bound (at most 6)");
  findex->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    int code = kOk;
    if (parse->parsed())
      code = cmd_parse(o, buffer);
    else if (graph->parsed())
      code = cmd_graph(o, buffer);
    else if (link->parsed())
      code = cmd_link(o, buffer);
    else if (invariant->parsed())
      code = cmd_invariant(o, args, buffer);
    else if (gram->parsed())
      code = cmd_gram(o, buffer, err);
    else if (oracle->parsed())
      code = cmd_oracle(o, buffer);
    else if (findex->parsed())
      code = cmd_findex(o, buffer);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tlink::cli
