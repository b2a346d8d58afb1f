#include "tlink/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "tlink/error.hpp"

namespace tlink {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word word;
    skip_ws();
    while (pos_ < text_.size()) {
      word.push_back(term());
      skip_ws();
    }
    return word;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int digits() {
    if (!at_digit()) throw ParseError("expected a decimal integer", pos_);
    std::size_t start = pos_;
    long long value = 0;
    while (at_digit()) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max())
        throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  Generator term() {
    if (text_[pos_] != 'x') throw ParseError("expected generator 'x'", pos_);
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    Generator g;
    g.index = digits();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      int e = digits();
      if (e == 0) throw ParseError("exponent must be nonzero", start);
      g.exponent = negative ? -e : e;
    }
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

TreePair power(const TreePair& p, int exponent) {
  TreePair base = exponent < 0 ? invert(p) : p;
  TreePair result;
  for (int k = 0; k < std::abs(exponent); ++k) result = multiply(result, base);
  return result;
}

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string format_word(const Word& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out.push_back(' ');
    out += "x" + std::to_string(g.index);
    if (g.exponent != 1) out += "^" + std::to_string(g.exponent);
  }
  return out;
}

TreePair::TreePair(Tree plus, Tree minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.leaf_count() != minus_.leaf_count())
    throw DomainError("tree pair leaf counts differ");
}

std::string TreePair::str() const { return plus_.str() + " | " + minus_.str(); }

TreePair identity_pair() { return {}; }

TreePair generator_pair(int k) {
  if (k < 0) throw DomainError("generator index must be nonnegative");
  const Tree l = Tree::leaf();
  const Tree c = Tree::caret(l, l);
  const TreePair x0(Tree::caret(c, l), Tree::caret(l, c));
  if (k == 0) return x0;
  const TreePair x1(Tree::caret(l, x0.plus()), Tree::caret(l, x0.minus()));
  if (k == 1) return x1;
  return word_to_pair({{0, 1 - k}, {1, 1}, {0, k - 1}});
}

TreePair word_to_pair(const Word& word) {
  TreePair result;
  for (const auto& g : word) result = multiply(result, power(generator_pair(g.index), g.exponent));
  return result;
}

TreePair multiply(const TreePair& a, const TreePair& b) {
  const Tree middle = common_refinement(a.minus(), b.plus());
  auto a_subs = a.minus().leaf_subtrees(middle);
  auto b_subs = b.plus().leaf_subtrees(middle);
  return reduce(TreePair(a.plus().graft(a_subs), b.minus().graft(b_subs)));
}

TreePair invert(const TreePair& p) { return {p.minus(), p.plus()}; }

TreePair reduce(const TreePair& p) {
  Tree plus = p.plus();
  Tree minus = p.minus();
  for (;;) {
    auto top = plus.exposed_carets();
    auto bottom = minus.exposed_carets();
    auto shared = std::find_first_of(top.begin(), top.end(), bottom.begin(), bottom.end());
    if (shared == top.end()) return {std::move(plus), std::move(minus)};
    plus = plus.without_caret_at(*shared);
    minus = minus.without_caret_at(*shared);
  }
}

bool is_reduced(const TreePair& p) {
  auto top = p.plus().exposed_carets();
  auto bottom = p.minus().exposed_carets();
  return std::find_first_of(top.begin(), top.end(), bottom.begin(), bottom.end()) == top.end();
}

TreePair pad_with_caret(const TreePair& p, int leaf) {
  if (leaf < 0 || leaf >= p.leaf_count()) throw DomainError("leaf index out of range");
  return {p.plus().with_caret_at(leaf), p.minus().with_caret_at(leaf)};
}

CommonForm common_form(std::span<const TreePair> elements) {
  if (elements.empty()) throw DomainError("common_form needs at least one element");
  Tree bottom = elements.front().minus();
  for (const auto& g : elements.subspan(1)) bottom = common_refinement(bottom, g.minus());
  CommonForm form{{}, bottom};
  form.tops.reserve(elements.size());
  for (const auto& g : elements) form.tops.push_back(g.plus().graft(g.minus().leaf_subtrees(bottom)));
  return form;
}

Dyadic::Dyadic(std::uint64_t numerator, int exponent) {
  if (exponent < 0 || exponent > 62) throw DomainError("dyadic exponent out of range");
  if (numerator > (std::uint64_t{1} << exponent)) throw DomainError("dyadic value exceeds 1");
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  numerator_ = numerator;
  exponent_ = exponent;
}

double Dyadic::value() const {
  return static_cast<double>(numerator_) / static_cast<double>(std::uint64_t{1} << exponent_);
}

std::string Dyadic::str() const {
  return std::to_string(numerator_) + "/" + std::to_string(std::uint64_t{1} << exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exponent_, b.exponent_);
  return (a.numerator_ << (e - a.exponent_)) <=> (b.numerator_ << (e - b.exponent_));
}

namespace {

// Dyadic subdivision of [0,1] by the leaves of t: interval i is
// [start_i / 2^depth_i, (start_i + 1) / 2^depth_i].
struct Interval {
  std::uint64_t start;
  int depth;
};

void subdivide(const std::vector<std::uint8_t>& code, std::size_t& pos, std::uint64_t start,
               int depth, std::vector<Interval>& out) {
  if (code[pos++] == 0) {
    out.push_back({start, depth});
    return;
  }
  if (depth >= 62) throw DomainError("tree too deep for dyadic evaluation");
  subdivide(code, pos, 2 * start, depth + 1, out);
  subdivide(code, pos, 2 * start + 1, depth + 1, out);
}

std::vector<Interval> subdivision(const Tree& t) {
  std::vector<Interval> out;
  std::size_t pos = 0;
  subdivide(t.code(), pos, 0, 0, out);
  return out;
}

}  // namespace

Dyadic apply(const TreePair& p, const Dyadic& t) {
  const auto domain = subdivision(p.plus());
  const auto range = subdivision(p.minus());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& d = domain[i];
    // t lies in [d.start, d.start + 1] / 2^d.depth ?
    int e = std::max(d.depth, t.exponent());
    std::uint64_t lo = d.start << (e - d.depth);
    std::uint64_t hi = (d.start + 1) << (e - d.depth);
    std::uint64_t v = t.numerator() << (e - t.exponent());
    if (v < lo || v > hi) continue;
    // Offset within the interval at resolution 2^-e, rescaled to the range.
    const auto& r = range[i];
    int out_exp = e - d.depth + r.depth;
    if (out_exp > 62) throw DomainError("dyadic exponent overflow");
    std::uint64_t base = r.start << (out_exp - r.depth);
    return Dyadic(base + (v - lo), out_exp);
  }
  throw DomainError("argument outside [0, 1]");
}

std::vector<TreePair> enumerate_reduced_pairs(int leaves, int cap) {
  if (leaves < 1) throw DomainError("leaf count must be positive");
  if (leaves > cap) throw CapExceeded("enumeration cap exceeded: " + std::to_string(leaves));
  const auto trees = all_trees(leaves);
  std::vector<TreePair> result;
  for (const auto& plus : trees)
    for (const auto& minus : trees) {
      TreePair p(plus, minus);
      if (is_reduced(p)) result.push_back(std::move(p));
    }
  return result;
}

TreePair random_element(int max_leaves, std::mt19937_64& rng) {
  if (max_leaves < 1) throw DomainError("leaf count must be positive");
  int n = std::uniform_int_distribution<int>(1, max_leaves)(rng);
  return reduce(TreePair(random_tree(n, rng), random_tree(n, rng)));
}

}  // namespace tlink
