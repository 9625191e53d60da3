#include "bdiv/coding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "bdiv/entropy.hpp"

namespace bdiv {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kKraftSlack = 1e-12;

struct Node {
  double prob;
  Index min_letter;
  int left = -1;
  int right = -1;
};

// Strict "a merges before b". Near-equal probabilities fall back to letter index.
bool merges_before(const Node& a, const Node& b) {
  const double scale = std::max(a.prob, b.prob);
  if (std::abs(a.prob - b.prob) <= kTieTolerance * scale) return a.min_letter < b.min_letter;
  return a.prob < b.prob;
}

std::size_t take_first(std::vector<int>& active, const std::vector<Node>& nodes) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < active.size(); ++i) {
    if (merges_before(nodes[active[i]], nodes[active[best]])) best = i;
  }
  return best;
}

}  // namespace

bool is_prefix_free(std::span<const std::string> codewords) {
  std::vector<std::string> sorted(codewords.begin(), codewords.end());
  std::sort(sorted.begin(), sorted.end());
  // After sorting, any prefix relation shows up between neighbours.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].starts_with(sorted[i - 1])) return false;
  }
  return true;
}

CodeTable::CodeTable(std::vector<std::string> codewords) : codewords_(std::move(codewords)) {
  for (const auto& word : codewords_) {
    if (word.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "codeword '" + word + "' is not binary");
    }
  }
  if (!is_prefix_free(codewords_)) throw Error(ErrorCode::kInvalidArgument, "code is not prefix-free");
  if (kraft_sum() > 1.0 + kKraftSlack) throw Error(ErrorCode::kInvalidArgument, "code violates the Kraft inequality");
}

std::vector<int> CodeTable::lengths() const {
  std::vector<int> out;
  out.reserve(codewords_.size());
  for (const auto& word : codewords_) out.push_back(static_cast<int>(word.size()));
  return out;
}

int CodeTable::max_length() const {
  int longest = 0;
  for (const auto& word : codewords_) longest = std::max(longest, static_cast<int>(word.size()));
  return longest;
}

double CodeTable::kraft_sum() const {
  double total = 0.0;
  for (const auto& word : codewords_) total += std::ldexp(1.0, -static_cast<int>(word.size()));
  return total;
}

std::string CodeTable::to_listing() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < codewords_.size(); ++i) os << i << '\t' << codewords_[i] << '\n';
  return os.str();
}

CodeTable huffman_code(const Pmf& q) {
  const Index n = q.size();
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(2 * n));
  std::vector<int> active;
  for (Index i = 0; i < n; ++i) {
    nodes.push_back({q[i], i});
    active.push_back(static_cast<int>(i));
  }
  while (active.size() > 1) {
    const int a = active[take_first(active, nodes)];
    std::erase(active, a);
    const int b = active[take_first(active, nodes)];
    std::erase(active, b);
    const auto [lo, hi] = nodes[a].min_letter < nodes[b].min_letter ? std::pair{a, b} : std::pair{b, a};
    nodes.push_back({nodes[a].prob + nodes[b].prob, nodes[lo].min_letter, lo, hi});
    active.push_back(static_cast<int>(nodes.size() - 1));
  }

  std::vector<std::string> codewords(static_cast<std::size_t>(n));
  std::vector<std::pair<int, std::string>> stack{{active.front(), ""}};
  while (!stack.empty()) {
    auto [id, prefix] = std::move(stack.back());
    stack.pop_back();
    const Node& node = nodes[id];
    if (node.left < 0) {
      codewords[static_cast<std::size_t>(node.min_letter)] = std::move(prefix);
      continue;
    }
    stack.emplace_back(node.right, prefix + '1');
    stack.emplace_back(node.left, prefix + '0');
  }
  return CodeTable(std::move(codewords));
}

std::vector<int> literal_lengths(const Pmf& q) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(q.size()));
  for (Index i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) {
      throw Error(ErrorCode::kZeroProbabilityLetter,
                  "letter " + std::to_string(i) + " has zero probability; ceil(log2(1/q)) is undefined");
    }
    // The slack keeps exact powers of two (e.g. 1/4 -> 2) from rounding up.
    out.push_back(static_cast<int>(std::ceil(-std::log2(q[i]) - 1e-12)));
  }
  return out;
}

double average_length(std::span<const int> lengths, const Pmf& p) {
  if (static_cast<Index>(lengths.size()) != p.size()) {
    throw Error(ErrorCode::kSizeMismatch, "lengths and pmf differ in size: " + std::to_string(lengths.size()) +
                                              " vs " + std::to_string(p.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) total += p[static_cast<Index>(i)] * lengths[i];
  return total;
}

double conceptual_cross_entropy(const Pmf& p, const Pmf& q) {
  require_same_size(p, q);
  const auto lengths = huffman_code(q).lengths();
  return average_length(lengths, p);
}

double conceptual_kl_bound(const Pmf& p, const Pmf& q) { return conceptual_cross_entropy(p, q) - shannon_entropy(p); }

Pmf dyadic_epsilon_pmf(int n, double epsilon) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "dyadic pmf needs n >= 2, got " + std::to_string(n));
  const double limit = std::ldexp(1.0, -(n - 1));
  if (!(epsilon > 0.0 && epsilon < limit)) {
    std::ostringstream os;
    os << "epsilon " << epsilon << " outside (0, " << limit << ") for n = " << n;
    throw Error(ErrorCode::kEpsilonOutOfRange, os.str());
  }
  VectorX<double> q(n);
  const double rest = 1.0 - epsilon;
  q[n - 1] = epsilon;
  for (int j = 2; j <= n - 1; ++j) q[j - 1] = rest * std::ldexp(1.0, -j);
  q[0] = rest * 0.5 + rest * limit;
  return Pmf(std::move(q));
}

}  // namespace bdiv
