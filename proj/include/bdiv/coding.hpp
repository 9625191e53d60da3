#pragma once

#include <span>
#include <string>
#include <vector>

#include "bdiv/pmf.hpp"

namespace bdiv {

/// A prefix-free binary code, one codeword per letter. Construction rejects
/// tables that are not prefix-free or violate the Kraft inequality.
class CodeTable {
 public:
  explicit CodeTable(std::vector<std::string> codewords);

  std::size_t size() const noexcept { return codewords_.size(); }
  const std::string& codeword(std::size_t letter) const { return codewords_.at(letter); }
  const std::vector<std::string>& codewords() const noexcept { return codewords_; }

  std::vector<int> lengths() const;
  int max_length() const;
  /// sum 2^-L_i.
  double kraft_sum() const;

  /// "letter_index<TAB>codeword" per line, letters numbered from 0.
  std::string to_listing() const;

 private:
  std::vector<std::string> codewords_;
};

bool is_prefix_free(std::span<const std::string> codewords);

/// Optimal binary prefix code for `q`. Ties in probability (relative
/// difference <= 1e-12) merge the node holding the smaller letter index first;
/// a merged node carries its smallest letter index, and the child with the
/// smaller index takes bit 0. Zero-probability letters are merged first. A
/// single-letter alphabet gets the empty codeword.
CodeTable huffman_code(const Pmf& q);

/// ceil(log2(1 / q_i)) per letter. Throws ZERO_PROBABILITY_LETTER.
std::vector<int> literal_lengths(const Pmf& q);

/// sum p_i L_i.
double average_length(std::span<const int> lengths, const Pmf& p);

/// Average length under the true PMF `p` of the Huffman code built for `q`.
/// Never exceeds n - 1.
double conceptual_cross_entropy(const Pmf& p, const Pmf& q);

/// conceptual_cross_entropy(p, q) - H(p); finite for every input pair.
double conceptual_kl_bound(const Pmf& p, const Pmf& q);

/// Worst-case PMF whose Huffman code has a codeword of length n - 1:
/// q_n = eps, q_j = (1 - eps) 2^-j for j = 2..n-1, and q_1 takes the rest,
/// (1 - eps)(2^-1 + 2^-(n-1)). Requires 0 < eps < 2^-(n-1).
Pmf dyadic_epsilon_pmf(int n, double epsilon);

}  // namespace bdiv
