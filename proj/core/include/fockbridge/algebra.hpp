#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockbridge/common.hpp"

namespace fockbridge::algebra {

enum class Letter : char { X = 'X', P = 'P' };
using Word = std::vector<Letter>;

/// Parses a word such as "PPPXPPXX". Whitespace is ignored; anything else but X/P throws.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);

/// X^x P^p carrying the factor (-i hbar)^hbar_power.
struct Monomial {
  int hbar_power = 0;
  int x_power = 0;
  int p_power = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Exact polynomial in a canonical pair with every X ordered left of every P.
///
/// Coefficients are integers attached to (-i hbar)^k, so results are reproduced
/// bit-exactly. Zero coefficients are never stored.
class NormalForm {
 public:
  NormalForm() = default;

  static NormalForm identity();
  static NormalForm letter(Letter l);
  static NormalForm monomial(int x_power, int p_power, int hbar_power = 0, std::int64_t coeff = 1);

  void add(const Monomial& m, std::int64_t coeff);
  std::int64_t coefficient(int x_power, int p_power, int hbar_power) const;

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  NormalForm operator+(const NormalForm& other) const;
  NormalForm operator-(const NormalForm& other) const;
  /// Product, re-normal-ordered with P^b X^c = sum_k C(b,k) C(c,k) k! (-i hbar)^k X^{c-k} P^{b-k}.
  NormalForm operator*(const NormalForm& other) const;
  NormalForm scaled(std::int64_t factor) const;

  bool operator==(const NormalForm&) const = default;

  /// Numeric matrix sum c (-i hbar)^k x^m p^n for given one-particle matrices.
  CMatrix evaluate(const CMatrix& x, const CMatrix& p, double hbar) const;

  std::string to_string() const;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

NormalForm normal_order(const Word& word);
NormalForm commutator(const NormalForm& a, const NormalForm& b);

/// Labels per factor position, canonicalized as a restricted-growth string:
/// positions sharing a label share the particle index of an unrestricted sum.
using IndexPattern = std::vector<int>;

/// Sum over permutations rewritten as a combination of unrestricted index sums.
///
/// Each term (pattern, c) stands for c * sum_{labels} F_1[l_1] F_2[l_2] ... F_N[l_N]
/// where F_p[i] is factor p acting on particle i and every label runs over all
/// particles independently (coincidences included).
struct IndexedMonomialSum {
  std::vector<NormalForm> factors;
  std::map<IndexPattern, std::int64_t> terms;

  int order() const { return static_cast<int>(factors.size()); }
  std::int64_t coefficient(const IndexPattern& pattern) const;
  std::string to_string() const;
};

IndexedMonomialSum expand_permutation_sum(const std::vector<NormalForm>& factors);
/// Pattern-only expansion for N identical placeholder factors.
IndexedMonomialSum expand_permutation_sum(int particles);

/// Ordered product of building blocks B(m,n) = sum_i X_i^m P_i^n times (-i hbar)^k.
struct BlockProduct {
  std::vector<std::pair<int, int>> blocks;
  int hbar_power = 0;

  auto operator<=>(const BlockProduct&) const = default;
};

struct BuildingBlockSum {
  std::map<BlockProduct, std::int64_t> terms;

  std::string to_string() const;
};

/// Rewrites every pattern term into ordered products of building blocks.
/// Non-adjacent coincidences are moved together using
/// A_a B_b = B_b A_a + delta_ab [A,B]_a, which is exact for either statistics.
BuildingBlockSum to_building_blocks(const IndexedMonomialSum& expansion);

struct ExpansionCheck {
  double max_deviation = 0.0;
  double scale = 0.0;  // max |entry| of the explicit permutation sum
};

/// Instantiates each factor position with a random dense mode_dim x mode_dim
/// matrix on the N-fold tensor product and compares the explicit permutation
/// sum against the pattern expansion.
ExpansionCheck verify_expansion(const IndexedMonomialSum& expansion, int mode_dim, std::uint64_t seed);

/// Same comparison with caller-supplied one-particle matrices (one per position).
ExpansionCheck verify_expansion(const IndexedMonomialSum& expansion, const std::vector<CMatrix>& factors);

/// Explicit sum over permutations P of F_1[P(1)] ... F_N[P(N)] on the tensor product.
CMatrix explicit_permutation_sum(const std::vector<CMatrix>& factors);

inline constexpr std::int64_t kMaxTensorDimension = 4096;

}  // namespace fockbridge::algebra
