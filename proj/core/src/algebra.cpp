#include "fockbridge/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fockbridge/tensor.hpp"

namespace fockbridge::algebra {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("normal form coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("normal form coefficient overflow");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

CMatrix matrix_power(const CMatrix& a, int n) {
  CMatrix r = CMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

std::string label_name(int label) {
  static constexpr std::string_view names = "ijklmnrstuvw";
  if (label < static_cast<int>(names.size())) return std::string(1, names[label]);
  return "i" + std::to_string(label);
}

// Relabels so labels appear in order 0, 1, 2, ... of first occurrence.
std::vector<int> canonical_relabeling(const std::vector<int>& labels, int label_count) {
  std::vector<int> map(label_count, -1);
  int next = 0;
  for (int l : labels) {
    if (map[l] < 0) map[l] = next++;
  }
  return map;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'X' || c == 'x') {
      w.push_back(Letter::X);
    } else if (c == 'P' || c == 'p') {
      w.push_back(Letter::P);
    } else {
      throw std::invalid_argument(std::string("word: unexpected letter '") + c + "' (only X and P)");
    }
  }
  return w;
}

std::string to_string(const Word& word) {
  std::string s;
  for (Letter l : word) s.push_back(static_cast<char>(l));
  return s;
}

NormalForm NormalForm::identity() { return monomial(0, 0); }

NormalForm NormalForm::letter(Letter l) {
  return l == Letter::X ? monomial(1, 0) : monomial(0, 1);
}

NormalForm NormalForm::monomial(int x_power, int p_power, int hbar_power, std::int64_t coeff) {
  NormalForm nf;
  nf.add(Monomial{hbar_power, x_power, p_power}, coeff);
  return nf;
}

void NormalForm::add(const Monomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t NormalForm::coefficient(int x_power, int p_power, int hbar_power) const {
  auto it = terms_.find(Monomial{hbar_power, x_power, p_power});
  return it == terms_.end() ? 0 : it->second;
}

NormalForm NormalForm::operator+(const NormalForm& other) const {
  NormalForm r = *this;
  for (const auto& [m, c] : other.terms_) r.add(m, c);
  return r;
}

NormalForm NormalForm::operator-(const NormalForm& other) const {
  NormalForm r = *this;
  for (const auto& [m, c] : other.terms_) r.add(m, checked_mul(c, -1));
  return r;
}

NormalForm NormalForm::scaled(std::int64_t factor) const {
  NormalForm r;
  for (const auto& [m, c] : terms_) r.add(m, checked_mul(c, factor));
  return r;
}

NormalForm NormalForm::operator*(const NormalForm& other) const {
  NormalForm r;
  for (const auto& [lhs, a] : terms_) {
    for (const auto& [rhs, b] : other.terms_) {
      // (X^x1 P^p1)(X^x2 P^p2): move P^p1 through X^x2.
      const int kmax = std::min(lhs.p_power, rhs.x_power);
      const std::int64_t ab = checked_mul(a, b);
      for (int k = 0; k <= kmax; ++k) {
        std::int64_t c = checked_mul(binomial(lhs.p_power, k), binomial(rhs.x_power, k));
        c = checked_mul(checked_mul(c, factorial(k)), ab);
        r.add(Monomial{lhs.hbar_power + rhs.hbar_power + k, lhs.x_power + rhs.x_power - k,
                       lhs.p_power + rhs.p_power - k},
              c);
      }
    }
  }
  return r;
}

CMatrix NormalForm::evaluate(const CMatrix& x, const CMatrix& p, double hbar) const {
  CMatrix r = CMatrix::Zero(x.rows(), x.cols());
  const Complex unit(0.0, -hbar);
  for (const auto& [m, c] : terms_) {
    r += static_cast<double>(c) * std::pow(unit, m.hbar_power) * matrix_power(x, m.x_power) *
         matrix_power(p, m.p_power);
  }
  return r;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    if (mag != 1) parts.push_back(std::to_string(mag));
    if (m.hbar_power == 1) parts.push_back("(-i hbar)");
    if (m.hbar_power > 1) parts.push_back("(-i hbar)^" + std::to_string(m.hbar_power));
    if (m.x_power == 1) parts.push_back("X");
    if (m.x_power > 1) parts.push_back("X^" + std::to_string(m.x_power));
    if (m.p_power == 1) parts.push_back("P");
    if (m.p_power > 1) parts.push_back("P^" + std::to_string(m.p_power));
    if (parts.empty()) parts.push_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  }
  return os.str();
}

NormalForm normal_order(const Word& word) {
  NormalForm r = NormalForm::identity();
  for (Letter l : word) r = r * NormalForm::letter(l);
  return r;
}

NormalForm commutator(const NormalForm& a, const NormalForm& b) { return a * b - b * a; }

std::int64_t IndexedMonomialSum::coefficient(const IndexPattern& pattern) const {
  auto it = terms.find(pattern);
  return it == terms.end() ? 0 : it->second;
}

std::string IndexedMonomialSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [pattern, c] : terms) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << " ";
    for (std::size_t p = 0; p < pattern.size(); ++p) {
      os << (p ? " " : "") << "O" << (p + 1) << "_" << label_name(pattern[p]);
    }
  }
  return first ? "0" : os.str();
}

namespace {

// Pattern with pending "label a != label b" constraints (a < b).
struct ConstrainedPattern {
  std::vector<int> labels;
  std::set<std::pair<int, int>> distinct;

  auto operator<=>(const ConstrainedPattern&) const = default;
};

ConstrainedPattern canonical(std::vector<int> labels, const std::set<std::pair<int, int>>& distinct) {
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  const auto map = canonical_relabeling(labels, count);
  ConstrainedPattern cp;
  for (int& l : labels) l = map[l];
  cp.labels = std::move(labels);
  for (auto [a, b] : distinct) {
    int x = map[a], y = map[b];
    cp.distinct.emplace(std::min(x, y), std::max(x, y));
  }
  return cp;
}

}  // namespace

IndexedMonomialSum expand_permutation_sum(const std::vector<NormalForm>& factors) {
  const int n = static_cast<int>(factors.size());
  if (n < 1) throw std::invalid_argument("expand_permutation_sum: need at least one factor");

  IndexedMonomialSum result;
  result.factors = factors;

  // sum over distinct indices, eliminating one "!=" at a time with
  // sum_{b != a} f(a,b) = sum_b f(a,b) - f(a,a).
  std::map<ConstrainedPattern, std::int64_t> pending;
  {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::set<std::pair<int, int>> distinct;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) distinct.emplace(a, b);
    pending.emplace(canonical(labels, distinct), 1);
  }

  auto accumulate = [&pending](ConstrainedPattern cp, std::int64_t c) {
    auto [it, inserted] = pending.try_emplace(std::move(cp), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) pending.erase(it);
    }
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const ConstrainedPattern& cp = node.key();
    const std::int64_t c = node.mapped();
    if (cp.distinct.empty()) {
      auto& slot = result.terms[cp.labels];
      slot = checked_add(slot, c);
      if (slot == 0) result.terms.erase(cp.labels);
      continue;
    }
    const auto [a, b] = *cp.distinct.rbegin();
    auto rest = cp.distinct;
    rest.erase({a, b});

    accumulate(canonical(cp.labels, rest), c);

    std::vector<int> merged = cp.labels;
    for (int& l : merged)
      if (l == b) l = a;
    std::set<std::pair<int, int>> merged_rest;
    for (auto [x, y] : rest) {
      if (x == b) x = a;
      if (y == b) y = a;
      merged_rest.emplace(std::min(x, y), std::max(x, y));
    }
    accumulate(canonical(std::move(merged), merged_rest), checked_mul(c, -1));
  }
  return result;
}

IndexedMonomialSum expand_permutation_sum(int particles) {
  if (particles < 1) throw std::invalid_argument("expand_permutation_sum: N must be >= 1");
  return expand_permutation_sum(std::vector<NormalForm>(particles, NormalForm::identity()));
}

std::string BuildingBlockSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [bp, c] : terms) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << " ";
    if (bp.hbar_power == 1) os << "(-i hbar) ";
    if (bp.hbar_power > 1) os << "(-i hbar)^" << bp.hbar_power << " ";
    for (std::size_t i = 0; i < bp.blocks.size(); ++i) {
      os << (i ? " " : "") << "B(" << bp.blocks[i].first << "," << bp.blocks[i].second << ")";
    }
  }
  return first ? "0" : os.str();
}

namespace {

struct Slot {
  int label;
  NormalForm op;
};

void emit_blocks(std::int64_t coeff, const std::vector<NormalForm>& blocks, BuildingBlockSum& out) {
  // Multilinear expansion of Gamma(block_1) Gamma(block_2) ...
  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> choices;
  for (const auto& b : blocks) choices.emplace_back(b.terms().begin(), b.terms().end());
  std::vector<std::size_t> idx(blocks.size(), 0);
  while (true) {
    BlockProduct bp;
    std::int64_t c = coeff;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& [m, mc] = choices[i][idx[i]];
      bp.blocks.emplace_back(m.x_power, m.p_power);
      bp.hbar_power += m.hbar_power;
      c = checked_mul(c, mc);
    }
    auto& slot = out.terms[bp];
    slot = checked_add(slot, c);
    if (slot == 0) out.terms.erase(bp);

    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
}

void reduce(std::int64_t coeff, std::vector<Slot> slots, BuildingBlockSum& out) {
  int label_count = 0;
  for (const auto& s : slots) label_count = std::max(label_count, s.label + 1);
  std::vector<int> labels;
  for (const auto& s : slots) labels.push_back(s.label);
  const auto rank = canonical_relabeling(labels, label_count);

  for (std::size_t p = 0; p + 1 < slots.size(); ++p) {
    if (rank[slots[p].label] <= rank[slots[p + 1].label]) continue;
    // A_a B_b = B_b A_a + delta_ab [A, B]_a
    std::vector<Slot> swapped = slots;
    std::swap(swapped[p], swapped[p + 1]);
    reduce(coeff, std::move(swapped), out);

    const int keep = slots[p].label;
    const int gone = slots[p + 1].label;
    NormalForm comm = commutator(slots[p].op, slots[p + 1].op);
    if (comm.empty()) return;
    std::vector<Slot> merged;
    for (std::size_t q = 0; q < slots.size(); ++q) {
      if (q == p + 1) continue;
      Slot s = slots[q];
      if (q == p) s.op = comm;
      if (s.label == gone) s.label = keep;
      merged.push_back(std::move(s));
    }
    reduce(coeff, std::move(merged), out);
    return;
  }

  std::vector<NormalForm> blocks;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    if (p > 0 && slots[p].label == slots[p - 1].label) {
      blocks.back() = blocks.back() * slots[p].op;
    } else {
      blocks.push_back(slots[p].op);
    }
  }
  for (const auto& b : blocks)
    if (b.empty()) return;
  emit_blocks(coeff, blocks, out);
}

}  // namespace

BuildingBlockSum to_building_blocks(const IndexedMonomialSum& expansion) {
  BuildingBlockSum out;
  for (const auto& [pattern, c] : expansion.terms) {
    std::vector<Slot> slots;
    for (std::size_t p = 0; p < pattern.size(); ++p) slots.push_back({pattern[p], expansion.factors[p]});
    reduce(c, std::move(slots), out);
  }
  return out;
}

CMatrix explicit_permutation_sum(const std::vector<CMatrix>& factors) {
  const int n = static_cast<int>(factors.size());
  if (n < 1) throw std::invalid_argument("explicit_permutation_sum: no factors");
  const TensorShape shape{n, static_cast<int>(factors.front().rows())};
  if (shape.size() > kMaxTensorDimension) {
    throw CapacityError("tensor dimension " + std::to_string(shape.size()) + " exceeds " +
                        std::to_string(kMaxTensorDimension));
  }
  const auto dim = shape.size();
  CMatrix result = CMatrix::Zero(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::int64_t col = 0; col < dim; ++col) {
      CVector v = CVector::Unit(dim, col);
      for (int i = n - 1; i >= 0; --i) v = apply_on_slot(shape, factors[i], perm[i], v);
      result.col(col) += v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

ExpansionCheck verify_expansion(const IndexedMonomialSum& expansion, const std::vector<CMatrix>& factors) {
  const int n = expansion.order();
  if (static_cast<int>(factors.size()) != n) {
    throw std::invalid_argument("verify_expansion: factor count does not match expansion order");
  }
  const TensorShape shape{n, static_cast<int>(factors.front().rows())};
  if (shape.size() > kMaxTensorDimension) {
    throw CapacityError("tensor dimension " + std::to_string(shape.size()) + " exceeds " +
                        std::to_string(kMaxTensorDimension));
  }
  const CMatrix reference = explicit_permutation_sum(factors);
  const auto dim = shape.size();

  CMatrix expanded = CMatrix::Zero(dim, dim);
  for (const auto& [pattern, c] : expansion.terms) {
    const int labels = *std::max_element(pattern.begin(), pattern.end()) + 1;
    std::vector<int> assign(labels, 0);
    while (true) {
      for (std::int64_t col = 0; col < dim; ++col) {
        CVector v = CVector::Unit(dim, col);
        for (int p = n - 1; p >= 0; --p) v = apply_on_slot(shape, factors[p], assign[pattern[p]], v);
        expanded.col(col) += static_cast<double>(c) * v;
      }
      int i = 0;
      for (; i < labels; ++i) {
        if (++assign[i] < n) break;
        assign[i] = 0;
      }
      if (i == labels) break;
    }
  }
  return {(expanded - reference).cwiseAbs().maxCoeff(), reference.cwiseAbs().maxCoeff()};
}

ExpansionCheck verify_expansion(const IndexedMonomialSum& expansion, int mode_dim, std::uint64_t seed) {
  const TensorShape shape{expansion.order(), mode_dim};
  if (mode_dim < 1 || shape.size() > kMaxTensorDimension) {
    throw CapacityError("verify_expansion: mode_dim^N = " + std::to_string(shape.size()) +
                        " outside [1, " + std::to_string(kMaxTensorDimension) + "]");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<CMatrix> factors;
  for (int p = 0; p < expansion.order(); ++p) {
    CMatrix m(mode_dim, mode_dim);
    for (int r = 0; r < mode_dim; ++r)
      for (int c = 0; c < mode_dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    factors.push_back(std::move(m));
  }
  return verify_expansion(expansion, factors);
}

}  // namespace fockbridge::algebra
