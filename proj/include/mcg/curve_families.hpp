#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/rational.hpp"

namespace mcg {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols_ != y.rows_) throw PreconditionError("matrix shape mismatch in product");
    DenseMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;

enum class FamilyKind { torelli_separating, braid_sphere, custom };

constexpr std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::torelli_separating: return "torelli";
    case FamilyKind::braid_sphere: return "braid";
    case FamilyKind::custom: return "custom";
  }
  return "unknown";
}

/// Intersection numbers N_ij = i(a_i, b_j) for a pair of multicurves.
struct IntersectionFamily {
  FamilyKind kind = FamilyKind::custom;
  int genus = 0;  // 0 for custom families
  IntMatrix n;

  std::size_t size() const { return n.rows(); }
};

namespace detail {

/// Row i carries `entry` at columns i and i-1 (mod m); m = 1 collapses to a
/// single curve pair meeting 2*entry times, which keeps every row sum of NN^t equal.
inline IntMatrix cyclic_pair_pattern(int m, long entry) {
  if (m == 1) return IntMatrix{{Integer(2 * entry)}};
  IntMatrix n(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto row = static_cast<std::size_t>(i);
    n(row, row) = entry;
    n(row, static_cast<std::size_t>((i + m - 1) % m)) = entry;
  }
  return n;
}

}  // namespace detail

/// Separating multicurves on S_g lifted from the marked sphere; m = ceil(g/2) components each.
inline IntersectionFamily torelli_family(int g) {
  if (g < 2) throw PreconditionError("torelli_family requires genus >= 2");
  return {FamilyKind::torelli_separating, g, detail::cyclic_pair_pattern((g + 1) / 2, 4)};
}

/// The sphere curves before the double cover: torelli intersections halved.
inline IntersectionFamily braid_family(int g) {
  if (g < 1) throw PreconditionError("braid_family requires genus >= 1");
  return {FamilyKind::braid_sphere, g, detail::cyclic_pair_pattern((g + 1) / 2, 2)};
}

inline IntersectionFamily custom_family(IntMatrix n) {
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      if (n(i, j) < 0) throw PreconditionError("intersection numbers must be nonnegative");
  return {FamilyKind::custom, 0, std::move(n)};
}

inline IntMatrix nnt(const IntersectionFamily& f) { return f.n * f.n.transpose(); }

/// Strong connectivity of the digraph i -> j whenever M_ij > 0. 1x1 matrices count as irreducible.
inline bool is_irreducible(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return false;
  const std::size_t size = m.rows();
  if (size == 1) return true;
  auto reaches_all = [&](bool transpose) {
    std::vector<bool> seen(size, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    while (!frontier.empty()) {
      std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < size; ++j) {
        const Integer& e = transpose ? m(j, i) : m(i, j);
        if (e > 0 && !seen[j]) {
          seen[j] = true;
          frontier.push(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(false) && reaches_all(true);
}

/// Power iteration v <- (M + I) v from the all-ones vector, reporting the
/// Collatz-Wielandt bracket min_i (Mv)_i / v_i <= rho(M) <= max_i (Mv)_i / v_i.
/// The shift by I makes the iteration converge for periodic irreducible M.
/// Any positive v gives a valid bracket, so v is periodically truncated to
/// keep integer sizes bounded; the reported bracket is the running intersection.
class CollatzWielandtIteration {
 public:
  explicit CollatzWielandtIteration(IntMatrix m) : m_(std::move(m)), v_(m_.rows(), Integer(1)) {
    if (!m_.is_square() || m_.rows() == 0) throw PreconditionError("PF input must be a non-empty square matrix");
    update_bracket();
  }

  void step() {
    std::vector<Integer> next = multiply();
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += v_[i];
    v_ = std::move(next);
    truncate();
    update_bracket();
    ++iterations_;
  }

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  Rational width() const { return upper_ - lower_; }
  const std::vector<Integer>& vector() const { return v_; }
  std::size_t iterations() const { return iterations_; }

 private:
  static constexpr std::size_t kMaxBits = 512;
  static constexpr std::size_t kKeepBits = 256;

  std::vector<Integer> multiply() const {
    std::vector<Integer> out(m_.rows(), Integer(0));
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j)
        if (m_(i, j) != 0) out[i] += m_(i, j) * v_[j];
    return out;
  }

  void truncate() {
    std::size_t bits = 0;
    for (const auto& x : v_) bits = std::max(bits, bit_length(x));
    if (bits <= kMaxBits) return;
    auto shift = static_cast<mp_bitcnt_t>(bits - kKeepBits);
    for (auto& x : v_) mpz_cdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), shift);  // ceil keeps x >= 1
  }

  void update_bracket() {
    std::vector<Integer> w = multiply();
    Rational lo, hi;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Rational ratio(w[i], v_[i]);
      ratio.canonicalize();
      if (i == 0 || ratio < lo) lo = ratio;
      if (i == 0 || ratio > hi) hi = ratio;
    }
    if (!initialized_ || lo > lower_) lower_ = lo;
    if (!initialized_ || hi < upper_) upper_ = hi;
    initialized_ = true;
  }

  IntMatrix m_;
  std::vector<Integer> v_;
  Rational lower_;
  Rational upper_;
  bool initialized_ = false;
  std::size_t iterations_ = 0;
};

struct PFResult {
  Rational value_lower;
  Rational value_upper;
  std::vector<Rational> eigenvector;  // positive, scaled so the largest entry is 1
  bool exact = false;
};

/// Perron-Frobenius eigenvalue of a nonnegative square matrix. Equal row sums
/// give the exact answer with the all-ones eigenvector; otherwise M must be
/// irreducible and the Collatz-Wielandt bracket is narrowed to width <= tol.
inline PFResult pf_eigenvalue(const IntMatrix& m, const Rational& tol, std::size_t max_iterations = 1'000'000) {
  if (!m.is_square() || m.rows() == 0) throw PreconditionError("PF input must be a non-empty square matrix");
  if (tol <= 0) throw PreconditionError("PF tolerance must be positive");
  const std::size_t size = m.rows();
  std::vector<Integer> row_sums(size, Integer(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (m(i, j) < 0) throw PreconditionError("PF input must be nonnegative");
      row_sums[i] += m(i, j);
    }

  if (std::all_of(row_sums.begin(), row_sums.end(), [&](const Integer& s) { return s == row_sums[0]; })) {
    Rational value(row_sums[0]);
    return {value, value, std::vector<Rational>(size, Rational(1)), true};
  }
  if (!is_irreducible(m)) throw PreconditionError("PF input is reducible");

  CollatzWielandtIteration iteration(m);
  while (iteration.width() > tol) {
    if (iteration.iterations() >= max_iterations) throw ComputationError("PF bracket did not reach tolerance");
    iteration.step();
  }
  const auto& v = iteration.vector();
  Integer largest = *std::max_element(v.begin(), v.end());
  std::vector<Rational> eigenvector;
  eigenvector.reserve(size);
  for (const auto& x : v) {
    Rational r(x, largest);
    r.canonicalize();
    eigenvector.push_back(r);
  }
  return {iteration.lower(), iteration.upper(), std::move(eigenvector), false};
}

/// The radicand Thurston's representation uses for this family: the PF
/// eigenvalue of NN^t, when it is an exact integer.
inline std::optional<std::uint64_t> thurston_mu(const IntersectionFamily& f) {
  PFResult pf = pf_eigenvalue(nnt(f), make_rational(1, 1 << 20));
  if (!pf.exact || pf.value_lower.get_den() != 1 || pf.value_lower <= 0 || !pf.value_lower.get_num().fits_ulong_p()) {
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(pf.value_lower.get_num().get_ui());
}

}  // namespace mcg
