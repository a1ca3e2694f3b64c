#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/rational.hpp"

namespace mcg {

/// Class in H_1(S_g; Z) in the symplectic basis x1, y1, ..., xg, yg
/// (coordinate 2i is x_{i+1}, 2i+1 is y_{i+1}).
class HomologyClass {
 public:
  HomologyClass() = default;
  explicit HomologyClass(int genus) : genus_(genus), coords_(static_cast<std::size_t>(2 * genus), 0) {
    if (genus < 1) throw PreconditionError("homology class needs genus >= 1");
  }
  HomologyClass(int genus, std::vector<long> coords) : genus_(genus), coords_(std::move(coords)) {
    if (genus < 1 || coords_.size() != static_cast<std::size_t>(2 * genus)) {
      throw PreconditionError("homology coordinates must have length 2g");
    }
  }

  static HomologyClass x(int genus, int i) { return basis(genus, 2 * (i - 1)); }
  static HomologyClass y(int genus, int i) { return basis(genus, 2 * (i - 1) + 1); }
  static HomologyClass basis(int genus, int index) {
    HomologyClass h(genus);
    if (index < 0 || index >= 2 * genus) throw PreconditionError("basis index out of range for genus");
    h.coords_[static_cast<std::size_t>(index)] = 1;
    return h;
  }

  /// Parses sums like "x1", "-y2", "x2+y3-3x1"; "0" is the zero class.
  static HomologyClass parse(int genus, std::string_view text);

  int genus() const { return genus_; }
  std::size_t dimension() const { return coords_.size(); }
  long operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<long>& coordinates() const { return coords_; }
  bool is_zero() const {
    for (long c : coords_)
      if (c != 0) return false;
    return true;
  }

  HomologyClass& operator+=(const HomologyClass& o) {
    check_genus(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  HomologyClass& operator-=(const HomologyClass& o) {
    check_genus(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(long s, HomologyClass a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }
  HomologyClass operator-() const { return -1 * *this; }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  std::string str() const;

  void check_genus(const HomologyClass& o) const {
    if (o.genus_ != genus_) throw PreconditionError("homology classes of different genus");
  }

 private:
  int genus_ = 0;
  std::vector<long> coords_;
};

inline std::string basis_name(int index) {
  return std::string(1, index % 2 == 0 ? 'x' : 'y') + std::to_string(index / 2 + 1);
}

inline HomologyClass HomologyClass::parse(int genus, std::string_view text) {
  HomologyClass out(genus);
  auto fail = [&](const std::string& why) {
    return PreconditionError("cannot parse homology class '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw fail("empty");
  if (s == "0") return out;

  std::size_t pos = 0;
  while (pos < s.size()) {
    long sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-'");
    }
    long coeff = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) coeff = std::stoll(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'y')) throw fail("expected x<i> or y<i>");
    int parity = s[pos] == 'x' ? 0 : 1;
    ++pos;
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw fail("missing basis index");
    int i = std::stoi(s.substr(start, pos - start));
    if (i < 1 || i > genus) throw fail("basis index outside 1.." + std::to_string(genus));
    out.coords_[static_cast<std::size_t>(2 * (i - 1) + parity)] += sgn * coeff;
  }
  return out;
}

inline std::string HomologyClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    long c = coords_[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    long m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m);
    out += basis_name(static_cast<int>(i));
  }
  return out.empty() ? "0" : out;
}

/// Symplectic intersection pairing: x_i . y_i = 1 = -(y_i . x_i), all else 0.
inline long symplectic_pairing(const HomologyClass& u, const HomologyClass& v) {
  u.check_genus(v);
  long total = 0;
  for (std::size_t i = 0; i + 1 < u.dimension(); i += 2) total += u[i] * v[i + 1] - u[i + 1] * v[i];
  return total;
}

/// Lexicographic index of the basis triple e_i ^ e_j ^ e_k (i < j < k) among C(n, 3) triples.
inline std::size_t triple_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  std::size_t index = 0;
  for (std::size_t a = 0; a < i; ++a) index += (n - 1 - a) * (n - 2 - a) / 2;
  for (std::size_t b = i + 1; b < j; ++b) index += n - 1 - b;
  return index + (k - j - 1);
}

inline std::size_t wedge3_dimension(int genus) {
  auto n = static_cast<std::size_t>(2 * genus);
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

/// Basis triples in index order.
inline std::vector<std::array<std::size_t, 3>> wedge3_triples(int genus) {
  auto n = static_cast<std::size_t>(2 * genus);
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

class OmegaWedgeLattice;

/// Element of (wedge^3 H) / (omega ^ H), carried by an integer representative.
class Wedge3Coset {
 public:
  Wedge3Coset() = default;
  Wedge3Coset(int genus, std::vector<Integer> representative, bool reduced = false)
      : genus_(genus), rep_(std::move(representative)), reduced_(reduced) {
    if (rep_.size() != wedge3_dimension(genus)) throw PreconditionError("wedge^3 representative has wrong dimension");
  }
  static Wedge3Coset zero(int genus) {
    return Wedge3Coset(genus, std::vector<Integer>(wedge3_dimension(genus), Integer(0)), true);
  }

  int genus() const { return genus_; }
  const std::vector<Integer>& representative() const { return rep_; }
  bool reduced() const { return reduced_; }

  /// Canonical representative modulo omega ^ H.
  Wedge3Coset normal_form() const;
  bool is_zero() const;

  Wedge3Coset& operator+=(const Wedge3Coset& o) {
    check_genus(o);
    for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] += o.rep_[i];
    reduced_ = false;
    return *this;
  }
  Wedge3Coset& operator-=(const Wedge3Coset& o) {
    check_genus(o);
    for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] -= o.rep_[i];
    reduced_ = false;
    return *this;
  }
  friend Wedge3Coset operator+(Wedge3Coset a, const Wedge3Coset& b) { return a += b; }
  friend Wedge3Coset operator-(Wedge3Coset a, const Wedge3Coset& b) { return a -= b; }
  Wedge3Coset operator-() const { return zero(genus_) - *this; }

  /// Nonzero coefficients keyed by names like "x1^y1^x2".
  std::map<std::string, Integer> terms() const {
    std::map<std::string, Integer> out;
    auto triples = wedge3_triples(genus_);
    for (std::size_t t = 0; t < rep_.size(); ++t) {
      if (rep_[t] == 0) continue;
      const auto& [i, j, k] = triples[t];
      out.emplace(basis_name(static_cast<int>(i)) + "^" + basis_name(static_cast<int>(j)) + "^" +
                      basis_name(static_cast<int>(k)),
                  rep_[t]);
    }
    return out;
  }

  void check_genus(const Wedge3Coset& o) const {
    if (o.genus_ != genus_) throw PreconditionError("wedge^3 elements of different genus");
  }

 private:
  int genus_ = 0;
  std::vector<Integer> rep_;
  bool reduced_ = false;
};

/// Alternating trilinear product; the coefficient of e_i ^ e_j ^ e_k is the
/// 3x3 minor of the coordinate matrix on rows i, j, k.
inline Wedge3Coset wedge3(const HomologyClass& h1, const HomologyClass& h2, const HomologyClass& h3) {
  h1.check_genus(h2);
  h1.check_genus(h3);
  const int g = h1.genus();
  std::vector<Integer> rep(wedge3_dimension(g), Integer(0));
  auto n = static_cast<std::size_t>(2 * g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Integer det = Integer(h1[i]) * (Integer(h2[j]) * h3[k] - Integer(h2[k]) * h3[j]) -
                      Integer(h1[j]) * (Integer(h2[i]) * h3[k] - Integer(h2[k]) * h3[i]) +
                      Integer(h1[k]) * (Integer(h2[i]) * h3[j] - Integer(h2[j]) * h3[i]);
        if (det != 0) rep[triple_index(n, i, j, k)] = det;
      }
  return Wedge3Coset(g, std::move(rep));
}

/// The 2g generators omega ^ e of the sublattice, omega = sum_i x_i ^ y_i.
inline std::vector<std::vector<Integer>> omega_wedge_basis(int genus) {
  if (genus < 2) throw PreconditionError("omega ^ H is only used for genus >= 2");
  std::vector<std::vector<Integer>> out;
  for (int e = 0; e < 2 * genus; ++e) {
    HomologyClass basis = HomologyClass::basis(genus, e);
    Wedge3Coset total = Wedge3Coset::zero(genus);
    for (int i = 1; i <= genus; ++i) total += wedge3(HomologyClass::x(genus, i), HomologyClass::y(genus, i), basis);
    out.push_back(total.representative());
  }
  return out;
}

/// Row-style Hermite normal form of the omega ^ H lattice: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
class OmegaWedgeLattice {
 public:
  explicit OmegaWedgeLattice(int genus) : genus_(genus), dimension_(wedge3_dimension(genus)) {
    rows_ = omega_wedge_basis(genus);
    hermite_reduce();
  }

  /// Immutable per-genus instance, built once.
  static const OmegaWedgeLattice& for_genus(int genus) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const OmegaWedgeLattice>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[genus];
    if (!slot) slot = std::make_unique<const OmegaWedgeLattice>(genus);
    return *slot;
  }

  int genus() const { return genus_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  /// Free rank of the quotient.
  std::size_t quotient_rank() const { return dimension_ - rank(); }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Integer> reduce(std::vector<Integer> v) const {
    if (v.size() != dimension_) throw PreconditionError("vector dimension does not match lattice");
    for (std::size_t r = 0; r < rows_.size(); ++r) subtract_multiple(v, rows_[r], floor_div(v[pivots_[r]], rows_[r][pivots_[r]]));
    return v;
  }

  bool contains(const std::vector<Integer>& v) const {
    auto rem = reduce(v);
    for (const auto& x : rem)
      if (x != 0) return false;
    return true;
  }

 private:
  static void subtract_multiple(std::vector<Integer>& target, const std::vector<Integer>& row, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < target.size(); ++i)
      if (row[i] != 0) target[i] -= q * row[i];
  }

  void hermite_reduce() {
    std::size_t next = 0;
    for (std::size_t col = 0; col < dimension_ && next < rows_.size(); ++col) {
      while (true) {
        std::size_t best = rows_.size();
        for (std::size_t r = next; r < rows_.size(); ++r) {
          if (rows_[r][col] == 0) continue;
          if (best == rows_.size() || abs(rows_[r][col]) < abs(rows_[best][col])) best = r;
        }
        if (best == rows_.size()) break;
        std::swap(rows_[next], rows_[best]);
        bool cleared = true;
        for (std::size_t r = next + 1; r < rows_.size(); ++r) {
          if (rows_[r][col] == 0) continue;
          subtract_multiple(rows_[r], rows_[next], floor_div(rows_[r][col], rows_[next][col]));
          if (rows_[r][col] != 0) cleared = false;
        }
        if (cleared) break;
      }
      if (next == rows_.size() || rows_[next][col] == 0) continue;
      if (rows_[next][col] < 0)
        for (auto& x : rows_[next]) x = -x;
      for (std::size_t r = 0; r < next; ++r) subtract_multiple(rows_[r], rows_[next], floor_div(rows_[r][col], rows_[next][col]));
      pivots_.push_back(col);
      ++next;
    }
    rows_.resize(next);
  }

  int genus_;
  std::size_t dimension_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

inline Wedge3Coset Wedge3Coset::normal_form() const {
  if (reduced_) return *this;
  const auto& lattice = OmegaWedgeLattice::for_genus(genus_);
  return Wedge3Coset(genus_, lattice.reduce(rep_), true);
}

inline bool Wedge3Coset::is_zero() const {
  Wedge3Coset nf = normal_form();
  return std::all_of(nf.rep_.begin(), nf.rep_.end(), [](const Integer& x) { return x == 0; });
}

/// Equality in (wedge^3 H) / (omega ^ H).
inline bool coset_equal(const Wedge3Coset& u, const Wedge3Coset& v) {
  u.check_genus(v);
  return (u - v).is_zero();
}

inline std::size_t quotient_rank(int genus) { return OmegaWedgeLattice::for_genus(genus).quotient_rank(); }

using SymplecticPair = std::pair<HomologyClass, HomologyClass>;

/// tau(T_a T_b^-1) = (sum_i u_i ^ v_i) ^ [a] for a bounding pair {a, b}
/// cutting off R, with (u_i, v_i) a symplectic basis of H_1(R)/<[a]>.
inline Wedge3Coset tau_bounding_pair(int genus, const std::vector<SymplecticPair>& pairs, const HomologyClass& a) {
  if (genus < 2) throw PreconditionError("tau needs genus >= 2");
  if (a.genus() != genus) throw PreconditionError("class [a] has the wrong genus");
  if (a.is_zero()) throw PreconditionError("a bounding pair has nonzero class [a]");
  for (const auto& [u, v] : pairs) {
    if (u.genus() != genus || v.genus() != genus) throw PreconditionError("symplectic pair has the wrong genus");
    if (symplectic_pairing(a, u) != 0 || symplectic_pairing(a, v) != 0) {
      throw PreconditionError("pair classes must pair trivially with [a]");
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      long uv = symplectic_pairing(pairs[i].first, pairs[j].second);
      if (uv != (i == j ? 1 : 0)) throw PreconditionError("pairs are not symplectic: u_i . v_j != delta_ij");
      if (i != j && (symplectic_pairing(pairs[i].first, pairs[j].first) != 0 ||
                     symplectic_pairing(pairs[i].second, pairs[j].second) != 0)) {
        throw PreconditionError("pairs are not symplectic: u_i . u_j or v_i . v_j nonzero");
      }
    }
  }
  Wedge3Coset total = Wedge3Coset::zero(genus);
  for (const auto& [u, v] : pairs) total += wedge3(u, v, a);
  return total;
}

/// Homology data for two homologous curves c, d meeting twice, sitting in a
/// lantern with boundary x, y, z, w. [d] = x1; the subsurface cut off by
/// {z, d} carries (x2, y2) and the one cut off by {w, d} carries (x3, y3).
/// The two regions lie on opposite sides of d, so with each region to the
/// left of its oriented curve, [d] enters the w-side formula as -x1.
struct LanternFixture {
  int genus;
  HomologyClass d;
  std::vector<SymplecticPair> z_side;
  std::vector<SymplecticPair> w_side;

  static LanternFixture canonical(int genus) {
    if (genus < 3) throw PreconditionError("the lantern fixture needs genus >= 3");
    auto x = [&](int i) { return HomologyClass::x(genus, i); };
    auto y = [&](int i) { return HomologyClass::y(genus, i); };
    return {genus, x(1), {{x(2), y(2)}}, {{x(3), y(3)}}};
  }

  Wedge3Coset tau_zd() const { return tau_bounding_pair(genus, z_side, d); }
  Wedge3Coset tau_wd() const { return tau_bounding_pair(genus, w_side, -d); }
  /// tau(T_d T_w^-1) = -tau(T_w T_d^-1).
  Wedge3Coset tau_dw() const { return -tau_wd(); }
};

/// True when tau(T_z T_d^-1) != tau(T_d T_w^-1) in the quotient, so the product
/// (T_z T_d^-1)(T_w T_d^-1) is not in the Johnson kernel.
inline bool lantern_check(int genus) {
  auto fixture = LanternFixture::canonical(genus);
  return !coset_equal(fixture.tau_zd(), fixture.tau_dw());
}

}  // namespace mcg
