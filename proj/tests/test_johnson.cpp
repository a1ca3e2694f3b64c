#include <random>

#include "support.hpp"

using namespace mcg;

namespace {

HomologyClass x(int g, int i) { return HomologyClass::x(g, i); }
HomologyClass y(int g, int i) { return HomologyClass::y(g, i); }

std::size_t choose3(std::size_t n) { return n * (n - 1) * (n - 2) / 6; }

// Rank over Q by fraction-free elimination, independent of the lattice code.
std::size_t rational_rank(std::vector<std::vector<Integer>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      Integer f = rows[r][c], g = rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * g - rows[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(HomologyClass, ParseAndPrint) {
  HomologyClass h = HomologyClass::parse(3, "x2+y3-3x1");
  EXPECT_EQ(h, x(3, 2) + y(3, 3) - 3 * x(3, 1));
  EXPECT_EQ(HomologyClass::parse(3, "0"), HomologyClass(3));
  EXPECT_EQ(HomologyClass::parse(2, "-y2"), -y(2, 2));
  EXPECT_THROW(HomologyClass::parse(2, "x3"), PreconditionError);
  EXPECT_THROW(HomologyClass::parse(2, "z1"), PreconditionError);
  EXPECT_EQ(HomologyClass::parse(3, h.str()), h);
}

TEST(HomologyClass, SymplecticPairing) {
  EXPECT_EQ(symplectic_pairing(x(3, 1), y(3, 1)), 1);
  EXPECT_EQ(symplectic_pairing(y(3, 1), x(3, 1)), -1);
  EXPECT_EQ(symplectic_pairing(x(3, 1), y(3, 2)), 0);
  EXPECT_EQ(symplectic_pairing(x(3, 2) + y(3, 2), y(3, 2)), 1);
}

TEST(Wedge3, Examples) {
  const int g = 2;
  Wedge3Coset e = wedge3(x(g, 1), y(g, 1), x(g, 2));
  auto terms = e.terms();
  ASSERT_EQ(terms.size(), 1U);
  EXPECT_EQ(terms.begin()->first, "x1^y1^x2");
  EXPECT_EQ(terms.begin()->second, 1);
  EXPECT_TRUE(wedge3(x(g, 1), x(g, 1), y(g, 2)).terms().empty());
  EXPECT_EQ(wedge3(x(g, 1) + y(g, 1), y(g, 1), x(g, 2)).representative(), e.representative());
  EXPECT_THROW(wedge3(x(2, 1), x(3, 1), x(2, 2)), PreconditionError);
}

TEST(Wedge3, AlternatingUnderAllPermutations) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int g = 2; g <= 4; ++g) {
    for (int trial = 0; trial < 100; ++trial) {
      auto random = [&] {
        std::vector<long> v(static_cast<std::size_t>(2 * g));
        for (auto& c : v) c = coeff(rng);
        return HomologyClass(g, v);
      };
      HomologyClass a = random(), b = random(), c = random();
      auto base = wedge3(a, b, c).representative();
      auto neg = (-wedge3(a, b, c)).representative();
      EXPECT_EQ(wedge3(b, a, c).representative(), neg);
      EXPECT_EQ(wedge3(a, c, b).representative(), neg);
      EXPECT_EQ(wedge3(c, b, a).representative(), neg);
      EXPECT_EQ(wedge3(b, c, a).representative(), base);
      EXPECT_EQ(wedge3(c, a, b).representative(), base);
    }
  }
}

TEST(OmegaWedgeBasis, GenusTwo) {
  auto basis = omega_wedge_basis(2);
  ASSERT_EQ(basis.size(), 4U);
  // omega ^ x1 = x2 ^ y2 ^ x1 = x1 ^ x2 ^ y2.
  Wedge3Coset first(2, basis[0]);
  EXPECT_EQ(first.representative(), wedge3(x(2, 1), x(2, 2), y(2, 2)).representative());
  EXPECT_THROW(omega_wedge_basis(1), PreconditionError);
}

TEST(OmegaWedgeBasis, Independent) {
  for (int g = 2; g <= 4; ++g) EXPECT_EQ(rational_rank(omega_wedge_basis(g)), static_cast<std::size_t>(2 * g));
}

TEST(Quotient, RankFormula) {
  for (int g = 2; g <= 5; ++g) {
    std::size_t n = static_cast<std::size_t>(2 * g);
    EXPECT_EQ(quotient_rank(g), choose3(n) - n) << g;
    EXPECT_EQ(wedge3_dimension(g), choose3(n));
  }
}

TEST(Quotient, OmegaWedgeBasisIsSaturated) {
  // omega ^ H is a direct summand: the HNF pivots are all 1.
  for (int g = 2; g <= 4; ++g) {
    const auto& lattice = OmegaWedgeLattice::for_genus(g);
    for (std::size_t r = 0; r < lattice.rank(); ++r) EXPECT_EQ(lattice.rows()[r][lattice.pivots()[r]], 1);
  }
}

TEST(CosetEqual, Examples) {
  const int g = 3;
  Wedge3Coset omega_x1(g, omega_wedge_basis(g)[0]);
  EXPECT_TRUE(coset_equal(omega_x1, Wedge3Coset::zero(g)));
  EXPECT_FALSE(coset_equal(wedge3(x(g, 1), y(g, 1), x(g, 2)), Wedge3Coset::zero(g)));
  Wedge3Coset u = wedge3(x(g, 1), y(g, 2), x(g, 3));
  EXPECT_TRUE(coset_equal(u, u));
  EXPECT_TRUE(coset_equal(u + omega_x1, u));
  EXPECT_THROW(coset_equal(u, Wedge3Coset::zero(2)), PreconditionError);
}

TEST(CosetEqual, NormalFormIsCanonical) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const int g = 3;
  auto basis = omega_wedge_basis(g);
  for (int trial = 0; trial < 200; ++trial) {
    Wedge3Coset u = Wedge3Coset::zero(g);
    for (int t = 0; t < 3; ++t) {
      std::vector<long> a(6), b(6), c(6);
      for (auto* v : {&a, &b, &c})
        for (auto& e : *v) e = coeff(rng);
      u += wedge3(HomologyClass(g, a), HomologyClass(g, b), HomologyClass(g, c));
    }
    Wedge3Coset shifted = u;
    for (const auto& row : basis) shifted += Wedge3Coset(g, row) + Wedge3Coset(g, row);
    shifted -= Wedge3Coset(g, basis[2]);
    EXPECT_EQ(u.normal_form().representative(), shifted.normal_form().representative());
    EXPECT_EQ(u.normal_form().normal_form().representative(), u.normal_form().representative());
  }
}

TEST(TauBoundingPair, Examples) {
  EXPECT_TRUE(tau_bounding_pair(3, {}, x(3, 1)).is_zero());
  Wedge3Coset t = tau_bounding_pair(3, {{x(3, 2), y(3, 2)}}, x(3, 1));
  EXPECT_FALSE(t.is_zero());
  EXPECT_EQ(t.representative(), wedge3(x(3, 2), y(3, 2), x(3, 1)).representative());
  auto f = LanternFixture::canonical(3);
  EXPECT_FALSE((f.tau_zd() + f.tau_wd()).is_zero());
}

TEST(TauBoundingPair, RejectsNonSymplecticInput) {
  EXPECT_THROW(tau_bounding_pair(3, {{x(3, 2), x(3, 3)}}, x(3, 1)), PreconditionError);
  EXPECT_THROW(tau_bounding_pair(3, {{x(3, 2), y(3, 2)}, {x(3, 2), y(3, 3)}}, x(3, 1)), PreconditionError);
  EXPECT_THROW(tau_bounding_pair(3, {{y(3, 1), y(3, 2)}}, x(3, 1)), PreconditionError);
  EXPECT_THROW(tau_bounding_pair(3, {{x(3, 2), y(3, 2)}}, HomologyClass(3)), PreconditionError);
  EXPECT_THROW(tau_bounding_pair(3, {{x(3, 2), y(3, 2)}}, x(4, 1)), PreconditionError);
}

TEST(TauBoundingPair, BasisIndependence) {
  EXPECT_TRUE(mcg::verify::tau_basis_independent_genus3());
  // A genus-2 region at g = 4 with a genuinely mixed symplectic basis.
  const int g = 4;
  Wedge3Coset base = tau_bounding_pair(g, {{x(g, 2), y(g, 2)}, {x(g, 3), y(g, 3)}}, x(g, 1));
  HomologyClass u1 = x(g, 2) + x(g, 3), v1 = y(g, 2);
  HomologyClass u2 = x(g, 3), v2 = y(g, 3) - y(g, 2);
  ASSERT_EQ(symplectic_pairing(u1, v1), 1);
  ASSERT_EQ(symplectic_pairing(u2, v2), 1);
  ASSERT_EQ(symplectic_pairing(u1, v2), 0);
  ASSERT_EQ(symplectic_pairing(u2, v1), 0);
  Wedge3Coset changed = tau_bounding_pair(g, {{u1, v1}, {u2, v2}}, x(g, 1));
  EXPECT_TRUE(coset_equal(base, changed));
}

TEST(Lantern, Check) {
  EXPECT_TRUE(lantern_check(3));
  EXPECT_TRUE(lantern_check(4));
  EXPECT_TRUE(lantern_check(6));
  EXPECT_THROW(lantern_check(2), PreconditionError);
  for (int g = 3; g <= 4; ++g) {
    auto f = LanternFixture::canonical(g);
    EXPECT_FALSE(f.tau_zd().is_zero());
    EXPECT_FALSE(f.tau_wd().is_zero());
  }
}
