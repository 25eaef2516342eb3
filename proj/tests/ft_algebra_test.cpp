#include <cmath>
#include <random>
#include <vector>

#include "contavg/errors.hpp"
#include "contavg/ft/hamiltonian.hpp"
#include "contavg/ft/serialization.hpp"
#include "contavg/ft/series.hpp"
#include "contavg/ft/vector_field.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace contavg::ft {
namespace {

using testing::norm1;
using testing::random_field;
using testing::random_series;
using testing::uniform;

constexpr SeriesShape kPlane{1, 2, 3, 6};

VectorFieldFT linear_field(SeriesShape shape, const double (&A)[2][2]) {
  VectorFieldFT u(shape);
  for (int i = 0; i < 2; ++i) {
    u[i].set_coeff(0, {1, 0}, A[i][0]);
    u[i].set_coeff(0, {0, 1}, A[i][1]);
  }
  return u;
}

TEST(TaylorIndex, GradedOrderAndLookup) {
  const auto ti = TaylorIndex::get(2, 3);
  ASSERT_EQ(ti->size(), 10);
  EXPECT_EQ(ti->degree(0), 0);
  const int e[] = {2, 1};
  const int i = ti->index_of(e);
  ASSERT_GE(i, 0);
  EXPECT_EQ(ti->exponent(i)[0], 2);
  EXPECT_EQ(ti->exponent(i)[1], 1);
  const int too_high[] = {3, 1};
  EXPECT_EQ(ti->index_of(too_high), -1);
}

TEST(FourierIndex, HalfLatticeAndConjugateSlots) {
  const auto fi = FourierIndex::get(2, 2);
  EXPECT_EQ(fi->stored_size(), (25 + 1) / 2);
  const int k[] = {0, -1};
  const int nk[] = {0, 1};
  EXPECT_TRUE(fi->slot(k).conjugate);
  EXPECT_FALSE(fi->slot(nk).conjugate);
  EXPECT_EQ(fi->slot(k).stored, fi->slot(nk).stored);
  const int out[] = {3, 0};
  EXPECT_EQ(fi->slot(out).stored, -1);
}

TEST(Commutator, LinearFieldsGiveMatrixCommutator) {
  const double A[2][2] = {{0.3, -1.2}, {0.7, 0.4}};
  const double B[2][2] = {{1.1, 0.5}, {-0.2, -0.9}};
  const auto result = commutator(linear_field(kPlane, A), linear_field(kPlane, B));
  double BA_AB[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      BA_AB[i][j] = 0.0;
      for (int l = 0; l < 2; ++l) BA_AB[i][j] += B[i][l] * A[l][j] - A[i][l] * B[l][j];
    }
  }
  const auto expected = linear_field(kPlane, BA_AB);
  EXPECT_LT(norm1(result - expected), 1e-14);
}

TEST(Commutator, SelfBracketVanishes) {
  std::mt19937_64 rng(1);
  const auto u = random_field(kPlane, rng, 3, 6);
  EXPECT_LT(norm1(commutator(u, u)), 1e-13 * norm1(u) * norm1(u));
}

TEST(Commutator, HandExampleMatchesFiniteDifferences) {
  VectorFieldFT u1(kPlane);
  VectorFieldFT u2(kPlane);
  u1[0].set_coeff(0, {2, 0}, 1.0);  // (z1^2, 0)
  u2[1].set_coeff(0, {1, 0}, 1.0);  // (0, z1)
  const auto result = commutator(u1, u2);
  EXPECT_EQ(result[0].coeff(0, {2, 0}), Complex(0.0));
  EXPECT_EQ(result[1].coeff(0, {2, 0}), Complex(1.0));
  EXPECT_LT(norm1(result[0]), 1e-15);

  // Independent route: (Dw) v by central differences of the evaluated fields.
  std::mt19937_64 rng(2);
  const double t[] = {0.3};
  for (int trial = 0; trial < 10; ++trial) {
    const double z[] = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    auto dir_deriv = [&](const VectorFieldFT& v, const VectorFieldFT& w) {
      const auto vz = v.evaluate_real(z, t);
      const double h = 1e-5;
      double zp[2], zm[2];
      for (int j = 0; j < 2; ++j) {
        zp[j] = z[j] + h * vz[j];
        zm[j] = z[j] - h * vz[j];
      }
      const auto wp = w.evaluate_real(zp, t);
      const auto wm = w.evaluate_real(zm, t);
      return std::vector<double>{(wp[0] - wm[0]) / (2 * h), (wp[1] - wm[1]) / (2 * h)};
    };
    const auto a = dir_deriv(u1, u2);
    const auto b = dir_deriv(u2, u1);
    const auto r = result.evaluate_real(z, t);
    EXPECT_NEAR(r[0], a[0] - b[0], 1e-8);
    EXPECT_NEAR(r[1], a[1] - b[1], 1e-8);
  }
}

TEST(Commutator, ShapeMismatchIsContractViolation) {
  VectorFieldFT a(kPlane);
  VectorFieldFT b(SeriesShape{1, 2, 2, 6});
  EXPECT_THROW(commutator(a, b), ContractViolation);
}

TEST(Commutator, AlgebraicPropertiesOnRandomFields) {
  // Degree <= N/3 and modes <= K/3 keep every nested bracket exact.
  const SeriesShape shape{1, 2, 3, 7};
  std::mt19937_64 rng(3);
  double worst_anti = 0, worst_lin = 0, worst_jacobi = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto u1 = random_field(shape, rng, 1, 3);
    const auto u2 = random_field(shape, rng, 1, 3);
    const auto u3 = random_field(shape, rng, 1, 3);
    const double scale = norm1(u1) * norm1(u2);
    worst_anti = std::max(worst_anti,
                          norm1(commutator(u1, u2) + commutator(u2, u1)) / scale);
    const double a = uniform(rng, -2, 2);
    const double b = uniform(rng, -2, 2);
    const auto lhs = commutator(a * u1 + b * u3, u2);
    const auto rhs = a * commutator(u1, u2) + b * commutator(u3, u2);
    worst_lin = std::max(worst_lin, norm1(lhs - rhs) / (norm1(lhs) + norm1(rhs)));
    const auto jac = commutator(commutator(u1, u2), u3) +
                     commutator(commutator(u2, u3), u1) +
                     commutator(commutator(u3, u1), u2);
    worst_jacobi = std::max(
        worst_jacobi, norm1(jac) / (norm1(u1) * norm1(u2) * norm1(u3)));
  }
  EXPECT_LT(worst_anti, 1e-12);
  EXPECT_LT(worst_lin, 1e-12);
  EXPECT_LT(worst_jacobi, 1e-10);
}

TEST(Commutator, TorusFieldsDifferentiateAlongAngles) {
  const SeriesShape shape{2, 1, 2, 3};
  std::mt19937_64 rng(4);
  const auto u1 = random_field(shape, rng, 1, 1, PhaseKind::kTorus);
  const auto u2 = random_field(shape, rng, 1, 1, PhaseKind::kTorus);
  const auto result = commutator(u1, u2);
  for (int trial = 0; trial < 5; ++trial) {
    const double z[] = {uniform(rng, 0, 6), uniform(rng, 0, 6), uniform(rng, -0.5, 0.5)};
    auto dir = [&](const VectorFieldFT& v, const VectorFieldFT& w) {
      const auto vz = v.evaluate_real(z);
      const double h = 1e-5;
      double zp[3], zm[3];
      for (int j = 0; j < 3; ++j) {
        zp[j] = z[j] + h * vz[j];
        zm[j] = z[j] - h * vz[j];
      }
      const auto wp = w.evaluate_real(zp);
      const auto wm = w.evaluate_real(zm);
      std::vector<double> d(3);
      for (int j = 0; j < 3; ++j) d[j] = (wp[j] - wm[j]) / (2 * h);
      return d;
    };
    const auto a = dir(u1, u2);
    const auto b = dir(u2, u1);
    const auto r = result.evaluate_real(z);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(r[j], a[j] - b[j], 1e-6);
  }
}

HamiltonianFT scalar_h(SeriesShape shape, std::initializer_list<int> a, double c) {
  return HamiltonianFT(FourierTaylorSeries::term(shape, 0, a, c));
}

TEST(PoissonBracket, CanonicalPair) {
  const auto b = poisson_bracket(scalar_h(kPlane, {1, 0}, 1.0), scalar_h(kPlane, {0, 1}, 1.0));
  EXPECT_LT(norm1(b.h() - FourierTaylorSeries::constant(kPlane, 1.0)), 1e-15);
}

TEST(PoissonBracket, SelfBracketVanishes) {
  std::mt19937_64 rng(5);
  const HamiltonianFT h(random_series(kPlane, rng, 3, 6));
  EXPECT_LT(norm1(poisson_bracket(h, h).h()), 1e-13 * norm1(h.h()) * norm1(h.h()));
}

TEST(PoissonBracket, KineticWithCosine) {
  const SeriesShape shape{1, 2, 1, 12};
  const auto kinetic = scalar_h(shape, {0, 2}, 0.5);
  const HamiltonianFT cosine(cos_series(shape, 0));
  const auto bracket = poisson_bracket(kinetic, cosine);
  // {y^2/2, cos x} = -y * d(cos x)/dx = y sin x, truncated at degree 12.
  const auto expected = FourierTaylorSeries::variable(shape, 1) * sin_series(shape, 0);
  EXPECT_LT(norm1(bracket.h() - expected), 1e-15);
  // Away from truncation effects, J grad of the bracket matches the flow.
  const double z[] = {0.4, -0.3};
  const double t[] = {0.0};
  EXPECT_NEAR(bracket.h().evaluate(z, t).real(), -0.3 * std::sin(0.4), 1e-10);
}

TEST(PoissonBracket, MatchesMinusCommutatorOfHamiltonianFields) {
  const SeriesShape shape{1, 2, 3, 8};
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const HamiltonianFT h1(random_series(shape, rng, 1, 4));
    const HamiltonianFT h2(random_series(shape, rng, 1, 4));
    const auto lhs = hamiltonian_to_field(poisson_bracket(h1, h2));
    const auto rhs = commutator(hamiltonian_to_field(h1), hamiltonian_to_field(h2));
    EXPECT_LT(norm1(lhs + rhs), 1e-12 * (norm1(lhs) + 1.0));
  }
  // One concrete case fixing the sign: h1 = x^2/2, h2 = y.
  const auto lhs = hamiltonian_to_field(poisson_bracket(scalar_h(shape, {2, 0}, 0.5),
                                                        scalar_h(shape, {0, 1}, 1.0)));
  EXPECT_EQ(lhs[1].coeff(0, {0, 0}), Complex(-1.0));
}

TEST(PoissonBracket, InducedFieldIsDivergenceFree) {
  std::mt19937_64 rng(7);
  const HamiltonianFT h(random_series(kPlane, rng, 3, 6));
  EXPECT_LT(norm1(divergence(hamiltonian_to_field(h))), 1e-14 * norm1(h.h()));
}

TEST(Hilbert, CosineAndSineModes) {
  VectorFieldFT cos_v(kPlane);
  cos_v[0] = FourierTaylorSeries::term(kPlane, 1, {1, 0}, 0.5);  // cos t * z1
  VectorFieldFT sin_v(kPlane);
  sin_v[0] = FourierTaylorSeries::term(kPlane, 1, {1, 0}, Complex(0, -0.5));  // sin t * z1
  EXPECT_LT(norm1(hilbert_xi(cos_v) + sin_v), 1e-16);
  EXPECT_LT(norm1(hilbert_xi(sin_v) - cos_v), 1e-16);
  // t-independent fields are annihilated.
  VectorFieldFT mean_v(kPlane);
  mean_v[1] = FourierTaylorSeries::term(kPlane, 0, {2, 1}, 3.0);
  EXPECT_TRUE(hilbert_xi(mean_v).is_zero());
  // d/dt of xi(cos t v) is -cos t v.
  EXPECT_LT(norm1(d_dt(hilbert_xi(cos_v)) + cos_v), 1e-16);
}

TEST(Hilbert, SquareIsMinusOscillatoryProjection) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_field(kPlane, rng, 3, 6);
    const auto xx = hilbert_xi(hilbert_xi(u));
    EXPECT_LT(norm1(xx + u.oscillatory()), 1e-15 * norm1(u));
  }
}

TEST(TimeDerivative, Examples) {
  EXPECT_TRUE(d_dt(FourierTaylorSeries::constant(kPlane, 2.0)).is_zero());
  const auto e = FourierTaylorSeries::term(kPlane, 1, {0, 0}, Complex(0.3, 0.1));
  EXPECT_EQ(d_dt(e).coeff(1, {0, 0}), Complex(0.3, 0.1) * Complex(0, 1));
}

TEST(WeightedNorm, Definition) {
  const TruncationPolicy policy{3, 6, 0.0, 1.0, 0.5};
  EXPECT_EQ(FourierTaylorSeries(kPlane).weighted_norm(policy).value, 0.0);
  const Complex c(0.6, -0.8);
  const auto s = FourierTaylorSeries::term(kPlane, 1, {0, 0}, c);
  // Both k = 1 and k = -1 carry |c|.
  EXPECT_NEAR(s.weighted_norm(policy).value, 2.0 * std::abs(c) * std::exp(0.5), 1e-15);
  const auto t = FourierTaylorSeries::term(kPlane, 0, {1, 2}, 2.0);
  EXPECT_NEAR(t.weighted_norm(TruncationPolicy{3, 6, 0.0, 0.5, 0.0}).value, 2.0 * 0.125, 1e-16);
}

TEST(WeightedNorm, SubadditiveAndSaturating) {
  std::mt19937_64 rng(9);
  const TruncationPolicy policy{3, 6, 0.0, 0.7, 0.3};
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_series(kPlane, rng, 3, 6);
    const auto b = random_series(kPlane, rng, 3, 6);
    EXPECT_LE((a + b).weighted_norm(policy).value,
              a.weighted_norm(policy).value + b.weighted_norm(policy).value + 1e-12);
  }
  const auto s = FourierTaylorSeries::term(kPlane, 3, {0, 0}, 1.0);
  const auto n = s.weighted_norm(TruncationPolicy{3, 6, 0.0, 1.0, 400.0});
  EXPECT_TRUE(n.saturated);
}

TEST(Evaluate, PolynomialsAndRealValues) {
  const SeriesShape line{1, 1, 2, 4};
  const auto z2 = FourierTaylorSeries::term(line, 0, {2}, 1.0);
  const double z[] = {2.0};
  const double t[] = {0.0};
  EXPECT_EQ(z2.evaluate(z, t), Complex(4.0));
  const Complex zc[] = {Complex(0.0, 1.0)};
  const Complex tc[] = {Complex(0.0)};
  EXPECT_EQ(z2.evaluate(zc, tc), Complex(-1.0));
  const double bad[] = {std::nan("")};
  EXPECT_THROW(z2.evaluate(bad, t), ContractViolation);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_series(kPlane, rng, 3, 6);
    const double zz[] = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const double tt[] = {uniform(rng, 0, 6.3)};
    const auto v = s.evaluate(zz, tt);
    EXPECT_LE(std::abs(v.imag()), 1e-14 * norm1(s));
  }
}

TEST(HamiltonianToField, Pendulum) {
  const SeriesShape shape{1, 2, 1, 10};
  const HamiltonianFT h(FourierTaylorSeries::term(shape, 0, {0, 2}, 0.5) + cos_series(shape, 0));
  const auto u = hamiltonian_to_field(h);
  EXPECT_LT(norm1(u[0] - FourierTaylorSeries::variable(shape, 1)), 1e-16);
  // -d(cos x)/dx = sin x up to degree N - 1.
  const SeriesShape lower{1, 2, 1, 9};
  EXPECT_LT(norm1(u[1].reshaped(lower) - sin_series(lower, 0)), 1e-16);
}

TEST(Truncate, ZeroDropIsIdentityAndDropsSmall) {
  std::mt19937_64 rng(11);
  const auto s = random_series(kPlane, rng, 3, 6);
  const TruncationPolicy keep{3, 6, 0.0, 1.0, 0.0};
  double dropped = -1.0;
  EXPECT_LT(norm1(s.truncated(keep, &dropped) - s), 1e-300);
  EXPECT_EQ(dropped, 0.0);
  auto small = s * 1e-9;
  const TruncationPolicy cut{3, 6, 1e-8, 1.0, 0.0};
  const auto t = small.truncated(cut, &dropped);
  EXPECT_TRUE(t.is_zero());
  EXPECT_GT(dropped, 0.0);
  const TruncationPolicy lower{1, 2, 0.0, 1.0, 0.0};
  const auto r = s.truncated(lower);
  EXPECT_EQ(r.shape().K, 1);
  EXPECT_EQ(r.coeff(1, {1, 1}), s.coeff(1, {1, 1}));
}

TEST(TruncationPolicy, ValidationNamesField) {
  TruncationPolicy p;
  p.rho = 0.0;
  try {
    p.validate();
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("rho"), std::string::npos);
  }
}

TEST(Reality, PreservedByEveryOperation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_field(kPlane, rng, 3, 6);
    const auto v = random_field(kPlane, rng, 3, 6);
    const VectorFieldFT results[] = {commutator(u, v), hilbert_xi(u), d_dt(u), u + v * 0.5};
    for (const auto& r : results) {
      for (const auto& c : r.components()) {
        for (const auto& x : c.mode(0)) EXPECT_EQ(x.imag(), 0.0);
      }
    }
  }
}

TEST(Serialization, ExactRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_series(kPlane, rng, 3, 6);
    const auto back = parse_series(serialize(s));
    ASSERT_EQ(back.shape(), s.shape());
    for (int i = 0; i < s.stored_modes(); ++i) {
      for (int a = 0; a < s.monomials(); ++a) EXPECT_EQ(back.mode(i)[a], s.mode(i)[a]);
    }
  }
  const SeriesShape torus{2, 1, 2, 2};
  const auto u = random_field(torus, rng, 2, 2, PhaseKind::kTorus);
  const auto back = parse_field(serialize(u));
  EXPECT_EQ(back.kind(), PhaseKind::kTorus);
  EXPECT_EQ(norm1(back - u), 0.0);
}

TEST(Serialization, RejectsNegativeModesAndGarbage) {
  EXPECT_THROW(parse_series(R"({"m":1,"K":1,"N":1,"coeffs":[[-1,[0],1,0]]})"),
               ContractViolation);
  EXPECT_THROW(parse_series("{not json"), ContractViolation);
}

}  // namespace
}  // namespace contavg::ft
