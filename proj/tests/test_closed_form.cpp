#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "qdent/closed_form.hpp"
#include "qdent/errors.hpp"

using namespace qdent;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

namespace {

ExactRational q(long num, long den) { return ExactRational(BigInt(num), BigInt(den)); }

// Finite-difference oracle for the single-excitation entropy rate.
double m1_entropy(int n, double kt) {
  const double p1 = p1_single_excitation(n, kt);
  const double w[2] = {1.0 - p1, p1};
  return entanglement(w);
}

}  // namespace

TEST_CASE("ModelConfig validation") {
  CHECK_THROWS_AS(ModelConfig(0, 0), DomainError);
  CHECK_THROWS_AS(ModelConfig(3, 4), DomainError);
  CHECK_THROWS_AS(ModelConfig(3, -1), DomainError);
  const ModelConfig c(10, 7);
  CHECK(c.reduced_excitations() == 3);
  CHECK(c.schmidt_rank() == 4);
}

TEST_CASE("amplitude table for N=2, M=1") {
  const AmplitudeTable t(ModelConfig(2, 1));
  REQUIRE(t.size() == 2);
  CHECK(t.b(0, 0) == q(1, 2));
  CHECK(t.b(0, 1) == q(1, 2));
  CHECK(t.b(1, 0) == q(1, 2));
  CHECK(t.b(1, 1) == q(-1, 2));
  CHECK(t.phase(0) == -1);
  CHECK(t.phase(1) == 1);
}

TEST_CASE("amplitude table for the empty sector") {
  for (int n = 1; n <= 8; ++n) {
    const AmplitudeTable t(ModelConfig(n, 0));
    REQUIRE(t.size() == 1);
    CHECK(t.b(0, 0) == ExactRational(1));
    CHECK(t.phase(0) == 0);
  }
}

TEST_CASE("amplitude tables match independently computed rationals") {
  // Frozen from a separate Fraction-based evaluation of the b formula.
  struct Case {
    int n, m;
    std::vector<std::vector<ExactRational>> b;
    std::vector<std::int64_t> phase;
  };
  const std::vector<Case> cases = {
      {3, 1, {{q(1, 3), q(1, 3)}, {q(2, 3), q(-1, 3)}}, {-2, 1}},
      {4, 2, {{q(1, 6), q(1, 6), q(1, 6)}, {q(1, 2), q(0, 1), q(-1, 2)}, {q(1, 3), q(-1, 6), q(1, 3)}}, {-4, 0, 2}},
      {5, 2, {{q(1, 10), q(1, 10), q(1, 10)}, {q(2, 5), q(1, 15), q(-4, 15)}, {q(1, 2), q(-1, 6), q(1, 6)}}, {-6, -1, 2}},
      {6, 4, {{q(1, 15), q(1, 15), q(1, 15)}, {q(1, 3), q(1, 12), q(-1, 6)}, {q(3, 5), q(-3, 20), q(1, 10)}}, {-8, -2, 2}},
  };
  for (const auto& c : cases) {
    const AmplitudeTable t(ModelConfig(c.n, c.m));
    REQUIRE(t.size() == static_cast<int>(c.phase.size()));
    for (int n = 0; n < t.size(); ++n) {
      CHECK(t.phase(n) == c.phase[static_cast<std::size_t>(n)]);
      for (int m = 0; m < t.size(); ++m) CHECK(t.b(n, m) == c.b[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("column sums reproduce the initial product state exactly") {
  for (int n = 1; n <= 16; ++n) {
    for (int m = 0; m <= n; ++m) {
      const AmplitudeTable t(ModelConfig(n, m));
      CHECK(t.phase(0) == -static_cast<std::int64_t>(m) * (n - m));
      for (int col = 0; col < t.size(); ++col) {
        ExactRational sum;
        for (int row = 0; row < t.size(); ++row) sum += t.b(row, col);
        CHECK(sum == ExactRational(col == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("corrupted copy breaks the column-sum invariant") {
  const AmplitudeTable t(ModelConfig(4, 2));
  const AmplitudeTable bad = detail::corrupted_copy(t);
  CHECK(bad.b(0, 0) == t.b(0, 0) + q(1, 64));
  CHECK(t.b(0, 0) == q(1, 6));
}

TEST_CASE("coefficients for N=2, M=1 are cos and -i sin") {
  const AmplitudeTable t(ModelConfig(2, 1));
  for (double kt : {0.0, 0.3, 1.1, 2.5, -0.7}) {
    const auto c = coefficients(t, kt);
    CHECK_THAT(c[0].real(), WithinAbs(std::cos(kt), 1e-15));
    CHECK_THAT(c[0].imag(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(c[1].real(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(c[1].imag(), WithinAbs(-std::sin(kt), 1e-15));
  }
}

TEST_CASE("coefficients at kt=0 are the unit vector") {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto c = coefficients(AmplitudeTable(ModelConfig(n, m)), 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) CHECK_THAT(std::abs(c[i]), WithinAbs(i == 0 ? 1.0 : 0.0, 1e-14));
    }
  }
}

TEST_CASE("coefficient magnitudes at pi for N=5, M=2") {
  const auto c = coefficients(AmplitudeTable(ModelConfig(5, 2)), pi);
  CHECK_THAT(std::abs(c[0]), WithinAbs(1.0 / 5.0, 1e-14));
  CHECK_THAT(std::abs(c[1]), WithinAbs(2.0 / 15.0, 1e-14));
  CHECK_THAT(std::abs(c[2]), WithinAbs(8.0 / 15.0, 1e-14));
}

TEST_CASE("schmidt spectrum examples") {
  const auto s = schmidt_spectrum(AmplitudeTable(ModelConfig(4, 1)), pi / 4);
  CHECK_THAT(s.weights[0], WithinAbs(0.25, 1e-14));
  CHECK_THAT(s.weights[1], WithinAbs(0.75, 1e-14));
  CHECK(s.time == pi / 4);

  const auto zero = schmidt_spectrum(AmplitudeTable(ModelConfig(9, 4)), 0.0);
  CHECK_THAT(zero.weights[0], WithinAbs(1.0, 1e-14));
  for (std::size_t i = 1; i < zero.weights.size(); ++i) CHECK_THAT(zero.weights[i], WithinAbs(0.0, 1e-14));

  const auto s73 = schmidt_spectrum(AmplitudeTable(ModelConfig(7, 3)), pi);
  const double expected[4] = {1.0 / 49, 48.0 / 1225, 1152.0 / 11025, 1024.0 / 1225};
  for (int m = 0; m < 4; ++m) CHECK_THAT(s73.weights[static_cast<std::size_t>(m)], WithinAbs(expected[m], 1e-13));
  CHECK(q(1, 49) + q(48, 1225) + q(1152, 11025) + q(1024, 1225) == ExactRational(1));
}

TEST_CASE("entropy values frozen from an independent evaluation") {
  struct Case {
    int n, m;
    double kt, entropy;
    std::vector<double> weights;
  };
  const std::vector<Case> cases = {
      {6, 2, 0.7, 1.3766699827962179, {0.1371894297981923, 0.295352478875185, 0.5674580913266227}},
      {9, 4, 1.3, 1.8021165652322484,
       {0.1621542655309162, 0.03435024608578777, 0.4372804414780156, 0.3341315593193769, 0.0320834875859034}},
      {8, 3, 2.2, 1.6018757971288844,
       {0.056810385023138364, 0.5184773893407139, 0.31452460648761865, 0.11018761914852906}},
      {10, 5, 0.45, 2.536624243909969,
       {0.13236124291554666, 0.15400115147164492, 0.10908246271495312, 0.16251817119493636, 0.2406813846663343,
        0.2013555870365846}},
  };
  for (const auto& c : cases) {
    const AmplitudeTable t(ModelConfig(c.n, c.m));
    const auto s = schmidt_spectrum(t, c.kt);
    CHECK_THAT(entanglement(s), WithinAbs(c.entropy, 1e-12));
    for (std::size_t i = 0; i < c.weights.size(); ++i) CHECK_THAT(s.weights[i], WithinAbs(c.weights[i], 1e-12));
  }
}

TEST_CASE("entanglement of explicit spectra") {
  const double bell[] = {0.5, 0.5};
  CHECK(entanglement(bell) == 1.0);
  const double product[] = {1.0, 0.0};
  CHECK(entanglement(product) == 0.0);
  const double e52[] = {1.0 / 25, 24.0 / 225, 192.0 / 225};
  CHECK_THAT(entanglement(e52), WithinAbs(0.7254201904670345, 1e-13));
  CHECK_THAT(entropy_at(AmplitudeTable(ModelConfig(5, 2)), pi), WithinAbs(0.7254201904670345, 1e-12));
}

TEST_CASE("MES bound and relative entanglement") {
  CHECK_THAT(mes_entropy(ModelConfig(10, 5)), WithinAbs(std::log2(6.0), 1e-15));
  for (int n = 2; n <= 20; ++n) CHECK(mes_entropy(ModelConfig(n, 1)) == 1.0);
  CHECK(mes_entropy(ModelConfig(7, 0)) == 0.0);
  CHECK(relative_entanglement(1.0, ModelConfig(7, 1)) == 1.0);
  CHECK_THAT(relative_entanglement(1.0, ModelConfig(7, 3)), WithinAbs(0.5, 1e-15));
  CHECK_THROWS_AS(relative_entanglement(0.0, ModelConfig(5, 0)), DomainError);
  CHECK_THROWS_AS(relative_entanglement(0.0, ModelConfig(5, 5)), DomainError);
}

TEST_CASE("single-excitation Schmidt weight") {
  CHECK_THAT(p1_single_excitation(2, pi / 4), WithinAbs(0.5, 1e-15));
  CHECK_THAT(p1_single_excitation(4, pi / 4), WithinAbs(0.75, 1e-15));
  for (int n = 2; n <= 10; ++n) CHECK(p1_single_excitation(n, 0.0) == 0.0);
  CHECK_THROWS_AS(p1_single_excitation(1, 0.1), DomainError);
}

TEST_CASE("single-excitation rate") {
  const auto t5 = mes_time_m1(5);
  REQUIRE(t5.has_value());
  CHECK_THAT(entanglement_rate_m1(5, *t5), WithinAbs(0.0, 1e-9));
  CHECK_THAT(entanglement_rate_m1(7, pi / 7), WithinAbs(0.0, 1e-9));
  const double h = 1e-6;
  const double fd = (m1_entropy(6, 0.1 + h) - m1_entropy(6, 0.1 - h)) / (2 * h);
  CHECK_THAT(entanglement_rate_m1(6, 0.1), WithinAbs(fd, 1e-6));
  // Singular points return the limiting value 0.
  CHECK(entanglement_rate_m1(6, 0.0) == 0.0);
  CHECK_THAT(entanglement_rate_m1(6, 2 * pi / 6), WithinAbs(0.0, 1e-9));
  CHECK_THAT(entanglement_rate_m1(2, pi / 2), WithinAbs(0.0, 1e-9));
}

TEST_CASE("single-excitation MES time") {
  CHECK_THAT(*mes_time_m1(2), WithinAbs(pi / 4, 1e-15));
  CHECK_THAT(*mes_time_m1(6), WithinAbs(0.4163485907994181, 1e-12));
  CHECK_THAT(m1_entropy(6, *mes_time_m1(6)), WithinAbs(1.0, 1e-12));
  for (int n = 2; n <= 6; ++n) {
    REQUIRE(mes_time_m1(n).has_value());
    CHECK_THAT(p1_single_excitation(n, *mes_time_m1(n)), WithinAbs(0.5, 1e-12));
  }
  for (int n = 7; n <= 50; ++n) CHECK_FALSE(mes_time_m1(n).has_value());
}

TEST_CASE("single-excitation peak entropy") {
  CHECK_THAT(peak_entropy_m1(7), WithinAbs(0.9997, 5e-5));
  CHECK_THAT(peak_entropy_m1(7), WithinAbs(0.999699542856517, 1e-12));
  const double w4[] = {0.25, 0.75};
  CHECK_THAT(peak_entropy_m1(4), WithinAbs(entanglement(w4), 1e-12));
  CHECK_THAT(peak_entropy_m1(4), WithinAbs(0.81128, 1e-5));
  CHECK_THAT(peak_entropy_m1(8), WithinAbs(0.9886994082884981, 1e-12));
  // Closed peak value equals the entropy at kt = pi/N.
  for (int n = 3; n <= 40; ++n) CHECK_THAT(peak_entropy_m1(n), WithinAbs(m1_entropy(n, pi / n), 1e-12));
  CHECK_THAT(peak_entropy_m1(2), WithinAbs(m1_entropy(2, pi / 2), 1e-12));
}

TEST_CASE("pi-time magnitudes") {
  const auto m52 = pi_time_magnitudes_exact(ModelConfig(5, 2));
  CHECK(m52 == std::vector<ExactRational>{q(1, 5), q(2, 15), q(8, 15)});
  const auto m73 = pi_time_magnitudes_exact(ModelConfig(7, 3));
  CHECK(m73 == std::vector<ExactRational>{q(1, 7), q(2, 35), q(8, 105), q(16, 35)});
  CHECK(pi_time_magnitudes(ModelConfig(3, 0)) == std::vector<double>{1.0});
  CHECK_THROWS_AS(pi_time_magnitudes(ModelConfig(6, 2)), DomainError);
  CHECK_THROWS_AS(pi_time_magnitudes(ModelConfig(7, 4)), DomainError);

  ExactRational total;
  for (const auto& w : pi_time_weights_exact(ModelConfig(7, 3))) total += w;
  CHECK(total == ExactRational(1));
}

TEST_CASE("property: normalization for every sector up to N=12") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> time(-20.0, 20.0);
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      const AmplitudeTable t(ModelConfig(n, m));
      for (int s = 0; s < 20; ++s) {
        const auto sp = schmidt_spectrum(t, time(rng));
        double total = 0.0;
        for (double p : sp.weights) {
          CHECK(p >= 0.0);
          CHECK(p <= 1.0 + 1e-12);
          total += p;
        }
        CHECK_THAT(total, WithinAbs(1.0, 1e-12));
        CHECK(entanglement(sp) <= mes_entropy(t.config()) + 1e-12);
      }
    }
  }
}

TEST_CASE("property: spectra of M and N-M coincide") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> time(0.0, 7.0);
  for (int n = 2; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      const AmplitudeTable a(ModelConfig(n, m));
      const AmplitudeTable b(ModelConfig(n, n - m));
      for (int s = 0; s < 10; ++s) {
        const double kt = time(rng);
        const auto pa = schmidt_spectrum(a, kt).weights;
        const auto pb = schmidt_spectrum(b, kt).weights;
        REQUIRE(pa.size() == pb.size());
        for (std::size_t i = 0; i < pa.size(); ++i) CHECK_THAT(pa[i], WithinAbs(pb[i], 1e-12));
      }
    }
  }
}

TEST_CASE("property: entropy periodicity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> time(0.0, 7.0);
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m < n; ++m) {
      const AmplitudeTable t(ModelConfig(n, m));
      const int reduced = t.config().reduced_excitations();
      const double p = reduced == 1 ? 2 * pi / n : (n % 2 == 0 ? pi : 2 * pi);
      for (int s = 0; s < 10; ++s) {
        const double kt = time(rng);
        CHECK_THAT(entropy_at(t, kt + p), WithinAbs(entropy_at(t, kt), 1e-12));
      }
    }
  }
}

TEST_CASE("property: general table agrees with the single-excitation formula") {
  for (int n = 2; n <= 12; ++n) {
    const AmplitudeTable t(ModelConfig(n, 1));
    for (int s = 0; s <= 50; ++s) {
      const double kt = 0.137 * s;
      const auto w = schmidt_spectrum(t, kt).weights;
      const double p1 = p1_single_excitation(n, kt);
      CHECK_THAT(w[1], WithinAbs(p1, 1e-12));
      CHECK_THAT(w[0], WithinAbs(1.0 - p1, 1e-12));
    }
  }
}

TEST_CASE("property: coefficients at pi equal the compact formula for odd N") {
  for (int n = 1; n <= 15; n += 2) {
    for (int m = 0; 2 * m <= n - 1; ++m) {
      const ModelConfig cfg(n, m);
      const AmplitudeTable t(cfg);
      const auto exact = coefficients_at_pi_exact(t);
      const auto predicted = pi_time_magnitudes_exact(cfg);
      const auto numeric = coefficients(t, pi);
      REQUIRE(exact.size() == predicted.size());
      for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(exact[i].abs() == predicted[i]);
        CHECK_THAT(std::abs(numeric[i]), WithinAbs(predicted[i].to_double(), 1e-12));
      }
    }
  }
}

TEST_CASE("property: single-excitation rate matches finite differences") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 12; ++n) {
    std::uniform_real_distribution<double> time(0.0, 2 * pi / n);
    for (int s = 0; s < 40; ++s) {
      const double kt = time(rng);
      const double phase = std::fmod(n * kt, pi);
      if (phase < 1e-3 || pi - phase < 1e-3) continue;
      const double p1 = p1_single_excitation(n, kt);
      if (p1 > 1.0 - 1e-3) continue;
      const double h = 1e-6;
      const double fd = (m1_entropy(n, kt + h) - m1_entropy(n, kt - h)) / (2 * h);
      CHECK_THAT(entanglement_rate_m1(n, kt), WithinAbs(fd, 1e-5));
    }
  }
}

TEST_CASE("MES bound is reached only for a single excitation and N <= 6") {
  for (int n = 2; n <= 6; ++n) {
    CHECK_THAT(entropy_at(AmplitudeTable(ModelConfig(n, 1)), *mes_time_m1(n)), WithinAbs(1.0, 1e-12));
  }
  for (int n = 7; n <= 12; ++n) {
    const AmplitudeTable t(ModelConfig(n, 1));
    double best = 0.0;
    for (int s = 0; s <= 2000; ++s) best = std::max(best, entropy_at(t, 2 * pi / n * s / 2000.0));
    CHECK(best < 1.0 - 1e-6);
  }
}

TEST_CASE("entanglement trace samples the closed interval") {
  const auto tr = entanglement_trace(AmplitudeTable(ModelConfig(2, 1)), pi, 4);
  REQUIRE(tr.times.size() == 5);
  const double expected[] = {0.0, 1.0, 0.0, 1.0, 0.0};
  for (int i = 0; i < 5; ++i) {
    CHECK_THAT(tr.times[static_cast<std::size_t>(i)], WithinAbs(pi * i / 4, 1e-15));
    CHECK_THAT(tr.entropies[static_cast<std::size_t>(i)], WithinAbs(expected[i], 1e-12));
  }
  CHECK_THROWS_AS(entanglement_trace(AmplitudeTable(ModelConfig(2, 1)), pi, 0), DomainError);
}

TEST_CASE("extended-precision entropy agrees with the double path") {
  const AmplitudeTable t(ModelConfig(11, 5));
  for (double kt : {0.1, 1.0, 2.5, pi}) {
    CHECK_THAT(static_cast<double>(entropy_at_extended(t, kt)), WithinAbs(entropy_at(t, kt), 1e-12));
  }
}
