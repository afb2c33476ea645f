#include <doctest.h>

#include <cmath>

#include "srzf/channel.hpp"
#include "srzf/errors.hpp"

using namespace srzf;

TEST_SUITE("channel") {

TEST_CASE("zero-dimension request returns an empty matrix") {
  const auto m = gaussian_complex_matrix(0, 5, 1.0, RandomStream(7));
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 5);
}

TEST_CASE("identical stream gives identical matrices") {
  const RandomStream s(42);
  const auto a = gaussian_complex_matrix(2, 2, 0.5, s);
  const auto b = gaussian_complex_matrix(2, 2, 0.5, s);
  CHECK(a == b);
}

TEST_CASE("distinct forks give distinct matrices") {
  const RandomStream s(42);
  const auto a = gaussian_complex_matrix(2, 2, 0.5, s.fork("a"));
  const auto b = gaussian_complex_matrix(2, 2, 0.5, s.fork("b"));
  CHECK(a != b);
}

TEST_CASE("empirical second moment concentrates on the requested variance") {
  const double variance = 1.0 / 1000.0;
  const auto m = gaussian_complex_matrix(1000, 1000, variance, RandomStream(1));
  const double mean_sq = m.squaredNorm() / (1000.0 * 1000.0);
  // |entry|^2 is exponential with mean v and std dev v; n = 1e6 entries.
  const double three_se = 3.0 * variance / 1000.0;
  CHECK(std::abs(mean_sq - variance) <= three_se);
}

TEST_CASE("per-entry variance within 5% of 1/M at M=100") {
  const SystemDims dims(100, 100, 0);  // 10^4 entries in H
  const auto ch = sample_channel(dims, RandomStream(11));
  const double per_entry = ch.H.squaredNorm() / (100.0 * 100.0);
  CHECK(per_entry == doctest::Approx(0.01).epsilon(0.05));
}

TEST_CASE("sampled rows have unit mean square norm") {
  const SystemDims dims(128, 64, 32);
  const auto ch = sample_channel(dims, RandomStream(3));
  REQUIRE(ch.H.rows() == 64);
  REQUIRE(ch.H.cols() == 128);
  REQUIRE(ch.G.rows() == 32);
  const double mean_row_norm = ch.H.squaredNorm() / 64.0;
  CHECK(mean_row_norm >= 0.9);
  CHECK(mean_row_norm <= 1.1);
}

TEST_CASE("no eavesdroppers gives an empty G") {
  const auto ch = sample_channel(SystemDims(4, 2, 0), RandomStream(99));
  CHECK(ch.G.rows() == 0);
  CHECK(ch.G.cols() == 4);
}

TEST_CASE("H is invariant under changes to J at fixed seed") {
  const SystemDims with_eves(16, 8, 8);
  const SystemDims without(16, 8, 0);
  const auto a = sample_channel(with_eves, RandomStream(5));
  const auto b = sample_channel(without, RandomStream(5));
  CHECK(a.H == b.H);
}

TEST_CASE("dimension and parameter validation") {
  CHECK_THROWS_AS(SystemDims(0, 1, 0), InputError);
  CHECK_THROWS_AS(SystemDims(4, 0, 0), InputError);
  CHECK_THROWS_AS(SystemDims(4, 2, -1), InputError);
  CHECK_THROWS_AS(gaussian_complex_matrix(2, 2, 0.0, RandomStream(1)), ParameterError);
  CHECK_THROWS_AS(NoiseProfile(0.0, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(NoiseProfile(1.0, -1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(NoiseProfile(1.0, 1.0, -0.5), ParameterError);
}

TEST_CASE("loads round-trip through from_loads only when integral") {
  const SystemDims dims = SystemDims::from_loads(128, 0.5, 0.25);
  CHECK(dims.K == 64);
  CHECK(dims.J == 32);
  CHECK(dims.alpha_l() == 0.5);
  CHECK_THROWS_AS(SystemDims::from_loads(10, 0.15, 0.0), InputError);
  CHECK_THROWS_AS(SystemDims::from_loads(128, 0.5, 0.3), InputError);
}

TEST_CASE("noise profile derives SNRs by construction") {
  const NoiseProfile n = NoiseProfile::from_snr_db(0.0, 8.0);
  CHECK(n.mu_l() == doctest::Approx(1.0));
  CHECK(n.mu_o() == doctest::Approx(std::pow(10.0, 0.8)));
  const NoiseProfile direct(2.0, 4.0, 8.0);
  CHECK(direct.mu_l() == 4.0);
  CHECK(direct.mu_o() == 2.0);
}

}  // TEST_SUITE
