#include "doctest.h"

#include "aplab/setgen.hpp"
#include "oracles.hpp"

using namespace aplab;

TEST_CASE("random_set") {
  CHECK(random_set(64, 1.0, 3).cardinality() == 64);
  CHECK(random_set(1024, 0.3, 7) == random_set(1024, 0.3, 7));
  CHECK(random_set(1024, 0.3, 7).cardinality() != random_set(1024, 0.3, 8).cardinality());
  CHECK_THROWS_AS(random_set(64, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_set(64, 1.5, 1), std::invalid_argument);
}

TEST_CASE("interval_set") {
  CHECK(interval_set(16, 1).elements() == std::vector<u32>{0});
  CHECK(interval_set(16, 16).cardinality() == 16);
  CHECK_THROWS_AS(interval_set(16, 0), std::invalid_argument);
  CHECK_THROWS_AS(interval_set(16, 17), std::invalid_argument);
}

TEST_CASE("bohr_sample stays inside and reproduces") {
  BohrSet b = BohrSet::make(128, {1}, 1.0);
  ZnSet s = bohr_sample(b, 0.5, 9);
  CHECK(s.is_subset_of(b.members()));
  CHECK(s == bohr_sample(b, 0.5, 9));
  CHECK(bohr_sample(b, 1.0, 9) == b.members());
}

TEST_CASE("primes and their density") {
  CHECK(primes_upto(10) == std::vector<u32>{2, 3, 5, 7});
  CHECK(density_of_primes(10) == Rational(4, 10));
  CHECK(density_of_primes(30) == Rational(10, 30));
  CHECK(density_of_primes(10000) == Rational(1229, 10000));
}

TEST_CASE("freiman embedding examples") {
  ZnSet single = freiman_embed({9}, 10);
  CHECK(single.modulus() == 60);
  CHECK(single.elements() == std::vector<u32>{9});
  // triple sums of {9} land at 27 < 60: no wraparound possible
  CHECK(oracles::freiman_iff_holds({9}, 10));

  CHECK_THROWS_AS(freiman_embed({0}, 10), std::invalid_argument);
  CHECK_THROWS_AS(freiman_embed({11}, 10), std::invalid_argument);
}

TEST_CASE("freiman embedding: exhaustive iff check on seeded subsets and primes") {
  SplitMix64 gen(500);
  for (u64 n : {10ULL, 25ULL, 40ULL, 60ULL}) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<u32> a;
      for (u64 v = 1; v <= n && a.size() < 25; ++v) {
        if (gen.next_double() < 0.4) a.push_back(static_cast<u32>(v));
      }
      if (a.empty()) continue;
      CHECK(oracles::freiman_iff_holds(a, n));
      ZnSet embedded = freiman_embed(a, n);
      CHECK(embedded.modulus() == 6 * n);
      CHECK(embedded.cardinality() == a.size());
    }
  }
  std::vector<u32> primes = primes_upto(60);
  CHECK(primes.size() <= 25);
  CHECK(oracles::freiman_iff_holds(primes, 60));
  CHECK(prime_set_embedded(60).cardinality() == primes.size());
}
