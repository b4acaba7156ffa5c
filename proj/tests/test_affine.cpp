#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bfca/affine.hpp"
#include "bfca/class_registry.hpp"
#include "bfca/truth_table.hpp"
#include "support.hpp"

using bfca::AffineTransform;
using bfca::ClassRegistry;
using bfca::TruthTable;
using bfca::is_invertible;

TEST_CASE("transform basics", "[affine]") {
  const TruthTable g = TruthTable::from_hex("288d1b41", 5);

  CHECK(apply_transform(g, AffineTransform::identity()) == g);

  AffineTransform flip = AffineTransform::identity();
  flip.output_complement = true;
  CHECK(apply_transform(g, flip) == (g ^ TruthTable::ones(5)));

  AffineTransform add0 = AffineTransform::identity();
  add0.output_mask = 1;
  CHECK(apply_transform(g, add0) == (g ^ TruthTable::variable(5, 0)));

  AffineTransform shift = AffineTransform::identity();
  shift.input_offset = 5;
  const TruthTable shifted = apply_transform(g, shift);
  for (std::uint32_t x = 0; x < 32; ++x)
    REQUIRE(shifted.eval(x) == g.eval(x ^ 5));
}

TEST_CASE("singular matrices are rejected", "[affine]") {
  AffineTransform t;
  t.matrix = {1, 1, 2, 4, 8}; // rows 0 and 1 coincide
  CHECK_FALSE(is_invertible(t.matrix));
  CHECK_THROWS_AS(apply_transform(TruthTable::zero(5), t), bfca::DomainError);
  CHECK(is_invertible(AffineTransform::identity().matrix));
  CHECK_THROWS_AS(apply_transform(TruthTable::zero(3),
                                  AffineTransform::identity()),
                  bfca::DomainError);
}

TEST_CASE("composition law", "[affine]") {
  std::mt19937_64 rng(0x4001);
  for (int i = 0; i < 100; ++i) {
    const TruthTable g = testsupport::random_table(rng, 5);
    const AffineTransform first = bfca::random_transform(rng);
    const AffineTransform second = bfca::random_transform(rng);
    const TruthTable two_steps =
        apply_transform(apply_transform(g, first), second);
    const TruthTable one_step = apply_transform(g, compose(second, first));
    REQUIRE(two_steps == one_step);
  }
}

TEST_CASE("transforms preserve the signature", "[affine]") {
  std::mt19937_64 rng(0x4002);
  for (int i = 0; i < 50; ++i) {
    const TruthTable g = testsupport::random_table(rng, 5);
    const bfca::ClassSignature before = signature(g);
    const bfca::ClassSignature after =
        signature(apply_transform(g, bfca::random_transform(rng)));
    REQUIRE(before == after);
  }
  CHECK_THROWS_AS(signature(TruthTable::zero(3)), bfca::DomainError);
}

TEST_CASE("registry loads 48 distinct classes", "[affine]") {
  const ClassRegistry& reg = ClassRegistry::builtin();
  REQUIRE(reg.size() == 48);

  std::uint64_t total = 0;
  for (int i = 0; i < reg.size(); ++i) total += reg.info(i).expected_count;
  CHECK(total == (1ull << 32));

  CHECK(reg.info(reg.index_of_hex("aa55aa55")).expected_count == 64);
  CHECK(reg.info(reg.index_of_hex("0efdda51")).expected_count == 639959040);

  std::set<bfca::ClassSignature> sigs;
  for (int i = 0; i < reg.size(); ++i) sigs.insert(reg.signature_of(i));
  CHECK(sigs.size() == 48);

  // Each representative's normal form matches the registry text.
  for (int i = 0; i < reg.size(); ++i) {
    const TruthTable rep = TruthTable::from_hex(reg.info(i).rep_hex, 5);
    REQUIRE(anf(rep).to_string() == reg.info(i).anf_text);
    REQUIRE(anf(rep).degree() == reg.info(i).rep_degree);
  }
}

TEST_CASE("registry csv file matches the builtin table", "[affine]") {
  const ClassRegistry file =
      ClassRegistry::from_csv_file(std::string(BFCA_DATA_DIR) +
                                   "/affine_classes_5.csv");
  const ClassRegistry& builtin = ClassRegistry::builtin();
  REQUIRE(file.size() == builtin.size());
  for (int i = 0; i < file.size(); ++i) {
    REQUIRE(file.info(i).rep_hex == builtin.info(i).rep_hex);
    REQUIRE(file.info(i).anf_text == builtin.info(i).anf_text);
    REQUIRE(file.info(i).expected_count == builtin.info(i).expected_count);
  }
}

TEST_CASE("registry rejects malformed tables", "[affine]") {
  CHECK_THROWS_AS(ClassRegistry::from_csv_text("rep_hex,anf,expected_count\n"),
                  bfca::ParseError);
  CHECK_THROWS_AS(
      ClassRegistry::from_csv_text("wrong,header,line\naa55aa55,x0,64\n"),
      bfca::ParseError);
  CHECK_THROWS_AS(ClassRegistry::from_csv_file("/nonexistent/table.csv"),
                  bfca::ParseError);
}

TEST_CASE("classification returns the representative", "[affine]") {
  const ClassRegistry& reg = ClassRegistry::builtin();
  for (int i = 0; i < reg.size(); ++i) {
    const TruthTable rep = TruthTable::from_hex(reg.info(i).rep_hex, 5);
    REQUIRE(reg.classify(rep) == reg.info(i).rep_hex);
  }
  CHECK(reg.classify(TruthTable::from_hex("aaaaaaaa", 5)) == "aa55aa55");
  CHECK(reg.classify(TruthTable::zero(5)) == "aa55aa55");
  CHECK(reg.classify(TruthTable::ones(5)) == "aa55aa55");

  std::mt19937_64 rng(0x4003);
  for (int i = 0; i < 20; ++i) {
    const TruthTable g = testsupport::random_table(rng, 5);
    const std::string cls = reg.classify(g);
    REQUIRE(reg.classify(apply_transform(g, bfca::random_transform(rng))) ==
            cls);
  }
}

TEST_CASE("orbit of the linear class", "[affine]") {
  const std::vector<std::uint32_t> orbit =
      orbit_enumerate(TruthTable::from_hex("aa55aa55", 5), 100);
  REQUIRE(orbit.size() == 64);
  // The orbit is exactly the degree <= 1 functions, constants included.
  for (const std::uint32_t w : orbit)
    REQUIRE(algebraic_degree(TruthTable::from_u32(w, 5)) <= 1);
  CHECK(std::find(orbit.begin(), orbit.end(), 0u) != orbit.end());
  CHECK(std::find(orbit.begin(), orbit.end(), 0xffffffffu) != orbit.end());
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
}

TEST_CASE("orbit sizes match the registry counts", "[affine]") {
  const ClassRegistry& reg = ClassRegistry::builtin();
  for (const char* hex : {"aa55ab55", "88ddbb11", "288d1b41"}) {
    const int idx = reg.index_of_hex(hex);
    const auto orbit =
        orbit_enumerate(TruthTable::from_hex(hex, 5), 200000);
    REQUIRE(orbit.size() == reg.info(idx).expected_count);
    // Spot-check membership: every listed function classifies back home.
    std::mt19937_64 rng(0x4004);
    for (int i = 0; i < 10; ++i) {
      const std::uint32_t w = orbit[rng() % orbit.size()];
      REQUIRE(reg.classify(TruthTable::from_u32(w, 5)) == hex);
    }
  }
}

TEST_CASE("orbit limit triggers", "[affine]") {
  CHECK_THROWS_AS(orbit_enumerate(TruthTable::from_hex("88ddbb11", 5), 100),
                  bfca::LimitExceeded);
  CHECK_THROWS_AS(orbit_enumerate(TruthTable::zero(3), 100),
                  bfca::DomainError);
}
