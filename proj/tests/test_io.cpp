#include <gtest/gtest.h>

#include "liederiv/corpus.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/io.hpp"
#include "support.hpp"

namespace liederiv {
namespace {

using io::Json;

template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.code();
  }
  return "";
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& inst : builtin_corpus()) {
    const Json j = io::algebra_to_json(inst.algebra);
    EXPECT_EQ(j.at("format"), "liederiv/1");
    const auto back = io::algebra_from_json(j);
    EXPECT_EQ(back.tensor(), inst.algebra.tensor());
    EXPECT_EQ(back.unit(), inst.algebra.unit());
    EXPECT_EQ(back.labels(), inst.algebra.labels());
    EXPECT_EQ(io::algebra_to_json(back), j);
  }
}

TEST(Io, BimoduleRoundTrip) {
  for (const auto& inst : builtin_corpus()) {
    if (!inst.module) continue;
    const auto back = io::bimodule_from_json(io::bimodule_to_json(*inst.module));
    EXPECT_EQ(back.left_tensor(), inst.module->left_tensor());
    EXPECT_EQ(back.right_tensor(), inst.module->right_tensor());
    EXPECT_EQ(back.left_dim(), inst.module->left_dim());
  }
  // dims read off the tensors when omitted
  Json j = io::bimodule_to_json(regular_bimodule(dual_numbers()));
  j.erase("left_dim");
  j.erase("right_dim");
  EXPECT_EQ(io::bimodule_from_json(j).right_dim(), 2u);
}

TEST(Io, ScalarsAreExactStrings) {
  Matrix m(1, 2);
  m(0, 0) = Scalar(-3, 4);
  m(0, 1) = 5;
  const Json j = io::matrix_to_json(m);
  EXPECT_EQ(j.at("entries")[0][0], "-3/4");
  EXPECT_EQ(j.at("entries")[0][1], "5");
  EXPECT_EQ(io::matrix_from_json(j), m);
  EXPECT_EQ(io::matrix_from_json(Json::parse(R"([["-3/4", 5]])")), m);
}

TEST(Io, MatrixRoundTripRandom) {
  std::mt19937_64 rng(501);
  for (int i = 0; i < 20; ++i) {
    const Matrix m = testing::random_matrix(1 + rng() % 5, 1 + rng() % 5, rng);
    EXPECT_EQ(io::matrix_from_json(Json::parse(io::matrix_to_json(m).dump())), m);
  }
}

TEST(Io, ErrorCodes) {
  EXPECT_EQ(error_code_of([] { io::algebra_from_json(Json::parse(R"({"unit": []})")); }), error_code::kMalformedJson);
  EXPECT_EQ(error_code_of([] { io::algebra_from_json(Json::parse(R"({"dim": 1, "unit": ["1"], "mul": []})")); }),
            error_code::kDimensionMismatch);
  EXPECT_EQ(error_code_of([] { io::algebra_from_json(Json::parse(R"({"dim": 1, "unit": [1.5], "mul": [[[1]]]})")); }),
            error_code::kBadScalar);
  EXPECT_EQ(error_code_of([] { io::matrix_from_json(Json::parse(R"([["1", "2"], ["3"]])")); }),
            error_code::kDimensionMismatch);
  EXPECT_EQ(error_code_of([] { io::read_json_file("/nonexistent/file.json"); }), error_code::kMalformedJson);
}

TEST(Io, TriangularSchema) {
  for (const auto& inst : builtin_corpus()) {
    if (!inst.triangular) continue;
    const auto back = io::triangular_from_json(io::triangular_to_json(*inst.triangular));
    EXPECT_EQ(back.a.tensor(), inst.triangular->a.tensor());
    EXPECT_EQ(back.b.tensor(), inst.triangular->b.tensor());
    EXPECT_EQ(back.x.right_tensor(), inst.triangular->x.right_tensor());
  }
}

TEST(Io, DumpIsStable) {
  const auto inst = builtin_corpus().front();
  EXPECT_EQ(io::dump(io::instance_to_json(inst)), io::dump(io::instance_to_json(builtin_corpus().front())));
}

}  // namespace
}  // namespace liederiv
