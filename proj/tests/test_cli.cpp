#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liederiv/corpus.hpp"
#include "liederiv/io.hpp"

namespace liederiv {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("liederiv_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    const auto corpus = builtin_corpus();
    const auto find = [&](const std::string& name) {
      for (const auto& inst : corpus)
        if (inst.name == name) return inst;
      throw std::runtime_error(name);
    };
    const auto m4 = find("m4_subalgebra_5d");
    write("a.json", io::algebra_to_json(m4.algebra));
    write("x.json", io::bimodule_to_json(*m4.module));
    write("p.json", io::vector_to_json(*m4.idempotent));
    write("m2.json", io::algebra_to_json(matrix_algebra(2)));
    write("t2tri.json", io::triangular_to_json(*find("t2").triangular));
    Matrix id = Matrix::identity(4);
    write("id.json", io::matrix_to_json(id));
    write("broken.json", Json::parse(R"({"dim": 2, "unit": ["1"], "mul": []})"));
    std::ofstream(dir_ / "garbage.json") << "{ not json";
    write("expect_true.json", Json{{"/verdict", true}});
    write("expect_false.json", Json{{"/verdict", false}});
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static void write(const std::string& name, const Json& j) { std::ofstream(dir_ / name) << io::dump(j); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static CliRun run(const std::string& args) {
    const std::string cmd = std::string(LIEDERIV_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static inline fs::path dir_;
};

TEST_F(Cli, LdpTrueExitsZero) {
  const auto r = run("ldp --algebra " + path("m2.json"));
  EXPECT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("format"), "liederiv/1");
  EXPECT_EQ(j.at("verdict"), true);
  EXPECT_EQ(j.at("dims").at("der"), 3);
}

TEST_F(Cli, StarAndSufficiencyOnM4) {
  EXPECT_EQ(run("star --algebra " + path("a.json") + " --module " + path("x.json") + " --p " + path("p.json")).exit_code,
            0);
  const auto r = run("thm24 --algebra " + path("a.json") + " --module " + path("x.json") + " --p " + path("p.json"));
  EXPECT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("conclusion"), "guaranteed");
  EXPECT_TRUE(j.at("conditions").contains("2.4(II)(i)"));
}

TEST_F(Cli, IdentityIsNotALieDerivation) {
  const auto r = run("proper --algebra " + path("m2.json") + " --map " + path("id.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Json::parse(r.out).at("error").at("code"), "input-not-lie-derivation");
}

TEST_F(Cli, TriangularSufficiency) {
  const auto tri = run("triangular --algebra " + path("t2tri.json"));
  EXPECT_EQ(tri.exit_code, 0);
  const auto cor = run("corollary31 --algebra " + path("t2tri.json"));
  EXPECT_EQ(cor.exit_code, 0);
  const auto j = Json::parse(cor.out);
  EXPECT_EQ(j.at("conclusion"), "guaranteed");
  EXPECT_EQ(j.at("agrees_with_2.4"), true);
}

TEST_F(Cli, InputErrors) {
  auto r = run("ldp --algebra " + path("broken.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Json::parse(r.out).at("error").at("code"), "dimension-mismatch");
  r = run("ldp --algebra " + path("garbage.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Json::parse(r.out).at("error").at("code"), "malformed-json");
  r = run("corpus --family 'nope(1)'");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Json::parse(r.out).at("error").at("code"), "unknown-family");
  EXPECT_EQ(run("ldp").exit_code, 2);
}

TEST_F(Cli, ExpectFlag) {
  EXPECT_EQ(run("ldp --algebra " + path("m2.json") + " --expect " + path("expect_true.json")).exit_code, 0);
  const auto r = run("ldp --algebra " + path("m2.json") + " --expect " + path("expect_false.json"));
  EXPECT_EQ(r.exit_code, 3);
}

TEST_F(Cli, OutFlagWritesFile) {
  const auto r = run("center --algebra " + path("m2.json") + " --out " + path("center_out.json"));
  EXPECT_EQ(r.exit_code, 0);
  std::ifstream in(dir_ / "center_out.json");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(Json::parse(ss.str()).at("format"), "liederiv/1");
}

TEST_F(Cli, OutputIsByteIdentical) {
  for (const char* args : {"corpus", "corpus --family 'triangular(1,2,1)' --seed 5",
                           "campaign --suite validation --suite center"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.exit_code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST_F(Cli, ShippedDataFiles) {
  const std::string data = LIEDERIV_DATA_DIR;
  auto r = run("thm22 --algebra " + data + "/lift_algebra.json --module " + data + "/lift_module.json --p " + data +
               "/lift_p.json --map " + data + "/lift_map.json");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(Json::parse(r.out).at("is_proper"), false);
  r = run("thm22 --algebra " + data + "/m4_algebra.json --module " + data + "/m4_module.json --p " + data +
          "/m4_p.json --map " + data + "/m4_lie_map.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out).at("agrees"), true);
  r = run("proper --algebra " + data + "/m2.json --map " + data + "/m2_trace_map.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(run("corollary31 --algebra " + data + "/t3_triangular.json").exit_code, 0);
  EXPECT_EQ(run("ldp --algebra " + data + "/m2.json --expect " + data + "/expect_ldp.json").exit_code, 0);
}

}  // namespace
}  // namespace liederiv
