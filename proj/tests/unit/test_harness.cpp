#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "tdpair/pipeline.hpp"

using namespace tdpair;
using namespace tdpair::testing;
using nlohmann::json;

namespace {

const std::string kPresets = TDPAIR_PRESET_DIR;
const std::string kData = std::string(TDPAIR_PRESET_DIR) + "/../tests/data";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Runs the CLI; returns the exit status and captures stdout.
int cli(const std::string& args, std::string* out = nullptr) {
  const std::string capture = ::testing::TempDir() + "cli_out.txt";
  const std::string cmd = std::string(TDPAIR_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  if (out) *out = slurp(capture);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Usage;
}

RunOptions seeded(const std::string& bytes) {
  RunOptions o;
  o.seed = fnv1a(bytes);
  return o;
}

}  // namespace

TEST(InstanceIo, RoundTripKeepsMatrices) {
  Instance inst;
  inst.pair = generate_preset("racah", 3);
  inst.name = "r3";
  inst.expected_d = 3;
  const std::string text = write_instance(inst);
  const Instance back = parse_instance(text);
  EXPECT_EQ(back.pair.A, inst.pair.A);
  EXPECT_EQ(back.pair.A_star, inst.pair.A_star);
  EXPECT_EQ(back.name, "r3");
  EXPECT_EQ(back.expected_d, std::optional<std::size_t>(3));
  EXPECT_EQ(write_instance(back), text);
}

TEST(InstanceIo, ParseErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      return std::string(e.what());
    }
    ADD_FAILURE() << "accepted: " << text;
    return std::string();
  };
  EXPECT_NE(message(R"({"field":"rational","A":[["1/0"]],"A_star":[["1"]]})").find("A[0][0]"), std::string::npos);
  EXPECT_NE(message(R"({"field":"rational","A":[["1","2"]],"A_star":[["1"]]})").find("A[0]"), std::string::npos);
  EXPECT_NE(message(R"({"field":"real","A":[["1"]],"A_star":[["1"]]})").find("field"), std::string::npos);
  EXPECT_NE(message(R"({"field":{"prime":7},"A":[["1/2"]],"A_star":[["1"]]})").find("A[0][0]"), std::string::npos);
  EXPECT_NE(message(R"({"field":"rational","A":[["1"]],"A_star":[["1","0"],["0","1"]]})").find("A_star"), std::string::npos);
  EXPECT_NE(message(R"({"field":"rational","A":[["1"]]})").find("A_star"), std::string::npos);
  EXPECT_NE(message("{\"field\": \"rational\",\n \"A\": [[1,]]}").find("line 2"), std::string::npos);
}

TEST(InstanceIo, PrimeFieldEntriesAndIntegers) {
  const Instance inst = parse_instance(R"({"field":{"prime":7},"A":[[9,"-1"],["0",3]],"A_star":[["1","1"],["0","2"]]})");
  const Field f = Field::prime(7);
  EXPECT_EQ(inst.pair.A(0, 0), f.from_int(2));
  EXPECT_EQ(inst.pair.A(0, 1), f.from_int(6));
}

TEST(InstanceIo, Reduction) {
  const Instance inst = parse_instance(R"({"field":"rational","A":[["1/3","1"],["0","2"]],"A_star":[["1","0"],["1","1/2"]]})");
  const Instance r = reduce_instance(inst, 5);
  EXPECT_EQ(r.pair.A(0, 0), Field::prime(5).from_int(2));  // 3 * 2 = 1 mod 5
  EXPECT_EQ(code_of([&] { reduce_instance(inst, 3); }), ErrorCode::ReductionFailed);
  EXPECT_EQ(code_of([&] { reduce_instance(inst, 4); }), ErrorCode::ReductionFailed);
  EXPECT_EQ(code_of([&] { reduce_instance(r, 7); }), ErrorCode::ReductionFailed);
}

TEST(InstanceIo, HashIsFnv1a) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Pipeline, VerifyReportOnQRacahFive) {
  const std::string bytes = slurp(kPresets + "/qracah_d5.json");
  const Report r = verify_report(parse_instance(bytes), seeded(bytes));
  EXPECT_EQ(r.exit_code, kExitOk);
  const json doc = json::parse(r.json);
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["validation"]["status"], "valid");
  EXPECT_EQ(doc["validation"]["d"], 5);
  EXPECT_TRUE(doc["timing_ms"].is_null());
  EXPECT_EQ(doc["scalars"]["case"], to_string(BaseCase::Generic));
  EXPECT_EQ(doc["scalars"]["shape"], json::array({1, 1, 1, 1, 1, 1}));
  std::set<std::string> ids;
  for (const auto& e : doc["invariants"]) {
    ids.insert(e["id"].get<std::string>());
    EXPECT_EQ(e["status"], "pass") << e.dump();
  }
  for (int k = 1; k <= 19; ++k) EXPECT_TRUE(ids.count("C" + std::to_string(k))) << k;
  EXPECT_TRUE(ids.count("SPLIT-FIRST") && ids.count("SPLIT-SECOND") && ids.count("S-BRACKET-RSTU"));
}

TEST(Pipeline, CheckFilter) {
  const std::string bytes = slurp(kPresets + "/krawtchouk_d3.json");
  RunOptions o = seeded(bytes);
  o.checks = std::vector<std::string>{"C1", "C17"};
  const json doc = json::parse(verify_report(parse_instance(bytes), o).json);
  ASSERT_EQ(doc["invariants"].size(), 2u);
  EXPECT_EQ(doc["invariants"][0]["id"], "C1");
  EXPECT_EQ(doc["invariants"][1]["id"], "C17");
  o.checks = std::vector<std::string>{"C99"};
  EXPECT_EQ(code_of([&] { verify_report(parse_instance(bytes), o); }), ErrorCode::Usage);
}

TEST(Pipeline, MetadataMismatchIsAValidationFailure) {
  Instance inst = parse_instance(slurp(kPresets + "/krawtchouk_d4.json"));
  inst.expected_d = 5;
  const Report r = validate_report(inst, {});
  EXPECT_EQ(r.exit_code, kExitInvalid);
  EXPECT_EQ(json::parse(r.json)["validation"]["error"], "DIAMETER_MISMATCH");
  inst.expected_d = 4;
  inst.expected_beta = "3";
  EXPECT_EQ(json::parse(validate_report(inst, {}).json)["validation"]["error"], "INCONSISTENT_BASE");
}

TEST(Pipeline, TimingOnlyWhenAsked) {
  const Instance inst = parse_instance(slurp(kPresets + "/krawtchouk_d2.json"));
  RunOptions o;
  o.timing = true;
  const json doc = json::parse(verify_report(inst, o).json);
  EXPECT_TRUE(doc["timing_ms"].contains("operators"));
}

TEST(Pipeline, OperatorSelection) {
  const Built b = build_all(parse_instance(slurp(kPresets + "/krawtchouk_d1.json")), 1);
  EXPECT_EQ(select_operator(b, "delta") * select_operator(b, "delta-inv"), Matrix::identity(QQ, 2));
  const Matrix psi = select_operator(b, "psi");
  EXPECT_LE(psi.rank(), 1u);
  EXPECT_TRUE(vanishes_on(psi, b.sa.U[0]));
  EXPECT_EQ(code_of([&] { select_operator(b, "gamma"); }), ErrorCode::Usage);
  EXPECT_EQ(format_matrix(Matrix::identity(QQ, 2)), "1 0\n0 1\n");
}

TEST(PipelineProperty, EveryPresetFileVerifies) {
  for (const auto& [name, d] : all_presets(8)) {
    const std::string bytes = slurp(kPresets + "/" + name + "_d" + std::to_string(d) + ".json");
    ASSERT_FALSE(bytes.empty()) << name << d;
    const Report r = verify_report(parse_instance(bytes), seeded(bytes));
    EXPECT_EQ(r.exit_code, kExitOk) << name << d << "\n" << r.json;
  }
}

TEST(Cli, GenerateValidateVerifyRoundTrip) {
  const std::string file = ::testing::TempDir() + "gen_k6.json";
  ASSERT_EQ(cli("generate krawtchouk --d 6 -o " + file), 0);
  EXPECT_EQ(cli("validate " + file), 0);
  std::string out;
  EXPECT_EQ(cli("verify " + file, &out), 0);
  EXPECT_EQ(json::parse(out)["validation"]["d"], 6);
}

TEST(Cli, CustomArrays) {
  const std::string file = ::testing::TempDir() + "gen_custom.json";
  EXPECT_EQ(cli("generate --theta 1,-1 --theta-star 1,-1 --phi 2 -o " + file), 0);
  EXPECT_EQ(cli("validate " + file), 0);
  // phi_1 = -4 gives a common eigenvector (2, 1)
  EXPECT_EQ(cli("generate --theta 1,-1 --theta-star 1,-1 --phi=-4"), 1);
  EXPECT_EQ(cli("generate --theta 1,2 --theta-star 1,-1 --phi x"), 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("generate nosuch --d 3"), 3);
  EXPECT_EQ(cli("frobnicate"), 3);
  EXPECT_EQ(cli("validate " + kData + "/malformed_fraction.json"), 3);
  std::string out;
  EXPECT_EQ(cli("validate " + kData + "/reducible_block.json", &out), 1);
  EXPECT_EQ(json::parse(out)["validation"]["error"], "REDUCIBLE");
  EXPECT_EQ(cli("validate " + kData + "/zeroed_phi.json"), 1);
  EXPECT_EQ(cli("verify " + kPresets + "/qracah_d8.json --field-reduce 13"), 1);
  EXPECT_EQ(cli("verify " + kPresets + "/krawtchouk_d4.json --field-reduce 101"), 0);
  EXPECT_EQ(cli("verify " + kPresets + "/krawtchouk_d4.json --checks C1,bogus"), 3);
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::string a = ::testing::TempDir() + "rep_a.json", b = ::testing::TempDir() + "rep_b.json";
  ASSERT_EQ(cli("verify " + kPresets + "/racah_d5.json --json " + a), 0);
  ASSERT_EQ(cli("verify " + kPresets + "/racah_d5.json --json " + b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, SeedOverride) {
  std::string out;
  ASSERT_EQ(cli("validate " + kPresets + "/krawtchouk_d2.json", &out), 0);
  EXPECT_NE(json::parse(out)["validation"]["seed"], "0x2a");
  ASSERT_EQ(setenv("TDPAIR_SEED", "42", 1), 0);
  ASSERT_EQ(cli("validate " + kPresets + "/krawtchouk_d2.json", &out), 0);
  unsetenv("TDPAIR_SEED");
  EXPECT_EQ(json::parse(out)["validation"]["seed"], "0x2a");
}

TEST(Cli, OperatorsEmit) {
  std::string out;
  ASSERT_EQ(cli("operators " + kPresets + "/krawtchouk_d1.json --emit delta", &out), 0);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 2);
  EXPECT_EQ(cli("operators " + kPresets + "/krawtchouk_d3.json --emit commutator-LPsi"), 0);
  EXPECT_EQ(cli("operators " + kPresets + "/krawtchouk_d3.json --emit sigma"), 3);
}
