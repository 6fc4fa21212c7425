#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nakai/certificate.hpp"
#include "nakai/cli.hpp"

using nakai::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nakai_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST(Cli, MemberExample) {
  Result r = cli({"member", "x*y", "--ideal", "x^2,y^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NOT MEMBER"), std::string::npos);
  r = cli({"member", "x^2*y + y^3", "--ideal", "x^2,y^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\nMEMBER"), std::string::npos);
}

TEST(Cli, MilnorExample) {
  Result r = cli({"milnor", "x^3+y^3+z^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "8\n");
  r = cli({"milnor", "x^2*y", "--vars", "x,y,z"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "infinite\n");
}

TEST(Cli, WitnessCyclicCubic) {
  auto path = temp_file("example.json");
  Result r = cli({"witness", "x^2*y + y^2*z + z^2*x", "--vars", "x,y,z", "--slice", "1,0,1", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("WITNESS_FOUND"), std::string::npos);
  EXPECT_NE(r.out.find("y1 = x + z"), std::string::npos);
  nakai::CertificateDocument doc = nakai::read_certificate(slurp(path));
  EXPECT_EQ(doc.verdict, "WITNESS_FOUND");

  Result v = cli({"verify", path.string()});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("VERIFIED"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, WitnessDefaultSearchAndJson) {
  Result r = cli({"witness", "x^2*y + y^2*z + z^2*x", "--vars", "x,y,z", "--json"});
  ASSERT_EQ(r.code, 0);
  nakai::CertificateDocument doc = nakai::read_certificate(r.out);
  EXPECT_EQ(nakai::write_certificate(doc), r.out);
}

TEST(Cli, ByteIdenticalOutput) {
  auto a = temp_file("a.json"), b = temp_file("b.json");
  Result ra = cli({"witness", "x^2*y + y^2*z + z^2*x", "--seed", "7", "--out", a.string()});
  Result rb = cli({"witness", "x^2*y + y^2*z + z^2*x", "--seed", "7", "--out", b.string()});
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"witness", "x^2*y", "--vars", "x,y,z"}).code, 1);
  EXPECT_EQ(cli({"witness", "x^3+y^3", "--vars", "x,y"}).code, 1);
  EXPECT_EQ(cli({"witness", "x^3+y^3+z^3", "--max-pairs", "1"}).code, 3);
  EXPECT_EQ(cli({"witness", "x^3 + + y"}).code, 2);
  EXPECT_EQ(cli({"witness", "x^3+y^3+q^3", "--vars", "x,y,z"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"witness", "x^3+y^3+z^3", "--order", "banana"}).code, 2);
  EXPECT_EQ(cli({"witness", "x^3+y^3+z^3", "--bound", "0"}).code, 2);
  EXPECT_EQ(cli({"witness", "x^3+y^3+z^3", "--slice", "0,1,1"}).code, 2);
  EXPECT_EQ(cli({"witness", "x^3+y^3+z^3", "--slice", "1,a,1"}).code, 2);
  EXPECT_EQ(cli({"witness"}).code, 2);
  EXPECT_EQ(cli({"member", "x"}).code, 2);
  EXPECT_EQ(cli({"verify", "/nonexistent/cert.json"}).code, 2);
  EXPECT_EQ(cli({"identity", "x^3+y^3+z^3", "-i", "4"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, VerifyRejectsTamperedCertificate) {
  auto path = temp_file("tampered.json");
  Result r = cli({"witness", "x^3+y^3+z^3", "--json"});
  ASSERT_EQ(r.code, 0);
  nakai::CertificateDocument doc = nakai::read_certificate(r.out);
  doc.membership->ji.member = true;
  spit(path, nakai::write_certificate(doc));
  Result v = cli({"verify", path.string()});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("FAIL"), std::string::npos);

  spit(path, "{\"schema\": \"something-else/v9\"}");
  EXPECT_EQ(cli({"verify", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, FileInputWithHeader) {
  auto path = temp_file("input.txt");
  spit(path, "# cyclic cubic\nvars: a, b, c\na^2*b + b^2*c\n  + c^2*a\n");
  Result r = cli({"check", "--file", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("variables: a, b, c"), std::string::npos);
  EXPECT_NE(r.out.find("milnor number: 8"), std::string::npos);
  EXPECT_NE(r.out.find("isolated singularity: yes"), std::string::npos);
  EXPECT_EQ(cli({"check", "x^3", "--file", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, CheckReportsWeights) {
  Result r = cli({"check", "x^2 + y^3 + z^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("homogeneous: no"), std::string::npos);
  EXPECT_NE(r.out.find("weights: 6, 4, 3 (weighted degree 12)"), std::string::npos);
  EXPECT_NE(r.out.find("milnor number: 6"), std::string::npos);
}

TEST(Cli, Identity) {
  Result one = cli({"identity", "x^2*y + y^2*z + z^2*x", "-i", "1", "-j", "2", "-k", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("(1,2,3) residual = 0  HOLDS"), std::string::npos);
  Result all = cli({"identity", "x^3 + y^3 + z^3 + w^3 + x*y*z", "--vars", "x,y,z,w"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 64);
  EXPECT_EQ(cli({"identity", "x^2 + y^3 + z^4"}).code, 1);
}

TEST(Cli, Symmetrize) {
  Result r = cli({"symmetrize", "x^2*y + y^2*z + z^2*x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("symmetric tuple:"), std::string::npos);
  Result j = cli({"symmetrize", "x^3 + y^3 + z^3", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"adjustments\""), std::string::npos);
  EXPECT_EQ(cli({"symmetrize", "x^2*y"}).code, 1);
}

TEST(Cli, OutRedirectsReports) {
  auto path = temp_file("milnor.txt");
  Result r = cli({"milnor", "x^4+y^4+z^4", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(slurp(path), "27\n");
  std::filesystem::remove(path);
}

TEST(Cli, Examples) {
  Result r = cli({"examples"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find(" no\n"), std::string::npos);
  EXPECT_EQ(r.out, cli({"examples"}).out);
}
