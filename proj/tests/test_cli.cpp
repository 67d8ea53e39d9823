#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LAPLACE_KIT_BIN
#error "LAPLACE_KIT_BIN must point at the laplace-kit executable"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const std::string& leaf) {
  return std::string("cli_test_") + leaf;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string out_file = temp_path("stdout.txt");
  const std::string cmd =
      env + std::string(LAPLACE_KIT_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("transform subcommand evaluates catalog entries") {
  const RunResult r = run("transform --function exp-decay --points 1 1+2i");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("p_re,p_im,F_re,F_im\n", 0) == 0);
  // F(1) = 0.5 via numerical forward transform of e^{-t}.
  const auto pos = r.output.find("\n1,0,");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(r.output.substr(pos + 5)) - 0.5) < 1e-8);
}

TEST_CASE("transform accepts a sampled-signal CSV") {
  const std::string sig = temp_path("signal.csv");
  std::string text = "t,f\n";
  for (int k = 0; k <= 2000; ++k) {
    const double t = 0.01 * k;
    text += std::to_string(t) + "," + std::to_string(std::exp(-t)) + "\n";
  }
  write_file(sig, text);
  const RunResult r = run("transform --function " + sig + " --points 2");
  REQUIRE(r.exit_code == 0);
  // F(2) = 1/3 for e^{-t}; the sampled route is good to ~1e-4 here.
  const auto pos = r.output.find("\n2,0,");
  REQUIRE(pos != std::string::npos);
  const double value = std::stod(r.output.substr(pos + 5));
  CHECK(std::abs(value - 1.0 / 3.0) < 1e-4);
}

TEST_CASE("invert subcommand and exit-code contract") {
  const RunResult ok = run("invert --transform exp-decay --times 0.5:2:4");
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.output.rfind("t,f_re,f_im,converged\n", 0) == 0);
  // f(0.5) = e^{-0.5} = 0.60653...
  CHECK(ok.output.find("\n0.5,0.60653") != std::string::npos);

  CHECK(run("invert --transform exp-decay --sigma -1 --times 0.5:2:4").exit_code == 2);
  CHECK(run("invert --transform no-such --times 0.5:2:4").exit_code == 2);
  CHECK(run("invert --transform exp-decay --times bogus").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("check subcommand maps verdicts to exit codes") {
  CHECK(run("check theorem1 --transform exp-decay").exit_code == 0);
  CHECK(run("check theorem1 --transform counterexample-2e").exit_code == 1);
  CHECK(run("check lemma1 --transform t-exp --b 1.5").exit_code == 0);
  CHECK(run("check lemma1 --transform exp-decay --b 1.5").exit_code == 1);
  CHECK(run("check witness --transform counterexample-2e --ell 2").exit_code == 0);
  CHECK(run("check witness --transform exp-decay --ell 2").exit_code == 1);
  CHECK(run("check hausdorff-young --transform exp-decay --ell 2.5").exit_code == 4);
  CHECK(run("check paley-wiener --transform heaviside").exit_code == 1);
  CHECK(run("check no-such-check --transform exp-decay").exit_code == 2);
}

TEST_CASE("json output mirrors the report fields") {
  const RunResult r = run("--format json check witness --transform counterexample-2e");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"check-name\"") != std::string::npos);
  CHECK(r.output.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(r.output.find("\"evidence\"") != std::string::npos);
  CHECK(r.output.find("\"thresholds-used\"") != std::string::npos);
  CHECK(r.output.find("\"notes\"") != std::string::npos);

  CHECK(run("--format yaml check witness --transform exp-decay").exit_code == 2);
}

TEST_CASE("solve-hypersingular subcommand") {
  const RunResult r = run("solve-hypersingular --g t-exp --times 0:8:401 --verify");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("t,f_re,f_im,converged\n", 0) == 0);
  CHECK(r.output.find("# verdict,pass") != std::string::npos);

  // Transform-only forcing has no time-domain representative.
  CHECK(run("solve-hypersingular --g power-quarter --times 0.1:4:40").exit_code == 2);

  // Starved height budget: per-point non-convergence maps to exit 3.
  const std::string cfgpath = temp_path("starve.cfg");
  write_file(cfgpath, "height-doublings=1\nconvergence-rel=1e-14\nconvergence-abs=1e-14\n");
  CHECK(run("--config " + cfgpath + " solve-hypersingular --g t-exp --times 0.5:2:4").exit_code ==
        3);
}

TEST_CASE("config file handling") {
  const std::string good = temp_path("good.cfg");
  write_file(good, "# comment\noutput-format=json\nsigma=0.7\n");
  const RunResult r = run("--config " + good + " invert --transform exp-decay --times 1:2:2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"f_re\"") != std::string::npos);

  // Flags override the file.
  const RunResult r2 = run("--config " + good + " --format csv invert --transform exp-decay " +
                           "--times 1:2:2");
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.output.rfind("t,f_re", 0) == 0);

  // Environment variable supplies the path when the flag is absent.
  const RunResult r3 = run("invert --transform exp-decay --times 1:2:2",
                           "LAPLACE_KIT_CONFIG=" + good + " ");
  REQUIRE(r3.exit_code == 0);
  CHECK(r3.output.find("\"f_re\"") != std::string::npos);

  const std::string bad = temp_path("bad.cfg");
  write_file(bad, "no-such-key=1\n");
  CHECK(run("--config " + bad + " invert --transform exp-decay --times 1:2:2").exit_code == 2);
  CHECK(run("--config missing.cfg invert --transform exp-decay --times 1:2:2").exit_code == 2);
}

TEST_CASE("output is deterministic across runs") {
  const std::string a = run("invert --transform paper-2c --times 0.1:5:25").output;
  const std::string b = run("invert --transform paper-2c --times 0.1:5:25").output;
  CHECK(a == b);
  REQUIRE(!a.empty());

  const std::string c = run("--format json check lemma1 --transform t-exp").output;
  const std::string d = run("--format json check lemma1 --transform t-exp").output;
  CHECK(c == d);
}

TEST_CASE("output path writes to a file instead of stdout") {
  const std::string out = temp_path("result.csv");
  const RunResult r = run("--output " + out + " transform --function exp-decay --points 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("p_re,p_im,F_re,F_im\n", 0) == 0);
}
