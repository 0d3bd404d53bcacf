#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(MONARCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("chow command") {
  const CliResult r = run("chow --wmon 8 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "president = 35/128"));
  CHECK(contains(r.out, "citizen = 15/128"));
  CHECK(contains(r.out, "ratio = 7/3"));

  const CliResult m = run("chow --maj 3");
  CHECK(m.status == 0);
  CHECK(contains(m.out, "eps* = 1/324"));

  const CliResult d = run("chow --ltf 1");
  CHECK(d.status == 0);
  CHECK(contains(d.out, "rho = 1/2"));
}

TEST_CASE("chow json output replays config") {
  const CliResult r = run("--format json chow --maj 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"command\":\"chow\""));
  CHECK(contains(r.out, "\"rat\":\"1/324\""));
  CHECK(contains(r.out, "\"verified\":true"));
}

TEST_CASE("decide command and dichotomy") {
  const CliResult four = run("decide 4");
  CHECK(four.status == 0);
  CHECK(contains(four.out, "approximable"));
  CHECK(contains(four.out, "2mu1+3mu' <= 2/3"));

  const CliResult five = run("decide 5");
  CHECK(five.status == 0);
  CHECK(contains(five.out, "resistant"));

  const CliResult sweep = run("--jobs 2 decide 4 5 6 7");
  CHECK(sweep.status == 0);
  // deterministic ordering by k regardless of --jobs
  CHECK(sweep.out.find("k=4") < sweep.out.find("k=5"));
  CHECK(sweep.out.find("k=5") < sweep.out.find("k=6"));
  CHECK(sweep.out.find("k=6") < sweep.out.find("k=7"));

  CHECK(run("decide 30").status != 0);      // above --max-k default
  CHECK(run("--max-k 30 decide 26").status == 0);
}

TEST_CASE("witness and verify") {
  const CliResult w = run("witness 5");
  CHECK(w.status == 0);
  CHECK(contains(w.out, "u 4 1/3"));
  CHECK(contains(w.out, "p' = 19/24"));

  const std::string path = "/tmp/monarch_test_rdist.txt";
  std::ofstream(path) << "rdist 5\nu 4 1/3\nv 2 1/3\nv 3 1/6\nv 4 1/6\n";
  CHECK(run("verify " + path).status == 0);

  // uniform distribution fails condition (iii)
  std::ofstream(path) << "rdist 3\nu 0 1/8\nu 1 2/8\nu 2 1/8\n"
                         "v 0 1/8\nv 1 2/8\nv 2 1/8\n";
  CHECK(run("verify " + path).status != 0);
}

TEST_CASE("certificate round trip through verify-cert") {
  const std::string path = "/tmp/monarch_test_cert.json";
  CHECK(run("decide 4 --cert-out " + path).status == 0);
  const CliResult r = run("verify-cert " + path);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "certificate verified"));

  // corrupting a multiplier must be caught
  std::ifstream in(path);
  std::string cert((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const size_t pos = cert.find("\"ge_mult\"");
  REQUIRE(pos != std::string::npos);
  const size_t q = cert.find('"', cert.find('[', pos));
  cert.insert(q + 1, "9");
  std::ofstream(path) << cert;
  CHECK(run("verify-cert " + path).status != 0);
}

TEST_CASE("gen, bounds and sketch pipeline") {
  const std::string inst = "/tmp/monarch_test_inst.txt";
  CHECK(run("gen --maj 3 --n 12 --m 60 --seed 5 --out " + inst).status == 0);

  // byte-exact regeneration with the same seed
  const std::string inst2 = "/tmp/monarch_test_inst2.txt";
  CHECK(run("gen --maj 3 --n 12 --m 60 --seed 5 --out " + inst2).status == 0);
  std::ifstream a(inst), b(inst2);
  std::string sa((std::istreambuf_iterator<char>(a)),
                 std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)),
                 std::istreambuf_iterator<char>());
  CHECK(sa == sb);

  const CliResult bounds = run("bounds --instance " + inst);
  CHECK(bounds.status == 0);
  CHECK(contains(bounds.out, "sandwich: holds"));

  const CliResult sk = run("sketch --instance " + inst + " --eps 1/648 --exact-b");
  CHECK(sk.status == 0);
  CHECK(contains(sk.out, "v="));
  CHECK(contains(sk.out, "B="));
  CHECK(contains(sk.out, "delta="));

  const CliResult sk2 =
      run("sketch --instance " + inst + " --eps 0.2 --seed 3 --c-reps 8");
  CHECK(sk2.status == 0);

  // planted instances report optimum 1 in bounds
  const std::string planted = "/tmp/monarch_test_planted.txt";
  CHECK(run("gen --mon 4 --n 12 --m 40 --seed 11 --planted --out " + planted)
            .status == 0);
  const CliResult pb = run("bounds --instance " + planted);
  CHECK(pb.status == 0);
  CHECK(contains(pb.out, "optimum = 1 (1)"));
}

TEST_CASE("identity and classify4 commands") {
  const CliResult id = run("identity 12");
  CHECK(id.status == 0);
  CHECK(contains(id.out, "zero residual"));

  const CliResult cls = run("classify4 2 1 1 1");
  CHECK(cls.status == 0);
  CHECK(contains(cls.out, "Mon4"));
  CHECK(contains(run("classify4 4 1 1 1").out, "Dictator"));
  CHECK(contains(run("classify4 5 4 3 1").out, "Maj3"));
  CHECK(run("classify4 1 1").status != 0);  // not balanced
}

TEST_CASE("malformed input exits nonzero") {
  CHECK(run("verify /nonexistent/file").status != 0);
  CHECK(run("chow --ltf abc").status != 0);
}
