// monarch: exact analysis of monarchy-predicate Max-CSP approximability
// plus the bias-sketching approximation pipeline. Every command emits a
// replayable JSON run record in --format json mode.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "monarch/boolean_fn.hpp"
#include "monarch/csp.hpp"
#include "monarch/monarchy.hpp"
#include "monarch/prng.hpp"
#include "monarch/sketch.hpp"

using json = nlohmann::json;
using namespace monarch;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
  std::string format = "text";
  int jobs = 1;
  int max_k = 25;
};

std::string fmt(const Rational& q) {
  return to_string(q) + " (" + to_decimal(q) + ")";
}

json rational_json(const Rational& q) {
  return json{{"rat", to_string(q)}, {"dec", to_decimal(q)}};
}

json rational_vec_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

/// One JSON object per run: command, config echo, outputs, wall clock.
class RunRecord {
 public:
  RunRecord(const std::string& command, const GlobalOpts& g)
      : start_(std::chrono::steady_clock::now()), format_(g.format) {
    rec_["command"] = command;
    rec_["version"] = kVersion;
    rec_["config"] = json::object();
  }
  json& config() { return rec_["config"]; }
  json& out() { return rec_["output"]; }
  void emit() {
    if (format_ != "json") return;
    const auto wall = std::chrono::steady_clock::now() - start_;
    rec_["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(wall).count();
    std::cout << rec_.dump() << '\n';
  }
  bool text() const { return format_ != "json"; }

 private:
  std::chrono::steady_clock::time_point start_;
  std::string format_;
  json rec_;
};

struct PredicateOpts {
  std::vector<int> wmon_args, mon_args, maj_args;
  std::string ltf_weights;

  void attach(CLI::App* cmd) {
    cmd->add_option("--wmon", wmon_args, "weak monarchy k j")->expected(2);
    cmd->add_option("--mon", mon_args, "monarchy arity k")->expected(1);
    cmd->add_option("--maj", maj_args, "majority arity k")->expected(1);
    cmd->add_option("--ltf", ltf_weights,
                    "threshold-0 LTF weights, e.g. \"2 1 1 1\"");
  }

  LtfSpec resolve() const {
    int given = !wmon_args.empty() + !mon_args.empty() + !maj_args.empty() +
                !ltf_weights.empty();
    if (given != 1)
      throw CLI::ValidationError(
          "pick exactly one of --wmon/--mon/--maj/--ltf");
    if (!wmon_args.empty()) return wmon(wmon_args[0], wmon_args[1]);
    if (!mon_args.empty()) return mon(mon_args[0]);
    if (!maj_args.empty()) return maj(maj_args[0]);
    std::istringstream in(ltf_weights);
    LtfSpec spec;
    std::string tok;
    while (in >> tok) spec.weights.push_back(parse_rational(tok));
    if (spec.weights.empty())
      throw CLI::ValidationError("--ltf needs at least one weight");
    return spec;
  }

  std::string echo() const {
    if (!wmon_args.empty())
      return "wmon " + std::to_string(wmon_args[0]) + " " +
             std::to_string(wmon_args[1]);
    if (!mon_args.empty()) return "mon " + std::to_string(mon_args[0]);
    if (!maj_args.empty()) return "maj " + std::to_string(maj_args[0]);
    return "ltf " + ltf_weights;
  }
};

CspInstance read_instance(const std::string& path) {
  if (path.empty() || path == "-") return CspInstance::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return CspInstance::parse(in);
}

json outcome_json(const LinearProgram& lp, const FeasibilityOutcome& o) {
  json j;
  j["verdict"] = o.verdict == Feasibility::Feasible ? "feasible" : "infeasible";
  if (o.verdict == Feasibility::Feasible) {
    j["point"] = rational_vec_json(o.point);
  } else {
    j["eq_mult"] = rational_vec_json(o.eq_mult);
    j["ge_mult"] = rational_vec_json(o.ge_mult);
    json eq_labels = json::array(), ge_labels = json::array();
    for (const auto& r : lp.eq) eq_labels.push_back(r.label);
    for (const auto& r : lp.ge) ge_labels.push_back(r.label);
    j["eq_rows"] = eq_labels;
    j["ge_rows"] = ge_labels;
  }
  return j;
}

std::vector<Rational> parse_rational_vec(const json& a) {
  std::vector<Rational> v;
  for (const auto& s : a) v.push_back(parse_rational(s.get<std::string>()));
  return v;
}

// ---------------------------------------------------------------- chow --

int cmd_chow(const PredicateOpts& pred, const GlobalOpts& g) {
  RunRecord rec("chow", g);
  const LtfSpec spec = pred.resolve();
  rec.config()["predicate"] = pred.echo();
  const BooleanFunction f = ltf_to_function(spec);
  const ChowVector chow = chow_parameters(f);
  const Rational r = rho(f);
  const Rational e0 = epsilon0(f);
  const Rational es = epsilon_star(f);
  const bool self = chow_defines_self(f);

  bool ok = chow.degree0 == r;
  for (const auto& c : chow.degree1) ok = ok && abs(c) <= chow.degree0;

  rec.out()["rho"] = rational_json(r);
  rec.out()["chow_degree1"] = rational_vec_json(chow.degree1);
  rec.out()["eps0"] = rational_json(e0);
  rec.out()["eps_star"] = rational_json(es);
  rec.out()["chow_defines_self"] = self;
  if (rec.text()) {
    std::cout << "rho = " << fmt(r) << '\n';
    std::cout << "chow degree-1 =";
    for (const auto& c : chow.degree1) std::cout << ' ' << to_string(c);
    std::cout << '\n';
    std::cout << "eps0 = " << fmt(e0) << '\n';
    std::cout << "eps* = " << fmt(es) << '\n';
    std::cout << "chow defines f: " << (self ? "yes" : "no") << '\n';
  }
  if (!pred.wmon_args.empty() &&
      (pred.wmon_args[0] + pred.wmon_args[1]) % 2 == 0) {
    const auto [president, citizen] =
        wmon_chow_closed_form(pred.wmon_args[0], pred.wmon_args[1]);
    ok = ok && president == chow.degree1[0] && citizen == chow.degree1[1];
    rec.out()["president"] = rational_json(president);
    rec.out()["citizen"] = rational_json(citizen);
    rec.out()["ratio"] = rational_json(president / citizen);
    if (rec.text()) {
      std::cout << "president = " << fmt(president)
                << ", citizen = " << fmt(citizen)
                << ", ratio = " << fmt(president / citizen) << '\n';
    }
  }
  rec.out()["verified"] = ok;
  rec.emit();
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- decide --

json decide_one(int k, const std::string& cert_out, bool text,
                std::ostringstream& text_out, bool* ok) {
  MonarchyDecision d = decide_monarchy(k);
  const LinearProgram lp = build_monarchy_lp(k);
  json j;
  j["k"] = k;
  *ok = check_outcome(lp, d.outcome);
  if (d.verdict == MonarchyVerdict::Approximable) {
    j["verdict"] = "approximable";
    j["implied_bound"] = rational_json(d.implied_bound);
    j["certificate"] = outcome_json(lp, d.outcome);
    *ok = *ok && d.implied_bound < 1;
    if (text)
      text_out << "k=" << k << ": approximable; certificate implies "
               << (k - 2) << "mu1+" << (k - 1) << "mu' <= "
               << fmt(d.implied_bound) << '\n';
  } else {
    j["verdict"] = "resistant";
    j["lp_witness"] = d.witness_dist.str();
    if (k >= 5) {
      const WitnessReport rep = verify_witness(witness(k), k);
      j["lemma_witness_verified"] = rep.all_ok();
      *ok = *ok && rep.all_ok();
    }
    if (text)
      text_out << "k=" << k << ": resistant; LP witness found"
               << (k >= 5 ? ", closed-form witness verified" : "") << '\n';
  }
  if (!cert_out.empty()) {
    json cert;
    cert["k"] = k;
    cert["outcome"] = outcome_json(lp, d.outcome);
    std::ofstream out(cert_out);
    out << cert.dump(2) << '\n';
  }
  return j;
}

int cmd_decide(const std::vector<int>& ks, const std::string& cert_out,
               const GlobalOpts& g) {
  RunRecord rec("decide", g);
  rec.config()["k"] = ks;
  for (int k : ks)
    if (k < 2 || k > g.max_k)
      throw std::invalid_argument("k must be in [2, max-k]");

  std::vector<json> results(ks.size());
  std::vector<std::ostringstream> texts(ks.size());
  std::vector<char> oks(ks.size(), 0);
  const int jobs = std::max(1, std::min<int>(g.jobs, ks.size()));
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < ks.size(); i = next++) {
      bool ok = false;
      results[i] = decide_one(ks[i], ks.size() == 1 ? cert_out : "",
                              rec.text(), texts[i], &ok);
      oks[i] = ok;
    }
  };
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_ok = true;
  rec.out()["results"] = json::array();
  for (size_t i = 0; i < ks.size(); ++i) {
    rec.out()["results"].push_back(results[i]);
    all_ok = all_ok && oks[i];
    if (rec.text()) std::cout << texts[i].str();
  }
  rec.out()["verified"] = all_ok;
  rec.emit();
  return all_ok ? 0 : 1;
}

// ----------------------------------------------------- witness / verify --

json witness_report_json(const WitnessReport& rep) {
  json j;
  j["mass_ok"] = rep.mass_ok;
  j["nonneg_ok"] = rep.nonneg_ok;
  j["cond_ii_ok"] = rep.cond_ii_ok;
  j["cond_ii_agrees_h"] = rep.cond_ii_agrees_h;
  j["cond_iii_ok"] = rep.cond_iii_ok;
  j["mass"] = to_string(rep.mass);
  j["cond_ii_residual"] = rep.cond_ii_residual.str();
  j["p1"] = to_string(rep.cond_iii.p1);
  j["p_prime"] = to_string(rep.cond_iii.p_prime);
  return j;
}

void witness_report_text(const WitnessReport& rep) {
  std::cout << "(i)   mass/nonneg: " << (rep.mass_ok && rep.nonneg_ok ? "pass" : "FAIL")
            << " (mass = " << to_string(rep.mass) << ")\n";
  std::cout << "(ii)  delta identity: " << (rep.cond_ii_ok ? "pass" : "FAIL")
            << ", h-route agreement: " << (rep.cond_ii_agrees_h ? "pass" : "FAIL")
            << '\n';
  std::cout << "(iii) p' >= 1 - (k-2)/(k-1) p1: "
            << (rep.cond_iii_ok ? "pass" : "FAIL")
            << " (p1 = " << fmt(rep.cond_iii.p1)
            << ", p' = " << fmt(rep.cond_iii.p_prime) << ")\n";
}

int cmd_witness(int k, const GlobalOpts& g) {
  RunRecord rec("witness", g);
  rec.config()["k"] = k;
  if (k > g.max_k) throw std::invalid_argument("k above --max-k bound");
  const ReducedDistribution d = witness(k);
  const WitnessReport rep = verify_witness(d, k);
  rec.out()["distribution"] = d.str();
  rec.out()["report"] = witness_report_json(rep);
  rec.out()["verified"] = rep.all_ok();
  if (rec.text()) {
    std::cout << d.str();
    witness_report_text(rep);
  }
  rec.emit();
  return rep.all_ok() ? 0 : 1;
}

int cmd_verify(const std::string& path, const GlobalOpts& g) {
  RunRecord rec("verify", g);
  rec.config()["file"] = path;
  ReducedDistribution d;
  if (path.empty() || path == "-") {
    d = ReducedDistribution::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    d = ReducedDistribution::parse(in);
  }
  const WitnessReport rep = verify_witness(d, d.k);
  rec.out()["report"] = witness_report_json(rep);
  rec.out()["verified"] = rep.all_ok();
  if (rec.text()) witness_report_text(rep);
  rec.emit();
  return rep.all_ok() ? 0 : 1;
}

int cmd_verify_cert(const std::string& path, const GlobalOpts& g) {
  RunRecord rec("verify-cert", g);
  rec.config()["file"] = path;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json cert = json::parse(in);
  const int k = cert.at("k").get<int>();
  const LinearProgram lp = build_monarchy_lp(k);
  const json& o = cert.at("outcome");
  FeasibilityOutcome outcome;
  bool ok;
  if (o.at("verdict") == "feasible") {
    outcome.verdict = Feasibility::Feasible;
    outcome.point = parse_rational_vec(o.at("point"));
    ok = check_point(lp, outcome.point);
  } else {
    outcome.verdict = Feasibility::Infeasible;
    outcome.eq_mult = parse_rational_vec(o.at("eq_mult"));
    outcome.ge_mult = parse_rational_vec(o.at("ge_mult"));
    ok = check_farkas(lp, outcome.eq_mult, outcome.ge_mult);
    if (ok) {
      const Rational bound = certificate_implied_bound(lp, outcome, k);
      ok = bound < 1;
      rec.out()["implied_bound"] = rational_json(bound);
      if (rec.text())
        std::cout << "implied bound: " << (k - 2) << "mu1+" << (k - 1)
                  << "mu' <= " << fmt(bound) << '\n';
    }
  }
  rec.out()["k"] = k;
  rec.out()["verified"] = ok;
  if (rec.text())
    std::cout << "certificate " << (ok ? "verified" : "REJECTED") << '\n';
  rec.emit();
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- sketch --

int cmd_sketch(const PredicateOpts& pred, bool has_pred,
               const std::string& instance_path, const std::string& eps_str,
               uint64_t seed, int trials, bool exact_b, int c_reps,
               const GlobalOpts& g) {
  RunRecord rec("sketch", g);
  CspInstance psi = read_instance(instance_path);
  if (has_pred) {
    psi.predicate_spec = pred.resolve();
    psi.predicate = ltf_to_function(psi.predicate_spec);
    psi.has_ltf_spec = true;
    psi.validate();
  }
  const Rational eps = parse_rational(eps_str);
  rec.config()["eps"] = eps_str;
  rec.config()["seed"] = seed;
  rec.config()["trials"] = trials;
  rec.config()["exact_b"] = exact_b;
  rec.config()["c"] = c_reps;

  std::vector<SketchVerdict> runs;
  if (exact_b) {
    runs.push_back(algorithm1_exact(psi, eps));
  } else {
    for (int t = 0; t < trials; ++t)
      runs.push_back(algorithm1(psi, eps, seed + t, c_reps));
  }
  std::sort(runs.begin(), runs.end(),
            [](const SketchVerdict& a, const SketchVerdict& b) {
              return a.v < b.v;
            });
  const SketchVerdict& mid = runs[runs.size() / 2];  // median trial by v
  if (mid.eps_star_zero)
    std::cerr << "warning: eps*(f) = 0, the approximation guarantee is "
                 "vacuous for this predicate\n";

  std::cout << "v=" << to_decimal(mid.v) << " B=" << to_decimal(mid.b_tilde)
            << " delta=" << to_decimal(mid.delta_tilde) << '\n';
  rec.out()["v"] = rational_json(mid.v);
  rec.out()["b_tilde"] = rational_json(mid.b_tilde);
  rec.out()["delta_tilde"] = rational_json(mid.delta_tilde);
  rec.out()["rho"] = rational_json(mid.rho);
  rec.out()["eps_star"] = rational_json(mid.eps_star);
  rec.out()["eps_star_zero"] = mid.eps_star_zero;
  rec.out()["exact_b"] = mid.exact_b;
  const bool ok = mid.v >= mid.rho;
  rec.out()["verified"] = ok;
  rec.emit();
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- bounds --

int cmd_bounds(const std::string& instance_path, const GlobalOpts& g) {
  RunRecord rec("bounds", g);
  const CspInstance psi = read_instance(instance_path);
  const std::vector<Rational> lambda = chow_parameters(psi.predicate).degree1;
  const Rational b = b_norm_exact(psi, lambda);
  const Rational lo = bound_lower(b, psi.predicate);
  const Rational hi = bound_upper(b, psi.predicate);
  const BruteForceResult opt = brute_force_value(psi);
  const bool ok = lo <= opt.value && opt.value <= hi;
  rec.out()["B"] = rational_json(b);
  rec.out()["lower"] = rational_json(lo);
  rec.out()["upper"] = rational_json(hi);
  rec.out()["optimum"] = rational_json(opt.value);
  rec.out()["sandwich_holds"] = ok;
  if (rec.text()) {
    std::cout << "B = " << fmt(b) << '\n';
    std::cout << "lower = " << fmt(lo) << " <= optimum = " << fmt(opt.value)
              << " <= upper = " << fmt(hi) << '\n';
    std::cout << "sandwich: " << (ok ? "holds" : "VIOLATED") << '\n';
  }
  rec.emit();
  return ok ? 0 : 1;
}

// ----------------------------------------------------- identity / ltf4 --

int cmd_identity(int m, const GlobalOpts& g) {
  RunRecord rec("identity", g);
  rec.config()["m"] = m;
  const Polynomial res = comb_identity_residual(m);
  const bool ok = res.is_zero();
  rec.out()["residual"] = res.str();
  rec.out()["verified"] = ok;
  if (rec.text())
    std::cout << (ok ? "zero residual" : "NONZERO residual: " + res.str())
              << '\n';
  rec.emit();
  return ok ? 0 : 1;
}

int cmd_classify4(const std::vector<std::string>& weights,
                  const GlobalOpts& g) {
  RunRecord rec("classify4", g);
  rec.config()["weights"] = weights;
  LtfSpec spec;
  for (const auto& w : weights) spec.weights.push_back(parse_rational(w));
  const Ltf4Classification cls = classify_balanced_ltf4(spec);
  // replay the verdict: the canonical (sorted, sign-flipped) spec must
  // compute the same table the verdict asserts
  LtfSpec canon;
  canon.weights.assign(4, Rational(0));
  LtfSpec padded = spec;
  padded.weights.resize(4, Rational(0));
  for (int s = 0; s < 4; ++s)
    canon.weights[s] = abs(padded.weights[cls.perm[s]]);
  const bool ok =
      ltf_to_function(canon) == ltf4_kind_function(cls.kind);
  rec.out()["kind"] = ltf4_kind_name(cls.kind);
  rec.out()["verified"] = ok;
  if (rec.text()) std::cout << ltf4_kind_name(cls.kind) << '\n';
  rec.emit();
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- gen --

int cmd_gen(const PredicateOpts& pred, int n, int m, uint64_t seed,
            bool planted, const std::string& out_path, const GlobalOpts& g) {
  RunRecord rec("gen", g);
  const LtfSpec spec = pred.resolve();
  rec.config()["predicate"] = pred.echo();
  rec.config()["n"] = n;
  rec.config()["m"] = m;
  rec.config()["seed"] = seed;
  rec.config()["planted"] = planted;
  const BooleanFunction f = ltf_to_function(spec);
  CspInstance psi;
  if (planted) {
    Assignment sigma(n);
    SplitMix64 rng(mix64(seed));
    for (int v = 1; v <= n; ++v) sigma.set(v, rng.next_bool() ? 1 : -1);
    psi = planted_instance(f, n, m, seed, sigma);
  } else {
    psi = random_instance(f, n, m, seed);
  }
  psi.predicate_spec = spec;
  psi.has_ltf_spec = true;
  const std::string text = psi.str();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  rec.out()["constraints"] = m;
  rec.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monarchy Max-CSP analysis and bias sketching"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads for sweeps");
  app.add_option("--max-k", g.max_k, "largest accepted arity for decide/witness");

  auto* chow_cmd = app.add_subcommand("chow", "Chow parameters and derived data");
  PredicateOpts chow_pred;
  chow_pred.attach(chow_cmd);

  auto* decide_cmd = app.add_subcommand("decide", "approximability verdict");
  std::vector<int> decide_ks;
  std::string cert_out;
  decide_cmd->add_option("k", decide_ks, "arities to decide")->required();
  decide_cmd->add_option("--cert-out", cert_out,
                         "write the LP certificate (single k only)");

  auto* witness_cmd = app.add_subcommand("witness", "closed-form witness for k >= 5");
  int witness_k = 5;
  witness_cmd->add_option("k", witness_k)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify an rdist file");
  std::string verify_path = "-";
  verify_cmd->add_option("file", verify_path, "rdist file or - for stdin");

  auto* vc_cmd = app.add_subcommand("verify-cert", "replay an LP certificate");
  std::string cert_path;
  vc_cmd->add_option("file", cert_path)->required();

  auto* sketch_cmd = app.add_subcommand("sketch", "run Algorithm 1");
  PredicateOpts sketch_pred;
  sketch_pred.attach(sketch_cmd);
  std::string sketch_instance = "-", sketch_eps = "0.1";
  uint64_t sketch_seed = 1;
  int sketch_trials = 1, sketch_c = L1Sketch::kDefaultC;
  bool sketch_exact = false;
  sketch_cmd->add_option("--instance", sketch_instance, "instance file or -");
  sketch_cmd->add_option("--eps", sketch_eps, "accuracy eps in (0,1)");
  sketch_cmd->add_option("--seed", sketch_seed);
  sketch_cmd->add_option("--trials", sketch_trials, "independent seeds, median v");
  sketch_cmd->add_option("--c-reps", sketch_c, "repetition constant c in r = c/eps'^2");
  sketch_cmd->add_flag("--exact-b", sketch_exact, "substitute the exact ell1 norm");

  auto* bounds_cmd = app.add_subcommand("bounds", "optimum sandwich report");
  std::string bounds_instance = "-";
  bounds_cmd->add_option("--instance", bounds_instance, "instance file or -");

  auto* identity_cmd = app.add_subcommand("identity", "binomial identity residual");
  int identity_m = 1;
  identity_cmd->add_option("m", identity_m)->required();

  auto* classify_cmd = app.add_subcommand("classify4", "classify a balanced LTF on <= 4 vars");
  std::vector<std::string> classify_weights;
  classify_cmd->add_option("weights", classify_weights)->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate a random/planted instance");
  PredicateOpts gen_pred;
  gen_pred.attach(gen_cmd);
  int gen_n = 14, gen_m = 200;
  uint64_t gen_seed = 1;
  bool gen_planted = false;
  std::string gen_out;
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_flag("--planted", gen_planted);
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chow_cmd) return cmd_chow(chow_pred, g);
    if (*decide_cmd) return cmd_decide(decide_ks, cert_out, g);
    if (*witness_cmd) return cmd_witness(witness_k, g);
    if (*verify_cmd) return cmd_verify(verify_path, g);
    if (*vc_cmd) return cmd_verify_cert(cert_path, g);
    if (*sketch_cmd)
      return cmd_sketch(sketch_pred,
                        sketch_cmd->count("--wmon") || sketch_cmd->count("--mon") ||
                            sketch_cmd->count("--maj") || sketch_cmd->count("--ltf"),
                        sketch_instance, sketch_eps, sketch_seed, sketch_trials,
                        sketch_exact, sketch_c, g);
    if (*bounds_cmd) return cmd_bounds(bounds_instance, g);
    if (*identity_cmd) return cmd_identity(identity_m, g);
    if (*classify_cmd) return cmd_classify4(classify_weights, g);
    if (*gen_cmd)
      return cmd_gen(gen_pred, gen_n, gen_m, gen_seed, gen_planted, gen_out, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
