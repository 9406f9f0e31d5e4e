// Command-line front end: reduce, evaluate and verify connected sums and MPL relations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "connsum/boundary.hpp"
#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/examples.hpp"
#include "connsum/json_io.hpp"
#include "connsum/numeric.hpp"
#include "connsum/ohno.hpp"
#include "connsum/random.hpp"
#include "connsum/text.hpp"
#include "connsum/transport.hpp"

namespace {

using namespace connsum;
using Json = nlohmann::json;
namespace cj = connsum::json;

constexpr int kExitPass = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string complex_text(Complex c) {
  std::ostringstream os;
  os.precision(15);
  os << c.real();
  if (c.imag() != 0) os << (c.imag() > 0 ? " + " : " - ") << std::abs(c.imag()) << "i";
  return os.str();
}

struct Options {
  std::string term, pair, relation, name = "all";
  long bound = 0;
  long zbound = 400;
  double tol = 1e-6;
  int h = 3;
  unsigned long seed = 1;
  int random = 0;
  int jobs = 1;
  bool json = false;
  bool text = false;
  bool trace = false;
  bool verify = false;
};

int cmd_reduce(const Options& o) {
  const ZTerm t = cj::decode_zterm(read_json(o.term));
  Trace trace;
  const ZExpr z1 = reduce_to_Z1(t, &trace);
  MplExpr mpl;
  for (const ZTerm& z : z1.terms()) mpl.add(boundary_reduce(z, &trace));
  if (o.json) {
    Json out = {{"input", cj::encode(t)}, {"z1", cj::encode(z1)}, {"mpl", cj::encode(mpl)}};
    if (o.trace) out["trace"] = cj::encode(trace);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_text(t) << "\n  = " << to_text(z1) << "\n  = " << to_text(mpl) << "\n";
    if (o.trace) std::cout << cj::encode(trace).dump(2) << "\n";
  }
  return kExitPass;
}

int cmd_eval(const Options& o) {
  const Json in = read_json(o.term);
  EvalReport rep;
  if (in.contains("components")) {
    rep = eval_zterm(cj::decode_zterm(in), o.bound > 0 ? o.bound : 400, o.tol);
  } else {
    rep = eval_mpl(cj::decode_mpl(in), o.bound > 0 ? o.bound : (1L << 18), o.tol);
  }
  if (o.json) {
    std::cout << cj::encode(rep).dump(2) << "\n";
  } else {
    std::cout << "value        " << complex_text(rep.value) << "\n"
              << "partial sum  " << complex_text(rep.partial_sum) << " (bound " << rep.truncation << ")\n"
              << "tail         " << rep.tail_estimate << " (" << rep.method << ")\n"
              << "converged    " << (rep.converged ? "yes" : "no") << "\n";
  }
  return rep.converged ? kExitPass : kExitNumeric;
}

int cmd_dual(const Options& o) {
  if (o.random > 0) {
    Rng rng(o.seed);
    int bad = 0;
    for (int i = 0; i < o.random; ++i) {
      const Pair p = random_dual_pair(rng, 5, 3, 5);
      const DualPair d = dagger(p);
      const DualPair dd = dagger(d.pair);
      const DualPair viaz = reduce_duality(p);
      const bool ok = dd.pair == p && d.sign * dd.sign == 1 && viaz.pair == d.pair && viaz.sign == d.sign;
      if (!ok) {
        ++bad;
        std::cerr << "mismatch for " << to_text(p) << "\n";
      }
    }
    std::cout << o.random - bad << "/" << o.random << " random pairs consistent\n";
    return bad ? kExitInternal : kExitPass;
  }
  const Pair p = cj::decode_pair(read_json(o.pair));
  const Relation r = duality_relation(p);
  if (o.json) std::cout << cj::encode(r).dump(2) << "\n";
  else std::cout << to_text(r) << "\n";
  return kExitPass;
}

int report_verify(const Relation& r, const Options& o) {
  VerifyOptions vo;
  vo.tol = o.tol;
  vo.jobs = o.jobs;
  vo.z_bound = o.zbound;
  if (o.bound > 0) vo.mpl_bound = o.bound;
  const VerifyReport rep = verify_relation(r, vo);
  if (o.json) {
    std::cout << cj::encode(rep).dump(2) << "\n";
  } else {
    std::cout << "lhs         " << complex_text(rep.lhs) << "\n"
              << "rhs         " << complex_text(rep.rhs) << "\n"
              << "difference  " << rep.difference << " (tail " << rep.tail << ", tolerance " << rep.tol << ")\n"
              << (rep.passed ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed ? kExitPass : kExitNumeric;
}

int cmd_ohno(const Options& o) {
  const Pair p = cj::decode_pair(read_json(o.pair));
  const Relation r = ohno_relation(p, o.h);
  if (o.verify) {
    if (!o.json) std::cout << to_text(r) << "\n";
    return report_verify(r, o);
  }
  if (o.json) std::cout << cj::encode(r).dump(2) << "\n";
  else std::cout << to_text(r) << "\n";
  return kExitPass;
}

int cmd_verify(const Options& o) { return report_verify(cj::decode_relation(read_json(o.relation)), o); }

int cmd_examples(const Options& o) {
  std::vector<std::string> names = o.name == "all" ? example_names() : std::vector<std::string>{o.name};
  bool all = true;
  Json out = Json::array();
  for (const std::string& n : names) {
    const ExampleResult r = run_example(n);
    all = all && r.passed;
    if (o.json) {
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"check", c.description}, {"pass", c.passed}, {"detail", c.detail}});
      out.push_back({{"name", r.name}, {"pass", r.passed}, {"checks", checks}});
    } else {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
      for (const auto& c : r.checks)
        std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.description << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return all ? kExitPass : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariable connected sums: reduction, evaluation and MPL relations"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_flag("--text", o.text, "human-readable output (default)");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "rewrite a Z symbol as MPLs");
  reduce_cmd->add_option("--term", o.term, "JSON file with a Z term ('-' for stdin)")->required();
  reduce_cmd->add_flag("--trace", o.trace, "emit the rule-by-rule trace");
  add_format(reduce_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a Z term or an MPL numerically");
  eval_cmd->add_option("--term", o.term, "JSON file with a Z term or MPL term")->required();
  eval_cmd->add_option("--bound", o.bound, "truncation bound");
  eval_cmd->add_option("--tol", o.tol, "tolerance for the convergence flag");
  add_format(eval_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "duality relation for a pair");
  dual_cmd->add_option("--pair", o.pair, "JSON file with a pair {k, z}");
  dual_cmd->add_option("--random", o.random, "check this many random pairs instead");
  dual_cmd->add_option("--seed", o.seed, "random seed");
  add_format(dual_cmd);

  auto* ohno_cmd = app.add_subcommand("ohno", "Ohno relation for a pair");
  ohno_cmd->add_option("--pair", o.pair, "JSON file with a pair {k, z}")->required();
  ohno_cmd->set_help_flag("--help", "print this help message and exit");
  ohno_cmd->add_option("--h", o.h, "height");
  ohno_cmd->add_flag("--verify", o.verify, "verify the relation numerically");
  ohno_cmd->add_option("--bound", o.bound, "MPL truncation bound");
  ohno_cmd->add_option("--tol", o.tol, "tolerance");
  ohno_cmd->add_option("--jobs", o.jobs, "worker threads");
  add_format(ohno_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify a relation record numerically");
  verify_cmd->add_option("--relation", o.relation, "JSON relation {lhs, rhs, provenance}")->required();
  verify_cmd->add_option("--bound", o.bound, "MPL truncation bound");
  verify_cmd->add_option("--zbound", o.zbound, "box bound for Z terms");
  verify_cmd->add_option("--tol", o.tol, "tolerance");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads");
  add_format(verify_cmd);

  auto* examples_cmd = app.add_subcommand("examples", "reproduce named examples");
  examples_cmd->add_option("--name", o.name, "example name or 'all'");
  add_format(examples_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitPrecondition;
  }
  if (o.json && o.text) o.json = false;

  try {
    if (*reduce_cmd) return cmd_reduce(o);
    if (*eval_cmd) return cmd_eval(o);
    if (*dual_cmd) {
      if (o.pair.empty() && o.random == 0) throw Error(ErrorKind::ParseError, "dual needs --pair or --random");
      return cmd_dual(o);
    }
    if (*ohno_cmd) return cmd_ohno(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*examples_cmd) return cmd_examples(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Internal) return kExitInternal;
    if (e.kind() == ErrorKind::NotConverged) return kExitNumeric;
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
