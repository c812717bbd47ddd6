// Command-line front end: reads a problem file and prints a JSON report.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hurwitz/report.hpp"

using namespace hurwitz;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz orbits and finiteness of reflection groups over number fields"};
  app.require_subcommand(1);

  std::string path;
  std::size_t cap = 0;
  std::size_t orbit_cap = 2000;
  unsigned long order_cap = 120;
  bool emit_states = false, force_closure = false;
  int indent = 2;

  app.add_option("--json-indent", indent, "Indentation of the JSON report (-1 for one line)")
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Cartan validation, blocks, det, minors");
  auto* coxeter = app.add_subcommand("coxeter", "Coleman decomposition and the Coxeter element");
  auto* orb = app.add_subcommand("orbit", "Hurwitz orbit of the reflection tuple");
  auto* group = app.add_subcommand("group", "Closure of the generated group");
  auto* cert = app.add_subcommand("certify", "Full finiteness report");
  auto* counter = app.add_subcommand("counterexample", "certify on the built-in order-8 counterexample");

  for (auto* sub : {analyze, coxeter, orb, group, cert})
    sub->add_option("file", path, "Problem file, - for stdin")->required();
  for (auto* sub : {coxeter, cert, counter})
    sub->add_option("--order-cap", order_cap, "Powers tried before certificates")
        ->capture_default_str();
  orb->add_option("--cap", cap, "Orbit size limit (default 10000)");
  orb->add_flag("--emit-states", emit_states, "List the state keys");
  group->add_option("--cap", cap, "Closure size limit (default 20000)");
  group->add_flag("--emit-states", emit_states, "List the element keys");
  for (auto* sub : {cert, counter}) {
    sub->add_option("--cap", cap, "Closure size limit (default 20000)");
    sub->add_option("--orbit-cap", orbit_cap, "Orbit probe limit")->capture_default_str();
    sub->add_flag("--force-closure", force_closure, "Run closure after an infinite certificate");
    sub->add_flag("--emit-states", emit_states, "List the orbit probe state keys");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const ProblemFile p = counter->parsed() ? parse_problem(kCounterexample)
                                            : parse_problem(read_input(path));
    OrderOptions order;
    order.cap = order_cap;
    CertifyOptions copt;
    copt.order = order;
    copt.orbit_cap = orbit_cap;
    copt.closure_cap = cap ? cap : 20000;
    copt.force_closure = force_closure;

    Json report;
    if (analyze->parsed()) report = analyze_report(p);
    else if (coxeter->parsed()) report = coxeter_report(p, order);
    else if (orb->parsed()) report = orbit_report(p, cap ? cap : 10000, emit_states);
    else if (group->parsed()) report = group_report(p, cap ? cap : 20000, emit_states);
    else {
      report = certify_report(p, copt, emit_states);
      if (counter->parsed()) report["command"] = "counterexample";
    }
    std::cout << report.dump(indent) << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::InternalMismatch ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
