// frobcalc: command-line front end. Every subcommand builds a JSON request,
// runs it and prints a JSON report on stdout; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frobcalc/cli/commands.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::map<std::string, std::string> strings;
  std::map<std::string, std::int64_t> integers;
  std::map<std::string, bool> flags;
  std::vector<std::string> ideals;
  std::optional<std::uint64_t> seed;
};

struct Sub {
  CLI::App* app;
  Options opts;
};

void add_string(Sub& s, const std::string& key, const std::string& help, bool required = false) {
  auto* opt = s.app->add_option("--" + key, s.opts.strings[key], help);
  if (required) opt->required();
}

void add_int(Sub& s, const std::string& key, const std::string& help, bool required = false) {
  auto* opt = s.app->add_option("--" + key, s.opts.integers[key], help);
  if (required) opt->required();
}

void add_flag(Sub& s, const std::string& key, const std::string& help) {
  s.app->add_flag("--" + key + ",!--no-" + key, s.opts.flags[key], help);
}

json request_from(const std::string& command, const Sub& s) {
  json req = {{"command", command}};
  for (const auto& [key, v] : s.opts.strings) {
    if (s.app->count("--" + key)) req[key] = v;
  }
  for (const auto& [key, v] : s.opts.integers) {
    if (s.app->count("--" + key)) req[key] = v;
  }
  for (const auto& [key, v] : s.opts.flags) {
    if (s.app->count("--" + key)) req[key] = v;
  }
  if (command == "intersect" && s.app->count("--ideal")) {
    req.erase("ideal");
    req["ideals"] = s.opts.ideals;
  }
  if (s.opts.seed) req["seed"] = *s.opts.seed;
  return req;
}

void ring_ideal(Sub& s) {
  add_string(s, "ring", "ring, e.g. 'GF(3)[x,y,z]' or 'GF(2)[x,y]:lex'", true);
  add_string(s, "ideal", "generators separated by ';' or ','", true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobcalc: Frobenius computations over F_p[x] and Tate algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the report to this file as well as stdout");

  std::map<std::string, Sub> subs;
  auto make = [&](const std::string& name, const std::string& help) -> Sub& {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, help);
    s.app->add_option("--seed", s.opts.seed, "random seed (recorded in the report)");
    return s;
  };

  ring_ideal(make("gb", "reduced Groebner basis"));
  {
    Sub& s = make("colon", "colon ideal (I : J)");
    ring_ideal(s);
    add_string(s, "divisor", "generators of J", true);
  }
  {
    Sub& s = make("intersect", "intersection of ideals");
    add_string(s, "ring", "ring descriptor", true);
    s.app->add_option("--ideal", s.opts.ideals, "an ideal (repeatable)");
  }
  for (const char* name : {"bracket", "frobroot"}) {
    Sub& s = make(name, std::string(name) == "bracket" ? "Frobenius bracket power I^[q]" : "Frobenius root I^[1/q]");
    ring_ideal(s);
    add_int(s, "e", "exponent e, q = p^e");
  }
  {
    Sub& s = make("trace", "trace ideal of the Frobenius projections");
    ring_ideal(s);
    add_int(s, "e", "exponent e");
    add_flag(s, "enumerate", "list the image of every projection");
  }
  {
    Sub& s = make("fedder", "F-purity of R = S/I at a rational point");
    ring_ideal(s);
    add_string(s, "point", "coordinates, e.g. '(0,1)'", true);
    add_string(s, "r", "element r of S (default 1)");
    add_int(s, "e", "exponent e");
  }
  {
    Sub& s = make("fpure-locus", "locus where R (or r) is F-pure");
    ring_ideal(s);
    add_string(s, "r", "element r of S (default 1)");
    add_int(s, "e", "exponent e");
    add_flag(s, "scan", "test each F_p-rational point of V(I)");
    add_int(s, "max_points", "skip the scan beyond this many points");
    add_flag(s, "parallel", "use the OpenMP kernels");
  }
  {
    Sub& s = make("split-test", "does the Frobenius map split along r");
    ring_ideal(s);
    add_string(s, "r", "element r of S (default 1)");
    add_int(s, "e", "exponent e");
  }
  {
    Sub& s = make("filtration-check", "monomial filtration between (x^b) and (x)^[b]");
    add_int(s, "p", "characteristic", true);
    add_int(s, "c", "number of variables in the filtration", true);
    add_int(s, "b", "exponent bound", true);
    add_int(s, "nvars", "ambient variables (default c)");
    add_flag(s, "parallel", "use the OpenMP kernels");
  }
  {
    Sub& s = make("uniform-e", "smallest e with (f)^[1/p^e] = (1)");
    add_string(s, "ring", "ring descriptor", true);
    add_string(s, "f", "polynomial", true);
    add_int(s, "cap", "largest e to try");
  }
  {
    Sub& s = make("gauss-norm", "Gauss valuation of a restricted series");
    add_int(s, "p", "characteristic", true);
    add_string(s, "series", "series text", true);
    add_int(s, "d", "ramification index");
    add_int(s, "nvars", "number of variables (0 infers)");
    add_int(s, "precision", "precision in whole powers of t");
  }
  {
    Sub& s = make("t1-div", "Euclidean division in one variable");
    add_int(s, "p", "characteristic", true);
    add_string(s, "f", "dividend", true);
    add_string(s, "g", "divisor", true);
    add_int(s, "d", "ramification index");
    add_int(s, "precision", "precision in whole powers of t");
  }
  {
    Sub& s = make("tate-split", "approximate Frobenius splitting over F_p((t^(1/p)))");
    add_int(s, "p", "characteristic", true);
    add_string(s, "f", "series", true);
    add_string(s, "w", "truncation level, e.g. '3/2'", true);
    add_int(s, "d", "ramification index (default p)");
    add_int(s, "nvars", "number of variables (0 infers)");
    add_int(s, "precision", "precision in whole powers of t");
    add_flag(s, "parallel", "use the OpenMP kernels");
  }
  {
    Sub& s = make("selftest", "randomized internal checks");
    add_int(s, "trials", "trials per check");
  }
  std::string request_path;
  CLI::App* run_cmd = app.add_subcommand("run", "run a JSON request (or re-run a report)");
  run_cmd->add_option("--request", request_path, "request or report file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : frobcalc::cli::kParseError;
  }

  json request;
  if (run_cmd->parsed()) {
    try {
      std::stringstream buf;
      if (request_path == "-") {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream in(request_path);
        if (!in) {
          std::cerr << "parse error: cannot open " << request_path << "\n";
          return frobcalc::cli::kParseError;
        }
        buf << in.rdbuf();
      }
      request = frobcalc::cli::extract_request(json::parse(buf.str()));
    } catch (const json::exception& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return frobcalc::cli::kParseError;
    }
  } else {
    for (auto& [name, s] : subs) {
      if (s.app->parsed()) request = request_from(name, s);
    }
  }

  const frobcalc::cli::Outcome outcome = frobcalc::cli::run(request);
  const std::string text = frobcalc::cli::render(outcome.report);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
    if (!out) std::cerr << "warning: could not write " << out_path << "\n";
  }
  if (!outcome.diagnostic.empty()) std::cerr << outcome.diagnostic << "\n";
  return outcome.exit_code;
}
