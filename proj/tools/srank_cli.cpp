// srank: command-line front end for the entanglement library.
//
// Exit codes: 0 ok (or simple), 3 entangled (simple/witness), 1 bad input, 2 numeric failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "srank/io.hpp"
#include "srank/srank.hpp"

namespace {

using namespace srank;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitEntangled = 3;

struct Options {
  std::string input;
  std::string tableau;
  std::string cls;
  std::optional<double> epsilon;
  bool as_json = false;
};

double resolve_epsilon(const Options& o) {
  if (o.epsilon) return *o.epsilon;
  if (const char* env = std::getenv("SRANK_EPSILON")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) fail(ErrorCode::invalid_argument, "SRANK_EPSILON must be a positive number");
    return v;
  }
  return kDefaultEpsilon;
}

Tensor load(const Options& o, double eps) {
  Tensor t = io::tensor_from_json(io::read_json_file(o.input), eps);
  if (!o.cls.empty()) {
    const Symmetry sym = io::parse_symmetry(o.cls);
    t = assert_symmetry(t.retagged(Symmetry::general), sym, eps);
  }
  return t;
}

YoungTableau load_tableau(const Options& o) {
  if (o.tableau.empty()) fail(ErrorCode::invalid_argument, "--tableau is required");
  return io::tableau_from_json(io::read_json_file(o.tableau));
}

// Short rational form for values like 1/12; empty if none with a small denominator fits.
std::string as_fraction(double x) {
  for (int q = 1; q <= 720; ++q) {
    const double p = std::round(x * q);
    if (std::abs(x * q - p) < 1e-9 * q) {
      if (q == 1) return std::to_string(static_cast<long long>(p));
      return std::to_string(static_cast<long long>(p)) + "/" + std::to_string(q);
    }
  }
  return {};
}

std::string format_complex(Complex c) {
  char buf[64];
  if (std::abs(c.imag()) <= 1e-15 * std::max(1.0, std::abs(c.real()))) {
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
    const std::string frac = as_fraction(c.real());
    return frac.empty() || frac == buf ? std::string(buf) : std::string(buf) + " (" + frac + ")";
  }
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
  return buf;
}

std::string format_index(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s;
}

std::string format_witness(const Witness& w) {
  std::ostringstream out;
  out << "witness (" << format_index(w.first) << "|" << format_index(w.second) << ")";
  if (w.slot > 0) out << " slot " << w.slot;
  if (w.rhs == Complex{})
    out << ", value " << format_complex(w.lhs);
  else
    out << ", " << format_complex(w.lhs) << " != " << format_complex(w.rhs);
  return out.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_lambdas(const std::vector<double>& lambdas) {
  std::cout << "lambdas:";
  for (double l : lambdas) std::cout << " " << format_complex(l);
  std::cout << "\n";
}

int cmd_srank(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = load(o, eps);
  const Verdict v = is_simple(t, eps);
  if (o.as_json) print_json(io::verdict_to_json(v));
  else std::cout << v.s_rank << "\n";
  return kExitOk;
}

int cmd_simple(const Options& o) {
  const double eps = resolve_epsilon(o);
  Tensor t = load(o, eps);
  Verdict v;
  if (!o.tableau.empty()) v = alpha_is_simple(t, load_tableau(o), eps);
  else v = classify(t, eps);
  if (o.as_json) {
    print_json(io::verdict_to_json(v));
  } else {
    std::cout << (v.simple ? "simple" : "entangled") << " (" << to_string(v.symmetry) << ", s_rank " << v.s_rank
              << ", minimal " << v.minimal_rank << ")\n";
    if (v.witness) std::cout << format_witness(*v.witness) << "\n";
  }
  return v.simple ? kExitOk : kExitEntangled;
}

int cmd_witness(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = load(o, eps);
  const auto w = quadratic_witness(t, eps);
  if (o.as_json) {
    json j = {{"schema", io::kSchemaVersion}, {"symmetry", to_string(t.symmetry())}, {"entangled", w.has_value()}};
    j["witness"] = w ? io::witness_to_json(*w) : json(nullptr);
    print_json(j);
  } else if (w) {
    std::cout << "entangled: " << format_witness(*w) << "\n";
  } else {
    std::cout << "simple: no witness\n";
  }
  return w ? kExitEntangled : kExitOk;
}

int cmd_schmidt(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = load(o, eps);
  const auto d = schmidt(t.retagged(Symmetry::general), eps);
  if (o.as_json) {
    print_json(io::decomposition_to_json(d));
  } else {
    std::cout << "schmidt rank " << d.rank() << "\n";
    print_lambdas(d.lambdas);
  }
  return kExitOk;
}

int cmd_slater(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = load(o, eps);
  const auto d = slater(t, eps);
  if (o.as_json) {
    print_json(io::decomposition_to_json(d));
  } else {
    std::cout << (d.kind == SlaterKind::symmetric ? "takagi" : "youla") << ": slater rank " << d.rank() << "\n";
    print_lambdas(d.lambdas);
  }
  return kExitOk;
}

int cmd_project(const Options& o) {
  const double eps = resolve_epsilon(o);
  if (o.cls != "symmetric" && o.cls != "antisymmetric")
    fail(ErrorCode::invalid_argument, "project needs --class symmetric|antisymmetric");
  const Tensor t = io::tensor_from_json(io::read_json_file(o.input), eps);
  const Tensor p = o.cls == "symmetric" ? symmetrize(t) : antisymmetrize(t);
  print_json(io::tensor_to_json(p));
  return kExitOk;
}

int cmd_young_project(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = io::tensor_from_json(io::read_json_file(o.input), eps);
  const Tensor p = young_projector(load_tableau(o)).apply(t);
  print_json(io::tensor_to_json(p));
  return kExitOk;
}

int cmd_young_classify(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = io::tensor_from_json(io::read_json_file(o.input), eps);
  const YoungTableau tab = load_tableau(o);
  const Verdict v = alpha_is_simple(t, tab, eps);
  if (o.as_json) {
    json j = io::verdict_to_json(v);
    j["tableau"] = io::tableau_to_json(tab);
    print_json(j);
  } else {
    std::cout << (v.simple ? "simple" : "entangled") << " (young, s_rank " << v.s_rank << ", rows "
              << v.minimal_rank << ")\n";
  }
  return kExitOk;
}

int cmd_jam_rank(const Options& o) {
  const double eps = resolve_epsilon(o);
  const Tensor t = load(o, eps);
  const FourLegTensor phi = state_to_map(t, eps);
  const int rank = map_rank(phi, eps);
  const int simple_rank = t.symmetry() == Symmetry::symmetric ? 1 : 4;
  if (o.as_json) {
    print_json({{"schema", io::kSchemaVersion},
                {"symmetry", to_string(t.symmetry())},
                {"map_rank", rank},
                {"simple_rank", simple_rank},
                {"simple", rank == simple_rank},
                {"self_adjoint", to_string(classify_sa(phi, eps))}});
  } else {
    std::cout << rank << (rank == simple_rank ? " (simple)" : " (entangled)") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify multipartite pure states as simple or entangled."};
  app.require_subcommand(1);
  Options opt;
  double eps_flag = 0.0;
  std::vector<CLI::Option*> eps_options;

  auto add = [&](const std::string& name, const std::string& help, bool cls, bool tableau) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "tensor JSON file")->required()->check(CLI::ExistingFile);
    eps_options.push_back(sub->add_option("--epsilon", eps_flag, "relative tolerance (default 1e-9, env SRANK_EPSILON)")
                              ->check(CLI::PositiveNumber));
    sub->add_flag("--json", opt.as_json, "emit a JSON report");
    if (cls)
      sub->add_option("--class", opt.cls, "symmetry class")
          ->check(CLI::IsMember({"general", "symmetric", "antisymmetric"}));
    if (tableau) sub->add_option("--tableau", opt.tableau, "Young tableau JSON file")->check(CLI::ExistingFile);
    return sub;
  };

  struct Verb {
    CLI::App* app;
    int (*run)(const Options&);
  };
  const std::vector<Verb> verbs{
      {add("srank", "print the S-rank", true, false), cmd_srank},
      {add("simple", "decide simplicity (exit 3 if entangled)", true, true), cmd_simple},
      {add("witness", "search a quadratic witness (exit 3 if found)", true, false), cmd_witness},
      {add("schmidt", "Schmidt decomposition of a 2-tensor", false, false), cmd_schmidt},
      {add("slater", "Takagi or Youla decomposition of a 2-tensor", true, false), cmd_slater},
      {add("project", "apply the symmetrizer or antisymmetrizer", true, false), cmd_project},
      {add("young-project", "apply the Young projector of a tableau", false, true), cmd_young_project},
      {add("young-classify", "minimal S-rank test inside H^alpha", false, true), cmd_young_classify},
      {add("jam-rank", "rank of the Jamiolkowski map of a 2-particle state", true, false), cmd_jam_rank},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  for (const auto* o : eps_options)
    if (o->count() > 0) opt.epsilon = eps_flag;

  try {
    for (const auto& v : verbs)
      if (v.app->parsed()) return v.run(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_numeric_failure() ? kExitNumeric : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}
