// Command-line front end: realize, verify, classify, reduce, generate and
// census subcommands over the shared text formats.
//
// Exit codes: 0 success, 1 verification/realization failure, 2 input error,
// 3 unsupported method or budget exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gerechte/gerechte.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gerechte::Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gerechte::Error("cannot open output file: " + path);
  out << data;
}

gerechte::Method parse_method(const std::string& name) {
  static const std::map<std::string, gerechte::Method> methods{
      {"auto", gerechte::Method::Auto},       {"uniform", gerechte::Method::Uniform},
      {"divides", gerechte::Method::Divides}, {"mixed", gerechte::Method::Mixed},
      {"columns", gerechte::Method::Columns}, {"tree", gerechte::Method::Tree},
      {"brute", gerechte::Method::Brute}};
  auto it = methods.find(name);
  if (it == methods.end()) throw gerechte::Error("unknown method: " + name);
  return it->second;
}

std::string label_tokens(const gerechte::ClassLabel& cl) {
  std::string out;
  auto add = [&](const char* tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  };
  if (cl.uniform) add("uniform");
  if (cl.mixed) add("mixed");
  if (cl.divides) add("divides");
  if (cl.columns) add("columns");
  if (cl.tree) add("tree");
  if (out.empty()) add(gerechte::to_string(cl.primary));
  return out;
}

int cmd_realize(const std::string& input, const std::string& method_name,
                const std::string& output, std::uint64_t budget_nodes) {
  gerechte::RegionPartition F = gerechte::RegionPartition::parse(read_file(input));
  gerechte::SearchBudget budget;
  budget.max_assignments = budget_nodes;
  gerechte::Method method = parse_method(method_name);
  gerechte::Realization r = gerechte::realize(F, method, budget);
  auto rep = gerechte::verify_realization(r.square, F);
  if (!rep.ok) {
    std::cerr << "internal error: realization failed verification\n";
    return kExitFailure;
  }
  write_output(output, r.square.serialize());
  std::cerr << "method: " << gerechte::to_string(r.method) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& framework_path, const std::string& square_path) {
  gerechte::RegionPartition F =
      gerechte::RegionPartition::parse(read_file(framework_path));
  gerechte::LatinSquare L = gerechte::LatinSquare::parse(read_file(square_path));
  if (L.n != F.rows()) {
    std::cerr << "dimension mismatch: framework order " << F.rows() << ", square order "
              << L.n << "\n";
    return kExitInput;
  }
  auto rep = gerechte::verify_realization(L, F);
  if (rep.ok) return kExitOk;
  size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 5) {
      std::cerr << "... (" << rep.violations.size() - 5 << " more)\n";
      break;
    }
    std::cerr << v.details << "\n";
  }
  return kExitFailure;
}

int cmd_census(int n, std::uint64_t budget_nodes) {
  using gerechte::BruteForceResult;
  gerechte::SearchBudget budget;
  budget.max_assignments = budget_nodes;
  int frameworks = 0;
  bool all_realized = true;
  std::map<std::string, int> class_counts;
  gerechte::enumerate_rect_frameworks(n, [&](const gerechte::RegionPartition& F) {
    ++frameworks;
    class_counts[gerechte::to_string(gerechte::classify(F).primary)]++;
    auto res = gerechte::brute_force_realize(F, budget);
    if (res.status != BruteForceResult::Status::Found) all_realized = false;
    return true;
  });
  std::ostringstream counts;
  bool first = true;
  for (const auto& [name, count] : class_counts) {
    if (!first) counts << ',';
    first = false;
    counts << name << '=' << count;
  }
  std::cout << "n\tframeworks\trealized\tclass_counts\n";
  std::cout << n << '\t' << frameworks << '\t' << (all_realized ? "yes" : "no") << '\t'
            << counts.str() << "\n";
  std::cerr << "all realizable: " << (all_realized ? "yes" : "no") << "\n";
  return all_realized ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gerechte designs with rectangular regions"};
  app.require_subcommand(1);

  std::string input, output, framework_path, square_path, method = "auto";
  std::string gen_class;
  std::uint64_t seed = 0, budget_nodes = 10'000'000;
  int k = 1, gen_s = 0, gen_t = 0, gen_n = 0, census_n = 0;

  auto* realize = app.add_subcommand("realize", "realize a framework");
  realize->add_option("--input", input, "framework file")->required();
  realize->add_option("--method", method,
                      "auto|uniform|divides|mixed|columns|tree|brute");
  realize->add_option("--output", output, "output file (default stdout)");
  realize->add_option("--seed", seed, "random seed (unused by realization)");
  realize->add_option("--budget", budget_nodes, "brute-force node budget");

  auto* verify = app.add_subcommand("verify", "verify a square against a framework");
  verify->add_option("--framework", framework_path, "framework file")->required();
  verify->add_option("--square", square_path, "latin square file")->required();

  auto* classify = app.add_subcommand("classify", "print the framework's class labels");
  classify->add_option("--input", input, "framework file")->required();

  auto* reduce = app.add_subcommand("reduce", "write the reduced framework F/k");
  reduce->add_option("--input", input, "framework file")->required();
  reduce->add_option("--k", k, "amalgamation factor")->required();
  reduce->add_option("--output", output, "output file (default stdout)");

  auto* generate = app.add_subcommand("generate", "generate a seeded framework");
  generate->add_option("--class", gen_class, "uniform|mixed|columns|tree")->required();
  generate->add_option("--s", gen_s, "region height (uniform/mixed)");
  generate->add_option("--t", gen_t, "region width (uniform/mixed)");
  generate->add_option("--n", gen_n, "order (columns/tree)");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--output", output, "output file (default stdout)");

  auto* census = app.add_subcommand("census", "enumerate and realize all order-n "
                                              "rectangular frameworks");
  census->add_option("--n", census_n, "order (at most 6)")->required();
  census->add_option("--budget", budget_nodes, "brute-force node budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (realize->parsed()) return cmd_realize(input, method, output, budget_nodes);
    if (verify->parsed()) return cmd_verify(framework_path, square_path);
    if (classify->parsed()) {
      auto F = gerechte::RegionPartition::parse(read_file(input));
      std::cout << label_tokens(gerechte::classify(F)) << "\n";
      return kExitOk;
    }
    if (reduce->parsed()) {
      auto F = gerechte::RegionPartition::parse(read_file(input));
      write_output(output, gerechte::reduce(F, k).serialize());
      return kExitOk;
    }
    if (generate->parsed()) {
      static const std::map<std::string, gerechte::GenClass> classes{
          {"uniform", gerechte::GenClass::Uniform},
          {"mixed", gerechte::GenClass::Mixed},
          {"columns", gerechte::GenClass::Columns},
          {"tree", gerechte::GenClass::Tree}};
      auto it = classes.find(gen_class);
      if (it == classes.end()) throw gerechte::Error("unknown class: " + gen_class);
      gerechte::GenParams params{gen_s, gen_t, gen_n};
      write_output(output, gerechte::generate(it->second, params, seed).serialize());
      return kExitOk;
    }
    if (census->parsed()) return cmd_census(census_n, budget_nodes);
  } catch (const gerechte::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const gerechte::UnsupportedError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const gerechte::BudgetError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const gerechte::Error& e) {
    std::string msg = e.what();
    std::cerr << msg << "\n";
    if (msg.find("cannot open") != std::string::npos) return kExitInput;
    return kExitFailure;
  }
  return kExitInput;
}
