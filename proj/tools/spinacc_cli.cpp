#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinacc/corpus_checks.hpp"
#include "spinacc/gspin.hpp"
#include "spinacc/io.hpp"

namespace {

using namespace spinacc;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;
constexpr int kUnacceptable = 10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Decomposition shapes must agree at every extra working prime.
void extra_prime_checks(const ClosedGroup& G, const Acceptability& acc, long prime_count,
                        std::uint64_t seed) {
  std::uint64_t m = static_cast<std::uint64_t>(std::lcm(G.M(), G.exponent()));
  std::uint64_t prev = acc.report().p2;
  auto want = acc.modrep().shape();
  for (long k = 2; k < prime_count; ++k) {
    std::uint64_t p = next_prime_1_mod(m, prev);
    ModRep extra(G, p, seed + static_cast<std::uint64_t>(k));
    if (extra.shape() != want)
      throw bad_prime("decomposition shape at prime " + std::to_string(p) +
                      " disagrees with the working pair");
    prev = p;
  }
}

struct ClassifyArgs {
  std::string file;
  std::string construct;
  bool json = false;
  bool verify = false;
  bool have_seed = false;
  std::uint64_t seed = 1;
  long max_order = 0;
  long primes = 0;
};

int cmd_classify(const ClassifyArgs& args) {
  InstanceFile inst;
  if (!args.construct.empty()) {
    inst.name = args.construct;
    inst.instance = parse_instance(args.construct);
    inst.zeta_pow.assign(inst.instance.gens.size(), 0);
  } else {
    inst = load_instance_file(read_file(args.file));
  }
  if (args.have_seed) inst.options.seed = args.seed;
  if (args.max_order > 0) inst.options.max_order = args.max_order;
  if (args.primes > 0) {
    if (args.primes < 2) throw input_error("--primes needs at least two primes");
    inst.options.prime_count = args.primes;
  }
  std::uint64_t seed = inst.options.seed;

  ClosedGroup G(inst.instance, inst.options.max_order);
  Acceptability acc(G, seed);
  if (inst.options.prime_count > 2) extra_prime_checks(G, acc, inst.options.prime_count, seed);
  Classifier cls(acc, seed);
  ClassificationReport crep = cls.report();
  ParsedReport report = make_report(inst.name, G, acc, &crep, seed);

  bool verdict_acceptable = report.acceptable;
  Json out = report_to_json(report);
  std::string extension_text;
  if (inst.has_scalar_tags()) {
    GSpinEngine eng(G, seed);
    GSpinVerdict v = eng.run(inst.zeta_pow);
    if (v.gspin_acceptable != v.spin_acceptable)
      throw std::logic_error("scalar extension verdict differs from its spin part");
    verdict_acceptable = v.gspin_acceptable;
    Json tags = Json::array();
    for (long k : inst.zeta_pow) tags.push_back(k);
    out["scalar_extension"] = Json{{"zeta_pow", std::move(tags)},
                                   {"image_order", v.cover.image_order},
                                   {"cover_order", v.cover.cover_order},
                                   {"two_to_one", v.cover.two_to_one},
                                   {"scalar_image_order", v.cover.scalar_image_order},
                                   {"verdict", v.gspin_acceptable ? "acceptable" : "unacceptable"}};
    std::ostringstream os;
    os << "scalar extension: " << (v.gspin_acceptable ? "acceptable" : "unacceptable") << ", image order "
       << v.cover.image_order << ", cover order " << v.cover.cover_order << ", scalar image order "
       << v.cover.scalar_image_order << "\n";
    extension_text = os.str();
  }

  if (args.verify) {
    verify_acceptability(G, acc.report(), seed);
    ParsedReport echo = report_from_json(report_to_json(report));
    if (!(echo == report)) throw certificate_error("report does not survive serialization");
  }

  if (args.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_report_text(report) << extension_text;
    if (args.verify) std::cout << "certificates re-verified at a fresh prime\n";
  }
  return verdict_acceptable ? kOk : kUnacceptable;
}

int cmd_construct(const std::string& spec) {
  InstanceFile file;
  file.name = spec;
  file.instance = parse_instance(spec);
  file.zeta_pow.assign(file.instance.gens.size(), 0);
  std::cout << instance_to_json(file).dump(2) << "\n";
  return kOk;
}

int cmd_verify_paper(const std::string& only, bool json, std::uint64_t seed) {
  CorpusChecks checks(seed);
  std::vector<CheckResult> results = checks.run(only);
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"millis", r.millis}, {"detail", r.detail}});
    std::cout << Json{{"checks", std::move(arr)}, {"failures", failures}}.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::printf("%s  %-22s %7.0fms  %s\n", r.pass ? "pass" : "FAIL", r.id.c_str(), r.millis,
                  r.detail.c_str());
    std::printf("%zu check(s), %d failure(s)\n", results.size(), failures);
  }
  return failures == 0 ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact acceptability engine for closed subgroups of odd rotation groups"};
  app.require_subcommand(1);

  ClassifyArgs cargs;
  CLI::App* classify = app.add_subcommand("classify", "Decide acceptability of one instance");
  classify->add_option("file", cargs.file, "Instance file (JSON)");
  classify->add_option("--construct", cargs.construct, "Built-in instance spec, e.g. hcal:3");
  classify->add_flag("--json", cargs.json, "Emit the report as JSON");
  classify->add_flag("--verify-certificates", cargs.verify, "Re-check every certificate independently");
  CLI::Option* seed_opt = classify->add_option("--seed", cargs.seed, "Engine seed");
  classify->add_option("--max-order", cargs.max_order, "Group closure budget");
  classify->add_option("--primes", cargs.primes, "Number of working primes (at least two)");

  std::string construct_spec;
  CLI::App* construct = app.add_subcommand("construct", "Emit a built-in instance as a JSON file");
  construct->add_option("spec", construct_spec, "Instance spec, e.g. gcal:3")->required();

  std::string only;
  bool vp_json = false;
  std::uint64_t vp_seed = 1;
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the full corpus verification sweep");
  verify->add_option("--only", only, "Run a single check by id");
  verify->add_flag("--json", vp_json, "Emit results as JSON");
  verify->add_option("--seed", vp_seed, "Engine seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      cargs.have_seed = seed_opt->count() > 0;
      if (cargs.file.empty() == cargs.construct.empty())
        throw input_error("classify needs exactly one of a file or --construct");
      return cmd_classify(cargs);
    }
    if (construct->parsed()) return cmd_construct(construct_spec);
    if (verify->parsed()) return cmd_verify_paper(only, vp_json, vp_seed);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const closure_exceeded& e) {
    std::cerr << "group too large: " << e.what() << "\n";
    return kInput;
  } catch (const lift_mismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const certificate_error& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
