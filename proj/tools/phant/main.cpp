// Command-line driver: reads a manifest, runs one construction or check, and
// writes the produced objects plus a [result] section as a manifest.
//
// Exit codes: 0 ok, 1 property failure, 2 input error, 3 consistency violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "phant/approx.hpp"
#include "phant/manifest.hpp"
#include "phant/verify/random.hpp"
#include "phant/verify/suite.hpp"

namespace {

using namespace phant;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kConsistencyViolation = 3;

struct Options {
  std::optional<std::int64_t> ring;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  std::optional<std::uint64_t> kappa;
  std::uint64_t size_bound = 256;
  std::string input;
  std::string output;
  std::string ideal = "phantom";
  std::string module_name, morphism_name, rep_name, v_name, filtration_name, diagram_name;
  std::string filter;
  std::vector<std::int64_t> moduli;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

Manifest load(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw InputError("cannot read " + o.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto m = Manifest::parse(text);
  const auto ring = m.require_ring();
  if (o.ring && *o.ring != ring.modulus())
    throw InputError("--ring " + std::to_string(*o.ring) + " disagrees with the manifest ring " +
                     std::to_string(ring.modulus()));
  return m;
}

void emit(const Options& o, const Manifest& m) {
  const auto text = m.serialize();
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

// The named section, or the only section of that type when no name is given.
std::string pick(const Manifest& m, const std::string& type, const std::string& requested, const char* flag) {
  if (!requested.empty()) return requested;
  const auto names = m.names(type);
  if (names.size() == 1) return names.front();
  throw InputError(std::string("manifest has ") + std::to_string(names.size()) + " " + type + " sections; choose one with " +
                   flag);
}

MorphismIdeal ideal_of(const std::string& name, const Ring& ring) {
  if (name == "phantom") return MorphismIdeal::phantom(ring);
  if (name == "zero") return MorphismIdeal::zero(ring);
  if (name == "hom") return MorphismIdeal::hom(ring);
  throw InputError("unknown ideal '" + name + "' (expected phantom, zero or hom)");
}

// Every map of the ideal into m from sources of size <= bound, up to generating sets.
std::vector<ModuleMorphism> probes_for(const MorphismIdeal& ideal, const FiniteModule& m, std::uint64_t bound) {
  switch (ideal.kind()) {
    case MorphismIdeal::Kind::Phantom: return phantom_probes(m, bound);
    case MorphismIdeal::Kind::Zero: return {};
    case MorphismIdeal::Kind::Hom: {
      std::vector<ModuleMorphism> out;
      for (const auto& l : enumerate_modules(m.ring(), bound))
        for (auto& g : hom_group(l, m)) out.push_back(std::move(g));
      return out;
    }
    case MorphismIdeal::Kind::Generated: break;
  }
  throw InputError("generated ideals are not supported on the command line");
}

const char* verdict_text(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::Cover: return "cover";
    case CoverVerdict::NotCover: return "not-cover";
    case CoverVerdict::NotPrecover: return "not-precover";
    case CoverVerdict::Indeterminate: return "indeterminate";
  }
  return "";
}

const char* route_text(CoverRoute r) {
  switch (r) {
    case CoverRoute::Enumeration: return "enumeration";
    case CoverRoute::Radical: return "radical";
    case CoverRoute::SplitOff: return "split-off";
    case CoverRoute::Undecided: return "undecided";
  }
  return "";
}

int check_phantom(const Options& o) {
  const auto in = load(o);
  const auto name = pick(in, "morphism", o.morphism_name, "--morphism");
  const auto f = in.morphism(name);
  Manifest out(f.source().ring().modulus());
  out.put_morphism(name, f);
  const auto obstruction = phantom_obstruction(f);
  const auto factorization = factors_through_projective(f);
  std::vector<Manifest::Entry> entries{{"morphism", name},
                                       {"phantom", bool_text(!obstruction)},
                                       {"factors_through_projective", bool_text(factorization.has_value())}};
  if (obstruction) {
    entries.push_back({"probe", out.put_morphism("probe", obstruction->probe)});
    entries.push_back({"failing_generator", std::to_string(obstruction->failing_generator)});
  }
  if (factorization) {
    entries.push_back({"into", out.put_morphism("into", factorization->into)});
    entries.push_back({"through", out.put_morphism("through", factorization->through)});
  }
  out.add_result("check-phantom", std::move(entries));
  emit(o, out);
  return kOk;
}

int precover(const Options& o, bool cover) {
  const auto in = load(o);
  const auto name = pick(in, "morphism", o.morphism_name, "--morphism");
  const auto phi = in.morphism(name);
  const auto ideal = ideal_of(o.ideal, phi.source().ring());
  const auto probes = probes_for(ideal, phi.target(), o.size_bound);
  Manifest out(phi.source().ring().modulus());
  out.put_morphism(name, phi);
  std::vector<Manifest::Entry> entries{{"morphism", name},
                                       {"ideal", o.ideal},
                                       {"probe_source_bound", std::to_string(o.size_bound)},
                                       {"probes", std::to_string(probes.size())}};
  std::optional<std::size_t> failing;
  if (cover) {
    const auto report = is_cover(ideal, phi, probes);
    entries.push_back({"verdict", verdict_text(report.verdict)});
    entries.push_back({"route", route_text(report.route)});
    failing = report.failing_probe;
    if (report.witness) entries.push_back({"non_automorphism", out.put_morphism("witness", *report.witness)});
  } else {
    const auto report = is_precover(ideal, phi, probes);
    entries.push_back({"precover", bool_text(report.precover)});
    failing = report.failing_probe;
  }
  if (failing) entries.push_back({"failing_probe", out.put_morphism("failing_probe", probes[*failing])});
  out.add_result(cover ? "cover" : "precover", std::move(entries));
  emit(o, out);
  return kOk;
}

int phantom_cover_cmd(const Options& o) {
  const auto in = load(o);
  const auto name = pick(in, "module", o.module_name, "--module");
  const auto m = in.module(name);
  Manifest out(m.ring().modulus());
  out.add_module(name, m);
  const auto cover = phantom_cover(m);
  out.add_result("phantom-cover", {{"module", name}, {"cover", out.put_morphism("cover", cover)}});
  emit(o, out);
  return kOk;
}

int pushout_transport_cmd(const Options& o) {
  const auto in = load(o);
  const auto phi_name = pick(in, "morphism", o.morphism_name, "--morphism");
  if (o.v_name.empty()) throw InputError("--v is required");
  const auto phi = in.morphism(phi_name);
  const auto v = in.morphism(o.v_name);
  const auto t = pushout_transport(phi, v);
  Manifest out(phi.source().ring().modulus());
  out.put_morphism(phi_name, phi);
  out.put_morphism(o.v_name, v);
  out.add_result("pushout-transport",
                 {{"kernel", out.put_morphism("kernel", t.kernel.embedding)},
                  {"from_v_target", out.put_morphism("from_v_target", t.pushout.from_v_target)},
                  {"from_u_target", out.put_morphism("from_u_target", t.pushout.from_u_target)},
                  {"transported", out.put_morphism("transported", t.transported)},
                  {"transported_phantom", bool_text(is_phantom(t.transported))}});
  emit(o, out);
  return kOk;
}

int retract_cmd(const Options& o) {
  const auto in = load(o);
  const auto phi_name = pick(in, "morphism", o.morphism_name, "--morphism");
  if (o.v_name.empty()) throw InputError("--v is required");
  const auto phi = in.morphism(phi_name);
  const auto v = in.morphism(o.v_name);
  const auto r = extract_retract(phi, v);
  const bool splits = compose(r.retraction, v) == ModuleMorphism::identity(v.source());
  if (!splits) throw ConsistencyError("extracted retraction does not split v");
  Manifest out(phi.source().ring().modulus());
  out.put_morphism(phi_name, phi);
  out.put_morphism(o.v_name, v);
  out.add_result("retract", {{"retraction", out.put_morphism("retraction", r.retraction)},
                             {"factor", out.put_morphism("factor", r.factor)},
                             {"restricted", out.put_morphism("restricted", r.restricted)},
                             {"splits", bool_text(splits)}});
  emit(o, out);
  return kOk;
}

std::uint64_t kappa_for(const Options& o, const Ring& ring) {
  return o.kappa.value_or(static_cast<std::uint64_t>(ring.modulus()));
}

int sample_rep(const Options& o) {
  if (!o.ring) throw InputError("--ring is required");
  const Ring ring(*o.ring);
  Manifest out(ring.modulus());
  const auto rep = rnd::phantom_rep(o.seed, ring, o.size_bound);
  out.put_rep("F", rep);
  out.add_result("sample-rep", {{"rep", "F"},
                                {"seed", std::to_string(o.seed)},
                                {"size_bound", std::to_string(o.size_bound)},
                                {"phantom", bool_text(is_phantom(rep.map()))}});
  emit(o, out);
  return kOk;
}

int filtrate(const Options& o) {
  std::optional<RepA2> rep;
  std::string name = "F";
  if (o.input.empty()) {
    if (!o.ring) throw InputError("either --input or --ring (with --seed and --size-bound) is required");
    rep = rnd::phantom_rep(o.seed, Ring(*o.ring), o.size_bound);
  } else {
    const auto in = load(o);
    name = pick(in, "rep", o.rep_name, "--rep");
    rep = in.rep(name);
  }
  const auto& ring = rep->ring();
  const auto f = build_filtration(*rep, FiltrationConfig{kappa_for(o, ring)});
  Manifest out(ring.modulus());
  out.put_filtration("Phi", f);
  out.add_result("filtrate", {{"filtration", "Phi"},
                              {"kappa", std::to_string(f.kappa)},
                              {"steps", std::to_string(f.steps.size())}});
  emit(o, out);
  return kOk;
}

int verify_filtration_cmd(const Options& o) {
  const auto in = load(o);
  const auto name = pick(in, "filtration", o.filtration_name, "--filtration");
  const auto f = in.filtration(name);
  const auto report = verify_filtration(f);
  std::vector<Manifest::Entry> entries{{"filtration", name}, {"passed", bool_text(report.passed())}};
  for (const auto& [key, v] : {std::pair{"zero_base", &report.zero_base}, {"chain", &report.chain},
                               {"pure", &report.pure}, {"quotient_phantom", &report.quotient_phantom},
                               {"size_bound", &report.size_bound}, {"strict_growth", &report.strict_growth}}) {
    std::string value = bool_text(v->passed);
    if (v->failing_index) value += " step=" + std::to_string(*v->failing_index);
    if (!v->detail.empty()) value += " " + v->detail;
    entries.push_back({key, value});
  }
  std::string sizes;
  for (const auto& s : report.sizes)
    sizes += (sizes.empty() ? "" : ";") + std::to_string(s.first) + "," + std::to_string(s.second) + "," +
             std::to_string(s.bound);
  entries.push_back({"step_sizes", sizes});
  Manifest out(f.target.ring().modulus());
  out.add_result("verify-filtration", std::move(entries));
  emit(o, out);
  return report.passed() ? kOk : kPropertyFailure;
}

int counterexample_ext(const Options& o) {
  const auto in = load(o);
  const auto name = pick(in, "morphism", o.morphism_name, "--morphism");
  const auto f = in.morphism(name);
  const auto ex = extension_counterexample(ideal_of(o.ideal, f.source().ring()), f);
  Manifest out(f.source().ring().modulus());
  out.put_morphism(name, f);
  out.put_rep("middle", ex.middle);
  out.put_subrep("sub", "middle", ex.sub);
  out.put_rep("quotient", ex.quotient.rep);
  out.add_result("counterexample-ext", {{"ideal", o.ideal},
                                        {"middle_in_ideal", bool_text(ex.middle_in_ideal)},
                                        {"sub_in_ideal", bool_text(ex.sub_in_ideal)},
                                        {"quotient_in_ideal", bool_text(ex.quotient_in_ideal)}});
  emit(o, out);
  return kOk;
}

int colimit_cmd(const Options& o) {
  const auto in = load(o);
  const auto name = pick(in, "diagram", o.diagram_name, "--diagram");
  const auto* section = in.find("diagram", name);
  Manifest out(in.require_ring().modulus());
  std::vector<Manifest::Entry> entries{{"diagram", name}};
  std::string structural;
  if (*section->find("kind") == "module") {
    const auto c = directed_colimit(in.module_diagram(name));
    entries.push_back({"colimit", out.put_module("colimit", c.module)});
    for (std::size_t i = 0; i < c.structural.size(); ++i)
      structural += (i ? "," : "") + out.put_morphism("to_colimit" + std::to_string(i), c.structural[i]);
  } else {
    const auto [objects, arrows] = in.rep_diagram(name);
    const auto c = rep_colimit(objects, arrows);
    entries.push_back({"colimit", out.put_rep("colimit", c.rep)});
    for (std::size_t i = 0; i < c.structural.size(); ++i) {
      const auto stem = "to_colimit" + std::to_string(i);
      structural += (i ? "," : "") + out.put_morphism(stem + ".first", c.structural[i].first()) + "/" +
                    out.put_morphism(stem + ".second", c.structural[i].second());
    }
  }
  entries.push_back({"structural", structural});
  out.add_result("colimit", std::move(entries));
  emit(o, out);
  return kOk;
}

int verify_suite(const Options& o) {
  suite::Config config;
  config.seed = o.seed;
  config.samples = o.samples;
  config.filter = o.filter;
  if (!o.moduli.empty()) config.moduli = o.moduli;
  bool ok = true;
  bool consistency = false;
  config.on_result = [&](const suite::PropertyResult& r) {
    std::cout << suite::format(r, o.seed) << std::flush;
    ok = ok && r.ok();
    for (const auto& f : r.failures) consistency = consistency || f.consistency_violation;
  };
  const auto results = suite::run(config);
  if (results.empty()) throw InputError("no property matches --filter '" + o.filter + "'");
  std::cout << (ok ? "verify-suite PASS" : "verify-suite FAIL") << "\n";
  if (consistency) return kConsistencyViolation;
  return ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phantom morphisms, covers and filtrations over Z/n"};
  app.require_subcommand(1);
  Options o;

  const auto input = [&](CLI::App* c) { c->add_option("--input", o.input, "Manifest file, '-' for stdin"); };
  const auto output = [&](CLI::App* c) { c->add_option("--output", o.output, "Output file (default stdout)"); };
  const auto ring = [&](CLI::App* c) {
    c->add_option("--ring", o.ring, "Modulus n; must match the manifest when both are given")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{2147483647}));
  };
  const auto morphism = [&](CLI::App* c) { c->add_option("--morphism", o.morphism_name, "Morphism section name"); };
  const auto ideal = [&](CLI::App* c) {
    c->add_option("--ideal", o.ideal, "phantom (default), zero or hom")
        ->check(CLI::IsMember({"phantom", "zero", "hom"}));
  };
  const auto size_bound = [&](CLI::App* c, const char* what) { c->add_option("--size-bound", o.size_bound, what); };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  const auto add = [&](const char* name, const char* help, std::function<int()> run) {
    auto* c = app.add_subcommand(name, help);
    commands.emplace_back(c, std::move(run));
    input(c);
    output(c);
    ring(c);
    return c;
  };

  morphism(add("check-phantom", "Decide whether a morphism is phantom, with a certificate",
               [&] { return check_phantom(o); }));
  {
    auto* c = add("precover", "Check the precover property against all probes from small sources",
                  [&] { return precover(o, false); });
    morphism(c);
    ideal(c);
    size_bound(c, "Largest probe source cardinality (default 256)");
  }
  {
    auto* c = add("cover", "Check the cover property", [&] { return precover(o, true); });
    morphism(c);
    ideal(c);
    size_bound(c, "Largest probe source cardinality (default 256)");
  }
  add("phantom-cover", "Construct the phantom cover of a module", [&] { return phantom_cover_cmd(o); })
      ->add_option("--module", o.module_name, "Module section name");
  {
    auto* c = add("pushout-transport", "Transport a phantom epimorphism along a pure mono out of its kernel",
                  [&] { return pushout_transport_cmd(o); });
    morphism(c);
    c->add_option("--v", o.v_name, "Pure mono out of the kernel")->required();
  }
  {
    auto* c = add("retract", "Split a pure mono out of the kernel of a phantom cover", [&] { return retract_cmd(o); });
    morphism(c);
    c->add_option("--v", o.v_name, "Pure mono out of the kernel")->required();
  }
  {
    auto* c = add("filtrate", "Build a filtration by pure subrepresentations", [&] { return filtrate(o); });
    c->add_option("--rep", o.rep_name, "Representation section name");
    c->add_option("--kappa", o.kappa, "Step size parameter (default n)");
    c->add_option("--seed", o.seed, "Seed for a sampled representation when no input is given");
    size_bound(c, "Size bound for a sampled representation (default 256)");
  }
  add("verify-filtration", "Re-check every condition of a filtration", [&] { return verify_filtration_cmd(o); })
      ->add_option("--filtration", o.filtration_name, "Filtration section name");
  {
    auto* c = add("counterexample-ext", "Extension of ideal-class representations that leaves the class",
                  [&] { return counterexample_ext(o); });
    morphism(c);
    ideal(c);
  }
  add("colimit", "Directed colimit of a module or representation diagram", [&] { return colimit_cmd(o); })
      ->add_option("--diagram", o.diagram_name, "Diagram section name");
  {
    auto* c = add("sample-rep", "Sample a random phantom representation", [&] { return sample_rep(o); });
    c->add_option("--seed", o.seed, "Seed");
    size_bound(c, "Bound on |M1| + |M2| (default 256)");
  }
  {
    auto* c = app.add_subcommand("verify-suite", "Run every seeded property");
    commands.emplace_back(c, [&] { return verify_suite(o); });
    c->add_option("--seed", o.seed, "Base seed (default 1)");
    c->add_option("--samples", o.samples, "Samples per property and modulus (default 50)");
    c->add_option("--moduli", o.moduli, "Moduli to sample (default 2 3 4 6 8 9 12)")->delimiter(',');
    c->add_option("--filter", o.filter, "Only properties whose module/name contains this text");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (const auto& [c, run] : commands)
      if (c->parsed()) return run();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kConsistencyViolation;
  }
  return kOk;
}
