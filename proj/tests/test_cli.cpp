#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "phant/approx.hpp"
#include "phant/manifest.hpp"
#include "phant/verify/random.hpp"
#include "phant/verify/suite.hpp"
#include "test_support.hpp"

using namespace phant;
using phant::testing::mod;
using phant::testing::morph;

namespace {

std::string error_of(const std::string& text) {
  try {
    (void)Manifest::parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(PHANT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const auto got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sample(const char* file) { return std::string(PHANT_MANIFESTS) + "/" + file; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::string(PHANT_TEMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("manifest round trip keeps text and objects") {
  Manifest m(4);
  const auto a = mod(4, {2, 4});
  m.add_module("A", a);
  const auto f = morph(a, a, {{1, 0}, {0, 3}});
  m.add_morphism("f", "A", "A", f);
  m.add_rep("R", "f");
  m.add_result("note", {{"empty", ""}, {"x", "1"}});
  const auto text = m.serialize();
  CHECK(text.rfind("format_version=1\n\n[ring]\nn=4\n", 0) == 0);
  const auto back = Manifest::parse(text);
  CHECK(back == m);
  CHECK(back.serialize() == text);
  CHECK(back.morphism("f") == f);
  CHECK(back.rep("R").map() == f);
}

TEST_CASE("manifest with no objects is valid") {
  const auto m = Manifest::parse("format_version=1\n\n[ring]\nn=6\n");
  CHECK(m.require_ring().modulus() == 6);
  CHECK(m.names("module").empty());
  CHECK(Manifest::parse(m.serialize()) == m);
}

TEST_CASE("ill-defined morphism names the entry") {
  const auto err = error_of("[ring]\nn=4\n[module A]\nfactors=2\n[module B]\nfactors=4\n"
                            "[morphism f]\nfrom=A\nto=B\nrows=1\n");
  CHECK(err.find("line 7") != std::string::npos);
  CHECK(err.find("(0,0)") != std::string::npos);
  CHECK(err.find("d_j=2") != std::string::npos);
  CHECK(err.find("d_i=4") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of("[ring]\nn=4\n[module A]\nfactors=3\n").find("line 3") != std::string::npos);
  CHECK(error_of("[ring]\nn=4\nnonsense\n").find("line 3") != std::string::npos);
  CHECK(error_of("[ring]\nn=4\n[widget w]\n").find("line 3") != std::string::npos);
  CHECK(error_of("[ring]\nn=4\n[module A]\nfactors=2\n[module A]\nfactors=2\n").find("line 5") !=
        std::string::npos);
  CHECK(error_of("[ring]\nn=4\n[rep R]\nf=missing\n").find("missing") != std::string::npos);
  CHECK_FALSE(error_of("format_version=2\n[ring]\nn=4\n").empty());
}

TEST_CASE("zero-width matrices serialize as empty rows") {
  Manifest m(4);
  const auto f = ModuleMorphism::zero(FiniteModule::zero(Ring(4)), mod(4, {2, 4}));
  m.put_morphism("f", f);
  m.put_morphism("g", ModuleMorphism::zero(mod(4, {2, 4}), FiniteModule::zero(Ring(4))));
  const auto back = Manifest::parse(m.serialize());
  CHECK(back.morphism("f") == f);
}

TEST_CASE("random_phantom_rep examples") {
  const Ring z4(4);
  const auto f = rnd::phantom_rep(42, z4, 64);
  CHECK(is_phantom(f.map()));
  CHECK(f.cardinality() <= 64);
  CHECK(f == rnd::phantom_rep(42, z4, 64));
  CHECK(rnd::phantom_rep(7, z4, 1).is_zero());
  for (const std::int64_t n : {2, 3, 4, 6, 8, 9, 12})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = rnd::phantom_rep(seed, Ring(n), 512);
      CHECK(r.cardinality() <= 512);
      CHECK(is_phantom(r.map()));
    }
}

TEST_CASE("suite seeds are stable and distinct") {
  const auto& props = suite::properties();
  REQUIRE(props.size() > 1);
  CHECK(suite::sample_seed(1, props[0], 4, 0) == suite::sample_seed(1, props[0], 4, 0));
  CHECK(suite::sample_seed(1, props[0], 4, 0) != suite::sample_seed(1, props[0], 4, 1));
  CHECK(suite::sample_seed(1, props[0], 4, 0) != suite::sample_seed(1, props[1], 4, 0));
  CHECK(suite::sample_seed(1, props[0], 4, 0) != suite::sample_seed(2, props[0], 4, 0));
}

TEST_CASE("suite failures carry a counterexample") {
  const suite::Property broken{"demo", "always_fails", 0, [](const Ring& ring, std::uint64_t) {
                                 Manifest m(ring.modulus());
                                 m.add_module("A", FiniteModule::free(ring, 1));
                                 return suite::Verdict::fail("deliberate", m);
                               }};
  const auto v = suite::run_sample(broken, Ring(4), 9, nullptr);
  CHECK(v.kind == suite::Verdict::Kind::Fail);
  CHECK(v.counterexample.find("module", "A") != nullptr);
  suite::PropertyResult r{&broken, 0, 0, 1, {{4, 0, 9, "deliberate", false, v.counterexample}}, 0.0};
  const auto text = suite::format(r, 1);
  CHECK(text.find("FAIL demo/always_fails") != std::string::npos);
  CHECK(text.find("module=demo property=always_fails") != std::string::npos);
  CHECK(text.find("seed=9") != std::string::npos);
  CHECK(text.find("[module A]") != std::string::npos);

  bool consistency = false;
  const suite::Property throws{"demo", "throws", 0, [](const Ring&, std::uint64_t) -> suite::Verdict {
                                 throw ConsistencyError("contradiction");
                               }};
  CHECK(suite::run_sample(throws, Ring(4), 1, &consistency).kind == suite::Verdict::Kind::Fail);
  CHECK(consistency);
}

TEST_CASE("cli: check-phantom on the identity of Z/2 over Z/4") {
  const auto r = run_cli("check-phantom --input " + sample("id_z2_over_z4.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.find("phantom=false") != std::string::npos);
  CHECK(r.out.find("factors_through_projective=false") != std::string::npos);
  CHECK(r.out.find("probe=") != std::string::npos);
  CHECK_NOTHROW((void)Manifest::parse(r.out));
}

TEST_CASE("cli: phantom-cover of the zero module is its identity") {
  const auto r = run_cli("phantom-cover --input " + sample("zero_module.txt"));
  REQUIRE(r.status == 0);
  const auto m = Manifest::parse(r.out);
  const auto cover = m.morphism("cover");
  CHECK(cover.source().is_zero());
  CHECK(cover == ModuleMorphism::identity(cover.source()));
}

TEST_CASE("cli: constructions produce verifiable output") {
  auto r = run_cli("cover --input " + sample("surjection_z4_z2.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict=cover") != std::string::npos);

  r = run_cli("retract --input " + sample("retract_z4.txt") + " --morphism phi --v v");
  CHECK(r.status == 0);
  CHECK(r.out.find("splits=true") != std::string::npos);

  r = run_cli("pushout-transport --input " + sample("retract_z4.txt") + " --morphism phi --v v");
  CHECK(r.status == 0);
  CHECK(r.out.find("transported_phantom=true") != std::string::npos);

  r = run_cli("colimit --input " + sample("chain_colimit.txt"));
  CHECK(r.status == 0);
  CHECK(Manifest::parse(r.out).module("colimit") == mod(4, {4}));

  r = run_cli("counterexample-ext --input " + sample("id_z2_over_z4.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.find("middle_in_ideal=false") != std::string::npos);
}

TEST_CASE("cli: filtrate then verify-filtration, deterministically") {
  const auto rep = run_cli("sample-rep --ring 4 --seed 42 --size-bound 64");
  REQUIRE(rep.status == 0);
  const auto rep_path = write_temp("cli_rep.txt", rep.out);
  const auto first = run_cli("filtrate --input " + rep_path + " --kappa 4");
  REQUIRE(first.status == 0);
  CHECK(first.out == run_cli("filtrate --input " + rep_path + " --kappa 4").out);
  const auto verified = run_cli("verify-filtration --input " + write_temp("cli_filtration.txt", first.out));
  CHECK(verified.status == 0);
  CHECK(verified.out.find("passed=true") != std::string::npos);

  // dropping a step's worth of structure makes verification fail with status 1
  auto m = Manifest::parse(first.out);
  auto f = m.filtration("Phi");
  REQUIRE(f.steps.size() >= 3);
  f.steps.erase(f.steps.begin() + 1);
  f.adjoined.erase(f.adjoined.begin() + 1);
  Manifest broken(4);
  broken.put_filtration("Phi", f);
  const auto bad = run_cli("verify-filtration --input " + write_temp("cli_broken.txt", broken.serialize()));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("passed=false") != std::string::npos);
}

TEST_CASE("cli: input errors exit with status 2") {
  CHECK(run_cli("check-phantom --input " + sample("id_z2_over_z4.txt") + " --ring 6").status == 2);
  CHECK(run_cli("check-phantom --input /nonexistent/manifest.txt").status == 2);
  CHECK(run_cli("check-phantom --input " + write_temp("cli_bad.txt", "[ring]\nn=4\n[module A]\nfactors=5\n")).status ==
        2);
  CHECK(run_cli("no-such-command").status == 2);
  // v is not surjective, so it cannot serve as the phantom epimorphism
  CHECK(run_cli("pushout-transport --input " + sample("retract_z4.txt") + " --morphism v --v v").status == 2);
}

TEST_CASE("cli: verify-suite reports per property") {
  const auto r = run_cli("verify-suite --seed 3 --samples 2 --moduli 4,6 --filter exact_linalg");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS exact_linalg/smith_matches_minor_gcd") != std::string::npos);
  CHECK(r.out.find("verify-suite PASS") != std::string::npos);
  CHECK(run_cli("verify-suite --filter no_such_property").status == 2);
}
