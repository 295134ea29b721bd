#include "phant/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace phant {

namespace {

constexpr std::string_view kTypes[] = {"ring", "module", "morphism", "rep", "submodule",
                                       "subrep", "filtration", "diagram", "result"};

bool known_type(std::string_view t) { return std::find(std::begin(kTypes), std::end(kTypes), t) != std::end(kTypes); }

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("expected an integer, got '" + std::string(text) + "'");
  return value;
}

std::string format_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::string out;
  if (rows.empty() || rows.front().empty()) return out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ';';
    out += format_int_list(rows[i]);
  }
  return out;
}

// Rows of a fixed shape; an empty string stands for any shape with no entries.
std::vector<std::vector<std::int64_t>> parse_rows(std::string_view text, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    if (!trim(text).empty()) throw InputError("expected no entries for a " + std::to_string(rows) + "x" +
                                              std::to_string(cols) + " matrix");
    return std::vector<std::vector<std::int64_t>>(rows);
  }
  const auto parts = split(text, ';');
  if (parts.size() != rows)
    throw InputError("expected " + std::to_string(rows) + " rows, got " + std::to_string(parts.size()));
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : parts) {
    auto row = parse_int_list(p);
    if (row.size() != cols)
      throw InputError("expected " + std::to_string(cols) + " entries per row, got " + std::to_string(row.size()));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (const auto& p : split(text, ',')) out.emplace_back(trim(p));
  return out;
}

std::string join(const std::vector<std::string>& names, char sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string describe(const Manifest::Section& s) {
  std::string out = s.line ? "line " + std::to_string(s.line) + ": " : "";
  return out + "[" + s.type + (s.name.empty() ? "" : " " + s.name) + "]: ";
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p));
  return out;
}

std::string format_int_list(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

const std::string* Manifest::Section::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e.value;
  return nullptr;
}

Manifest::Manifest(std::int64_t modulus) {
  (void)Ring(modulus);
  append("ring", "").entries.push_back({"n", std::to_string(modulus)});
}

Manifest Manifest::parse(std::string_view text) {
  Manifest m;
  bool seen_version = false;
  Section* current = nullptr;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError(where() + "unterminated section header");
      const auto inner = trim(line.substr(1, line.size() - 2));
      const auto space = inner.find(' ');
      const std::string type(inner.substr(0, space));
      const std::string name(space == std::string_view::npos ? "" : trim(inner.substr(space + 1)));
      if (!known_type(type)) throw InputError(where() + "unknown section type '" + type + "'");
      if (type == "ring" ? !name.empty() : !valid_name(name))
        throw InputError(where() + "bad section name '" + name + "'");
      if (m.find(type, name)) throw InputError(where() + "duplicate section [" + type + " " + name + "]");
      current = &m.append(type, name);
      current->line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InputError(where() + "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw InputError(where() + "empty key");
    if (!current) {
      if (key != "format_version" || seen_version) throw InputError(where() + "unexpected top-level key '" + key + "'");
      try {
        m.format_version_ = static_cast<int>(parse_int(value));
      } catch (const InputError& e) {
        throw InputError(where() + e.what());
      }
      if (m.format_version_ != kFormatVersion)
        throw InputError(where() + "unsupported format_version " + value);
      seen_version = true;
      continue;
    }
    if (current->find(key)) throw InputError(where() + "duplicate key '" + key + "'");
    current->entries.push_back({key, value});
  }
  m.validate();
  return m;
}

std::string Manifest::serialize() const {
  std::ostringstream out;
  out << "format_version=" << format_version_ << "\n";
  for (const auto& s : sections_) {
    out << "\n[" << s.type << (s.name.empty() ? "" : " " + s.name) << "]\n";
    for (const auto& e : s.entries) out << e.key << "=" << e.value << "\n";
  }
  return out.str();
}

std::optional<Ring> Manifest::ring() const {
  const auto* s = find("ring", "");
  if (!s) return std::nullopt;
  const auto* n = s->find("n");
  if (!n) throw InputError(describe(*s) + "missing key 'n'");
  try {
    return Ring(parse_int(*n));
  } catch (const InputError& e) {
    throw InputError(describe(*s) + e.what());
  }
}

Ring Manifest::require_ring() const {
  auto r = ring();
  if (!r) throw InputError("manifest has no [ring] section");
  return *r;
}

const Manifest::Section* Manifest::find(std::string_view type, std::string_view name) const {
  for (const auto& s : sections_)
    if (s.type == type && s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> Manifest::names(std::string_view type) const {
  std::vector<std::string> out;
  for (const auto& s : sections_)
    if (s.type == type) out.push_back(s.name);
  return out;
}

Manifest::Section& Manifest::append(std::string type, std::string name) {
  if (type != "ring" && !valid_name(name)) throw InputError("bad object name '" + name + "'");
  if (find(type, name)) throw InputError("duplicate section [" + type + " " + name + "]");
  sections_.push_back(Section{std::move(type), std::move(name), {}, 0});
  return sections_.back();
}

const Manifest::Section& Manifest::require(std::string_view type, std::string_view name) const {
  const auto* s = find(type, name);
  if (!s) throw InputError("unknown " + std::string(type) + " '" + std::string(name) + "'");
  return *s;
}

void Manifest::add_module(const std::string& name, const FiniteModule& m) {
  append("module", name).entries.push_back({"factors", format_int_list(m.factors())});
}

void Manifest::add_morphism(const std::string& name, const std::string& from, const std::string& to,
                            const ModuleMorphism& f) {
  if (!(module(from) == f.source()) || !(module(to) == f.target()))
    throw InputError("add_morphism: endpoints do not match '" + from + "' and '" + to + "'");
  std::vector<std::vector<std::int64_t>> rows(f.matrix().rows());
  for (std::size_t i = 0; i < f.matrix().rows(); ++i)
    for (std::size_t j = 0; j < f.matrix().cols(); ++j) rows[i].push_back(f.entry(i, j));
  auto& s = append("morphism", name);
  s.entries = {{"from", from}, {"to", to}, {"rows", format_rows(rows)}};
}

void Manifest::add_rep(const std::string& name, const std::string& morphism) {
  (void)require("morphism", morphism);
  append("rep", name).entries.push_back({"f", morphism});
}

void Manifest::add_submodule(const std::string& name, const std::string& module_name, const Submodule& s) {
  if (!(module(module_name) == s.ambient())) throw InputError("add_submodule: ambient does not match");
  std::vector<std::vector<std::int64_t>> gens(s.generators().begin(), s.generators().end());
  auto& sec = append("submodule", name);
  sec.entries = {{"in", module_name}, {"gens", format_rows(gens)}};
}

void Manifest::add_subrep(const std::string& name, const std::string& rep, const std::string& first,
                          const std::string& second) {
  auto& s = append("subrep", name);
  s.entries = {{"rep", rep}, {"first", first}, {"second", second}};
}

void Manifest::add_filtration(const std::string& name, const std::string& rep, const Filtration& f,
                              const std::vector<std::string>& steps) {
  std::vector<std::int64_t> adjoined;
  for (auto a : f.adjoined) adjoined.push_back(static_cast<std::int64_t>(a));
  auto& s = append("filtration", name);
  s.entries = {{"rep", rep},
               {"kappa", std::to_string(f.kappa)},
               {"steps", join(steps, ',')},
               {"adjoined", format_int_list(adjoined)}};
}

void Manifest::add_diagram(const std::string& name, const std::string& kind, const std::vector<std::string>& objects,
                           const std::vector<std::string>& arrows) {
  if (kind != "module" && kind != "rep") throw InputError("add_diagram: kind must be module or rep");
  auto& s = append("diagram", name);
  s.entries = {{"kind", kind}, {"objects", join(objects, ',')}, {"arrows", join(arrows, ';')}};
}

void Manifest::add_result(const std::string& name, std::vector<Entry> entries) {
  append("result", name).entries = std::move(entries);
}

std::string Manifest::put_module(const std::string& name, const FiniteModule& m) {
  const auto factors = format_int_list(m.factors());
  for (const auto& s : sections_)
    if (s.type == "module" && s.find("factors") && *s.find("factors") == factors) return s.name;
  add_module(name, m);
  return name;
}

std::string Manifest::put_morphism(const std::string& name, const ModuleMorphism& f) {
  const auto from = put_module(name + ".src", f.source());
  const auto to = put_module(name + ".tgt", f.target());
  add_morphism(name, from, to, f);
  return name;
}

std::string Manifest::put_rep(const std::string& name, const RepA2& rep) {
  add_rep(name, put_morphism(name + ".f", rep.map()));
  return name;
}

std::string Manifest::put_subrep(const std::string& name, const std::string& rep, const SubRep& s) {
  const auto& f = require("morphism", *require("rep", rep).find("f"));
  add_submodule(name + ".1", *f.find("from"), s.first());
  add_submodule(name + ".2", *f.find("to"), s.second());
  add_subrep(name, rep, name + ".1", name + ".2");
  return name;
}

std::string Manifest::put_filtration(const std::string& name, const Filtration& f) {
  const auto rep = put_rep(name + ".rep", f.target);
  std::vector<std::string> steps;
  for (std::size_t i = 0; i < f.steps.size(); ++i)
    steps.push_back(put_subrep(name + ".step" + std::to_string(i), rep, f.steps[i]));
  add_filtration(name, rep, f, steps);
  return name;
}

FiniteModule Manifest::module(std::string_view name) const {
  const auto& s = require("module", name);
  try {
    const auto* factors = s.find("factors");
    if (!factors) throw InputError("missing key 'factors'");
    return FiniteModule(require_ring(), parse_int_list(*factors));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

ModuleMorphism Manifest::morphism(std::string_view name) const {
  const auto& s = require("morphism", name);
  try {
    const auto* from = s.find("from");
    const auto* to = s.find("to");
    const auto* rows = s.find("rows");
    if (!from || !to || !rows) throw InputError("morphism needs from, to and rows");
    const auto src = module(*from);
    const auto tgt = module(*to);
    const auto parsed = parse_rows(*rows, tgt.rank(), src.rank());
    ResidueMatrix a(tgt.rank(), src.rank());
    for (std::size_t i = 0; i < tgt.rank(); ++i)
      for (std::size_t j = 0; j < src.rank(); ++j) a(i, j) = parsed[i][j];
    return ModuleMorphism(src, tgt, std::move(a));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

RepA2 Manifest::rep(std::string_view name) const {
  const auto& s = require("rep", name);
  try {
    const auto* f = s.find("f");
    if (!f) throw InputError("missing key 'f'");
    return RepA2(morphism(*f));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

Submodule Manifest::submodule(std::string_view name) const {
  const auto& s = require("submodule", name);
  try {
    const auto* in = s.find("in");
    const auto* gens = s.find("gens");
    if (!in || !gens) throw InputError("submodule needs in and gens");
    const auto m = module(*in);
    std::vector<Element> elements;
    if (!trim(*gens).empty()) {
      for (const auto& part : split(*gens, ';')) {
        auto x = parse_int_list(part);
        if (x.size() != m.rank()) throw InputError("generator has the wrong length");
        elements.push_back(m.reduce(std::move(x)));
      }
    }
    return Submodule(m, std::move(elements));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

SubRep Manifest::subrep(std::string_view name) const {
  const auto& s = require("subrep", name);
  try {
    const auto* r = s.find("rep");
    const auto* a = s.find("first");
    const auto* b = s.find("second");
    if (!r || !a || !b) throw InputError("subrep needs rep, first and second");
    return SubRep(rep(*r), submodule(*a), submodule(*b));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

Filtration Manifest::filtration(std::string_view name) const {
  const auto& s = require("filtration", name);
  try {
    const auto* r = s.find("rep");
    const auto* kappa = s.find("kappa");
    const auto* steps = s.find("steps");
    const auto* adjoined = s.find("adjoined");
    if (!r || !kappa || !steps) throw InputError("filtration needs rep, kappa and steps");
    const auto k = parse_int(*kappa);
    if (k < 1) throw InputError("kappa must be positive");
    Filtration f{rep(*r), static_cast<std::uint64_t>(k), {}, {}};
    for (const auto& step : split_names(*steps)) f.steps.push_back(subrep(step));
    if (adjoined)
      for (auto a : parse_int_list(*adjoined)) {
        if (a < 0) throw InputError("adjoined counts must be non-negative");
        f.adjoined.push_back(static_cast<std::size_t>(a));
      }
    return f;
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

namespace {

struct ArrowSpec {
  std::size_t from;
  std::size_t to;
  std::string map;
};

std::vector<ArrowSpec> parse_arrows(std::string_view text, std::size_t objects) {
  std::vector<ArrowSpec> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ';')) {
    const auto gt = part.find('>');
    const auto colon = part.find(':');
    if (gt == std::string_view::npos || colon == std::string_view::npos || colon < gt)
      throw InputError("arrow must look like i>j:name, got '" + std::string(part) + "'");
    const auto from = parse_int(part.substr(0, gt));
    const auto to = parse_int(part.substr(gt + 1, colon - gt - 1));
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= objects || static_cast<std::size_t>(to) >= objects)
      throw InputError("arrow index out of range");
    out.push_back({static_cast<std::size_t>(from), static_cast<std::size_t>(to), std::string(trim(part.substr(colon + 1)))});
  }
  return out;
}

}  // namespace

DirectedDiagram Manifest::module_diagram(std::string_view name) const {
  const auto& s = require("diagram", name);
  try {
    const auto* kind = s.find("kind");
    if (!kind || *kind != "module") throw InputError("not a module diagram");
    const auto* objects = s.find("objects");
    const auto* arrows = s.find("arrows");
    if (!objects || !arrows) throw InputError("diagram needs objects and arrows");
    std::vector<FiniteModule> mods;
    for (const auto& o : split_names(*objects)) mods.push_back(module(o));
    std::vector<DirectedDiagram::Arrow> as;
    for (const auto& a : parse_arrows(*arrows, mods.size())) as.push_back({a.from, a.to, morphism(a.map)});
    return DirectedDiagram(std::move(mods), std::move(as));
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

std::pair<std::vector<RepA2>, std::vector<RepArrow>> Manifest::rep_diagram(std::string_view name) const {
  const auto& s = require("diagram", name);
  try {
    const auto* kind = s.find("kind");
    if (!kind || *kind != "rep") throw InputError("not a rep diagram");
    const auto* objects = s.find("objects");
    const auto* arrows = s.find("arrows");
    if (!objects || !arrows) throw InputError("diagram needs objects and arrows");
    std::vector<RepA2> reps;
    for (const auto& o : split_names(*objects)) reps.push_back(rep(o));
    std::vector<RepArrow> as;
    for (const auto& a : parse_arrows(*arrows, reps.size())) {
      const auto slash = a.map.find('/');
      if (slash == std::string::npos) throw InputError("rep arrow needs first/second morphisms");
      as.push_back({a.from, a.to,
                    RepMorphism(reps[a.from], reps[a.to], morphism(a.map.substr(0, slash)),
                                morphism(a.map.substr(slash + 1)))});
    }
    return {std::move(reps), std::move(as)};
  } catch (const InputError& e) {
    throw InputError(describe(s) + e.what());
  }
}

void Manifest::validate() const {
  std::size_t rings = 0;
  for (const auto& s : sections_) {
    if (s.type == "ring") {
      ++rings;
      (void)ring();
    } else if (s.type == "module") {
      (void)module(s.name);
    } else if (s.type == "morphism") {
      (void)morphism(s.name);
    } else if (s.type == "rep") {
      (void)rep(s.name);
    } else if (s.type == "submodule") {
      (void)submodule(s.name);
    } else if (s.type == "subrep") {
      (void)subrep(s.name);
    } else if (s.type == "filtration") {
      (void)filtration(s.name);
    } else if (s.type == "diagram") {
      const auto* kind = s.find("kind");
      if (kind && *kind == "rep")
        (void)rep_diagram(s.name);
      else
        (void)module_diagram(s.name);
    }
  }
  if (rings > 1) throw InputError("more than one [ring] section");
}

}  // namespace phant
