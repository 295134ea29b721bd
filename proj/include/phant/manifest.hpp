#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phant/filtration.hpp"

namespace phant {

/// Line-oriented text format:
///
///   format_version=1
///
///   [ring]
///   n=4
///
///   [module A]
///   factors=2,4
///
///   [morphism f]
///   from=A
///   to=A
///   rows=1,0;0,1
///
/// plus `rep`, `submodule`, `subrep`, `filtration`, `diagram` and `result`
/// sections. Blank lines and lines starting with '#' are ignored. Sections
/// keep their order and their keys keep theirs, so serialize(parse(text))
/// reproduces canonical text exactly.
class Manifest {
 public:
  struct Entry {
    std::string key;
    std::string value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct Section {
    std::string type;
    std::string name;  // empty for [ring]
    std::vector<Entry> entries;
    std::size_t line = 0;  // source line of the header, 0 if built in memory

    [[nodiscard]] const std::string* find(std::string_view key) const;
    friend bool operator==(const Section& a, const Section& b) {
      return a.type == b.type && a.name == b.name && a.entries == b.entries;
    }
  };

  static constexpr int kFormatVersion = 1;

  Manifest() = default;
  explicit Manifest(std::int64_t modulus);

  /// Throws InputError with a "line N:" prefix on malformed text or on
  /// unresolved references and ill-defined morphisms.
  static Manifest parse(std::string_view text);
  [[nodiscard]] std::string serialize() const;

  [[nodiscard]] int format_version() const noexcept { return format_version_; }
  [[nodiscard]] std::optional<Ring> ring() const;
  [[nodiscard]] Ring require_ring() const;
  [[nodiscard]] const std::vector<Section>& sections() const noexcept { return sections_; }
  [[nodiscard]] const Section* find(std::string_view type, std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names(std::string_view type) const;

  void add_module(const std::string& name, const FiniteModule& m);
  void add_morphism(const std::string& name, const std::string& from, const std::string& to, const ModuleMorphism& f);
  void add_rep(const std::string& name, const std::string& morphism);
  void add_submodule(const std::string& name, const std::string& module, const Submodule& s);
  void add_subrep(const std::string& name, const std::string& rep, const std::string& first, const std::string& second);
  void add_filtration(const std::string& name, const std::string& rep, const Filtration& f,
                      const std::vector<std::string>& steps);
  /// kind "module": arrows "i>j:morphism"; kind "rep": arrows "i>j:first/second".
  void add_diagram(const std::string& name, const std::string& kind, const std::vector<std::string>& objects,
                   const std::vector<std::string>& arrows);
  void add_result(const std::string& name, std::vector<Entry> entries);

  /// Convenience writers that also emit every object they depend on, with
  /// names derived from `name` (name.src, name.tgt, ...). Return the name.
  std::string put_module(const std::string& name, const FiniteModule& m);
  std::string put_morphism(const std::string& name, const ModuleMorphism& f);
  std::string put_rep(const std::string& name, const RepA2& rep);
  std::string put_subrep(const std::string& name, const std::string& rep, const SubRep& s);
  std::string put_filtration(const std::string& name, const Filtration& f);

  [[nodiscard]] FiniteModule module(std::string_view name) const;
  [[nodiscard]] ModuleMorphism morphism(std::string_view name) const;
  [[nodiscard]] RepA2 rep(std::string_view name) const;
  [[nodiscard]] Submodule submodule(std::string_view name) const;
  [[nodiscard]] SubRep subrep(std::string_view name) const;
  [[nodiscard]] Filtration filtration(std::string_view name) const;
  [[nodiscard]] DirectedDiagram module_diagram(std::string_view name) const;
  [[nodiscard]] std::pair<std::vector<RepA2>, std::vector<RepArrow>> rep_diagram(std::string_view name) const;

  /// Resolves every section; throws InputError naming the first bad one.
  void validate() const;

  friend bool operator==(const Manifest& a, const Manifest& b) {
    return a.format_version_ == b.format_version_ && a.sections_ == b.sections_;
  }

 private:
  Section& append(std::string type, std::string name);
  [[nodiscard]] const Section& require(std::string_view type, std::string_view name) const;

  int format_version_ = kFormatVersion;
  std::vector<Section> sections_;
};

/// Comma-separated integers; the empty string is the empty list.
[[nodiscard]] std::vector<std::int64_t> parse_int_list(std::string_view text);
[[nodiscard]] std::string format_int_list(const std::vector<std::int64_t>& values);

}  // namespace phant
