#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nia::taxonomy {

enum class Domain { Biology, NonBiology };

/// Level-2 primary goal. The first three belong to Biology, the rest to NonBiology.
enum class PrimaryGoal { ResourceSeeking, Survival, Reproduction, Gravity, EntropyReduction, LawOfEquilibrium };

std::string_view to_string(Domain d);
std::string_view to_string(PrimaryGoal g);
Domain domain_of(PrimaryGoal g);

/// End-goal classification path. Non-biology paths stop at level 2.
struct TaxonomyPath {
  Domain level1 = Domain::Biology;
  PrimaryGoal level2 = PrimaryGoal::ResourceSeeking;
  std::optional<std::string> level3;  // sub-goal
  std::optional<std::string> level4;  // behaviour

  /// "Biology/ResourceSeeking/FoodSeeking/Hunting"
  std::string to_string() const;
  /// Segments in order (2 to 4 of them).
  std::vector<std::string> segments() const;

  friend bool operator==(const TaxonomyPath&, const TaxonomyPath&) = default;
};

struct SolverInfo {
  std::string id;                       // "ga", "aco", "foa", "ba"
  std::vector<std::string> modalities;  // problem modalities the solver handles

  friend bool operator==(const SolverInfo&, const SolverInfo&) = default;
};

struct TaxonomyEntry {
  std::string name;
  std::vector<std::string> aliases;
  bool implemented = false;
  /// First path is canonical.
  std::vector<TaxonomyPath> paths;
  /// Free-text traditional (technique-based) class, when known.
  std::optional<std::string> traditional;
  std::optional<SolverInfo> solver;
  std::optional<std::string> note;
};

/// Immutable after load; safe for concurrent readers.
class Taxonomy {
 public:
  /// Throws SchemaError (malformed document, duplicate names) or
  /// IllegalPath (a path that is not legal under the hierarchy).
  static Taxonomy from_json(const nlohmann::json& doc);
  static Taxonomy load(const std::filesystem::path& file);
  /// The dataset shipped in data/taxonomy.json.
  static Taxonomy bundled();

  nlohmann::json to_json() const;

  const std::vector<TaxonomyEntry>& entries() const { return entries_; }

  /// Case-insensitive, alias-aware. Throws NotFound.
  const TaxonomyEntry& lookup(std::string_view name_or_alias) const;
  const TaxonomyEntry* find(std::string_view name_or_alias) const;

  /// Parses a full or partial path ("Biology", "Biology/Survival/Self", ...).
  /// Segment matching ignores case, spaces, '-' and '_', and honours level
  /// aliases. Throws IllegalPath.
  std::vector<std::string> parse_prefix(std::string_view path) const;
  /// Parses a path with at least the two top levels. Throws IllegalPath.
  TaxonomyPath parse_path(std::string_view path) const;

  /// Entries with at least one path extending `prefix`, sorted by name.
  std::vector<const TaxonomyEntry*> children(std::string_view prefix) const;

  /// Legal child segments directly under `prefix` (empty for leaves).
  std::vector<std::string> child_segments(const std::vector<std::string>& prefix) const;

 private:
  using Level3 = std::map<std::string, std::vector<std::string>>;
  using Level2 = std::map<std::string, Level3>;

  std::map<std::string, Level2> hierarchy_;
  std::map<std::string, std::string> level_aliases_;
  std::vector<TaxonomyEntry> entries_;
  std::map<std::string, std::size_t> index_;  // folded name/alias -> entry
};

bool extends(const TaxonomyPath& path, const std::vector<std::string>& prefix);

/// Lowercase with runs of whitespace collapsed; used for name matching.
std::string fold_name(std::string_view s);

}  // namespace nia::taxonomy
