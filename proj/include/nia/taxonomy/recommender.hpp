#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nia/taxonomy/taxonomy.hpp"

namespace nia::taxonomy {

struct ProblemDescriptor {
  std::set<std::string> goal_tags;
  std::string modality;
  std::optional<std::string> cooperation;
  std::optional<std::string> data_regime;
};

/// A rule fires when the descriptor carries every tag in `all_tags` and its
/// optional facets match one of the listed values.
struct Rule {
  std::string id;
  std::string description;
  TaxonomyPath goal;
  double weight = 1.0;
  std::vector<std::string> all_tags;
  std::vector<std::string> cooperation;
  std::vector<std::string> modality;
  std::vector<std::string> data_regime;
};

class RuleTable {
 public:
  /// Goals are parsed against `taxonomy`. Throws SchemaError or IllegalPath.
  static RuleTable from_json(const nlohmann::json& doc, const Taxonomy& taxonomy);
  static RuleTable load(const std::filesystem::path& file, const Taxonomy& taxonomy);
  static RuleTable bundled(const Taxonomy& taxonomy);

  /// Copy with every weight multiplied by c > 0.
  RuleTable scaled(double c) const;

  /// Normalizes raw tags: lowercase, trimmed, aliases resolved, then sorted
  /// into facets. Throws InvalidDescriptor on unknown tags, conflicting
  /// facets, no goal tag, or no modality.
  ProblemDescriptor parse_descriptor(const std::vector<std::string>& tags) const;
  /// Checks an already-built descriptor against the vocabulary.
  ProblemDescriptor normalize(const ProblemDescriptor& d) const;

  bool fires(const Rule& rule, const ProblemDescriptor& d) const;

  const std::vector<Rule>& rules() const { return rules_; }
  double implemented_boost() const { return boost_; }

 private:
  std::string canonical_tag(std::string_view raw) const;

  std::vector<Rule> rules_;
  double boost_ = 0.25;
  std::map<std::string, std::string> aliases_;
  std::map<std::string, std::vector<std::string>> vocabulary_;
};

struct Candidate {
  const TaxonomyEntry* entry = nullptr;
  TaxonomyPath matched_path;
  double score = 0.0;  // in [0,1]
  std::string rule_id;
  std::string rationale;
};

struct Recommendation {
  std::vector<Candidate> ranked;
  TaxonomyPath conceptual_goal;
};

/// Abstract, match, retrieve, rank. Each entry is scored by the best rule
/// whose goal covers one of its paths:
///   weight * (1 + boost if a solver exists for the modality) / (1 + boost).
/// Ties break by name. Throws UnmappedDescriptor when no rule fires.
Recommendation triz_map(const ProblemDescriptor& descriptor, const Taxonomy& taxonomy, const RuleTable& rules);

}  // namespace nia::taxonomy
