#include "nia/taxonomy/recommender.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>

#include "nia/core/errors.hpp"

namespace nia::taxonomy {

using nlohmann::json;

namespace {

const char* const kFacets[] = {"goal_tags", "modality", "cooperation", "data_regime"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> optional_list(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<std::string>>() : std::vector<std::string>{};
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", w);
  return buf;
}

}  // namespace

RuleTable RuleTable::from_json(const json& doc, const Taxonomy& taxonomy) {
  RuleTable t;
  try {
    if (doc.at("schema_version").get<int>() != 1) throw SchemaError("unsupported rule table schema_version");
    t.boost_ = doc.value("implemented_boost", 0.25);
    if (!(t.boost_ >= 0.0)) throw SchemaError("implemented_boost must be non-negative");
    for (const char* facet : kFacets) t.vocabulary_[facet] = doc.at("vocabulary").at(facet).get<std::vector<std::string>>();
    if (doc.contains("tag_aliases")) t.aliases_ = doc.at("tag_aliases").get<std::map<std::string, std::string>>();

    auto check_vocab = [&](const std::vector<std::string>& tags, const char* facet, const std::string& id) {
      for (const auto& tag : tags) {
        if (!contains(t.vocabulary_.at(facet), tag)) throw SchemaError("rule " + id + ": " + tag + " is not a " + facet + " value");
      }
    };
    for (const auto& [alias, target] : t.aliases_) {
      const bool known = std::any_of(t.vocabulary_.begin(), t.vocabulary_.end(),
                                     [&](const auto& kv) { return contains(kv.second, target); });
      if (!known) throw SchemaError("tag alias " + alias + " points at unknown tag " + target);
    }
    std::set<std::string> ids;
    for (const auto& r : doc.at("rules")) {
      Rule rule;
      rule.id = r.at("id").get<std::string>();
      if (!ids.insert(rule.id).second) throw SchemaError("duplicate rule id " + rule.id);
      rule.description = r.value("description", "");
      rule.goal = taxonomy.parse_path(r.at("goal").get<std::string>());
      rule.weight = r.at("weight").get<double>();
      if (!(rule.weight > 0.0 && rule.weight <= 1.0)) throw SchemaError("rule " + rule.id + ": weight must lie in (0,1]");
      rule.all_tags = r.at("all_tags").get<std::vector<std::string>>();
      if (rule.all_tags.empty()) throw SchemaError("rule " + rule.id + " has no tags");
      rule.cooperation = optional_list(r, "cooperation");
      rule.modality = optional_list(r, "modality");
      rule.data_regime = optional_list(r, "data_regime");
      check_vocab(rule.all_tags, "goal_tags", rule.id);
      check_vocab(rule.cooperation, "cooperation", rule.id);
      check_vocab(rule.modality, "modality", rule.id);
      check_vocab(rule.data_regime, "data_regime", rule.id);
      t.rules_.push_back(std::move(rule));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed rule table: ") + e.what());
  }
  return t;
}

RuleTable RuleTable::load(const std::filesystem::path& file, const Taxonomy& taxonomy) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("rule table is not valid JSON: ") + e.what());
  }
  return from_json(doc, taxonomy);
}

RuleTable RuleTable::bundled(const Taxonomy& taxonomy) {
  return load(std::filesystem::path(NIA_DATA_DIR) / "triz_rules.json", taxonomy);
}

RuleTable RuleTable::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidParams("rule weight scale must be positive");
  RuleTable t = *this;
  for (auto& r : t.rules_) r.weight *= c;
  return t;
}

std::string RuleTable::canonical_tag(std::string_view raw) const {
  std::string tag;
  for (unsigned char c : raw) {
    if (std::isspace(c)) continue;
    tag.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(c)));
  }
  const auto it = aliases_.find(tag);
  return it == aliases_.end() ? tag : it->second;
}

ProblemDescriptor RuleTable::parse_descriptor(const std::vector<std::string>& tags) const {
  ProblemDescriptor d;
  std::optional<std::string> modality;
  for (const auto& raw : tags) {
    const std::string tag = canonical_tag(raw);
    if (tag.empty()) continue;
    if (contains(vocabulary_.at("goal_tags"), tag)) {
      d.goal_tags.insert(tag);
      continue;
    }
    auto set_once = [&](std::optional<std::string>& slot, const char* facet) {
      if (slot && *slot != tag) throw InvalidDescriptor(std::string("conflicting ") + facet + " tags: " + *slot + ", " + tag);
      slot = tag;
    };
    if (contains(vocabulary_.at("modality"), tag)) set_once(modality, "modality");
    else if (contains(vocabulary_.at("cooperation"), tag)) set_once(d.cooperation, "cooperation");
    else if (contains(vocabulary_.at("data_regime"), tag)) set_once(d.data_regime, "data_regime");
    else throw InvalidDescriptor("unknown tag: " + raw);
  }
  d.modality = modality.value_or("");
  return normalize(d);
}

ProblemDescriptor RuleTable::normalize(const ProblemDescriptor& in) const {
  ProblemDescriptor d;
  for (const auto& g : in.goal_tags) {
    const auto tag = canonical_tag(g);
    if (!contains(vocabulary_.at("goal_tags"), tag)) throw InvalidDescriptor("unknown goal tag: " + g);
    d.goal_tags.insert(tag);
  }
  if (d.goal_tags.empty()) throw InvalidDescriptor("descriptor needs at least one goal tag");
  d.modality = canonical_tag(in.modality);
  if (d.modality.empty()) throw InvalidDescriptor("descriptor needs a modality");
  if (!contains(vocabulary_.at("modality"), d.modality)) throw InvalidDescriptor("unknown modality: " + in.modality);
  auto facet = [&](const std::optional<std::string>& v, const char* name) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    auto tag = canonical_tag(*v);
    if (!contains(vocabulary_.at(name), tag)) throw InvalidDescriptor(std::string("unknown ") + name + ": " + *v);
    return tag;
  };
  d.cooperation = facet(in.cooperation, "cooperation");
  d.data_regime = facet(in.data_regime, "data_regime");
  return d;
}

bool RuleTable::fires(const Rule& rule, const ProblemDescriptor& d) const {
  for (const auto& tag : rule.all_tags) {
    if (!d.goal_tags.count(tag)) return false;
  }
  auto facet_ok = [](const std::vector<std::string>& allowed, const std::optional<std::string>& v) {
    return allowed.empty() || (v && contains(allowed, *v));
  };
  return facet_ok(rule.cooperation, d.cooperation) && facet_ok(rule.modality, d.modality) &&
         facet_ok(rule.data_regime, d.data_regime);
}

Recommendation triz_map(const ProblemDescriptor& descriptor, const Taxonomy& taxonomy, const RuleTable& table) {
  // Step 1: abstraction.
  const ProblemDescriptor d = table.normalize(descriptor);

  // Step 2: conceptual problem.
  std::vector<const Rule*> fired;
  for (const auto& r : table.rules()) {
    if (table.fires(r, d)) fired.push_back(&r);
  }
  if (fired.empty()) {
    std::vector<std::pair<int, const Rule*>> near;
    for (const auto& r : table.rules()) {
      int overlap = 0;
      for (const auto& tag : r.all_tags) overlap += static_cast<int>(d.goal_tags.count(tag));
      near.emplace_back(overlap, &r);
    }
    std::stable_sort(near.begin(), near.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second->weight > b.second->weight;
    });
    std::string list;
    for (std::size_t i = 0; i < near.size() && i < 3; ++i) list += (i ? "," : "") + near[i].second->id;
    throw UnmappedDescriptor("no rule matches the descriptor; nearest rules: " + list, list);
  }
  const Rule* lead = *std::max_element(fired.begin(), fired.end(),
                                       [](const Rule* a, const Rule* b) { return a->weight < b->weight; });

  // Steps 3 and 4: retrieve under each fired goal, keep the best-scoring rule per entry.
  const double norm = 1.0 + table.implemented_boost();
  std::map<const TaxonomyEntry*, Candidate> best;
  for (const Rule* r : fired) {
    const auto prefix = r->goal.segments();
    for (const auto& entry : taxonomy.entries()) {
      const auto path = std::find_if(entry.paths.begin(), entry.paths.end(),
                                     [&](const TaxonomyPath& p) { return extends(p, prefix); });
      if (path == entry.paths.end()) continue;
      const bool solver = entry.implemented && entry.solver && contains(entry.solver->modalities, d.modality);
      const double score = r->weight * (solver ? norm : 1.0) / norm;
      auto [it, inserted] = best.try_emplace(&entry);
      if (!inserted && it->second.score >= score) continue;
      std::string why = "rule " + r->id + " (weight " + format_weight(r->weight) + ") maps to " +
                        r->goal.to_string() + "; " + entry.name + " sits at " + path->to_string();
      if (solver) why += "; implemented solver '" + entry.solver->id + "' handles " + d.modality;
      it->second = Candidate{&entry, *path, score, r->id, std::move(why)};
    }
  }

  Recommendation rec;
  rec.conceptual_goal = lead->goal;
  for (auto& kv : best) rec.ranked.push_back(std::move(kv.second));
  std::sort(rec.ranked.begin(), rec.ranked.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return fold_name(a.entry->name) < fold_name(b.entry->name);
  });
  return rec;
}

}  // namespace nia::taxonomy
