#include "nia/taxonomy/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "nia/core/errors.hpp"

namespace nia::taxonomy {

using nlohmann::json;

namespace {

constexpr Domain kDomains[] = {Domain::Biology, Domain::NonBiology};
constexpr PrimaryGoal kGoals[] = {PrimaryGoal::ResourceSeeking, PrimaryGoal::Survival,
                                  PrimaryGoal::Reproduction,    PrimaryGoal::Gravity,
                                  PrimaryGoal::EntropyReduction, PrimaryGoal::LawOfEquilibrium};

/// Segment key: lowercase alphanumerics only.
std::string segment_key(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto slash = path.find('/', start);
    const auto end = slash == std::string_view::npos ? path.size() : slash;
    parts.emplace_back(path.substr(start, end - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

template <typename Map>
const typename Map::value_type* match(const Map& map, const std::string& key) {
  for (const auto& kv : map) {
    if (segment_key(kv.first) == key) return &kv;
  }
  return nullptr;
}

json string_list(const std::vector<std::string>& v) { return json(v); }

}  // namespace

std::string_view to_string(Domain d) { return d == Domain::Biology ? "Biology" : "NonBiology"; }

std::string_view to_string(PrimaryGoal g) {
  switch (g) {
    case PrimaryGoal::ResourceSeeking: return "ResourceSeeking";
    case PrimaryGoal::Survival: return "Survival";
    case PrimaryGoal::Reproduction: return "Reproduction";
    case PrimaryGoal::Gravity: return "Gravity";
    case PrimaryGoal::EntropyReduction: return "EntropyReduction";
    case PrimaryGoal::LawOfEquilibrium: return "LawOfEquilibrium";
  }
  return "?";
}

Domain domain_of(PrimaryGoal g) {
  return static_cast<int>(g) < static_cast<int>(PrimaryGoal::Gravity) ? Domain::Biology : Domain::NonBiology;
}

std::vector<std::string> TaxonomyPath::segments() const {
  std::vector<std::string> s{std::string(taxonomy::to_string(level1)), std::string(taxonomy::to_string(level2))};
  if (level3) s.push_back(*level3);
  if (level4) s.push_back(*level4);
  return s;
}

std::string TaxonomyPath::to_string() const {
  std::string out;
  for (const auto& seg : segments()) {
    if (!out.empty()) out += '/';
    out += seg;
  }
  return out;
}

bool extends(const TaxonomyPath& path, const std::vector<std::string>& prefix) {
  const auto segs = path.segments();
  if (prefix.size() > segs.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), segs.begin());
}

std::string fold_name(std::string_view s) {
  std::string out;
  bool space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::vector<std::string> Taxonomy::parse_prefix(std::string_view path) const {
  const auto raw = split_path(path);
  if (raw.empty() || raw.size() > 4) throw IllegalPath("path must have 1 to 4 segments: " + std::string(path));
  std::vector<std::string> keys;
  for (const auto& r : raw) {
    std::string k = segment_key(r);
    if (const auto* alias = match(level_aliases_, k)) k = segment_key(alias->second);
    keys.push_back(std::move(k));
  }
  std::vector<std::string> out;
  const auto* l1 = match(hierarchy_, keys[0]);
  if (!l1) throw IllegalPath("unknown level-1 class: " + raw[0]);
  out.push_back(l1->first);
  if (keys.size() == 1) return out;
  const auto* l2 = match(l1->second, keys[1]);
  if (!l2) throw IllegalPath(raw[1] + " is not a primary goal under " + l1->first);
  out.push_back(l2->first);
  if (keys.size() == 2) return out;
  const auto* l3 = match(l2->second, keys[2]);
  if (!l3) throw IllegalPath(raw[2] + " is not a sub-goal under " + l1->first + "/" + l2->first);
  out.push_back(l3->first);
  if (keys.size() == 3) return out;
  const auto& behaviours = l3->second;
  const auto it = std::find_if(behaviours.begin(), behaviours.end(),
                               [&](const std::string& b) { return segment_key(b) == keys[3]; });
  if (it == behaviours.end()) throw IllegalPath(raw[3] + " is not a behaviour under " + out[0] + "/" + out[1] + "/" + out[2]);
  out.push_back(*it);
  return out;
}

TaxonomyPath Taxonomy::parse_path(std::string_view path) const {
  const auto segs = parse_prefix(path);
  if (segs.size() < 2) throw IllegalPath("path needs at least a primary goal: " + std::string(path));
  TaxonomyPath p;
  for (auto d : kDomains) {
    if (taxonomy::to_string(d) == segs[0]) p.level1 = d;
  }
  bool goal_found = false;
  for (auto g : kGoals) {
    if (taxonomy::to_string(g) == segs[1]) {
      p.level2 = g;
      goal_found = true;
    }
  }
  if (!goal_found || domain_of(p.level2) != p.level1) throw IllegalPath("unknown primary goal: " + segs[1]);
  if (segs.size() > 2) p.level3 = segs[2];
  if (segs.size() > 3) p.level4 = segs[3];
  if (p.level1 == Domain::NonBiology && p.level3) {
    throw IllegalPath("non-biology paths are classified by primary goal only: " + std::string(path));
  }
  return p;
}

std::vector<std::string> Taxonomy::child_segments(const std::vector<std::string>& prefix) const {
  std::vector<std::string> out;
  if (prefix.empty()) {
    for (const auto& kv : hierarchy_) out.push_back(kv.first);
    return out;
  }
  const auto& l2 = hierarchy_.at(prefix[0]);
  if (prefix.size() == 1) {
    for (const auto& kv : l2) out.push_back(kv.first);
    return out;
  }
  const auto& l3 = l2.at(prefix[1]);
  if (prefix.size() == 2) {
    for (const auto& kv : l3) out.push_back(kv.first);
    return out;
  }
  if (prefix.size() == 3) return l3.at(prefix[2]);
  return out;
}

Taxonomy Taxonomy::from_json(const json& doc) {
  Taxonomy t;
  try {
    if (doc.at("schema_version").get<int>() != 1) throw SchemaError("unsupported taxonomy schema_version");
    for (const auto& [l1, l2s] : doc.at("hierarchy").items()) {
      const bool known = std::any_of(std::begin(kDomains), std::end(kDomains),
                                     [&](Domain d) { return taxonomy::to_string(d) == l1; });
      if (!known) throw SchemaError("hierarchy: unknown level-1 class " + l1);
      auto& level2 = t.hierarchy_[l1];
      for (const auto& [l2, l3s] : l2s.items()) {
        const bool goal = std::any_of(std::begin(kGoals), std::end(kGoals), [&](PrimaryGoal g) {
          return taxonomy::to_string(g) == l2 && taxonomy::to_string(domain_of(g)) == l1;
        });
        if (!goal) throw SchemaError("hierarchy: unknown primary goal " + l1 + "/" + l2);
        auto& level3 = level2[l2];
        for (const auto& [l3, l4s] : l3s.items()) {
          if (l1 == "NonBiology") throw SchemaError("hierarchy: non-biology goals take no sub-goals");
          level3[l3] = l4s.get<std::vector<std::string>>();
        }
      }
    }
    if (doc.contains("level_aliases")) {
      t.level_aliases_ = doc.at("level_aliases").get<std::map<std::string, std::string>>();
    }
    for (const auto& e : doc.at("entries")) {
      for (const auto& [key, _] : e.items()) {
        static const char* known[] = {"name", "aliases", "implemented", "paths", "traditional", "solver", "note"};
        if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return key == k; })) {
          throw SchemaError("entry has unknown key: " + key);
        }
      }
      TaxonomyEntry entry;
      entry.name = e.at("name").get<std::string>();
      entry.aliases = e.at("aliases").get<std::vector<std::string>>();
      entry.implemented = e.at("implemented").get<bool>();
      for (const auto& p : e.at("paths")) entry.paths.push_back(t.parse_path(p.get<std::string>()));
      if (entry.paths.empty()) throw SchemaError("entry without paths: " + entry.name);
      if (e.contains("traditional")) entry.traditional = e.at("traditional").get<std::string>();
      if (e.contains("note")) entry.note = e.at("note").get<std::string>();
      if (e.contains("solver")) {
        entry.solver = SolverInfo{e.at("solver").at("id").get<std::string>(),
                                  e.at("solver").at("modalities").get<std::vector<std::string>>()};
      }
      if (entry.implemented != entry.solver.has_value()) {
        throw SchemaError("entry " + entry.name + ": implemented entries carry a solver block, others do not");
      }
      const std::size_t idx = t.entries_.size();
      std::vector<std::string> keys{fold_name(entry.name)};
      for (const auto& a : entry.aliases) keys.push_back(fold_name(a));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (const auto& k : keys) {
        if (!t.index_.emplace(k, idx).second) throw SchemaError("duplicate algorithm name or alias: " + k);
      }
      t.entries_.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed taxonomy document: ") + e.what());
  }
  return t;
}

Taxonomy Taxonomy::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("taxonomy file is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

Taxonomy Taxonomy::bundled() { return load(std::filesystem::path(NIA_DATA_DIR) / "taxonomy.json"); }

json Taxonomy::to_json() const {
  json hierarchy = json::object();
  for (const auto& [l1, l2s] : hierarchy_) {
    json level2 = json::object();
    for (const auto& [l2, l3s] : l2s) {
      json level3 = json::object();
      for (const auto& [l3, l4s] : l3s) level3[l3] = string_list(l4s);
      level2[l2] = level3;
    }
    hierarchy[l1] = level2;
  }
  json entries = json::array();
  for (const auto& e : entries_) {
    json paths = json::array();
    for (const auto& p : e.paths) paths.push_back(p.to_string());
    json j = {{"name", e.name}, {"aliases", string_list(e.aliases)}, {"implemented", e.implemented}, {"paths", paths}};
    if (e.traditional) j["traditional"] = *e.traditional;
    if (e.note) j["note"] = *e.note;
    if (e.solver) j["solver"] = {{"id", e.solver->id}, {"modalities", string_list(e.solver->modalities)}};
    entries.push_back(std::move(j));
  }
  json doc = {{"schema_version", 1}, {"hierarchy", hierarchy}, {"entries", entries}};
  if (!level_aliases_.empty()) doc["level_aliases"] = level_aliases_;
  return doc;
}

const TaxonomyEntry* Taxonomy::find(std::string_view name_or_alias) const {
  const auto it = index_.find(fold_name(name_or_alias));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const TaxonomyEntry& Taxonomy::lookup(std::string_view name_or_alias) const {
  if (const auto* e = find(name_or_alias)) return *e;
  throw NotFound("no algorithm named " + std::string(name_or_alias));
}

std::vector<const TaxonomyEntry*> Taxonomy::children(std::string_view prefix) const {
  const auto segs = parse_prefix(prefix);
  if (segs.size() > 2 && segs[0] == "NonBiology") throw IllegalPath("non-biology paths stop at the primary goal");
  std::vector<const TaxonomyEntry*> out;
  for (const auto& e : entries_) {
    if (std::any_of(e.paths.begin(), e.paths.end(), [&](const TaxonomyPath& p) { return extends(p, segs); })) {
      out.push_back(&e);
    }
  }
  std::sort(out.begin(), out.end(), [](const TaxonomyEntry* a, const TaxonomyEntry* b) {
    return fold_name(a->name) < fold_name(b->name);
  });
  return out;
}

}  // namespace nia::taxonomy
