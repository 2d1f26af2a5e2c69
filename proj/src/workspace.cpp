#include "promrep/workspace.hpp"

#include <functional>
#include <set>

#include "json.hpp"

namespace promrep {

using Json = nlohmann::ordered_json;

std::string_view kind_name(const Structure& s) {
  static constexpr std::string_view names[] = {"preorder", "prom", "representation",
                                               "prom_morphism", "rep_morphism"};
  return names[s.index()];
}

CheckReport check_structure(const Structure& s) {
  return std::visit(
      [](const auto& v) -> CheckReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Preorder>) {
          return check_preorder(v.rel);
        } else if constexpr (std::is_same_v<T, Prom>) {
          return check_prom(v);
        } else if constexpr (std::is_same_v<T, Representation>) {
          return check_representation(v);
        } else if constexpr (std::is_same_v<T, PromMorphism>) {
          return check_prom_morphism(v);
        } else {
          return check_rep_morphism(v);
        }
      },
      s);
}

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorCode::Parse, msg);
}

[[noreturn]] void reference_error(const std::string& msg) {
  throw Error(ErrorCode::Reference, msg);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    parse_error(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::string string_member(const Json& obj, const char* key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_string()) parse_error(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t label_index(const FinSet& s, const Json& label, const std::string& where) {
  if (!label.is_string()) parse_error(where + ": labels must be strings");
  auto idx = s.index_of(label.get<std::string>());
  if (!idx) {
    reference_error(where + ": '" + label.get<std::string>() +
                    "' is not an element of '" + s.name() + "'");
  }
  return *idx;
}

void require_kind_shape(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::Kind, msg);
}

}  // namespace

// --- lookup -------------------------------------------------------------------

const FinSet& Workspace::set(const std::string& name) const {
  auto it = set_index_.find(name);
  if (it == set_index_.end()) reference_error("unknown set '" + name + "'");
  return sets_[it->second].set;
}

const Rel& Workspace::relation(const std::string& name) const {
  auto it = rel_index_.find(name);
  if (it == rel_index_.end()) reference_error("unknown relation '" + name + "'");
  return relations_[it->second].rel;
}

const FnMap& Workspace::function(const std::string& name) const {
  auto it = fn_index_.find(name);
  if (it == fn_index_.end()) reference_error("unknown function '" + name + "'");
  return functions_[it->second].fn;
}

const Structure& Workspace::structure(const std::string& name) const {
  auto it = struct_index_.find(name);
  if (it == struct_index_.end()) reference_error("unknown structure '" + name + "'");
  return structures_[it->second].value;
}

bool Workspace::has_structure(const std::string& name) const {
  return struct_index_.contains(name);
}

std::vector<std::string> Workspace::structure_names() const {
  std::vector<std::string> out;
  for (const auto& s : structures_) out.push_back(s.name);
  return out;
}

// --- parse ----------------------------------------------------------------------

Workspace Workspace::parse(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("workspace must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "sets" && key != "relations" && key != "functions" && key != "structures") {
      parse_error("unknown top-level field '" + key + "'");
    }
  }

  Workspace ws;
  auto section = [&](const char* key) -> const Json& {
    static const Json empty = Json::object();
    if (!doc.contains(key)) return empty;
    const Json& s = doc.at(key);
    if (!s.is_object()) parse_error(std::string("'") + key + "' must be an object");
    return s;
  };

  for (const auto& [name, labels] : section("sets").items()) {
    if (!labels.is_array()) parse_error("set '" + name + "' must be a label list");
    std::vector<std::string> ls;
    for (const auto& l : labels) {
      if (!l.is_string()) parse_error("set '" + name + "': labels must be strings");
      ls.push_back(l.get<std::string>());
    }
    try {
      ws.set_index_[name] = ws.sets_.size();
      ws.sets_.push_back({name, FinSet(name, std::move(ls))});
    } catch (const Error& e) {
      parse_error(e.what());
    }
  }

  for (const auto& [name, body] : section("relations").items()) {
    const std::string where = "relation '" + name + "'";
    const std::string from = string_member(body, "from", where);
    const std::string to = string_member(body, "to", where);
    Rel r(ws.set(from), ws.set(to));
    const Json& pairs = member(body, "pairs", where);
    if (!pairs.is_array()) parse_error(where + ": 'pairs' must be a list");
    for (const auto& pr : pairs) {
      if (!pr.is_array() || pr.size() != 2) parse_error(where + ": pairs have two labels");
      r.set(label_index(r.src(), pr[0], where), label_index(r.dst(), pr[1], where));
    }
    ws.rel_index_[name] = ws.relations_.size();
    ws.relations_.push_back({name, from, to, std::move(r)});
  }

  for (const auto& [name, body] : section("functions").items()) {
    const std::string where = "function '" + name + "'";
    const std::string from = string_member(body, "from", where);
    const std::string to = string_member(body, "to", where);
    const FinSet& src = ws.set(from);
    const FinSet& dst = ws.set(to);
    const Json& map = member(body, "map", where);
    if (!map.is_object()) parse_error(where + ": 'map' must be an object");
    std::vector<std::size_t> image(src.size());
    std::vector<bool> seen(src.size(), false);
    for (const auto& [k, v] : map.items()) {
      std::size_t i = label_index(src, Json(k), where);
      image[i] = label_index(dst, v, where);
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) reference_error(where + ": no image for '" + src.label(i) + "'");
    }
    ws.fn_index_[name] = ws.functions_.size();
    ws.functions_.push_back({name, from, to, FnMap(src, dst, std::move(image))});
  }

  // Structures may reference each other (morphism endpoints) in any order.
  const Json& structs = section("structures");
  std::map<std::string, const Json*> raw;
  std::vector<std::string> order;
  for (const auto& [name, body] : structs.items()) {
    raw[name] = &body;
    order.push_back(name);
  }
  std::map<std::string, Structure> resolved;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> fields_of;
  std::set<std::string> in_progress;

  std::function<const Structure&(const std::string&)> resolve =
      [&](const std::string& name) -> const Structure& {
    if (auto it = resolved.find(name); it != resolved.end()) return it->second;
    auto rit = raw.find(name);
    if (rit == raw.end()) reference_error("unknown structure '" + name + "'");
    if (!in_progress.insert(name).second) {
      reference_error("structure '" + name + "' references itself");
    }
    const Json& body = *rit->second;
    const std::string where = "structure '" + name + "'";
    const std::string kind = string_member(body, "kind", where);
    std::vector<std::pair<std::string, std::string>> fields;
    auto field = [&](const char* key) {
      std::string v = string_member(body, key, where);
      fields.emplace_back(key, v);
      return v;
    };
    Structure value;
    if (kind == "preorder") {
      const FinSet& c = ws.set(field("carrier"));
      const Rel& r = ws.relation(field("rel"));
      require_kind_shape(r.src() == c && r.dst() == c,
                         where + ": rel must be a relation on the carrier");
      value = Preorder{c, r};
    } else if (kind == "prom") {
      const FinSet& A = ws.set(field("A"));
      const FinSet& B = ws.set(field("B"));
      const Rel& x = ws.relation(field("x"));
      const Rel& y = ws.relation(field("y"));
      const FnMap& f = ws.function(field("f"));
      require_kind_shape(x.src() == A && x.dst() == A, where + ": x must be on A");
      require_kind_shape(y.src() == B && y.dst() == B, where + ": y must be on B");
      require_kind_shape(f.src() == A && f.dst() == B, where + ": f must map A to B");
      value = Prom{A, B, x, y, f};
    } else if (kind == "representation") {
      const FinSet& M = ws.set(field("M"));
      const FinSet& S = ws.set(field("S"));
      const Rel& sat = ws.relation(field("sat"));
      const Rel& ord = ws.relation(field("ord"));
      require_kind_shape(sat.src() == M && sat.dst() == S, where + ": sat must be M ⇸ S");
      require_kind_shape(ord.src() == S && ord.dst() == S, where + ": ord must be on S");
      value = Representation{M, S, sat, ord};
    } else if (kind == "prom_morphism") {
      const std::string src_name = field("src");
      const std::string dst_name = field("dst");
      const auto* src = std::get_if<Prom>(&resolve(src_name));
      const auto* dst = std::get_if<Prom>(&resolve(dst_name));
      require_kind_shape(src && dst, where + ": endpoints must be proms");
      const FnMap& phi = ws.function(field("phi"));
      const FnMap& psi = ws.function(field("psi"));
      require_kind_shape(phi.src() == src->A && phi.dst() == dst->A,
                         where + ": phi must map src.A to dst.A");
      require_kind_shape(psi.src() == src->B && psi.dst() == dst->B,
                         where + ": psi must map src.B to dst.B");
      value = PromMorphism{*src, *dst, phi, psi};
    } else if (kind == "rep_morphism") {
      const std::string src_name = field("src");
      const std::string dst_name = field("dst");
      const auto* src = std::get_if<Representation>(&resolve(src_name));
      const auto* dst = std::get_if<Representation>(&resolve(dst_name));
      require_kind_shape(src && dst, where + ": endpoints must be representations");
      const FnMap& phi = ws.function(field("phi"));
      const Rel& tau = ws.relation(field("tau"));
      require_kind_shape(phi.src() == src->S && phi.dst() == dst->S,
                         where + ": phi must map src.S to dst.S");
      require_kind_shape(tau.src() == dst->M && tau.dst() == src->M,
                         where + ": tau must be dst.M ⇸ src.M");
      value = RepMorphism{*src, *dst, phi, tau};
    } else {
      parse_error(where + ": unknown kind '" + kind + "'");
    }
    for (const auto& [key, _] : body.items()) {
      bool known = key == "kind";
      for (const auto& f : fields) known = known || f.first == key;
      if (!known) parse_error(where + ": unknown field '" + key + "'");
    }
    in_progress.erase(name);
    fields_of[name] = std::move(fields);
    return resolved.emplace(name, std::move(value)).first->second;
  };

  for (const auto& name : order) resolve(name);
  for (const auto& name : order) {
    const std::string kind = raw[name]->at("kind").get<std::string>();
    ws.struct_index_[name] = ws.structures_.size();
    ws.structures_.push_back({name, kind, fields_of[name], resolved.at(name)});
  }
  return ws;
}

// --- serialize --------------------------------------------------------------

std::string Workspace::serialize() const {
  Json doc = Json::object();
  Json sets = Json::object();
  for (const auto& s : sets_) sets[s.name] = s.set.labels();
  Json rels = Json::object();
  for (const auto& r : relations_) {
    Json pairs = Json::array();
    for (auto [i, j] : r.rel.pairs()) {
      pairs.push_back(Json::array({r.rel.src().label(i), r.rel.dst().label(j)}));
    }
    rels[r.name] = Json{{"from", r.from}, {"to", r.to}, {"pairs", std::move(pairs)}};
  }
  Json fns = Json::object();
  for (const auto& f : functions_) {
    Json map = Json::object();
    for (std::size_t i = 0; i < f.fn.src().size(); ++i) {
      map[f.fn.src().label(i)] = f.fn.dst().label(f.fn(i));
    }
    fns[f.name] = Json{{"from", f.from}, {"to", f.to}, {"map", std::move(map)}};
  }
  Json structs = Json::object();
  for (const auto& s : structures_) {
    Json body = Json::object();
    body["kind"] = s.kind;
    for (const auto& [k, v] : s.fields) body[k] = v;
    structs[s.name] = std::move(body);
  }
  doc["sets"] = std::move(sets);
  doc["relations"] = std::move(rels);
  doc["functions"] = std::move(fns);
  doc["structures"] = std::move(structs);
  return doc.dump(2) + "\n";
}

// --- builders -----------------------------------------------------------------

bool Workspace::name_taken(const std::string& name) const {
  return set_index_.contains(name) || rel_index_.contains(name) ||
         fn_index_.contains(name) || struct_index_.contains(name);
}

std::string Workspace::fresh(const std::string& hint) const {
  const std::string base = hint.empty() ? std::string("_") : hint;
  if (!name_taken(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = base + "#" + std::to_string(k);
    if (!name_taken(candidate)) return candidate;
  }
}

std::string Workspace::set_name_for(const FinSet& s) {
  if (auto it = set_index_.find(s.name()); it != set_index_.end()) {
    if (sets_[it->second].set == s) return s.name();
  }
  for (const auto& e : sets_) {
    if (e.set == s && e.set.name() == s.name()) return e.name;
  }
  std::string name = fresh(s.name());
  set_index_[name] = sets_.size();
  sets_.push_back({name, s});
  return name;
}

std::string Workspace::add_set(const FinSet& s) { return set_name_for(s); }

std::string Workspace::add_relation(const std::string& name, const Rel& r) {
  std::string from = set_name_for(r.src());
  std::string to = set_name_for(r.dst());
  std::string used = fresh(name);
  rel_index_[used] = relations_.size();
  relations_.push_back({used, std::move(from), std::move(to), r});
  return used;
}

std::string Workspace::add_function(const std::string& name, const FnMap& f) {
  std::string from = set_name_for(f.src());
  std::string to = set_name_for(f.dst());
  std::string used = fresh(name);
  fn_index_[used] = functions_.size();
  functions_.push_back({used, std::move(from), std::move(to), f});
  return used;
}

std::string Workspace::find_equal_structure(const Structure& s) const {
  for (const auto& e : structures_) {
    if (e.value.index() != s.index()) continue;
    if (const auto* p = std::get_if<Prom>(&s)) {
      if (same_prom(*p, std::get<Prom>(e.value))) return e.name;
    } else if (const auto* r = std::get_if<Representation>(&s)) {
      if (same_representation(*r, std::get<Representation>(e.value))) return e.name;
    }
  }
  return {};
}

std::string Workspace::add_preorder(const std::string& name, const Preorder& p) {
  std::string used = fresh(name);
  std::vector<std::pair<std::string, std::string>> fields{
      {"carrier", set_name_for(p.carrier)}, {"rel", add_relation(used + ".rel", p.rel)}};
  struct_index_[used] = structures_.size();
  structures_.push_back({used, "preorder", std::move(fields), p});
  return used;
}

std::string Workspace::add_prom(const std::string& name, const Prom& p) {
  std::string used = fresh(name);
  struct_index_[used] = structures_.size();  // reserve before components
  structures_.push_back({used, "prom", {}, p});
  std::vector<std::pair<std::string, std::string>> fields{
      {"A", set_name_for(p.A)},
      {"B", set_name_for(p.B)},
      {"x", add_relation(used + ".x", p.x)},
      {"y", add_relation(used + ".y", p.y)},
      {"f", add_function(used + ".f", p.f)}};
  structures_[struct_index_[used]].fields = std::move(fields);
  return used;
}

std::string Workspace::add_representation(const std::string& name,
                                          const Representation& r) {
  std::string used = fresh(name);
  struct_index_[used] = structures_.size();
  structures_.push_back({used, "representation", {}, r});
  std::vector<std::pair<std::string, std::string>> fields{
      {"M", set_name_for(r.M)},
      {"S", set_name_for(r.S)},
      {"sat", add_relation(used + ".sat", r.sat)},
      {"ord", add_relation(used + ".ord", r.ord)}};
  structures_[struct_index_[used]].fields = std::move(fields);
  return used;
}

std::string Workspace::add_prom_morphism(const std::string& name, const PromMorphism& m,
                                         const std::string& src_name,
                                         const std::string& dst_name) {
  auto endpoint = [&](const Prom& p, const std::string& explicit_name,
                      const char* suffix) {
    std::string existing = find_equal_structure(p);
    if (!existing.empty()) return existing;
    return add_prom(explicit_name.empty() ? name + suffix : explicit_name, p);
  };
  std::string src = endpoint(m.src, src_name, ".src");
  std::string dst = endpoint(m.dst, dst_name, ".dst");
  std::string used = fresh(name);
  struct_index_[used] = structures_.size();
  structures_.push_back({used, "prom_morphism", {}, m});
  std::vector<std::pair<std::string, std::string>> fields{
      {"src", src},
      {"dst", dst},
      {"phi", add_function(used + ".phi", m.phi)},
      {"psi", add_function(used + ".psi", m.psi)}};
  structures_[struct_index_[used]].fields = std::move(fields);
  return used;
}

std::string Workspace::add_rep_morphism(const std::string& name, const RepMorphism& m,
                                        const std::string& src_name,
                                        const std::string& dst_name) {
  auto endpoint = [&](const Representation& r, const std::string& explicit_name,
                      const char* suffix) {
    std::string existing = find_equal_structure(r);
    if (!existing.empty()) return existing;
    return add_representation(explicit_name.empty() ? name + suffix : explicit_name, r);
  };
  std::string src = endpoint(m.src, src_name, ".src");
  std::string dst = endpoint(m.dst, dst_name, ".dst");
  std::string used = fresh(name);
  struct_index_[used] = structures_.size();
  structures_.push_back({used, "rep_morphism", {}, m});
  std::vector<std::pair<std::string, std::string>> fields{
      {"src", src},
      {"dst", dst},
      {"phi", add_function(used + ".phi", m.phi)},
      {"tau", add_relation(used + ".tau", m.tau)}};
  structures_[struct_index_[used]].fields = std::move(fields);
  return used;
}

std::string Workspace::add_structure(const std::string& name, const Structure& s) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Preorder>) return add_preorder(name, v);
        else if constexpr (std::is_same_v<T, Prom>) return add_prom(name, v);
        else if constexpr (std::is_same_v<T, Representation>)
          return add_representation(name, v);
        else if constexpr (std::is_same_v<T, PromMorphism>)
          return add_prom_morphism(name, v);
        else return add_rep_morphism(name, v);
      },
      s);
}

}  // namespace promrep
