#pragma once

// Workspace files: named sets, relations, functions and structures in a
// JSON layout. Field order and element order are canonical so that
// serialization is byte-stable:
//
//   {
//     "sets":       { "A": ["a0", "a1"] },
//     "relations":  { "x": { "from": "A", "to": "A", "pairs": [["a0","a0"]] } },
//     "functions":  { "f": { "from": "A", "to": "B", "map": { "a0": "b0" } } },
//     "structures": { "p": { "kind": "prom", "A": "A", "B": "B",
//                            "x": "x", "y": "y", "f": "f" } }
//   }
//
// Structure kinds and their fields:
//   preorder        carrier, rel
//   prom            A, B, x, y, f
//   representation  M, S, sat, ord
//   prom_morphism   src, dst (prom structures), phi, psi
//   rep_morphism    src, dst (representation structures), phi, tau

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "promrep/structures.hpp"

namespace promrep {

using Structure =
    std::variant<Preorder, Prom, Representation, PromMorphism, RepMorphism>;

std::string_view kind_name(const Structure& s);

/// Axiom check of any structure kind.
CheckReport check_structure(const Structure& s);

class Workspace {
 public:
  static Workspace parse(std::string_view text);
  std::string serialize() const;

  const FinSet& set(const std::string& name) const;
  const Rel& relation(const std::string& name) const;
  const FnMap& function(const std::string& name) const;
  const Structure& structure(const std::string& name) const;

  template <class T>
  const T& structure_as(const std::string& name) const {
    const Structure& s = structure(name);
    if (const T* v = std::get_if<T>(&s)) return *v;
    throw Error(ErrorCode::Kind, "structure '" + name + "' has kind " +
                                     std::string(kind_name(s)));
  }

  bool has_structure(const std::string& name) const;
  std::vector<std::string> structure_names() const;

  // Builders. Each returns the name actually used: sets are shared by name
  // when the carrier matches; other entries get a fresh name when taken.
  std::string add_set(const FinSet& s);
  std::string add_relation(const std::string& name, const Rel& r);
  std::string add_function(const std::string& name, const FnMap& f);
  std::string add_preorder(const std::string& name, const Preorder& p);
  std::string add_prom(const std::string& name, const Prom& p);
  std::string add_representation(const std::string& name, const Representation& r);
  /// Endpoints reuse an existing equal structure, else are added as
  /// `<name>.src` / `<name>.dst` unless explicit names are given.
  std::string add_prom_morphism(const std::string& name, const PromMorphism& m,
                                const std::string& src_name = {},
                                const std::string& dst_name = {});
  std::string add_rep_morphism(const std::string& name, const RepMorphism& m,
                               const std::string& src_name = {},
                               const std::string& dst_name = {});
  std::string add_structure(const std::string& name, const Structure& s);

 private:
  struct SetEntry {
    std::string name;
    FinSet set;
  };
  struct RelEntry {
    std::string name;
    std::string from, to;
    Rel rel;
  };
  struct FnEntry {
    std::string name;
    std::string from, to;
    FnMap fn;
  };
  struct StructEntry {
    std::string name;
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;  // in file order
    Structure value;
  };

  std::string fresh(const std::string& hint) const;
  bool name_taken(const std::string& name) const;
  std::string set_name_for(const FinSet& s);
  std::string find_equal_structure(const Structure& s) const;

  std::vector<SetEntry> sets_;
  std::vector<RelEntry> relations_;
  std::vector<FnEntry> functions_;
  std::vector<StructEntry> structures_;
  std::map<std::string, std::size_t> set_index_, rel_index_, fn_index_, struct_index_;
};

}  // namespace promrep
