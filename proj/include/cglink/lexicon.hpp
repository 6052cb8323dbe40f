#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cglink/cg.hpp"
#include "cglink/errors.hpp"
#include "cglink/type_hierarchy.hpp"

namespace cglink {

/// A predicate's semantic entry: the word and its definition graph. Most
/// definitions are a single concept; multi-concept graphs are legal.
struct PredicateEntry {
  std::string word;
  ReferenceModel definition;
};

/// A grammatical relation's ordered conceptual-relation preferences.
/// Index 0 is the highest priority; order is exactly declaration order.
struct GramRelEntry {
  std::string name;
  std::vector<std::string> prefs;
};

/// Two-tier semantic lexicon: predicate entries and grammatical-relation
/// entries. Build-then-freeze: lookups are const and reentrant.
class Lexicon {
public:
  void add_entry(const std::string& word, ConceptualGraph definition,
                 const TypeHierarchy& types, const TypeHierarchy& reltypes) {
    if (entries_.count(word)) raise(errc::duplicate_word, "word '" + word + "' already defined");
    definition.validate_types(types, reltypes);
    entries_.emplace(word, PredicateEntry{word, ReferenceModel(std::move(definition))});
    entry_order_.push_back(word);
  }

  void add_gramrel(const std::string& name, std::vector<std::string> prefs,
                   const TypeHierarchy& reltypes) {
    if (gramrels_.count(name))
      raise(errc::duplicate_gramrel, "grammatical relation '" + name + "' already defined");
    if (prefs.empty())
      raise(errc::empty_preferences, "grammatical relation '" + name + "' needs at least one preference");
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      if (!reltypes.contains(prefs[i]))
        raise(errc::unknown_relation_type, "relation type '" + prefs[i] + "' not declared");
      for (std::size_t j = 0; j < i; ++j)
        if (prefs[i] == prefs[j])
          raise(errc::duplicate_preference, "preference '" + prefs[i] + "' listed twice");
    }
    gramrels_.emplace(name, GramRelEntry{name, std::move(prefs)});
    gramrel_order_.push_back(name);
  }

  const PredicateEntry& lookup_entry(const std::string& word) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) raise(errc::unknown_word, "unknown word '" + word + "'");
    return it->second;
  }

  const GramRelEntry& lookup_gramrel(const std::string& name) const {
    auto it = gramrels_.find(name);
    if (it == gramrels_.end())
      raise(errc::unknown_gramrel, "unknown grammatical relation '" + name + "'");
    return it->second;
  }

  bool has_entry(const std::string& word) const { return entries_.count(word) != 0; }
  bool has_gramrel(const std::string& name) const { return gramrels_.count(name) != 0; }

  std::size_t entry_count() const { return entry_order_.size(); }
  std::size_t gramrel_count() const { return gramrel_order_.size(); }

  /// Declaration orders.
  const std::vector<std::string>& entry_words() const { return entry_order_; }
  const std::vector<std::string>& gramrel_names() const { return gramrel_order_; }

private:
  std::unordered_map<std::string, PredicateEntry> entries_;
  std::vector<std::string> entry_order_;
  std::unordered_map<std::string, GramRelEntry> gramrels_;
  std::vector<std::string> gramrel_order_;
};

}  // namespace cglink
