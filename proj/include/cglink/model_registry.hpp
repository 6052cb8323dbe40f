#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cglink/cg.hpp"
#include "cglink/errors.hpp"
#include "cglink/type_hierarchy.hpp"

namespace cglink {

/// Owner type plus its reference model, as returned by inheritance walks.
struct OwnedModel {
  std::string owner;  // the type the model is registered on
  const ReferenceModel* model;
};

/// Registry of reference models attached to concept types: at most one own
/// model per type, head type equal to the key type. Models are inherited
/// down the hierarchy, nearest ancestor first.
class ModelRegistry {
public:
  void register_model(const std::string& type, ReferenceModel model,
                      const TypeHierarchy& types) {
    if (!types.contains(type)) raise(errc::unknown_type, "type '" + type + "' not declared");
    if (model.head_type() != type)
      raise(errc::head_type_mismatch,
            "model head has type '" + model.head_type() + "', expected '" + type + "'");
    if (models_.count(type)) raise(errc::duplicate_model, "type '" + type + "' already has a model");
    models_.emplace(type, std::move(model));
    order_.push_back(type);
  }

  bool has_model(const std::string& type) const { return models_.count(type) != 0; }

  const ReferenceModel* find(const std::string& type) const {
    auto it = models_.find(type);
    return it == models_.end() ? nullptr : &it->second;
  }

  /// Own and inherited models of `type`, strictly ordered by ascending
  /// ancestor distance; types without an own model are skipped.
  std::vector<OwnedModel> inherited_models(const std::string& type,
                                           const TypeHierarchy& types) const {
    std::vector<OwnedModel> out;
    for (const auto& ancestor : types.ancestors(type))
      if (const ReferenceModel* m = find(ancestor)) out.push_back(OwnedModel{ancestor, m});
    return out;
  }

  std::size_t size() const { return order_.size(); }

  /// Registration order.
  const std::vector<std::string>& owners() const { return order_; }

private:
  std::unordered_map<std::string, ReferenceModel> models_;
  std::vector<std::string> order_;
};

}  // namespace cglink
