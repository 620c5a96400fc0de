#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deident/dicom/dataset.hpp"

namespace deident::dicom {

/// Location of an element inside a nested dataset: the chain of enclosing
/// (sequence tag, item index) pairs plus the element's own tag.
struct ElementPath {
  struct Step {
    Tag sequence;
    std::size_t item_index;
  };
  std::vector<Step> steps;
  Tag leaf;

  std::size_t depth() const { return steps.size(); }
  /// e.g. "0008,1140[2]/0008,1155"
  std::string to_string() const;
};

enum class EditAction { Keep, Remove, Replace };

struct EditDirective {
  EditAction action = EditAction::Keep;
  std::optional<Element> replacement;

  static EditDirective keep() { return {}; }
  static EditDirective remove() { return {EditAction::Remove, std::nullopt}; }
  static EditDirective replace(Element e) {
    return {EditAction::Replace, std::move(e)};
  }
};

using WalkVisitor = std::function<EditDirective(const ElementPath&, const Element&)>;

/// Depth-first visit of every element at every nesting level. The visitor
/// may keep, remove, or replace each element; sequence children of a kept
/// or replaced element are then visited. Tag order is re-established at
/// every level of the result.
DataSet walk(const DataSet& ds, const WalkVisitor& visitor);

}  // namespace deident::dicom
