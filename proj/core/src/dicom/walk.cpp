#include "deident/dicom/walk.hpp"

namespace deident::dicom {

std::string ElementPath::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    out += step.sequence.to_string();
    out += '[';
    out += std::to_string(step.item_index);
    out += "]/";
  }
  out += leaf.to_string();
  return out;
}

namespace {

DataSet walk_dataset(const DataSet& ds, const WalkVisitor& visitor,
                     ElementPath& path) {
  DataSet out;
  out.set_item_undefined_length(ds.item_undefined_length());
  for (const auto& element : ds.elements()) {
    path.leaf = element.tag();
    EditDirective directive = visitor(path, element);
    if (directive.action == EditAction::Remove) continue;

    Element result = directive.action == EditAction::Replace
                         ? std::move(*directive.replacement)
                         : element;
    if (result.is_sequence()) {
      Element::Items walked;
      walked.reserve(result.items().size());
      for (std::size_t i = 0; i < result.items().size(); ++i) {
        path.steps.push_back({result.tag(), i});
        walked.push_back(walk_dataset(result.items()[i], visitor, path));
        path.steps.pop_back();
      }
      result.items() = std::move(walked);
    }
    out.elements().push_back(std::move(result));
  }
  out.normalize_order();
  return out;
}

}  // namespace

DataSet walk(const DataSet& ds, const WalkVisitor& visitor) {
  ElementPath path;
  return walk_dataset(ds, visitor, path);
}

}  // namespace deident::dicom
