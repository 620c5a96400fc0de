#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deident/dicom/element.hpp"

namespace deident::dicom {

/// A tag-ordered collection of elements; sequence elements nest DataSets,
/// so the whole structure is a finite tree.
class DataSet {
 public:
  DataSet() = default;

  const std::vector<Element>& elements() const { return elements_; }
  std::vector<Element>& elements() { return elements_; }

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }

  const Element* find(Tag tag) const;
  Element* find(Tag tag);
  bool contains(Tag tag) const { return find(tag) != nullptr; }

  /// Inserts or replaces, keeping tag order.
  void set(Element element);
  void set_string(Tag tag, VR vr, std::string_view value);
  void set_u16(Tag tag, VR vr, std::uint16_t value);

  /// Removes the element if present; returns true when removed.
  bool remove(Tag tag);

  /// Value of a text element, or empty when absent.
  std::string string_of(Tag tag) const;
  std::optional<std::uint16_t> u16_of(Tag tag) const;

  /// Re-establishes strict ascending tag order at this level (stable;
  /// duplicates keep the first occurrence).
  void normalize_order();

  /// When this dataset is a sequence item: was it encoded with undefined
  /// length. Preserved so an unmodified parse/serialize round trip is
  /// byte-identical.
  bool item_undefined_length() const { return item_undefined_length_; }
  void set_item_undefined_length(bool v) { item_undefined_length_ = v; }

  bool operator==(const DataSet&) const;

 private:
  std::vector<Element> elements_;
  bool item_undefined_length_ = true;
};

}  // namespace deident::dicom
