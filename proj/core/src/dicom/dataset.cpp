#include "deident/dicom/dataset.hpp"

#include <algorithm>

namespace deident::dicom {

const Element* DataSet::find(Tag tag) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), tag,
                             [](const Element& e, Tag t) { return e.tag() < t; });
  if (it != elements_.end() && it->tag() == tag) return &*it;
  return nullptr;
}

Element* DataSet::find(Tag tag) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), tag,
                             [](const Element& e, Tag t) { return e.tag() < t; });
  if (it != elements_.end() && it->tag() == tag) return &*it;
  return nullptr;
}

void DataSet::set(Element element) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), element.tag(),
                             [](const Element& e, Tag t) { return e.tag() < t; });
  if (it != elements_.end() && it->tag() == element.tag()) {
    *it = std::move(element);
  } else {
    elements_.insert(it, std::move(element));
  }
}

void DataSet::set_string(Tag tag, VR vr, std::string_view value) {
  set(Element::text(tag, vr, value));
}

void DataSet::set_u16(Tag tag, VR vr, std::uint16_t value) {
  Element e(tag, vr);
  e.set_u16(value);
  set(std::move(e));
}

bool DataSet::remove(Tag tag) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), tag,
                             [](const Element& e, Tag t) { return e.tag() < t; });
  if (it != elements_.end() && it->tag() == tag) {
    elements_.erase(it);
    return true;
  }
  return false;
}

std::string DataSet::string_of(Tag tag) const {
  const auto* e = find(tag);
  return e == nullptr ? std::string{} : e->as_string();
}

std::optional<std::uint16_t> DataSet::u16_of(Tag tag) const {
  const auto* e = find(tag);
  return e == nullptr ? std::nullopt : e->as_u16();
}

void DataSet::normalize_order() {
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const Element& a, const Element& b) { return a.tag() < b.tag(); });
  auto last = std::unique(elements_.begin(), elements_.end(),
                          [](const Element& a, const Element& b) { return a.tag() == b.tag(); });
  elements_.erase(last, elements_.end());
  for (auto& e : elements_) {
    if (e.is_sequence()) {
      for (auto& item : e.items()) item.normalize_order();
    }
  }
}

bool DataSet::operator==(const DataSet& other) const {
  return elements_ == other.elements_ &&
         item_undefined_length_ == other.item_undefined_length_;
}

}  // namespace deident::dicom
