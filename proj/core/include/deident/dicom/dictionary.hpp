#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deident/dicom/tag.hpp"
#include "deident/dicom/vr.hpp"

namespace deident::dicom {

struct DictionaryEntry {
  Tag tag;              // 'x' wildcard digits stored as the mask below
  std::uint16_t group_mask = 0xFFFF;
  std::uint16_t element_mask = 0xFFFF;
  VR vr = VR::UN;
  std::string keyword;

  bool matches(Tag t) const {
    return (t.group & group_mask) == (tag.group & group_mask) &&
           (t.element & element_mask) == (tag.element & element_mask);
  }
};

/// Tag lookup over the standard data dictionary. The default instance is
/// built from a table embedded at compile time; alternates can be loaded
/// from the same tab-delimited format at runtime.
class Dictionary {
 public:
  static const Dictionary& standard();
  static Dictionary from_text(std::string_view tsv);

  const DictionaryEntry* find(Tag tag) const;
  std::optional<VR> vr_of(Tag tag) const;
  std::string keyword_of(Tag tag) const;  // empty when unknown

  std::size_t size() const { return exact_.size() + masked_.size(); }

 private:
  std::vector<DictionaryEntry> exact_;   // sorted by tag
  std::vector<DictionaryEntry> masked_;  // wildcard rows, linear scan
};

}  // namespace deident::dicom
