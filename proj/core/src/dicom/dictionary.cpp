#include "deident/dicom/dictionary.hpp"

#include <algorithm>
#include <cctype>

#include "deident/embedded.hpp"
#include "deident/errors.hpp"

namespace deident::dicom {

namespace {

// Parses "gggg,eeee" where hex digits may be the wildcard 'x'.
struct MaskedTag {
  Tag tag;
  std::uint16_t group_mask;
  std::uint16_t element_mask;
};

std::optional<MaskedTag> parse_masked_tag(std::string_view text) {
  if (text.size() != 9 || text[4] != ',') return std::nullopt;
  auto part = [](std::string_view s, std::uint16_t& value, std::uint16_t& mask) {
    value = 0;
    mask = 0;
    for (char c : s) {
      value <<= 4;
      mask <<= 4;
      if (c == 'x' || c == 'X') continue;
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else return false;
      value |= static_cast<std::uint16_t>(digit);
      mask |= 0xF;
    }
    return true;
  };
  MaskedTag out;
  if (!part(text.substr(0, 4), out.tag.group, out.group_mask)) return std::nullopt;
  if (!part(text.substr(5, 4), out.tag.element, out.element_mask)) return std::nullopt;
  return out;
}

}  // namespace

Dictionary Dictionary::from_text(std::string_view tsv) {
  Dictionary dict;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < tsv.size()) {
    auto eol = tsv.find('\n', pos);
    std::string_view line = tsv.substr(pos, eol == std::string_view::npos ? tsv.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? tsv.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto t1 = line.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t1 == std::string_view::npos || t2 == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError,
                  "dictionary line " + std::to_string(line_no) + ": expected 3 tab-delimited fields");
    }
    auto masked = parse_masked_tag(line.substr(0, t1));
    auto vr = parse_vr(line.substr(t1 + 1, t2 - t1 - 1));
    if (!masked || !vr) {
      throw Error(ErrorCode::ConfigError,
                  "dictionary line " + std::to_string(line_no) + ": bad tag or VR");
    }
    DictionaryEntry entry;
    entry.tag = masked->tag;
    entry.group_mask = masked->group_mask;
    entry.element_mask = masked->element_mask;
    entry.vr = *vr;
    entry.keyword = std::string(line.substr(t2 + 1));
    if (entry.group_mask == 0xFFFF && entry.element_mask == 0xFFFF) {
      dict.exact_.push_back(std::move(entry));
    } else {
      dict.masked_.push_back(std::move(entry));
    }
  }
  std::sort(dict.exact_.begin(), dict.exact_.end(),
            [](const DictionaryEntry& a, const DictionaryEntry& b) { return a.tag < b.tag; });
  return dict;
}

const Dictionary& Dictionary::standard() {
  static const Dictionary instance = from_text(embedded::dictionary());
  return instance;
}

const DictionaryEntry* Dictionary::find(Tag tag) const {
  auto it = std::lower_bound(exact_.begin(), exact_.end(), tag,
                             [](const DictionaryEntry& e, Tag t) { return e.tag < t; });
  if (it != exact_.end() && it->tag == tag) return &*it;
  for (const auto& entry : masked_) {
    if (entry.matches(tag)) return &entry;
  }
  return nullptr;
}

std::optional<VR> Dictionary::vr_of(Tag tag) const {
  const auto* entry = find(tag);
  if (entry == nullptr) return std::nullopt;
  return entry->vr;
}

std::string Dictionary::keyword_of(Tag tag) const {
  const auto* entry = find(tag);
  return entry == nullptr ? std::string{} : entry->keyword;
}

}  // namespace deident::dicom
