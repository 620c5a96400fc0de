#include "deident/dicom/tag.hpp"

#include <cstdio>

namespace deident::dicom {

std::string Tag::to_string() const {
  char buf[10];
  std::snprintf(buf, sizeof(buf), "%04x,%04x", group, element);
  return buf;
}

std::optional<Tag> parse_tag(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  if (text.size() != 9 || text[4] != ',') return std::nullopt;
  auto hex4 = [](std::string_view s) -> std::optional<std::uint16_t> {
    std::uint32_t v = 0;
    for (char c : s) {
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
      else return std::nullopt;
    }
    return static_cast<std::uint16_t>(v);
  };
  auto g = hex4(text.substr(0, 4));
  auto e = hex4(text.substr(5, 4));
  if (!g || !e) return std::nullopt;
  return Tag{*g, *e};
}

}  // namespace deident::dicom
