#include "deident/dicom/element.hpp"

#include <cstring>

#include "deident/dicom/dataset.hpp"
#include "deident/errors.hpp"

namespace deident::dicom {

namespace {

const Element::Bytes kEmptyBytes;
const Element::Items kEmptyItems;

void pad_even(Element::Bytes& bytes, VR vr) {
  if (bytes.size() % 2 != 0) bytes.push_back(vr_pad_byte(vr));
}

std::string_view trim_value(std::string_view v, VR vr) {
  // Trailing padding: space for text, NUL for UI. Leading spaces are
  // significant except that multi-valued fields are commonly padded.
  while (!v.empty() && (v.back() == ' ' || (vr == VR::UI && v.back() == '\0'))) {
    v.remove_suffix(1);
  }
  return v;
}

}  // namespace

Element Element::text(Tag tag, VR vr, std::string_view value) {
  Element e(tag, vr);
  e.set_string(value);
  return e;
}

Element Element::sequence(Tag tag, Items items) {
  Element e(tag, VR::SQ);
  e.undefined_length_ = true;
  e.value_ = std::move(items);
  return e;
}

Element Element::encapsulated(Tag tag, PixelFragments frags) {
  Element e(tag, VR::OB);
  e.undefined_length_ = true;
  e.value_ = std::move(frags);
  return e;
}

bool Element::is_sequence() const { return std::holds_alternative<Items>(value_); }
bool Element::is_pixel_fragments() const { return std::holds_alternative<PixelFragments>(value_); }

const Element::Bytes& Element::raw() const {
  const auto* b = std::get_if<Bytes>(&value_);
  return b != nullptr ? *b : kEmptyBytes;
}

Element::Bytes& Element::raw() {
  if (!std::holds_alternative<Bytes>(value_)) value_ = Bytes{};
  return std::get<Bytes>(value_);
}

std::span<const std::uint8_t> Element::raw_span() const {
  const auto& b = raw();
  return {b.data(), b.size()};
}

const Element::Items& Element::items() const {
  const auto* i = std::get_if<Items>(&value_);
  return i != nullptr ? *i : kEmptyItems;
}

Element::Items& Element::items() {
  if (!std::holds_alternative<Items>(value_)) value_ = Items{};
  return std::get<Items>(value_);
}

const PixelFragments& Element::fragments() const {
  static const PixelFragments kEmpty;
  const auto* f = std::get_if<PixelFragments>(&value_);
  return f != nullptr ? *f : kEmpty;
}

PixelFragments& Element::fragments() {
  if (!std::holds_alternative<PixelFragments>(value_)) value_ = PixelFragments{};
  return std::get<PixelFragments>(value_);
}

bool Element::empty() const {
  if (is_sequence()) return items().empty();
  if (is_pixel_fragments()) return fragments().fragments.empty();
  return raw().empty();
}

std::string Element::as_string() const {
  const auto& bytes = raw();
  std::string_view whole(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  return std::string(trim_value(whole, vr_));
}

std::vector<std::string> Element::string_values() const {
  const auto& bytes = raw();
  std::string_view whole(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  std::vector<std::string> out;
  if (whole.empty()) return out;
  if (vr_is_single_valued_text(vr_)) {
    out.emplace_back(trim_value(whole, vr_));
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto sep = whole.find('\\', start);
    auto piece = whole.substr(start, sep == std::string_view::npos ? whole.size() - start : sep - start);
    out.emplace_back(trim_value(piece, vr_));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

void Element::set_string(std::string_view value) {
  Bytes bytes(value.begin(), value.end());
  pad_even(bytes, vr_);
  value_ = std::move(bytes);
}

void Element::set_strings(const std::vector<std::string>& values) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) joined.push_back('\\');
    joined += values[i];
  }
  set_string(joined);
}

std::optional<std::uint16_t> Element::as_u16(std::size_t index) const {
  const auto& b = raw();
  if (b.size() < (index + 1) * 2) return std::nullopt;
  return static_cast<std::uint16_t>(b[index * 2] | (b[index * 2 + 1] << 8));
}

std::optional<std::uint32_t> Element::as_u32(std::size_t index) const {
  const auto& b = raw();
  if (b.size() < (index + 1) * 4) return std::nullopt;
  return static_cast<std::uint32_t>(b[index * 4]) |
         (static_cast<std::uint32_t>(b[index * 4 + 1]) << 8) |
         (static_cast<std::uint32_t>(b[index * 4 + 2]) << 16) |
         (static_cast<std::uint32_t>(b[index * 4 + 3]) << 24);
}

std::optional<double> Element::as_f64(std::size_t index) const {
  if (vr_ == VR::DS || vr_ == VR::IS) {
    auto values = string_values();
    if (index >= values.size()) return std::nullopt;
    try {
      return std::stod(values[index]);
    } catch (...) {
      return std::nullopt;
    }
  }
  if (vr_ == VR::FL) {
    auto bits = as_u32(index);
    if (!bits) return std::nullopt;
    float f;
    std::memcpy(&f, &*bits, sizeof(f));
    return f;
  }
  if (vr_ == VR::FD) {
    const auto& b = raw();
    if (b.size() < (index + 1) * 8) return std::nullopt;
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[index * 8 + i];
    double d;
    std::memcpy(&d, &bits, sizeof(d));
    return d;
  }
  if (vr_ == VR::US) {
    auto v = as_u16(index);
    if (!v) return std::nullopt;
    return *v;
  }
  if (vr_ == VR::UL) {
    auto v = as_u32(index);
    if (!v) return std::nullopt;
    return *v;
  }
  return std::nullopt;
}

void Element::set_u16(std::uint16_t value) {
  value_ = Bytes{static_cast<std::uint8_t>(value & 0xFF),
                 static_cast<std::uint8_t>(value >> 8)};
}

void Element::set_u32(std::uint32_t value) {
  value_ = Bytes{static_cast<std::uint8_t>(value & 0xFF),
                 static_cast<std::uint8_t>((value >> 8) & 0xFF),
                 static_cast<std::uint8_t>((value >> 16) & 0xFF),
                 static_cast<std::uint8_t>((value >> 24) & 0xFF)};
}

bool Element::operator==(const Element& other) const {
  return tag_ == other.tag_ && vr_ == other.vr_ &&
         undefined_length_ == other.undefined_length_ && value_ == other.value_;
}

}  // namespace deident::dicom
