#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deident/dicom/tag.hpp"
#include "deident/dicom/vr.hpp"

namespace deident::dicom {

class DataSet;

/// Encapsulated (compressed) pixel data: basic offset table + fragments.
struct PixelFragments {
  std::vector<std::uint32_t> offset_table;
  std::vector<std::vector<std::uint8_t>> fragments;

  bool operator==(const PixelFragments&) const = default;
};

/// A single data element: tag, VR, and a value that is raw bytes, a list
/// of sequence items (each a DataSet), or encapsulated pixel fragments.
///
/// Raw byte values are stored exactly as encoded (even length, padded),
/// in little-endian word order for binary numeric VRs.
class Element {
 public:
  using Bytes = std::vector<std::uint8_t>;
  using Items = std::vector<DataSet>;

  Element() = default;
  Element(Tag tag, VR vr) : tag_(tag), vr_(vr) {}
  Element(Tag tag, VR vr, Bytes raw) : tag_(tag), vr_(vr), value_(std::move(raw)) {}

  static Element text(Tag tag, VR vr, std::string_view value);
  static Element sequence(Tag tag, Items items = {});
  static Element encapsulated(Tag tag, PixelFragments frags);

  Tag tag() const { return tag_; }
  VR vr() const { return vr_; }
  void set_vr(VR vr) { vr_ = vr; }

  bool is_sequence() const;
  bool is_pixel_fragments() const;

  /// Encoded with undefined length (sequences, encapsulated pixel data).
  bool undefined_length() const { return undefined_length_; }
  void set_undefined_length(bool v) { undefined_length_ = v; }

  const Bytes& raw() const;
  Bytes& raw();
  std::span<const std::uint8_t> raw_span() const;

  const Items& items() const;
  Items& items();

  const PixelFragments& fragments() const;
  PixelFragments& fragments();

  bool empty() const;

  /// Whole value as text with trailing pad stripped (text VRs).
  std::string as_string() const;
  /// Backslash-separated values, each trimmed of trailing pad.
  std::vector<std::string> string_values() const;
  void set_string(std::string_view value);
  void set_strings(const std::vector<std::string>& values);

  std::optional<std::uint16_t> as_u16(std::size_t index = 0) const;
  std::optional<std::uint32_t> as_u32(std::size_t index = 0) const;
  std::optional<double> as_f64(std::size_t index = 0) const;
  void set_u16(std::uint16_t value);
  void set_u32(std::uint32_t value);

  bool operator==(const Element&) const;

 private:
  Tag tag_;
  VR vr_ = VR::UN;
  bool undefined_length_ = false;
  std::variant<Bytes, Items, PixelFragments> value_;
};

}  // namespace deident::dicom
