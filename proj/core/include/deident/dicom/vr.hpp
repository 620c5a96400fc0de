#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace deident::dicom {

/// Value Representation: DICOM's per-element type code.
enum class VR : std::uint8_t {
  AE, AS, AT, CS, DA, DS, DT, FL, FD, IS, LO, LT, OB, OD, OF, OL, OV, OW,
  PN, SH, SL, SQ, SS, ST, SV, TM, UC, UI, UL, UN, UR, US, UT, UV,
};

std::string_view vr_name(VR vr);
std::optional<VR> parse_vr(std::string_view code);

/// VRs whose explicit encoding uses a 2-byte reserved field and 32-bit length.
bool vr_has_long_length(VR vr);

/// Text-family VRs: values are character data, multi-valued via backslash.
bool vr_is_text(VR vr);

/// Subset of text VRs that carry free-form descriptive text (CLEAN targets).
bool vr_is_cleanable_text(VR vr);

/// Text VRs that never carry a backslash value separator (single-valued).
bool vr_is_single_valued_text(VR vr);

/// Date/time family (DA, DT, TM).
bool vr_is_temporal(VR vr);

/// Fixed word size in bytes for binary numeric VRs; 0 for others.
/// Used both for value-length validation and byte swapping.
unsigned vr_word_size(VR vr);

/// Padding byte used to even-pad values: '\0' for UI and binary, ' ' for text.
std::uint8_t vr_pad_byte(VR vr);

/// Maximum encoded length of a single value in bytes (0 = no fixed cap).
std::uint32_t vr_max_value_length(VR vr);

}  // namespace deident::dicom
