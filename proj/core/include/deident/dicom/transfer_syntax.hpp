#pragma once

#include <string>
#include <string_view>

namespace deident::dicom {

enum class TransferSyntax {
  ImplicitVRLittleEndian,
  ExplicitVRLittleEndian,
  ExplicitVRBigEndian,
  JpegBaseline,         // 1.2.840.10008.1.2.4.50
  JpegExtended,         // .51
  JpegLossless,         // .57
  JpegLosslessSV1,      // .70
  Jpeg2000Lossless,     // .90
  Jpeg2000,             // .91
  RLELossless,          // 1.2.840.10008.1.2.5
  Unknown,
};

TransferSyntax transfer_syntax_from_uid(std::string_view uid);
std::string_view transfer_syntax_uid(TransferSyntax ts);

bool ts_is_supported(TransferSyntax ts);
bool ts_explicit_vr(TransferSyntax ts);
bool ts_big_endian(TransferSyntax ts);
bool ts_encapsulated(TransferSyntax ts);
/// ITU T.81 marker-segment family (EXIF/COM scrubbing applies).
bool ts_jpeg_family(TransferSyntax ts);

inline constexpr std::string_view kUidImplicitVRLittleEndian = "1.2.840.10008.1.2";
inline constexpr std::string_view kUidExplicitVRLittleEndian = "1.2.840.10008.1.2.1";
inline constexpr std::string_view kUidExplicitVRBigEndian = "1.2.840.10008.1.2.2";
inline constexpr std::string_view kUidJpegBaseline = "1.2.840.10008.1.2.4.50";

}  // namespace deident::dicom
