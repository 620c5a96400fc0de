#include "deident/dicom/transfer_syntax.hpp"

namespace deident::dicom {

namespace {
struct TsRow {
  TransferSyntax ts;
  std::string_view uid;
};
constexpr TsRow kRows[] = {
    {TransferSyntax::ImplicitVRLittleEndian, "1.2.840.10008.1.2"},
    {TransferSyntax::ExplicitVRLittleEndian, "1.2.840.10008.1.2.1"},
    {TransferSyntax::ExplicitVRBigEndian, "1.2.840.10008.1.2.2"},
    {TransferSyntax::JpegBaseline, "1.2.840.10008.1.2.4.50"},
    {TransferSyntax::JpegExtended, "1.2.840.10008.1.2.4.51"},
    {TransferSyntax::JpegLossless, "1.2.840.10008.1.2.4.57"},
    {TransferSyntax::JpegLosslessSV1, "1.2.840.10008.1.2.4.70"},
    {TransferSyntax::Jpeg2000Lossless, "1.2.840.10008.1.2.4.90"},
    {TransferSyntax::Jpeg2000, "1.2.840.10008.1.2.4.91"},
    {TransferSyntax::RLELossless, "1.2.840.10008.1.2.5"},
};
}  // namespace

TransferSyntax transfer_syntax_from_uid(std::string_view uid) {
  for (const auto& row : kRows) {
    if (row.uid == uid) return row.ts;
  }
  return TransferSyntax::Unknown;
}

std::string_view transfer_syntax_uid(TransferSyntax ts) {
  for (const auto& row : kRows) {
    if (row.ts == ts) return row.uid;
  }
  return {};
}

bool ts_is_supported(TransferSyntax ts) { return ts != TransferSyntax::Unknown; }

bool ts_explicit_vr(TransferSyntax ts) {
  return ts != TransferSyntax::ImplicitVRLittleEndian;
}

bool ts_big_endian(TransferSyntax ts) {
  return ts == TransferSyntax::ExplicitVRBigEndian;
}

bool ts_encapsulated(TransferSyntax ts) {
  switch (ts) {
    case TransferSyntax::JpegBaseline:
    case TransferSyntax::JpegExtended:
    case TransferSyntax::JpegLossless:
    case TransferSyntax::JpegLosslessSV1:
    case TransferSyntax::Jpeg2000Lossless:
    case TransferSyntax::Jpeg2000:
    case TransferSyntax::RLELossless:
      return true;
    default:
      return false;
  }
}

bool ts_jpeg_family(TransferSyntax ts) {
  switch (ts) {
    case TransferSyntax::JpegBaseline:
    case TransferSyntax::JpegExtended:
    case TransferSyntax::JpegLossless:
    case TransferSyntax::JpegLosslessSV1:
      return true;
    default:
      return false;
  }
}

}  // namespace deident::dicom
