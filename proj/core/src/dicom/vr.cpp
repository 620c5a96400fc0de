#include "deident/dicom/vr.hpp"

#include <array>

namespace deident::dicom {

namespace {

struct VrInfo {
  VR vr;
  const char* name;
};

constexpr std::array<VrInfo, 34> kVrTable = {{
    {VR::AE, "AE"}, {VR::AS, "AS"}, {VR::AT, "AT"}, {VR::CS, "CS"},
    {VR::DA, "DA"}, {VR::DS, "DS"}, {VR::DT, "DT"}, {VR::FL, "FL"},
    {VR::FD, "FD"}, {VR::IS, "IS"}, {VR::LO, "LO"}, {VR::LT, "LT"},
    {VR::OB, "OB"}, {VR::OD, "OD"}, {VR::OF, "OF"}, {VR::OL, "OL"},
    {VR::OV, "OV"}, {VR::OW, "OW"}, {VR::PN, "PN"}, {VR::SH, "SH"},
    {VR::SL, "SL"}, {VR::SQ, "SQ"}, {VR::SS, "SS"}, {VR::ST, "ST"},
    {VR::SV, "SV"}, {VR::TM, "TM"}, {VR::UC, "UC"}, {VR::UI, "UI"},
    {VR::UL, "UL"}, {VR::UN, "UN"}, {VR::UR, "UR"}, {VR::US, "US"},
    {VR::UT, "UT"}, {VR::UV, "UV"},
}};

}  // namespace

std::string_view vr_name(VR vr) {
  for (const auto& info : kVrTable) {
    if (info.vr == vr) return info.name;
  }
  return "??";
}

std::optional<VR> parse_vr(std::string_view code) {
  for (const auto& info : kVrTable) {
    if (code == info.name) return info.vr;
  }
  return std::nullopt;
}

bool vr_has_long_length(VR vr) {
  switch (vr) {
    case VR::OB: case VR::OD: case VR::OF: case VR::OL: case VR::OV:
    case VR::OW: case VR::SQ: case VR::SV: case VR::UC: case VR::UN:
    case VR::UR: case VR::UT: case VR::UV:
      return true;
    default:
      return false;
  }
}

bool vr_is_text(VR vr) {
  switch (vr) {
    case VR::AE: case VR::AS: case VR::CS: case VR::DA: case VR::DS:
    case VR::DT: case VR::IS: case VR::LO: case VR::LT: case VR::PN:
    case VR::SH: case VR::ST: case VR::TM: case VR::UC: case VR::UI:
    case VR::UR: case VR::UT:
      return true;
    default:
      return false;
  }
}

bool vr_is_cleanable_text(VR vr) {
  switch (vr) {
    case VR::LO: case VR::LT: case VR::PN: case VR::SH: case VR::ST:
    case VR::UC: case VR::UT:
      return true;
    default:
      return false;
  }
}

bool vr_is_single_valued_text(VR vr) {
  switch (vr) {
    case VR::LT: case VR::ST: case VR::UT: case VR::UR:
      return true;
    default:
      return false;
  }
}

bool vr_is_temporal(VR vr) {
  return vr == VR::DA || vr == VR::DT || vr == VR::TM;
}

unsigned vr_word_size(VR vr) {
  switch (vr) {
    case VR::US: case VR::SS: case VR::OW: case VR::AT:
      return 2;
    case VR::UL: case VR::SL: case VR::FL: case VR::OF: case VR::OL:
      return 4;
    case VR::FD: case VR::OD: case VR::UV: case VR::SV: case VR::OV:
      return 8;
    default:
      return 0;
  }
}

std::uint8_t vr_pad_byte(VR vr) {
  if (vr == VR::UI) return 0x00;
  if (vr_is_text(vr)) return ' ';
  return 0x00;
}

std::uint32_t vr_max_value_length(VR vr) {
  switch (vr) {
    case VR::AE: return 16;
    case VR::AS: return 4;
    case VR::CS: return 16;
    case VR::DA: return 8;
    case VR::DS: return 16;
    case VR::DT: return 26;
    case VR::IS: return 12;
    case VR::LO: return 64;
    case VR::LT: return 10240;
    case VR::PN: return 0;  // 64 per component group, checked separately
    case VR::SH: return 16;
    case VR::ST: return 1024;
    case VR::TM: return 16;
    case VR::UI: return 64;
    default: return 0;
  }
}

}  // namespace deident::dicom
