#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace deident::dicom {

/// A data element tag: (group, element), totally ordered.
struct Tag {
  std::uint16_t group = 0;
  std::uint16_t element = 0;

  constexpr Tag() = default;
  constexpr Tag(std::uint16_t g, std::uint16_t e) : group(g), element(e) {}

  friend constexpr auto operator<=>(const Tag&, const Tag&) = default;

  constexpr bool is_private() const { return (group & 1u) != 0 && group > 0x0008; }

  /// Private creator slots live at (gggg,0010)..(gggg,00FF).
  constexpr bool is_private_creator() const {
    return is_private() && element >= 0x0010 && element <= 0x00FF;
  }

  /// Block byte "xx" of a private data element tag (gggg,xxee).
  constexpr std::uint8_t private_block() const {
    return static_cast<std::uint8_t>(element >> 8);
  }
  constexpr std::uint8_t private_low_byte() const {
    return static_cast<std::uint8_t>(element & 0xFF);
  }

  constexpr bool is_file_meta() const { return group == 0x0002; }
  constexpr bool is_group_length() const { return element == 0x0000; }

  /// "gggg,eeee" with lowercase hex.
  std::string to_string() const;
};

/// Parses "gggg,eeee" or "(gggg,eeee)"; returns nullopt on malformed input.
std::optional<Tag> parse_tag(std::string_view text);

// Tags referenced directly by the engine.
namespace tags {
inline constexpr Tag kFileMetaGroupLength{0x0002, 0x0000};
inline constexpr Tag kFileMetaVersion{0x0002, 0x0001};
inline constexpr Tag kMediaStorageSOPClassUID{0x0002, 0x0002};
inline constexpr Tag kMediaStorageSOPInstanceUID{0x0002, 0x0003};
inline constexpr Tag kTransferSyntaxUID{0x0002, 0x0010};
inline constexpr Tag kImplementationClassUID{0x0002, 0x0012};
inline constexpr Tag kImplementationVersionName{0x0002, 0x0013};

inline constexpr Tag kSpecificCharacterSet{0x0008, 0x0005};
inline constexpr Tag kSOPClassUID{0x0008, 0x0016};
inline constexpr Tag kSOPInstanceUID{0x0008, 0x0018};
inline constexpr Tag kStudyDate{0x0008, 0x0020};
inline constexpr Tag kSeriesDate{0x0008, 0x0021};
inline constexpr Tag kAcquisitionDate{0x0008, 0x0022};
inline constexpr Tag kContentDate{0x0008, 0x0023};
inline constexpr Tag kStudyTime{0x0008, 0x0030};
inline constexpr Tag kSeriesTime{0x0008, 0x0031};
inline constexpr Tag kAcquisitionTime{0x0008, 0x0032};
inline constexpr Tag kContentTime{0x0008, 0x0033};
inline constexpr Tag kAccessionNumber{0x0008, 0x0050};
inline constexpr Tag kModality{0x0008, 0x0060};
inline constexpr Tag kConversionType{0x0008, 0x0064};
inline constexpr Tag kManufacturer{0x0008, 0x0070};
inline constexpr Tag kReferringPhysicianName{0x0008, 0x0090};
inline constexpr Tag kStationName{0x0008, 0x1010};
inline constexpr Tag kStudyDescription{0x0008, 0x1030};
inline constexpr Tag kSeriesDescription{0x0008, 0x103E};
inline constexpr Tag kManufacturerModelName{0x0008, 0x1090};
inline constexpr Tag kReferencedImageSequence{0x0008, 0x1140};
inline constexpr Tag kReferencedSOPClassUID{0x0008, 0x1150};
inline constexpr Tag kReferencedSOPInstanceUID{0x0008, 0x1155};
inline constexpr Tag kSourceImageSequence{0x0008, 0x2112};

inline constexpr Tag kPatientName{0x0010, 0x0010};
inline constexpr Tag kPatientID{0x0010, 0x0020};
inline constexpr Tag kPatientBirthDate{0x0010, 0x0030};
inline constexpr Tag kPatientSex{0x0010, 0x0040};
inline constexpr Tag kOtherPatientIDs{0x0010, 0x1000};
inline constexpr Tag kOtherPatientNames{0x0010, 0x1001};
inline constexpr Tag kPatientAge{0x0010, 0x1010};
inline constexpr Tag kPatientSize{0x0010, 0x1020};
inline constexpr Tag kPatientWeight{0x0010, 0x1030};

inline constexpr Tag kClinicalTrialSubjectID{0x0012, 0x0040};
inline constexpr Tag kPatientIdentityRemoved{0x0012, 0x0062};
inline constexpr Tag kDeidentificationMethod{0x0012, 0x0063};
inline constexpr Tag kDeidentificationMethodCodeSequence{0x0012, 0x0064};

inline constexpr Tag kBodyPartExamined{0x0018, 0x0015};
inline constexpr Tag kDeviceSerialNumber{0x0018, 0x1000};
inline constexpr Tag kProtocolName{0x0018, 0x1030};
inline constexpr Tag kRadiopharmaceuticalStartTime{0x0018, 0x1072};
inline constexpr Tag kContributingEquipmentSequence{0x0018, 0xA001};
inline constexpr Tag kContributionDescription{0x0018, 0xA003};

inline constexpr Tag kStudyInstanceUID{0x0020, 0x000D};
inline constexpr Tag kSeriesInstanceUID{0x0020, 0x000E};
inline constexpr Tag kStudyID{0x0020, 0x0010};
inline constexpr Tag kFrameOfReferenceUID{0x0020, 0x0052};

inline constexpr Tag kSamplesPerPixel{0x0028, 0x0002};
inline constexpr Tag kPhotometricInterpretation{0x0028, 0x0004};
inline constexpr Tag kPlanarConfiguration{0x0028, 0x0006};
inline constexpr Tag kNumberOfFrames{0x0028, 0x0008};
inline constexpr Tag kRows{0x0028, 0x0010};
inline constexpr Tag kColumns{0x0028, 0x0011};
inline constexpr Tag kBitsAllocated{0x0028, 0x0100};
inline constexpr Tag kBitsStored{0x0028, 0x0101};
inline constexpr Tag kHighBit{0x0028, 0x0102};
inline constexpr Tag kPixelRepresentation{0x0028, 0x0103};
inline constexpr Tag kBurnedInAnnotation{0x0028, 0x0301};

inline constexpr Tag kCodeValue{0x0008, 0x0100};
inline constexpr Tag kCodingSchemeDesignator{0x0008, 0x0102};
inline constexpr Tag kCodeMeaning{0x0008, 0x0104};
inline constexpr Tag kPurposeOfReferenceCodeSequence{0x0040, 0xA170};

inline constexpr Tag kRadiopharmaceuticalInformationSequence{0x0054, 0x0016};

inline constexpr Tag kPixelData{0x7FE0, 0x0010};
inline constexpr Tag kDataSetTrailingPadding{0xFFFC, 0xFFFC};

inline constexpr Tag kItem{0xFFFE, 0xE000};
inline constexpr Tag kItemDelimitation{0xFFFE, 0xE00D};
inline constexpr Tag kSequenceDelimitation{0xFFFE, 0xE0DD};
}  // namespace tags

}  // namespace deident::dicom
