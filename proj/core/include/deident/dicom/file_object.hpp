#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "deident/dicom/dataset.hpp"
#include "deident/dicom/transfer_syntax.hpp"

namespace deident::dicom {

/// A DICOM Part 10 file: preamble + "DICM" + file meta (group 0002) + body.
struct FileObject {
  std::array<std::uint8_t, 128> preamble{};
  bool has_preamble = true;  // false when parsed in raw-dataset fallback mode
  DataSet meta;
  DataSet body;
  TransferSyntax transfer_syntax = TransferSyntax::ExplicitVRLittleEndian;
  std::string transfer_syntax_uid_raw;  // as read, for quarantine reporting
};

struct ParseOptions {
  /// Accept a bare dataset with no preamble/magic (tried as explicit then
  /// implicit little-endian).
  bool allow_raw_dataset = false;
};

FileObject parse_file(std::span<const std::uint8_t> bytes, const ParseOptions& options = {});
FileObject parse_file(const std::filesystem::path& path, const ParseOptions& options = {});

std::vector<std::uint8_t> serialize(const FileObject& file);
void write_file(const FileObject& file, const std::filesystem::path& path);

/// Serializes a bare dataset in the given transfer syntax (no preamble or
/// file meta); used for nested re-encoding and tests.
std::vector<std::uint8_t> serialize_dataset(const DataSet& ds, TransferSyntax ts);

}  // namespace deident::dicom
