#pragma once

#include <string>
#include <vector>

#include "deident/dicom/dataset.hpp"

namespace deident::dicom {

enum class ViolationKind { Format, Length, Charset };

struct Violation {
  std::string path;
  Tag tag;
  VR vr;
  ViolationKind kind;
  std::string message;
};

/// Checks every element (at every depth) against its VR's charset, length
/// and format rules. Never throws; returns one Violation per offence.
std::vector<Violation> validate_vr(const DataSet& ds);

/// Single-value format predicates, shared with the rule engine and tests.
bool valid_da(std::string_view value);
bool valid_tm(std::string_view value);
bool valid_dt(std::string_view value);
bool valid_as(std::string_view value);
bool valid_ds_value(std::string_view value);
bool valid_is_value(std::string_view value);
bool valid_ui(std::string_view value);

}  // namespace deident::dicom
