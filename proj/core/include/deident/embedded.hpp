#pragma once

#include <string_view>

namespace deident::embedded {

// Built-in copies of the data files under core/data/. Every consumer also
// accepts an external file so deployments can override these without a
// rebuild.
std::string_view dictionary();
std::string_view confidentiality_rules();
std::string_view date_time_pairs();
std::string_view safe_private();
std::string_view redaction_templates();

}  // namespace deident::embedded
