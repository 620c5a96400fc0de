#include "deident/embedded.hpp"

namespace deident::embedded {

extern const char* const dictionary_tsv;
extern const char* const confidentiality_rules_tsv;
extern const char* const date_time_pairs_tsv;
extern const char* const safe_private_tsv;
extern const char* const redaction_templates_tsv;

std::string_view dictionary() { return dictionary_tsv; }
std::string_view confidentiality_rules() { return confidentiality_rules_tsv; }
std::string_view date_time_pairs() { return date_time_pairs_tsv; }
std::string_view safe_private() { return safe_private_tsv; }
std::string_view redaction_templates() { return redaction_templates_tsv; }

}  // namespace deident::embedded
