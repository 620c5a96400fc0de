#include "deident/dicom/validate.hpp"

#include <cctype>

namespace deident::dicom {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static const int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return kDays[month - 1];
}

}  // namespace

bool valid_da(std::string_view value) {
  if (value.size() != 8 || !all_digits(value)) return false;
  int year = to_int(value.substr(0, 4));
  int month = to_int(value.substr(4, 2));
  int day = to_int(value.substr(6, 2));
  if (month < 1 || month > 12) return false;
  if (day < 1 || day > days_in_month(year, month)) return false;
  return true;
}

bool valid_tm(std::string_view value) {
  // HH[MM[SS[.F{1,6}]]]
  std::string_view frac;
  auto dot = value.find('.');
  if (dot != std::string_view::npos) {
    frac = value.substr(dot + 1);
    value = value.substr(0, dot);
    if (value.size() != 6) return false;
    if (frac.empty() || frac.size() > 6 || !all_digits(frac)) return false;
  }
  if (value.size() != 2 && value.size() != 4 && value.size() != 6) return false;
  if (!all_digits(value)) return false;
  int hh = to_int(value.substr(0, 2));
  if (hh > 23) return false;
  if (value.size() >= 4 && to_int(value.substr(2, 2)) > 59) return false;
  if (value.size() >= 6 && to_int(value.substr(4, 2)) > 60) return false;
  return true;
}

bool valid_dt(std::string_view value) {
  // YYYY[MM[DD[HH[MM[SS[.F{1,6}]]]]]][(+|-)ZZXX]
  if (value.size() >= 5) {
    char sign = value[value.size() - 5];
    if (sign == '+' || sign == '-') {
      auto zone = value.substr(value.size() - 4);
      if (!all_digits(zone)) return false;
      if (to_int(zone.substr(0, 2)) > 23 || to_int(zone.substr(2, 2)) > 59) return false;
      value = value.substr(0, value.size() - 5);
    }
  }
  std::string_view frac;
  auto dot = value.find('.');
  if (dot != std::string_view::npos) {
    frac = value.substr(dot + 1);
    value = value.substr(0, dot);
    if (value.size() != 14) return false;
    if (frac.empty() || frac.size() > 6 || !all_digits(frac)) return false;
  }
  if (value.size() < 4 || value.size() > 14 || value.size() % 2 != 0) return false;
  if (!all_digits(value)) return false;
  if (value.size() >= 6) {
    int month = to_int(value.substr(4, 2));
    if (month < 1 || month > 12) return false;
    if (value.size() >= 8) {
      int year = to_int(value.substr(0, 4));
      int day = to_int(value.substr(6, 2));
      if (day < 1 || day > days_in_month(year, month)) return false;
    }
  }
  if (value.size() >= 10 && to_int(value.substr(8, 2)) > 23) return false;
  if (value.size() >= 12 && to_int(value.substr(10, 2)) > 59) return false;
  if (value.size() >= 14 && to_int(value.substr(12, 2)) > 60) return false;
  return true;
}

bool valid_as(std::string_view value) {
  if (value.size() != 4) return false;
  if (!all_digits(value.substr(0, 3))) return false;
  char unit = value[3];
  return unit == 'D' || unit == 'W' || unit == 'M' || unit == 'Y';
}

bool valid_ds_value(std::string_view v) {
  if (v.empty() || v.size() > 16) return false;
  std::size_t i = 0;
  if (v[i] == '+' || v[i] == '-') ++i;
  bool digits = false;
  while (i < v.size() && v[i] >= '0' && v[i] <= '9') { ++i; digits = true; }
  if (i < v.size() && v[i] == '.') {
    ++i;
    while (i < v.size() && v[i] >= '0' && v[i] <= '9') { ++i; digits = true; }
  }
  if (!digits) return false;
  if (i < v.size() && (v[i] == 'e' || v[i] == 'E')) {
    ++i;
    if (i < v.size() && (v[i] == '+' || v[i] == '-')) ++i;
    bool exp_digits = false;
    while (i < v.size() && v[i] >= '0' && v[i] <= '9') { ++i; exp_digits = true; }
    if (!exp_digits) return false;
  }
  return i == v.size();
}

bool valid_is_value(std::string_view v) {
  if (v.empty() || v.size() > 12) return false;
  std::size_t i = 0;
  if (v[i] == '+' || v[i] == '-') ++i;
  if (i == v.size()) return false;
  if (!all_digits(v.substr(i))) return false;
  // Must fit in a signed 32-bit integer.
  try {
    long long value = std::stoll(std::string(v));
    return value >= -2147483648LL && value <= 2147483647LL;
  } catch (...) {
    return false;
  }
}

bool valid_ui(std::string_view v) {
  if (v.empty() || v.size() > 64) return false;
  std::size_t start = 0;
  while (start <= v.size()) {
    auto dot = v.find('.', start);
    auto comp = v.substr(start, dot == std::string_view::npos ? v.size() - start : dot - start);
    if (comp.empty()) return false;
    if (!all_digits(comp)) return false;
    if (comp.size() > 1 && comp[0] == '0') return false;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
    if (start == v.size()) return false;  // trailing dot
  }
  return true;
}

namespace {

bool valid_cs_value(std::string_view v) {
  if (v.size() > 16) return false;
  for (char c : v) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == ' ' || c == '_';
    if (!ok) return false;
  }
  return true;
}

bool has_forbidden_control(std::string_view v, bool allow_breaks) {
  for (char c : v) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 || u == 0x1B) continue;  // printable or ESC (ISO 2022)
    if (allow_breaks && (c == '\n' || c == '\r' || c == '\f' || c == '\t')) continue;
    return true;
  }
  return false;
}

struct Validator {
  std::vector<Violation> violations;

  void add(const std::string& path, const Element& e, ViolationKind kind,
           std::string message) {
    violations.push_back({path, e.tag(), e.vr(), kind, std::move(message)});
  }

  void check_text_values(const std::string& path, const Element& e) {
    auto values = e.string_values();
    auto max_len = vr_max_value_length(e.vr());
    for (const auto& v : values) {
      if (v.empty()) continue;
      switch (e.vr()) {
        case VR::DA:
          if (!valid_da(v)) add(path, e, ViolationKind::Format, "not a valid DA date: '" + v + "'");
          break;
        case VR::TM:
          if (!valid_tm(v)) add(path, e, ViolationKind::Format, "not a valid TM time: '" + v + "'");
          break;
        case VR::DT:
          if (!valid_dt(v)) add(path, e, ViolationKind::Format, "not a valid DT datetime: '" + v + "'");
          break;
        case VR::AS:
          if (!valid_as(v)) add(path, e, ViolationKind::Format, "not a valid AS age: '" + v + "'");
          break;
        case VR::DS:
          if (!valid_ds_value(v)) add(path, e, ViolationKind::Format, "not a valid DS number: '" + v + "'");
          break;
        case VR::IS:
          if (!valid_is_value(v)) add(path, e, ViolationKind::Format, "not a valid IS integer: '" + v + "'");
          break;
        case VR::CS:
          if (!valid_cs_value(v)) add(path, e, ViolationKind::Charset, "invalid CS value: '" + v + "'");
          break;
        case VR::UI:
          if (!valid_ui(v)) add(path, e, ViolationKind::Format, "invalid UID: '" + v + "'");
          break;
        case VR::PN: {
          // 64 max per component group, groups separated by '='.
          std::size_t start = 0;
          bool done = false;
          while (!done) {
            auto eq = v.find('=', start);
            auto group = v.substr(start, eq == std::string::npos ? v.size() - start : eq - start);
            if (group.size() > 64) {
              add(path, e, ViolationKind::Length, "PN component group exceeds 64 chars");
            }
            if (eq == std::string::npos) done = true; else start = eq + 1;
          }
          if (has_forbidden_control(v, false)) {
            add(path, e, ViolationKind::Charset, "control character in PN value");
          }
          break;
        }
        default: {
          if (max_len != 0 && v.size() > max_len) {
            add(path, e, ViolationKind::Length,
                std::string(vr_name(e.vr())) + " value exceeds " + std::to_string(max_len) + " chars");
          }
          bool breaks_ok = vr_is_single_valued_text(e.vr());
          if (has_forbidden_control(v, breaks_ok)) {
            add(path, e, ViolationKind::Charset,
                std::string("control character in ") + std::string(vr_name(e.vr())) + " value");
          }
          break;
        }
      }
    }
  }

  void check_element(const std::string& path, const Element& e) {
    if (e.is_sequence() || e.is_pixel_fragments()) return;
    if (vr_is_text(e.vr())) {
      check_text_values(path, e);
      return;
    }
    unsigned word = vr_word_size(e.vr());
    if (word > 1 && e.raw().size() % word != 0) {
      add(path, e, ViolationKind::Length,
          std::string(vr_name(e.vr())) + " value length not a multiple of " + std::to_string(word));
    }
  }

  void run(const DataSet& ds, const std::string& prefix) {
    for (const auto& e : ds.elements()) {
      std::string path = prefix.empty() ? e.tag().to_string() : prefix + e.tag().to_string();
      check_element(path, e);
      if (e.is_sequence()) {
        for (std::size_t i = 0; i < e.items().size(); ++i) {
          run(e.items()[i], path + "[" + std::to_string(i) + "]/");
        }
      }
    }
  }
};

}  // namespace

std::vector<Violation> validate_vr(const DataSet& ds) {
  Validator v;
  v.run(ds, "");
  return std::move(v.violations);
}

}  // namespace deident::dicom
