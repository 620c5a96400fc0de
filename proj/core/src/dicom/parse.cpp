#include <cstring>
#include <fstream>

#include "deident/dicom/dictionary.hpp"
#include "deident/dicom/file_object.hpp"
#include "deident/errors.hpp"

namespace deident::dicom {

namespace {

constexpr std::uint32_t kUndefinedLength = 0xFFFFFFFFu;
constexpr int kMaxDepth = 64;

class Reader {
 public:
  Reader(std::span<const std::uint8_t> data, bool big_endian)
      : data_(data), big_endian_(big_endian) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  bool at_end() const { return pos_ >= data_.size(); }

  void need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(ErrorCode::TruncatedStream,
                  std::string("stream ends inside ") + what);
    }
  }

  std::uint8_t u8(const char* what) {
    need(1, what);
    return data_[pos_++];
  }

  std::uint16_t u16(const char* what) {
    need(2, what);
    std::uint16_t v;
    if (big_endian_) {
      v = static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
    } else {
      v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
    }
    pos_ += 2;
    return v;
  }

  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    if (big_endian_) {
      for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + static_cast<std::size_t>(i)];
    } else {
      for (int i = 3; i >= 0; --i) v = (v << 8) | data_[pos_ + static_cast<std::size_t>(i)];
    }
    pos_ += 4;
    return v;
  }

  std::span<const std::uint8_t> bytes(std::size_t n, const char* what) {
    need(n, what);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }

  Tag peek_tag() const {
    need(4, "tag");
    if (big_endian_) {
      return Tag{static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]),
                 static_cast<std::uint16_t>((data_[pos_ + 2] << 8) | data_[pos_ + 3])};
    }
    return Tag{static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8)),
               static_cast<std::uint16_t>(data_[pos_ + 2] | (data_[pos_ + 3] << 8))};
  }

  Tag tag(const char* what) {
    auto t = peek_tag();
    (void)what;
    pos_ += 4;
    return t;
  }

  bool big_endian() const { return big_endian_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  bool big_endian_;
};

// Byte-swaps a big-endian value buffer into canonical little-endian word
// order. UN and OB are left untouched (word size 0).
void swap_to_le(Element::Bytes& bytes, VR vr) {
  unsigned word = vr_word_size(vr);
  if (word < 2 || bytes.size() % word != 0) return;
  for (std::size_t i = 0; i + word <= bytes.size(); i += word) {
    for (unsigned j = 0; j < word / 2; ++j) {
      std::swap(bytes[i + j], bytes[i + word - 1 - j]);
    }
  }
}

struct SyntaxMode {
  bool explicit_vr = true;
  bool big_endian = false;
};

class DatasetParser {
 public:
  explicit DatasetParser(SyntaxMode mode) : mode_(mode) {}

  DataSet parse(std::span<const std::uint8_t> data, int depth) const {
    Reader reader(data, mode_.big_endian);
    DataSet ds;
    while (!reader.at_end()) {
      ds.elements().push_back(parse_element(reader, depth));
    }
    return ds;
  }

  Element parse_element(Reader& reader, int depth) const {
    if (depth > kMaxDepth) {
      throw Error(ErrorCode::TruncatedStream, "sequence nesting too deep");
    }
    Tag tag = reader.tag("element tag");
    VR vr = VR::UN;
    std::uint32_t length = 0;
    bool vr_known = false;

    if (mode_.explicit_vr) {
      reader.need(2, "VR");
      auto raw_vr = reader.bytes(2, "VR");
      std::string_view code(reinterpret_cast<const char*>(raw_vr.data()), 2);
      auto parsed = parse_vr(code);
      if (!parsed) {
        throw Error(ErrorCode::TruncatedStream,
                    "unrecognized VR '" + std::string(code) + "' at tag " + tag.to_string());
      }
      vr = *parsed;
      vr_known = true;
      if (vr_has_long_length(vr)) {
        reader.u16("reserved");
        length = reader.u32("length");
      } else {
        length = reader.u16("length");
      }
    } else {
      length = reader.u32("length");
      auto dict_vr = Dictionary::standard().vr_of(tag);
      if (dict_vr) {
        vr = *dict_vr;
        vr_known = true;
      } else {
        vr = VR::UN;
      }
    }

    // Sequences: explicit SQ, undefined-length UN (parsed as implicit SQ),
    // or implicit-VR elements the dictionary knows to be SQ.
    bool is_sequence = (vr == VR::SQ) ||
                       (vr == VR::UN && length == kUndefinedLength);
    bool is_encapsulated = tag == tags::kPixelData && length == kUndefinedLength && vr != VR::SQ;

    if (is_encapsulated) {
      Element e(tag, vr);
      e.set_undefined_length(true);
      parse_fragments(reader, e);
      return e;
    }

    if (is_sequence) {
      Element e(tag, vr);
      // Undefined-length UN sequences are always implicit little-endian.
      SyntaxMode item_mode = mode_;
      if (vr == VR::UN) item_mode = SyntaxMode{false, false};
      DatasetParser item_parser(item_mode);
      if (length == kUndefinedLength) {
        e.set_undefined_length(true);
        item_parser.parse_items_undefined(reader, e.items(), depth + 1);
      } else {
        e.set_undefined_length(false);
        Reader sub(reader.bytes(length, "sequence value"), item_mode.big_endian);
        item_parser.parse_items_defined(sub, e.items(), depth + 1);
      }
      return e;
    }

    if (length == kUndefinedLength) {
      throw Error(ErrorCode::TruncatedStream,
                  "undefined length on non-sequence tag " + tag.to_string());
    }

    auto value = reader.bytes(length, "element value");
    Element e(tag, vr);
    if (!vr_known) e.set_vr(VR::UN);
    e.raw().assign(value.begin(), value.end());
    if (mode_.big_endian && vr != VR::UN) swap_to_le(e.raw(), vr);
    return e;
  }

 private:
  void parse_items_defined(Reader& reader, Element::Items& items, int depth) const {
    while (!reader.at_end()) {
      parse_one_item(reader, items, depth);
    }
  }

  void parse_items_undefined(Reader& reader, Element::Items& items, int depth) const {
    while (true) {
      Tag t = reader.peek_tag();
      if (t == tags::kSequenceDelimitation) {
        reader.tag("sequence delimiter");
        reader.u32("sequence delimiter length");
        return;
      }
      parse_one_item(reader, items, depth);
    }
  }

  void parse_one_item(Reader& reader, Element::Items& items, int depth) const {
    Tag t = reader.tag("item tag");
    if (t != tags::kItem) {
      throw Error(ErrorCode::TruncatedStream,
                  "expected sequence item, found " + t.to_string());
    }
    std::uint32_t len = reader.u32("item length");
    DataSet item;
    if (len == kUndefinedLength) {
      item.set_item_undefined_length(true);
      while (true) {
        Tag next = reader.peek_tag();
        if (next == tags::kItemDelimitation) {
          reader.tag("item delimiter");
          reader.u32("item delimiter length");
          break;
        }
        item.elements().push_back(parse_element(reader, depth));
      }
    } else {
      item.set_item_undefined_length(false);
      Reader sub(reader.bytes(len, "item value"), mode_.big_endian);
      while (!sub.at_end()) {
        item.elements().push_back(parse_element(sub, depth));
      }
    }
    items.push_back(std::move(item));
  }

  void parse_fragments(Reader& reader, Element& e) const {
    PixelFragments frags;
    bool first = true;
    while (true) {
      Tag t = reader.tag("fragment item tag");
      if (t == tags::kSequenceDelimitation) {
        reader.u32("fragment sequence delimiter length");
        break;
      }
      if (t != tags::kItem) {
        throw Error(ErrorCode::TruncatedStream,
                    "expected pixel fragment item, found " + t.to_string());
      }
      std::uint32_t len = reader.u32("fragment length");
      if (len == kUndefinedLength) {
        throw Error(ErrorCode::TruncatedStream, "pixel fragment with undefined length");
      }
      auto bytes = reader.bytes(len, "fragment value");
      if (first) {
        // Basic offset table: zero or more 32-bit offsets.
        if (len % 4 != 0) {
          throw Error(ErrorCode::TruncatedStream, "offset table length not a multiple of 4");
        }
        for (std::size_t i = 0; i < bytes.size(); i += 4) {
          std::uint32_t v = static_cast<std::uint32_t>(bytes[i]) |
                            (static_cast<std::uint32_t>(bytes[i + 1]) << 8) |
                            (static_cast<std::uint32_t>(bytes[i + 2]) << 16) |
                            (static_cast<std::uint32_t>(bytes[i + 3]) << 24);
          frags.offset_table.push_back(v);
        }
        first = false;
      } else {
        frags.fragments.emplace_back(bytes.begin(), bytes.end());
      }
    }
    e.fragments() = std::move(frags);
  }

  SyntaxMode mode_;
};

// File meta (group 0002) is always explicit little-endian. Returns the
// number of bytes consumed.
std::size_t parse_meta(std::span<const std::uint8_t> data, DataSet& meta) {
  Reader reader(data, false);
  DatasetParser parser(SyntaxMode{true, false});

  // The group length element, when present, bounds the group.
  std::optional<std::uint32_t> group_length;
  while (!reader.at_end()) {
    if (reader.remaining() < 4) break;
    Tag t = reader.peek_tag();
    if (t.group != 0x0002) break;
    Element e = parser.parse_element(reader, 0);
    if (e.tag() == tags::kFileMetaGroupLength) {
      group_length = e.as_u32();
      meta.elements().push_back(std::move(e));
      break;
    }
    meta.elements().push_back(std::move(e));
  }
  if (group_length) {
    auto end = reader.pos() + *group_length;
    if (end > data.size()) {
      throw Error(ErrorCode::TruncatedStream, "file meta group length exceeds stream");
    }
    while (reader.pos() < end) {
      meta.elements().push_back(parser.parse_element(reader, 0));
    }
  } else {
    while (!reader.at_end() && reader.remaining() >= 4 && reader.peek_tag().group == 0x0002) {
      meta.elements().push_back(parser.parse_element(reader, 0));
    }
  }
  return reader.pos();
}

DataSet parse_body(std::span<const std::uint8_t> data, TransferSyntax ts) {
  SyntaxMode mode{ts_explicit_vr(ts), ts_big_endian(ts)};
  DatasetParser parser(mode);
  return parser.parse(data, 0);
}

}  // namespace

FileObject parse_file(std::span<const std::uint8_t> bytes, const ParseOptions& options) {
  FileObject file;

  bool has_magic = bytes.size() >= 132 && std::memcmp(bytes.data() + 128, "DICM", 4) == 0;
  if (!has_magic) {
    if (!options.allow_raw_dataset) {
      throw Error(ErrorCode::BadMagic, "no DICM marker at offset 128");
    }
    file.has_preamble = false;
    file.preamble.fill(0);
    // Bare dataset: try explicit little-endian first, then implicit.
    try {
      file.body = parse_body(bytes, TransferSyntax::ExplicitVRLittleEndian);
      file.transfer_syntax = TransferSyntax::ExplicitVRLittleEndian;
    } catch (const Error&) {
      file.body = parse_body(bytes, TransferSyntax::ImplicitVRLittleEndian);
      file.transfer_syntax = TransferSyntax::ImplicitVRLittleEndian;
    }
    file.transfer_syntax_uid_raw = std::string(transfer_syntax_uid(file.transfer_syntax));
    return file;
  }

  std::memcpy(file.preamble.data(), bytes.data(), 128);
  auto after_magic = bytes.subspan(132);
  std::size_t meta_size = parse_meta(after_magic, file.meta);

  const Element* ts_elem = file.meta.find(tags::kTransferSyntaxUID);
  if (ts_elem == nullptr) {
    throw Error(ErrorCode::UnsupportedTransferSyntax, "file meta has no Transfer Syntax UID");
  }
  file.transfer_syntax_uid_raw = ts_elem->as_string();
  file.transfer_syntax = transfer_syntax_from_uid(file.transfer_syntax_uid_raw);
  if (!ts_is_supported(file.transfer_syntax)) {
    throw Error(ErrorCode::UnsupportedTransferSyntax,
                "unknown transfer syntax '" + file.transfer_syntax_uid_raw + "'");
  }

  file.body = parse_body(after_magic.subspan(meta_size), file.transfer_syntax);
  return file;
}

FileObject parse_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_file(bytes, options);
}

}  // namespace deident::dicom
