#include <cstring>
#include <fstream>

#include "deident/dicom/file_object.hpp"
#include "deident/errors.hpp"

namespace deident::dicom {

namespace {

constexpr std::uint32_t kUndefinedLength = 0xFFFFFFFFu;

struct SyntaxMode {
  bool explicit_vr = true;
  bool big_endian = false;
};

class Writer {
 public:
  explicit Writer(bool big_endian) : big_endian_(big_endian) {}

  std::vector<std::uint8_t>& buffer() { return out_; }

  void u16(std::uint16_t v) {
    if (big_endian_) {
      out_.push_back(static_cast<std::uint8_t>(v >> 8));
      out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    } else {
      out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
      out_.push_back(static_cast<std::uint8_t>(v >> 8));
    }
  }

  void u32(std::uint32_t v) {
    if (big_endian_) {
      out_.push_back(static_cast<std::uint8_t>(v >> 24));
      out_.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
      out_.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
      out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    } else {
      out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
      out_.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
      out_.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
      out_.push_back(static_cast<std::uint8_t>(v >> 24));
    }
  }

  void tag(Tag t) {
    u16(t.group);
    u16(t.element);
  }

  void bytes(std::span<const std::uint8_t> data) {
    out_.insert(out_.end(), data.begin(), data.end());
  }

 private:
  std::vector<std::uint8_t> out_;
  bool big_endian_;
};

void swap_words(std::vector<std::uint8_t>& bytes, unsigned word) {
  if (word < 2 || bytes.size() % word != 0) return;
  for (std::size_t i = 0; i + word <= bytes.size(); i += word) {
    for (unsigned j = 0; j < word / 2; ++j) {
      std::swap(bytes[i + j], bytes[i + word - 1 - j]);
    }
  }
}

void encode_dataset(const DataSet& ds, SyntaxMode mode, Writer& out);

void encode_items(const Element& e, SyntaxMode mode, Writer& out) {
  // Undefined-length UN sequences were parsed as implicit little-endian;
  // re-encode them the same way.
  SyntaxMode item_mode = mode;
  if (e.vr() == VR::UN) item_mode = SyntaxMode{false, false};

  for (const auto& item : e.items()) {
    Writer content(item_mode.big_endian);
    encode_dataset(item, item_mode, content);
    out.tag(tags::kItem);
    if (item.item_undefined_length()) {
      out.u32(kUndefinedLength);
      out.bytes(content.buffer());
      out.tag(tags::kItemDelimitation);
      out.u32(0);
    } else {
      out.u32(static_cast<std::uint32_t>(content.buffer().size()));
      out.bytes(content.buffer());
    }
  }
}

void encode_fragments(const Element& e, Writer& out) {
  const auto& frags = e.fragments();
  out.tag(tags::kItem);
  out.u32(static_cast<std::uint32_t>(frags.offset_table.size() * 4));
  for (auto offset : frags.offset_table) {
    // Offset table entries are little-endian regardless of syntax
    // (encapsulated syntaxes are always little-endian).
    out.buffer().push_back(static_cast<std::uint8_t>(offset & 0xFF));
    out.buffer().push_back(static_cast<std::uint8_t>((offset >> 8) & 0xFF));
    out.buffer().push_back(static_cast<std::uint8_t>((offset >> 16) & 0xFF));
    out.buffer().push_back(static_cast<std::uint8_t>(offset >> 24));
  }
  for (const auto& frag : frags.fragments) {
    out.tag(tags::kItem);
    out.u32(static_cast<std::uint32_t>(frag.size()));
    out.bytes(frag);
  }
  out.tag(tags::kSequenceDelimitation);
  out.u32(0);
}

void encode_element(const Element& e, SyntaxMode mode, Writer& out) {
  out.tag(e.tag());

  bool sequence_like = e.is_sequence() || e.is_pixel_fragments();

  // Length field metadata.
  bool long_form = !mode.explicit_vr || vr_has_long_length(e.vr());
  if (mode.explicit_vr) {
    auto name = vr_name(e.vr());
    out.buffer().push_back(static_cast<std::uint8_t>(name[0]));
    out.buffer().push_back(static_cast<std::uint8_t>(name[1]));
    if (vr_has_long_length(e.vr())) {
      out.u16(0);
    }
  }

  if (e.is_pixel_fragments()) {
    out.u32(kUndefinedLength);
    encode_fragments(e, out);
    return;
  }

  if (sequence_like) {
    Writer content(mode.big_endian);
    encode_items(e, mode, content);
    if (e.undefined_length()) {
      out.u32(kUndefinedLength);
      out.bytes(content.buffer());
      out.tag(tags::kSequenceDelimitation);
      out.u32(0);
    } else {
      out.u32(static_cast<std::uint32_t>(content.buffer().size()));
      out.bytes(content.buffer());
    }
    return;
  }

  std::vector<std::uint8_t> value(e.raw().begin(), e.raw().end());
  if (value.size() % 2 != 0) value.push_back(vr_pad_byte(e.vr()));
  if (mode.big_endian && e.vr() != VR::UN) swap_words(value, vr_word_size(e.vr()));

  if (!long_form) {
    if (value.size() > 0xFFFF) {
      throw Error(ErrorCode::ValueTooLong,
                  "value of " + e.tag().to_string() + " exceeds 16-bit length field");
    }
    out.u16(static_cast<std::uint16_t>(value.size()));
  } else {
    if (value.size() >= kUndefinedLength) {
      throw Error(ErrorCode::ValueTooLong,
                  "value of " + e.tag().to_string() + " exceeds 32-bit length field");
    }
    out.u32(static_cast<std::uint32_t>(value.size()));
  }
  out.bytes(value);
}

void encode_dataset(const DataSet& ds, SyntaxMode mode, Writer& out) {
  for (const auto& e : ds.elements()) {
    encode_element(e, mode, out);
  }
}

std::vector<std::uint8_t> encode_meta(const DataSet& meta) {
  // Group length is recomputed from the rest of the group.
  SyntaxMode mode{true, false};
  Writer rest(false);
  for (const auto& e : meta.elements()) {
    if (e.tag() == tags::kFileMetaGroupLength) continue;
    encode_element(e, mode, rest);
  }
  Writer out(false);
  Element group_length(tags::kFileMetaGroupLength, VR::UL);
  group_length.set_u32(static_cast<std::uint32_t>(rest.buffer().size()));
  encode_element(group_length, mode, out);
  out.bytes(rest.buffer());
  return std::move(out.buffer());
}

}  // namespace

std::vector<std::uint8_t> serialize_dataset(const DataSet& ds, TransferSyntax ts) {
  Writer out(ts_big_endian(ts));
  encode_dataset(ds, SyntaxMode{ts_explicit_vr(ts), ts_big_endian(ts)}, out);
  return std::move(out.buffer());
}

std::vector<std::uint8_t> serialize(const FileObject& file) {
  std::vector<std::uint8_t> out;
  if (file.has_preamble) {
    out.insert(out.end(), file.preamble.begin(), file.preamble.end());
    out.push_back('D');
    out.push_back('I');
    out.push_back('C');
    out.push_back('M');
    auto meta = encode_meta(file.meta);
    out.insert(out.end(), meta.begin(), meta.end());
  }
  auto body = serialize_dataset(file.body, file.transfer_syntax);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

void write_file(const FileObject& file, const std::filesystem::path& path) {
  auto bytes = serialize(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::IoError, "short write to " + path.string());
  }
}

}  // namespace deident::dicom
