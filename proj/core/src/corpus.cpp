#include "syllnet/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "syllnet/error.hpp"
#include "syllnet/utf8.hpp"

namespace syllnet {
namespace {

constexpr std::string_view kCroatianLetters = "abcčćdđefghijklmnoprsštuvzž";
constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Single-code-point Latin digraphs (Ǆ ǅ ǆ, Ǉ ǈ ǉ, Ǌ ǋ ǌ) after lowercasing.
std::u32string_view expand_compat_digraph(char32_t lower) {
  switch (lower) {
    case 0x01C6: return U"dž";
    case 0x01C9: return U"lj";
    case 0x01CC: return U"nj";
    default: return {};
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return std::move(buffer).str();
}

}  // namespace

Alphabet Alphabet::croatian() { return from_string(kCroatianLetters); }

Alphabet Alphabet::from_string(std::string_view letters) {
  Alphabet a;
  for (char32_t cp : utf8::decode(letters)) {
    if (cp == U',' || u_isUWhiteSpace(static_cast<UChar32>(cp))) continue;
    a.letters_.insert(static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))));
  }
  return a;
}

Alphabet Alphabet::with(std::string_view extra_letters) const {
  Alphabet a = *this;
  for (char32_t cp : from_string(extra_letters).letters_) a.letters_.insert(cp);
  return a;
}

std::string Alphabet::to_string() const {
  std::u32string cps(letters_.begin(), letters_.end());
  return utf8::encode(cps);
}

std::string normalize_nfc(std::string_view utf8_text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCategory::kIo, "ICU NFC normalizer unavailable");
  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8_text.data(), static_cast<int32_t>(utf8_text.size())));
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) throw Error(ErrorCategory::kIo, "NFC normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

RawDocument make_document(std::string id, std::string_view bytes, std::string source_label) {
  if (auto bad = utf8::find_invalid(bytes)) throw DecodeError(id, *bad);
  if (bytes.starts_with(kBom)) bytes.remove_prefix(kBom.size());
  return RawDocument{std::move(id), normalize_nfc(bytes), std::move(source_label)};
}

std::vector<RawDocument> load_corpus(std::span<const std::filesystem::path> paths,
                                     std::string_view source_label) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    std::error_code ec;
    const auto status = fs::status(p, ec);
    if (ec || !fs::exists(status)) throw IoError(p.string(), "no such file or directory");
    if (fs::is_directory(status)) {
      std::vector<fs::path> found;
      for (fs::recursive_directory_iterator it(p, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_regular_file()) found.push_back(it->path());
      }
      if (ec) throw IoError(p.string(), "cannot list directory: " + ec.message());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }

  std::vector<RawDocument> docs;
  docs.reserve(files.size());
  for (const auto& f : files) {
    docs.push_back(make_document(f.generic_string(), read_file(f), std::string(source_label)));
  }
  return docs;
}

std::vector<Token> tokenize(const RawDocument& doc, const TokenizerOptions& options) {
  std::vector<Token> tokens;
  std::u32string run;
  bool foreign = false;

  auto flush = [&] {
    if (!run.empty() && !(options.strict && foreign)) {
      tokens.push_back(Token{utf8::encode(run), doc.id});
    }
    run.clear();
    foreign = false;
  };

  for (char32_t cp : utf8::decode(doc.text)) {
    if (!u_isalpha(static_cast<UChar32>(cp))) {
      flush();
      continue;
    }
    const auto lower = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
    if (auto expanded = expand_compat_digraph(lower); !expanded.empty()) {
      for (char32_t part : expanded) {
        foreign = foreign || !options.alphabet.contains(part);
        run.push_back(part);
      }
      continue;
    }
    foreign = foreign || !options.alphabet.contains(lower);
    run.push_back(lower);
  }
  flush();
  return tokens;
}

}  // namespace syllnet
