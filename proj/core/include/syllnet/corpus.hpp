#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syllnet {

struct RawDocument {
  std::string id;
  std::string text;  // NFC-normalized UTF-8
  std::string source_label;
};

struct Token {
  std::string surface;  // lowercase UTF-8, alphabet letters only in strict mode
  std::string doc_id;

  friend bool operator==(const Token&, const Token&) = default;
};

/// The set of letters a token may consist of.
class Alphabet {
 public:
  /// a b c č ć d dž đ e f g h i j k l lj m n nj o p r s š t u v z ž, i.e. the
  /// Croatian Latin letters (digraph components are plain letters here).
  static Alphabet croatian();

  /// Every code point of `letters` (lowercased) becomes a member; whitespace
  /// and commas are ignored so "a b c" and "abc" are equivalent.
  static Alphabet from_string(std::string_view letters);

  bool contains(char32_t lowercase_cp) const { return letters_.count(lowercase_cp) != 0; }
  Alphabet with(std::string_view extra_letters) const;
  std::string to_string() const;

 private:
  std::set<char32_t> letters_;
};

struct TokenizerOptions {
  Alphabet alphabet = Alphabet::croatian();
  /// Drop tokens containing letters outside the alphabet; keep them otherwise.
  bool strict = true;
};

/// Canonical composition (NFC). Input must be valid UTF-8.
std::string normalize_nfc(std::string_view utf8_text);

/// Validates `bytes` as UTF-8 (DecodeError naming `origin` and the byte
/// offset otherwise), strips a leading BOM and applies NFC.
RawDocument make_document(std::string id, std::string_view bytes, std::string source_label);

/// One document per regular file. Directories are expanded recursively and
/// their files taken in lexicographic path order.
std::vector<RawDocument> load_corpus(std::span<const std::filesystem::path> paths,
                                     std::string_view source_label);

/// Maximal runs of letters, lowercased with simple case mapping. Anything
/// that is not a letter (digits, apostrophes, punctuation, marks) separates.
std::vector<Token> tokenize(const RawDocument& doc, const TokenizerOptions& options = {});

}  // namespace syllnet
