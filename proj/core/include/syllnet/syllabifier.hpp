#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syllnet/corpus.hpp"

namespace syllnet {

enum class OnsetMode {
  /// Longest cluster suffix with strictly rising sonority (plus an optional
  /// sibilant appendix) opens the next syllable.
  kSonority,
  /// Only the last consonant of a cluster opens the next syllable.
  kCvSimple,
};

/// Croatian phonotactics used to split words into syllables.
///
/// Grapheme units are lowercase strings: single letters or one of the
/// configured digraphs. Consonant ranks: obstruent 1 < nasal 2 < liquid 3 <
/// glide 4; vowels rank above every consonant.
struct RuleSet {
  static constexpr int kVowelRank = 100;

  std::set<std::string> vowels;
  std::vector<std::string> digraphs;  // matched greedily, longest first
  std::map<std::string, int> sonority;
  int default_rank = 1;  // consonants missing from `sonority`
  OnsetMode onset_mode = OnsetMode::kSonority;
  /// r with no adjacent vowel is a nucleus (prst, vrt, r·đa).
  bool syllabic_r = true;
  /// s z š ž may precede an obstruent at the start of an onset (se·stra).
  bool sibilant_appendix = true;
  std::set<std::string> sibilants;

  static RuleSet croatian();

  /// Plain key = value text; unknown keys are rejected. Keys: vowels,
  /// digraphs, onset_mode (sonority | cv-simple), syllabic_r,
  /// sibilant_appendix, sibilants, default_rank, rank.<n> (units of rank n).
  /// Unspecified keys keep their croatian() defaults.
  static RuleSet parse(std::string_view config_text, const std::string& origin = "<rules>");
  static RuleSet load(const std::filesystem::path& path);

  bool is_vowel(std::string_view unit) const { return vowels.count(std::string(unit)) != 0; }
  int rank(std::string_view unit) const;
  bool is_legal_onset(std::span<const std::string> cluster) const;
};

struct SyllabifiedWord {
  Token token;
  std::vector<std::string> syllables;

  /// Syllables joined by `separator` (the CLI uses a middle dot).
  std::string joined(std::string_view separator = "·") const;

  friend bool operator==(const SyllabifiedWord&, const SyllabifiedWord&) = default;
};

/// Greedy left-to-right split into letters and digraphs: "knjiga" -> k nj i g a.
std::vector<std::string> segment_graphemes(std::string_view surface,
                                           const RuleSet& rules = RuleSet::croatian());

/// Indices of vowel units and of syllabic r, strictly increasing.
std::vector<std::size_t> find_nuclei(std::span<const std::string> units,
                                     const RuleSet& rules = RuleSet::croatian());

/// One syllable per nucleus. Throws NoNucleusError when there is none.
SyllabifiedWord syllabify(const Token& token, const RuleSet& rules = RuleSet::croatian());

struct SyllabificationStats {
  std::size_t tokens = 0;
  std::size_t syllabified = 0;
  std::size_t skipped_no_nucleus = 0;
};

/// syllabify() over a token stream; nucleus-less tokens are counted and skipped.
std::vector<SyllabifiedWord> syllabify_all(std::span<const Token> tokens, const RuleSet& rules,
                                           SyllabificationStats* stats = nullptr);

}  // namespace syllnet
