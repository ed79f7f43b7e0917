#include "syllnet/syllabifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "syllnet/error.hpp"

namespace syllnet {
namespace {

std::size_t code_point_bytes(char lead) {
  const auto b = static_cast<unsigned char>(lead);
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0) return 2;
  if ((b & 0xF0) == 0xE0) return 3;
  if ((b & 0xF8) == 0xF0) return 4;
  return 1;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  std::string current;
  for (char c : value) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  return items;
}

bool parse_bool(std::string_view value, const std::string& where) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ParseError(where, "value", "expected a boolean, got '" + std::string(value) + "'");
}

int parse_int(std::string_view value, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(value), &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(where, "value", "expected an integer, got '" + std::string(value) + "'");
}

}  // namespace

RuleSet RuleSet::croatian() {
  RuleSet r;
  r.vowels = {"a", "e", "i", "o", "u"};
  r.digraphs = {"dž", "lj", "nj"};
  for (const char* u : {"p", "b", "t", "d", "k", "g", "f", "h", "s", "z", "š", "ž", "c", "č", "ć",
                        "dž", "đ", "q", "x"}) {
    r.sonority[u] = 1;
  }
  for (const char* u : {"m", "n", "nj"}) r.sonority[u] = 2;
  for (const char* u : {"l", "lj", "r"}) r.sonority[u] = 3;
  for (const char* u : {"v", "j", "w", "y"}) r.sonority[u] = 4;
  r.sibilants = {"s", "z", "š", "ž"};
  return r;
}

RuleSet RuleSet::parse(std::string_view config_text, const std::string& origin) {
  RuleSet r = croatian();
  std::istringstream in{std::string(config_text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = origin + ":" + std::to_string(line_no);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(origin, "line " + std::to_string(line_no), "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "vowels") {
      const auto items = split_list(value);
      r.vowels = std::set<std::string>(items.begin(), items.end());
    } else if (key == "digraphs") {
      r.digraphs = split_list(value);
    } else if (key == "onset_mode") {
      if (value == "sonority") {
        r.onset_mode = OnsetMode::kSonority;
      } else if (value == "cv-simple") {
        r.onset_mode = OnsetMode::kCvSimple;
      } else {
        throw ParseError(origin, "line " + std::to_string(line_no),
                         "onset_mode must be 'sonority' or 'cv-simple'");
      }
    } else if (key == "syllabic_r") {
      r.syllabic_r = parse_bool(value, where);
    } else if (key == "sibilant_appendix") {
      r.sibilant_appendix = parse_bool(value, where);
    } else if (key == "sibilants") {
      const auto items = split_list(value);
      r.sibilants = std::set<std::string>(items.begin(), items.end());
    } else if (key == "default_rank") {
      r.default_rank = parse_int(value, where);
    } else if (key.starts_with("rank.")) {
      const int rank = parse_int(std::string_view(key).substr(5), where);
      for (auto& unit : split_list(value)) r.sonority[unit] = rank;
    } else {
      throw ParseError(origin, "line " + std::to_string(line_no), "unknown key '" + key + "'");
    }
  }

  if (r.vowels.empty()) throw ParseError(origin, "vowels", "vowel set is empty");
  auto check_rank = [&](int rank, const std::string& what) {
    if (rank < 1 || rank >= kVowelRank) {
      throw ParseError(origin, what, "consonant ranks must lie in [1, " +
                                         std::to_string(kVowelRank - 1) + "]");
    }
  };
  check_rank(r.default_rank, "default_rank");
  for (const auto& [unit, rank] : r.sonority) check_rank(rank, "rank of '" + unit + "'");
  return r;
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open rule file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

int RuleSet::rank(std::string_view unit) const {
  if (is_vowel(unit)) return kVowelRank;
  const auto it = sonority.find(std::string(unit));
  return it == sonority.end() ? default_rank : it->second;
}

bool RuleSet::is_legal_onset(std::span<const std::string> cluster) const {
  if (cluster.size() <= 1) return true;
  if (onset_mode == OnsetMode::kCvSimple) return false;

  std::size_t start = 0;
  if (sibilant_appendix && sibilants.count(cluster[0]) != 0 &&
      sibilants.count(cluster[1]) == 0 && rank(cluster[1]) == 1) {
    start = 1;
  }
  for (std::size_t i = start + 1; i < cluster.size(); ++i) {
    if (rank(cluster[i]) <= rank(cluster[i - 1])) return false;
  }
  return true;
}

std::string SyllabifiedWord::joined(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(syllables[i]);
  }
  return out;
}

std::vector<std::string> segment_graphemes(std::string_view surface, const RuleSet& rules) {
  std::vector<std::string> digraphs = rules.digraphs;
  std::stable_sort(digraphs.begin(), digraphs.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<std::string> units;
  std::size_t i = 0;
  while (i < surface.size()) {
    const auto rest = surface.substr(i);
    const auto match = std::find_if(digraphs.begin(), digraphs.end(),
                                    [&](const std::string& d) { return !d.empty() && rest.starts_with(d); });
    const std::size_t len = match != digraphs.end() ? match->size() : code_point_bytes(surface[i]);
    units.emplace_back(surface.substr(i, std::min(len, surface.size() - i)));
    i += len;
  }
  return units;
}

std::vector<std::size_t> find_nuclei(std::span<const std::string> units, const RuleSet& rules) {
  std::vector<std::size_t> nuclei;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (rules.is_vowel(units[i])) {
      nuclei.push_back(i);
      continue;
    }
    if (rules.syllabic_r && units[i] == "r") {
      const bool vowel_before = i > 0 && rules.is_vowel(units[i - 1]);
      const bool vowel_after = i + 1 < units.size() && rules.is_vowel(units[i + 1]);
      if (!vowel_before && !vowel_after) nuclei.push_back(i);
    }
  }
  return nuclei;
}

SyllabifiedWord syllabify(const Token& token, const RuleSet& rules) {
  const auto units = segment_graphemes(token.surface, rules);
  const auto nuclei = find_nuclei(units, rules);
  if (nuclei.empty()) throw NoNucleusError(token.surface);

  // starts[k] is the first unit of syllable k.
  std::vector<std::size_t> starts{0};
  for (std::size_t k = 1; k < nuclei.size(); ++k) {
    const std::size_t lo = nuclei[k - 1] + 1;
    const std::size_t hi = nuclei[k];
    const std::span<const std::string> cluster(units.data() + lo, hi - lo);
    std::size_t onset = cluster.size();
    while (onset > 0 && !rules.is_legal_onset(cluster.subspan(cluster.size() - onset))) --onset;
    starts.push_back(hi - onset);
  }

  SyllabifiedWord word{token, {}};
  word.syllables.reserve(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : units.size();
    std::string syllable;
    for (std::size_t u = starts[k]; u < end; ++u) syllable += units[u];
    word.syllables.push_back(std::move(syllable));
  }
  return word;
}

std::vector<SyllabifiedWord> syllabify_all(std::span<const Token> tokens, const RuleSet& rules,
                                           SyllabificationStats* stats) {
  std::vector<SyllabifiedWord> words;
  words.reserve(tokens.size());
  SyllabificationStats local;
  for (const auto& token : tokens) {
    ++local.tokens;
    const auto units = segment_graphemes(token.surface, rules);
    if (find_nuclei(units, rules).empty()) {
      ++local.skipped_no_nucleus;
      continue;
    }
    words.push_back(syllabify(token, rules));
    ++local.syllabified;
  }
  if (stats != nullptr) *stats = local;
  return words;
}

}  // namespace syllnet
