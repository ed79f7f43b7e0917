#include <gtest/gtest.h>

#include <random>

#include "syllnet/corpus.hpp"
#include "syllnet/error.hpp"
#include "syllnet/utf8.hpp"
#include "test_util.hpp"

using namespace syllnet;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> tok(std::string_view text, TokenizerOptions opts = {}) {
  return surfaces(tokenize(make_document("d", text, "t"), opts));
}

}  // namespace

TEST(Utf8, FindInvalid) {
  EXPECT_FALSE(utf8::find_invalid("čćđšž abc").has_value());
  EXPECT_EQ(utf8::find_invalid("ab\xFF"), 2u);
  EXPECT_EQ(utf8::find_invalid("\xC3\x28"), 0u);
  EXPECT_EQ(utf8::find_invalid("x\xC0\xAF"), 1u);        // overlong '/'
  EXPECT_EQ(utf8::find_invalid("\xED\xA0\x80"), 0u);     // surrogate
  EXPECT_EQ(utf8::find_invalid("\xF4\x90\x80\x80"), 0u); // above U+10FFFF
  EXPECT_EQ(utf8::find_invalid("ok\xE2\x82"), 2u);       // truncated
}

TEST(Utf8, RoundTrip) {
  const std::string s = "džep ǉ 𝄞";
  EXPECT_EQ(utf8::encode(utf8::decode(s)), s);
  EXPECT_EQ(utf8::length("čaša"), 4u);
}

TEST(Corpus, NfcComposesDecomposedCaron) {
  // c + COMBINING CARON -> U+010D
  const auto doc = make_document("d", "c\xCC\x8Cvrsto", "t");
  EXPECT_EQ(doc.text, "\xC4\x8Dvrsto");
  EXPECT_EQ(tok("c\xCC\x8Cvrsto"), std::vector<std::string>{"čvrsto"});
}

TEST(Corpus, NormalizationIsIdempotent) {
  for (std::string_view s : {"c\xCC\x8C", "s\xCC\x8C" "e\xCC\x81", "\xC4\x8D", "plain"}) {
    const auto once = normalize_nfc(s);
    EXPECT_EQ(normalize_nfc(once), once);
  }
}

TEST(Corpus, MakeDocumentStripsBomAndRejectsBadBytes) {
  EXPECT_EQ(make_document("d", "\xEF\xBB\xBFmama", "t").text, "mama");
  try {
    make_document("file.txt", "mama\xFFide", "t");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.category(), ErrorCategory::kIo);
    EXPECT_NE(std::string(e.what()).find("file.txt"), std::string::npos);
  }
}

TEST(Corpus, TokenizeExamples) {
  EXPECT_EQ(tok("Mama ide."), (std::vector<std::string>{"mama", "ide"}));
  EXPECT_EQ(tok("čvrsto-meko"), (std::vector<std::string>{"čvrsto", "meko"}));
  EXPECT_TRUE(tok("web2.0").empty());

  TokenizerOptions with_w;
  with_w.alphabet = Alphabet::croatian().with("w");
  EXPECT_EQ(tok("web2.0", with_w), std::vector<std::string>{"web"});

  TokenizerOptions lax;
  lax.strict = false;
  EXPECT_EQ(tok("web2.0 taxi", lax), (std::vector<std::string>{"web", "taxi"}));
}

TEST(Corpus, TokenizeLowercasesAndSeparates) {
  EXPECT_EQ(tok("ČAŠA Đak"), (std::vector<std::string>{"čaša", "đak"}));
  EXPECT_EQ(tok("rock'n'roll 12kuna"), (std::vector<std::string>{"rock", "n", "roll", "kuna"}));
  EXPECT_EQ(tok("  \t\n"), std::vector<std::string>{});
  EXPECT_EQ(tok("xerox kuća"), std::vector<std::string>{"kuća"});
}

TEST(Corpus, CompatibilityDigraphsExpand) {
  EXPECT_EQ(tok("\xC7\x86" "ep"), std::vector<std::string>{"džep"});      // U+01C6
  EXPECT_EQ(tok("\xC7\x88" "ubav"), std::vector<std::string>{"ljubav"});  // U+01C8
  EXPECT_EQ(tok("\xC7\x8A" "ega"), std::vector<std::string>{"njega"});    // U+01CA
}

TEST(Corpus, TokensCarryDocumentId) {
  const auto tokens = tokenize(make_document("doc-7", "jedan dva", "t"));
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].doc_id, "doc-7");
}

TEST(Corpus, AlphabetFromString) {
  const auto a = Alphabet::from_string("C, b a");
  EXPECT_EQ(a.to_string(), "abc");
  EXPECT_TRUE(a.contains(U'c'));
  EXPECT_FALSE(a.contains(U'd'));
  EXPECT_EQ(Alphabet::croatian().to_string(), "abcdefghijklmnoprstuvzćčđšž");
}

TEST(Corpus, LoadCorpusOrdersFilesAndRecurses) {
  testutil::TempDir dir;
  dir.write("b.txt", "Dva");
  dir.write("a.txt", "Mama ide.");
  dir.write("sub/c.txt", "tri");
  const std::vector<std::filesystem::path> paths{dir.path()};
  const auto docs = load_corpus(paths, "wiki");
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].text, "Mama ide.");
  EXPECT_EQ(docs[1].text, "Dva");
  EXPECT_EQ(docs[2].text, "tri");
  EXPECT_EQ(docs[0].source_label, "wiki");
}

TEST(Corpus, LoadCorpusEdgeCases) {
  testutil::TempDir dir;
  std::filesystem::create_directories(dir / "empty");
  const std::vector<std::filesystem::path> empty{dir / "empty"};
  EXPECT_TRUE(load_corpus(empty, "x").empty());

  const std::vector<std::filesystem::path> missing{dir / "nope.txt"};
  EXPECT_THROW(load_corpus(missing, "x"), IoError);

  const std::vector<std::filesystem::path> bad{dir.write("bad.txt", "ab\xC3")};
  try {
    load_corpus(bad, "x");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(CorpusProperty, TokensUseOnlyLettersFromTheText) {
  std::mt19937_64 rng(7);
  const std::u32string pool = U"abcčćdđefghijklmnoprsštuvzžqwxyABČŠŽ 0123.,'-!\n";
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int round = 0; round < 300; ++round) {
    std::u32string text;
    const int len = static_cast<int>(rng() % 60);
    for (int i = 0; i < len; ++i) text.push_back(pool[pick(rng)]);
    const std::string utf = utf8::encode(text);
    const auto a = tok(utf);
    EXPECT_EQ(a, tok(utf));
    std::u32string lowered;
    for (char32_t cp : utf8::decode(utf)) {
      switch (cp) {
        case U'A': lowered.push_back(U'a'); break;
        case U'B': lowered.push_back(U'b'); break;
        case U'Č': lowered.push_back(U'č'); break;
        case U'Š': lowered.push_back(U'š'); break;
        case U'Ž': lowered.push_back(U'ž'); break;
        default: lowered.push_back(cp);
      }
    }
    for (const auto& t : a) {
      ASSERT_FALSE(t.empty());
      for (char32_t cp : utf8::decode(t)) {
        EXPECT_TRUE(Alphabet::croatian().contains(cp));
        EXPECT_NE(lowered.find(cp), std::u32string::npos);
      }
    }
  }
}
