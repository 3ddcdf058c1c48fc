#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "comformer/bpe.hpp"
#include "comformer/parser.hpp"
#include "comformer/rng.hpp"

using namespace comformer;

namespace {

std::string random_bytes(Rng& rng, size_t max_len) {
    size_t len = rng.below(max_len + 1);
    std::string s;
    s.reserve(len);
    for (size_t i = 0; i < len; ++i) s.push_back(static_cast<char>(rng.below(256)));
    return s;
}

TEST(BpeTrain, FirstMergeOnAbab) {
    BpeModel m = BpeModel::train({"abab"}, 263);
    ASSERT_EQ(m.merges().size(), 1u);
    EXPECT_EQ(m.merges()[0], (std::pair<std::string, std::string>{"a", "b"}));
    EXPECT_EQ(m.size(), 263);
}

TEST(BpeTrain, NoCapacityNoMerges) {
    BpeModel m = BpeModel::train({"aa"}, BpeModel::kBaseSize);
    EXPECT_TRUE(m.merges().empty());
}

TEST(BpeTrain, EmptyCorpus) {
    BpeModel m = BpeModel::train({""}, 1000);
    EXPECT_TRUE(m.merges().empty());
    EXPECT_EQ(m.size(), BpeModel::kBaseSize);
}

TEST(BpeTrain, SinglePairDoesNotRepeat) {
    // "ab" occurs once: below the repeat threshold, nothing to learn.
    BpeModel m = BpeModel::train({"ab"}, 1000);
    EXPECT_TRUE(m.merges().empty());
}

TEST(BpeTrain, VocabTooSmall) {
    EXPECT_THROW(BpeModel::train({"abc"}, BpeModel::kBaseSize - 1), VocabTooSmall);
}

TEST(BpeTrain, DeterministicTieBreak) {
    // "ba" and "ab" both occur twice; ("a","b") sorts first.
    BpeModel m = BpeModel::train({"ab ab ba ba"}, BpeModel::kBaseSize + 1);
    ASSERT_EQ(m.merges().size(), 1u);
    EXPECT_EQ(m.merges()[0], (std::pair<std::string, std::string>{"a", "b"}));
}

TEST(BpeEncode, BaseAlphabet) {
    BpeModel m = BpeModel::base_model();
    auto ids = m.encode("ab");
    EXPECT_EQ(ids, (std::vector<int>{BpeModel::byte_id('a'), BpeModel::byte_id('b')}));
    EXPECT_TRUE(m.encode("").empty());
}

TEST(BpeEncode, LearnedMergeApplies) {
    BpeModel m = BpeModel::train({"abab"}, 263);
    int ab = m.id_of("ab");
    ASSERT_GE(ab, 0);
    EXPECT_EQ(m.encode("abab"), (std::vector<int>{ab, ab}));
    // Merges never cross whitespace; the space stays a raw byte.
    EXPECT_EQ(m.encode("ab ab"),
              (std::vector<int>{ab, BpeModel::byte_id(' '), ab}));
}

TEST(BpeEncode, AtomicTokens) {
    BpeModel m = BpeModel::train({"MethodDeclaration MethodDeclaration"}, 600,
                                 ast_label_vocabulary());
    auto ids = m.encode_word("MethodDeclaration");
    ASSERT_EQ(ids.size(), 1u);
    EXPECT_EQ(m.token(ids[0]), "MethodDeclaration");
    EXPECT_TRUE(m.merges().empty());  // atomics are excluded from training

    EXPECT_EQ(m.encode_word("<num_>"), std::vector<int>{BpeModel::kNumTagId});
    EXPECT_EQ(m.encode_word("<str_>"), std::vector<int>{BpeModel::kStrTagId});
}

TEST(BpeDecode, SpecialsSkipped) {
    BpeModel m = BpeModel::base_model();
    EXPECT_EQ(m.decode({}), "");
    std::vector<int> ids = {BpeModel::kSosId, BpeModel::byte_id('h'), BpeModel::kPadId,
                            BpeModel::byte_id('i'), BpeModel::kEosId};
    EXPECT_EQ(m.decode(ids), "hi");
    EXPECT_THROW(m.decode({m.size()}), UnknownId);
    EXPECT_THROW(m.decode({-1}), UnknownId);
}

TEST(BpeRoundTrip, RandomByteStrings) {
    BpeModel trained = BpeModel::train(
        {"the cat sat on the mat", "the bat and the rat", "abab cdcd abab"}, 300);
    BpeModel base = BpeModel::base_model();
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        std::string s = random_bytes(rng, 64);
        EXPECT_EQ(trained.decode(trained.encode(s)), s);
        EXPECT_EQ(base.decode(base.encode(s)), s);
        // Monotone compression vs the zero-merge baseline.
        EXPECT_LE(trained.encode(s).size(), base.encode(s).size());
    }
}

TEST(BpeRoundTrip, TagTextSurvives) {
    BpeModel m = BpeModel::base_model();
    const std::string s = "a <num_> b <str_> c";
    EXPECT_EQ(m.decode(m.encode(s)), s);
}

TEST(Bpe, EncodeIsDeterministic) {
    BpeModel a = BpeModel::train({"hello world hello"}, 280);
    BpeModel b = BpeModel::train({"hello world hello"}, 280);
    EXPECT_EQ(a.vocab(), b.vocab());
    EXPECT_EQ(a.merges(), b.merges());
    EXPECT_EQ(a.encode("hello there"), b.encode("hello there"));
}

TEST(Bpe, SaveLoadRoundTrip) {
    BpeModel m = BpeModel::train({"the cat sat on the mat", "that cat, that hat"}, 300,
                                 ast_label_vocabulary());
    auto dir = std::filesystem::temp_directory_path() / "comformer_bpe_test";
    std::filesystem::create_directories(dir);
    std::string merges = (dir / "merges.txt").string();
    std::string vocab = (dir / "vocab.txt").string();
    m.save(merges, vocab);
    BpeModel back = BpeModel::load(merges, vocab);
    EXPECT_EQ(back.vocab(), m.vocab());   // includes the escaped newline byte token
    EXPECT_EQ(back.merges(), m.merges());
    EXPECT_EQ(back.atomic_count(), m.atomic_count());
    const std::string probe = "the cat\n<num_> MethodDeclaration";
    EXPECT_EQ(back.encode(probe), m.encode(probe));
    std::filesystem::remove_all(dir);
}

} // namespace
