#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "runbits/errors.hpp"
#include "runbits/transforms.hpp"

using namespace runbits;

namespace {

const Bitstring kZero("0"), kOne("1"), kEmpty;

std::vector<std::pair<std::string, std::string>> pad_pairs(std::initializer_list<std::size_t> lengths) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t k : lengths)
        for (const auto& a : oracle::strings_of_length(k))
            for (const auto& b : oracle::strings_of_length(k)) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST(ExpandStr, Examples)
{
    EXPECT_EQ(expand_str(Bitstring("1011001"), append_spec("0", "1")).str(), "110011100011");
    EXPECT_EQ(expand_str(Bitstring("10"), append_spec("", "")).str(), "10");
    EXPECT_EQ(expand_str(Bitstring("10"), prepend_spec("1", "0")).str(), "0110");
    EXPECT_THROW(expand_str(Bitstring("010"), append_spec("0", "1")), DomainError);
    EXPECT_THROW(expand_str(Bitstring(""), append_spec("0", "1")), DomainError);
}

TEST(ExpandStr, MatchesCharacterScanOracle)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t n = 1 + rng() % 100000;
        auto rand_pad = [&] {
            std::string s;
            for (std::size_t j = rng() % 4; j > 0; --j) s.push_back(rng() & 1u ? '1' : '0');
            return s;
        };
        std::string d0 = rand_pad(), d1 = rand_pad();
        bool prepend = rng() & 1u;
        TransformSpec spec{Bitstring(d0), Bitstring(d1), prepend ? PadMode::prepend : PadMode::append};
        ASSERT_EQ(expand_str(to_bitstring(n), spec).str(), oracle::expand(oracle::binary(n), d0, d1, prepend));
    }
}

TEST(ExpandStr, DeletingPadsRestoresInput)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t v = 1 + rng() % 50000;
        auto rand_pad = [&] {
            std::string s;
            for (std::size_t j = rng() % 4; j > 0; --j) s.push_back(rng() & 1u ? '1' : '0');
            return s;
        };
        TransformSpec spec{Bitstring(rand_pad()), Bitstring(rand_pad()),
                           rng() & 1u ? PadMode::prepend : PadMode::append};
        const std::string in = oracle::binary(v);
        const std::string out = expand_str(Bitstring(in), spec).str();

        // Walk the output run by run, checking each pad sits where it belongs
        // and collecting everything else.
        std::string stripped;
        std::size_t pos = 0;
        for (const runbits::Run& r : runs(Bitstring(in))) {
            const std::string& pad = spec.pad_for(r.bit).str();
            const std::string body(r.length, r.bit ? '1' : '0');
            const std::string piece = spec.mode == PadMode::prepend ? pad + body : body + pad;
            ASSERT_EQ(out.compare(pos, piece.size(), piece), 0) << v;
            pos += piece.size();
            stripped += body;
        }
        ASSERT_EQ(pos, out.size());
        ASSERT_EQ(stripped, in);
    }
}

TEST(Transform, AppendExamples)
{
    EXPECT_EQ(append_transform(89, kZero, kOne), Nat(3299));
    EXPECT_EQ(append_transform(1, kZero, kOne), Nat(3));
    EXPECT_EQ(append_transform(5, kZero, kOne), Nat(oracle::f(5, "0", "1")));
    EXPECT_EQ(append_transform(5, kZero, kOne), Nat(51));
    EXPECT_THROW(append_transform(0, kZero, kOne), DomainError);
}

TEST(Transform, PrependExamples)
{
    EXPECT_EQ(prepend_transform(2, kZero, kOne), Nat(12));
    EXPECT_EQ(prepend_transform(2, kOne, kZero), Nat(6));
    EXPECT_EQ(prepend_transform(5, Bitstring("00"), Bitstring("01")), Nat(195));
    EXPECT_EQ(oracle::g(5, "00", "01"), 195u);
    EXPECT_THROW(prepend_transform(0, kZero, kOne), DomainError);
}

TEST(Transform, UnequalPadsAreAllowed)
{
    // "101" append d0="" d1="11" -> "111" "0" "111".
    EXPECT_EQ(append_transform(5, kEmpty, Bitstring("11")), Nat(0b1110111));
    EXPECT_EQ(apply_transform(5, prepend_spec("000", "1")), Nat(oracle::g(5, "000", "1")));
}

TEST(Transform, ApplyDispatchesOnMode)
{
    EXPECT_EQ(apply_transform(89, append_spec("0", "1")), Nat(3299));
    EXPECT_EQ(apply_transform(5, prepend_spec("00", "01")), Nat(195));
    EXPECT_THROW(apply_transform(0, append_spec("0", "1")), DomainError);
}

TEST(Transform, WideValuesStayExact)
{
    // 2^70 + 1 has runs 1, 0^69, 1; appending "1"/"0" pads gives 11 0^70 11.
    Nat n = Nat::from_binary("1" + std::string(69, '0') + "1");
    Nat v = append_transform(n, kZero, kOne);
    EXPECT_EQ(to_bitstring(v).str(), "11" + std::string(70, '0') + "11");
}

TEST(ShrinkRuns, Examples)
{
    EXPECT_EQ(shrink_runs(3299), std::optional<Nat>(89));
    EXPECT_EQ(shrink_runs(3), std::optional<Nat>(1));
    EXPECT_EQ(shrink_runs(2), std::nullopt);
    EXPECT_EQ(shrink_runs(9), std::optional<Nat>(0));  // "1001" -> "0"
    EXPECT_THROW(shrink_runs(0), DomainError);
}

TEST(ShrinkRuns, MatchesOracleAndInvertsAppend)
{
    for (std::uint64_t v = 1; v <= 100000; ++v) {
        std::uint64_t expect = 0;
        bool has = oracle::shrink(v, expect);
        auto got = shrink_runs(v);
        ASSERT_EQ(got.has_value(), has) << v;
        if (has) ASSERT_EQ(*got, Nat(expect)) << v;
        ASSERT_EQ(shrink_runs(append_transform(v, kZero, kOne)), std::optional<Nat>(v)) << v;
    }
}

TEST(LengthPredictors, Examples)
{
    EXPECT_EQ(predict_len_append(89, append_spec("0", "1")), 12u);
    EXPECT_EQ(predict_len_append(1, append_spec("", "")), 1u);
    EXPECT_EQ(predict_len_append(5, append_spec("00", "01")), 9u);
    EXPECT_EQ(oracle::expand("101", "00", "01", false).size(), 9u);

    EXPECT_EQ(predict_len_prepend(5, prepend_spec("00", "01")), 8u);
    EXPECT_EQ(bit_count(195), 8u);
    EXPECT_EQ(predict_len_prepend(2, prepend_spec("0", "1")), 4u);
    EXPECT_EQ(predict_len_prepend(1, prepend_spec("1", "0")), 1u);
    EXPECT_EQ(prepend_transform(1, kOne, kZero), Nat(1));

    EXPECT_THROW(predict_len_append(5, append_spec("0", "11")), DomainError);
    EXPECT_THROW(predict_len_prepend(5, prepend_spec("", "1")), DomainError);
}

TEST(LengthPredictors, HoldForAllPadsUpToLengthThree)
{
    for (const auto& [d0, d1] : pad_pairs({1, 2, 3})) {
        TransformSpec app = append_spec(d0, d1), pre = prepend_spec(d0, d1);
        for (std::uint64_t v = 1; v <= 10000; ++v) {
            ASSERT_EQ(bit_count(apply_transform(v, app)), predict_len_append(v, app)) << v << ' ' << d0 << ' ' << d1;
            Nat gv = apply_transform(v, pre);
            ASSERT_FALSE(gv.is_zero());
            ASSERT_EQ(bit_count(gv), predict_len_prepend(v, pre)) << v << ' ' << d0 << ' ' << d1;
        }
    }
}

TEST(Eq3Identity, Examples)
{
    EXPECT_TRUE(eq3_identity_check(2, kZero, kOne));
    EXPECT_TRUE(eq3_identity_check(1, kZero, kOne));
    EXPECT_TRUE(eq3_identity_check(89, Bitstring("10"), Bitstring("11")));

    // Independent construction of both sides for n = 89, pads "10"/"11".
    std::string lhs = oracle::expand("1011001", "11", "10", true);
    std::string rhs = "10" + oracle::binary(oracle::f(89, "10", "11") >> 2);
    EXPECT_EQ(lhs, rhs);

    EXPECT_THROW(eq3_identity_check(5, kEmpty, kEmpty), DomainError);
    EXPECT_THROW(eq3_identity_check(5, kZero, Bitstring("11")), DomainError);
}

TEST(Eq3Identity, HoldsForLengthOneAndTwoPads)
{
    for (const auto& [d0, d1] : pad_pairs({1, 2}))
        for (std::uint64_t v = 1; v <= 10000; ++v)
            ASSERT_TRUE(eq3_identity_check(v, Bitstring(d0), Bitstring(d1))) << v << ' ' << d0 << ' ' << d1;
}

TEST(Identities, SpecialPads)
{
    for (std::uint64_t v = 1; v <= 100000; ++v) {
        Nat f01 = append_transform(v, kZero, kOne);
        ASSERT_EQ(prepend_transform(v, kZero, kOne), f01);
        ASSERT_EQ(prepend_transform(v, kOne, kZero), f01.div_floor(2));
        ASSERT_EQ(append_transform(v, kEmpty, kEmpty), Nat(v));
        ASSERT_EQ(prepend_transform(v, kEmpty, kEmpty), Nat(v));
        if (v <= 10000) {
            ASSERT_EQ(run_count(f01), run_count(v));
            ASSERT_EQ(bit_count(f01), run_count(v) + bit_count(v));
        }
    }
}

TEST(Identities, ReportPassesAndCountsCases)
{
    auto results = check_identities(200);
    ASSERT_EQ(results.size(), 8u);
    for (const auto& r : results) {
        EXPECT_TRUE(r.passed()) << r.name;
        EXPECT_GE(r.checked, 200u);
    }
    EXPECT_EQ(results[0].checked, 200u * 20u);  // 4 + 16 pad pairs
}

TEST(PadMode, Parsing)
{
    EXPECT_EQ(parse_pad_mode("append"), PadMode::append);
    EXPECT_EQ(parse_pad_mode("prepend"), PadMode::prepend);
    EXPECT_THROW(parse_pad_mode("Append"), DomainError);
    EXPECT_EQ(to_string(PadMode::prepend), "prepend");
}
