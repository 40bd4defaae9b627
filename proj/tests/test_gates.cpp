#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spikegate/gates.hpp"

using namespace spikegate;
using namespace spikegate::gates;

namespace {

SpikeTrain train_at(std::vector<double> t) { return SpikeTrain::from_times(t); }

// Independent reference: repeatedly take the earliest unassigned spike as an
// anchor and drop every spike less than `window` after it.
std::vector<double> grouping_oracle(std::vector<double> t, double window) {
  std::vector<double> out;
  while (!t.empty()) {
    const double anchor = t.front();
    out.push_back(anchor);
    std::erase_if(t, [&](double x) { return x - anchor < window; });
  }
  return out;
}

std::vector<StimulusTrial> three_pairs(double spacing = 10000.0) {
  return {{0.0, InputLabel::Pair01}, {spacing, InputLabel::Pair10}, {2 * spacing, InputLabel::Pair11}};
}

BitVector bits(std::initializer_list<int> v) {
  BitVector out;
  for (int b : v) out.push_back(b != 0);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidParams;
}

}  // namespace

TEST(GroupSimultaneous, Example) {
  EXPECT_EQ(group_simultaneous(train_at({100, 2500, 7000}), 3000), (std::vector<double>{100, 7000}));
  EXPECT_TRUE(group_simultaneous(SpikeTrain{}).empty());
}

TEST(GroupSimultaneous, AnchorNotChained) {
  // 2900 and 5800 each sit within 3000 of their predecessor, but 5800 is
  // 5800 after the anchor.
  EXPECT_EQ(group_simultaneous(train_at({0, 2900, 5800})), (std::vector<double>{0, 5800}));
  // Exactly one window later starts a new group.
  EXPECT_EQ(group_simultaneous(train_at({0, 3000})), (std::vector<double>{0, 3000}));
}

TEST(GroupSimultaneous, MatchesOracleProperty) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 50000.0);
  std::uniform_int_distribution<int> count(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> t(static_cast<std::size_t>(count(gen)));
    for (auto& x : t) x = std::round(u(gen));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    const double window = trial % 3 == 0 ? 3000.0 : 500.0 + 37.0 * trial;
    const auto events = group_simultaneous(SpikeTrain::from_times(t), window);
    EXPECT_EQ(events, grouping_oracle(t, window));
    for (std::size_t i = 1; i < events.size(); ++i) EXPECT_GE(events[i] - events[i - 1], window);
  }
}

TEST(GroupSimultaneous, AddingSpikeInsideGroupIsNeutral) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.0, 40000.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> t(20);
    for (auto& x : t) x = std::round(u(gen));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    const auto events = group_simultaneous(SpikeTrain::from_times(t));
    // A spike right after an existing one that is not the last of its group
    // stays within the same anchor's window.
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      const double extra = t[i] + 0.5;
      if (extra >= t[i + 1]) continue;
      auto anchor = std::upper_bound(events.begin(), events.end(), t[i]);
      --anchor;
      if (extra - *anchor >= 3000.0) continue;
      auto with = t;
      with.insert(with.begin() + static_cast<long>(i) + 1, extra);
      EXPECT_EQ(group_simultaneous(SpikeTrain::from_times(with)), events);
      break;
    }
  }
}

TEST(ResponseBit, Examples) {
  const std::vector<double> e1{500};
  EXPECT_TRUE(response_bit(e1, {0.0, InputLabel::Pair01}));
  const std::vector<double> e2{3500};
  EXPECT_FALSE(response_bit(e2, {0.0, InputLabel::Pair01}, 3000));
  const std::vector<double> e3{500, 10200};
  EXPECT_TRUE(response_bit(e3, {0.0, InputLabel::Pair01}));
  EXPECT_TRUE(response_bit(e3, {10000.0, InputLabel::Pair10}));
  // Half-open window.
  const std::vector<double> e4{0, 3000};
  EXPECT_TRUE(response_bit(e4, {0.0, InputLabel::Pair01}));
  EXPECT_FALSE(response_bit(std::vector<double>{3000}, {0.0, InputLabel::Pair01}));
  EXPECT_FALSE(response_bit(std::vector<double>{-1}, {0.0, InputLabel::Pair01}));
}

TEST(ClassifyGate, AllEightRows) {
  struct Row {
    bool a, b, c;
    GateClass g;
    const char* name;
    const char* expr;
  };
  const Row rows[] = {
      {1, 1, 1, GateClass::Or, "OR", "x+y"},
      {1, 0, 1, GateClass::SelectY, "SELECT_Y", "y"},
      {1, 1, 0, GateClass::Xor, "XOR", "x⊕y"},
      {0, 1, 1, GateClass::SelectX, "SELECT_X", "x"},
      {1, 0, 0, GateClass::NotXAndY, "NOTX_AND_Y", "x̄y"},
      {0, 1, 0, GateClass::XAndNotY, "X_AND_NOTY", "xȳ"},
      {0, 0, 1, GateClass::And, "AND", "xy"},
      {0, 0, 0, GateClass::ConstFalse, "CONST_FALSE", "0"},
  };
  for (const auto& r : rows) {
    const auto g = classify_gate(r.a, r.b, r.c);
    EXPECT_EQ(g, r.g);
    EXPECT_EQ(gate_name(g), r.name);
    EXPECT_EQ(gate_expression(g), r.expr);
  }
}

TEST(ClassifyGate, Bijection) {
  std::set<GateClass> seen;
  for (int m = 0; m < 8; ++m) {
    const bool a = m & 4, b = m & 2, c = m & 1;
    const auto g = classify_gate(a, b, c);
    seen.insert(g);
    EXPECT_EQ(responses_for(g), (ResponseTriple{a, b, c}));
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(MineGate, AndOrConstFalse) {
  const auto trials = three_pairs();
  EXPECT_EQ(mine_gate(train_at({20500}), trials).gate, GateClass::And);
  EXPECT_EQ(mine_gate(train_at({500, 10500, 20500}), trials).gate, GateClass::Or);
  const auto none = mine_gate(SpikeTrain{}, trials);
  EXPECT_EQ(none.gate, GateClass::ConstFalse);
  EXPECT_EQ(none.expression, "0");
}

TEST(MineGate, OrOverRepeatedTrials) {
  std::vector<StimulusTrial> trials{{0, InputLabel::Pair01},     {10000, InputLabel::Pair01},
                                    {20000, InputLabel::Pair10}, {30000, InputLabel::Pair11},
                                    {40000, InputLabel::White}};
  const auto r = mine_gate(train_at({10100, 40100}), trials);
  EXPECT_TRUE(r.s01);
  EXPECT_FALSE(r.s10);
  EXPECT_FALSE(r.s11);
  EXPECT_EQ(r.gate, GateClass::NotXAndY);
  EXPECT_EQ(r.expression, "x̄y");
}

TEST(MineGate, MissingPair) {
  std::vector<StimulusTrial> trials{{0, InputLabel::Pair01}, {10000, InputLabel::Pair11}};
  EXPECT_EQ(code_of([&] { (void)mine_gate(SpikeTrain{}, trials); }), ErrorCode::MissingInputPair);
}

TEST(MineGate, UnsortedTrialsRejected) {
  std::vector<StimulusTrial> trials{{10, InputLabel::Pair01}, {5, InputLabel::Pair10}, {20, InputLabel::Pair11}};
  EXPECT_EQ(code_of([&] { validate_trials(trials); }), ErrorCode::InvalidParams);
}

TEST(MineGate, OutOfWindowSpikesAreNeutral) {
  std::mt19937_64 gen(8);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> in(0.0, 2999.0);
  std::uniform_real_distribution<double> out(3000.0, 9999.0);
  const auto trials = three_pairs();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> base, extra;
    for (const auto& t : trials) {
      if (coin(gen)) base.push_back(t.onset + std::round(in(gen)));
      if (coin(gen)) extra.push_back(t.onset + std::round(out(gen)));
    }
    auto merged = base;
    merged.insert(merged.end(), extra.begin(), extra.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    const auto a = mine_gate(SpikeTrain::from_times(base), trials);
    const auto b = mine_gate(SpikeTrain::from_times(merged), trials);
    EXPECT_EQ(to_json(a), to_json(b));
  }
}

TEST(GateReportJson, FieldOrder) {
  const auto r = mine_gate(train_at({20500}), three_pairs());
  EXPECT_EQ(to_json(r), R"({"s01":false,"s10":false,"s11":true,"gate":"AND","expression":"xy"})");
}

TEST(InputLabels, RoundTrip) {
  for (auto l : {InputLabel::Pair01, InputLabel::Pair10, InputLabel::Pair11, InputLabel::White, InputLabel::Black,
                 InputLabel::BlackWhite, InputLabel::None}) {
    EXPECT_EQ(parse_input_label(to_string(l)), l);
  }
  EXPECT_FALSE(parse_input_label("02").has_value());
}

TEST(BinarizePeriods, Examples) {
  const std::vector<double> means{3417.83, 2174.00, 3265.83, 759.32};
  EXPECT_EQ(binarize_periods(means), bits({1, 1, 1, 1}));
  EXPECT_EQ(binarize_periods(means, 3423, BitConvention::AboveIsOne), bits({0, 0, 0, 0}));
  EXPECT_TRUE(binarize_periods(std::vector<double>{}).empty());
  EXPECT_EQ(binarize_periods(std::vector<double>{3423.0}), bits({0}));
  EXPECT_EQ(binarize_periods(std::vector<double>{3423.0}, 3423, BitConvention::AboveIsOne), bits({0}));
  EXPECT_EQ(binarize_periods(std::vector<double>{3500.0, 100.0}, 3423, BitConvention::AboveIsOne), bits({1, 0}));
  EXPECT_EQ(code_of([] { (void)binarize_periods(std::vector<double>{1.0}, 0.0); }), ErrorCode::InvalidParams);
  EXPECT_EQ(parse_convention("below_is_1"), BitConvention::BelowIsOne);
  EXPECT_EQ(parse_convention("above_is_1"), BitConvention::AboveIsOne);
  EXPECT_FALSE(parse_convention("sideways").has_value());
}

TEST(EvalLogic, TwoInputExample) {
  const std::vector<BitVector> in{bits({0, 1}), bits({1, 1})};
  const auto t = eval_logic(in);
  EXPECT_EQ(t.xor_, bits({1, 0}));
  EXPECT_EQ(t.and_, bits({0, 1}));
  EXPECT_EQ(t.nor, bits({0, 0}));
  EXPECT_EQ(t.nots[0], bits({1, 0}));
}

TEST(EvalLogic, ThreeInputExample) {
  const std::vector<BitVector> in{bits({1, 1}), bits({1, 0}), bits({1, 1})};
  const auto t = eval_logic(in);
  EXPECT_EQ(t.and_, bits({1, 0}));
  EXPECT_EQ(t.or_, bits({1, 1}));
  // Odd parity: three ones, then two.
  EXPECT_EQ(t.xor_, bits({1, 0}));
}

TEST(EvalLogic, ExhaustiveTruthTables) {
  for (std::size_t k : {2u, 3u}) {
    // Column j of the table is the j-th assignment of k bits.
    const std::size_t rows = std::size_t{1} << k;
    std::vector<BitVector> in(k, BitVector(rows));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < k; ++i) in[i][r] = (r >> i) & 1u;
    }
    const auto t = eval_logic(in);
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < k; ++i) ones += (r >> i) & 1u;
      EXPECT_EQ(t.and_[r], ones == k);
      EXPECT_EQ(t.or_[r], ones > 0);
      EXPECT_EQ(t.xor_[r], ones % 2 == 1);
      EXPECT_EQ(t.nand[r], ones != k);
      EXPECT_EQ(t.nor[r], ones == 0);
      EXPECT_EQ(t.xnor[r], ones % 2 == 0);
      bool or_of_nots = false, and_of_nots = true;
      for (std::size_t i = 0; i < k; ++i) {
        EXPECT_EQ(t.nots[i][r], !in[i][r]);
        or_of_nots = or_of_nots || t.nots[i][r];
        and_of_nots = and_of_nots && t.nots[i][r];
      }
      EXPECT_EQ(t.nand[r], or_of_nots);
      EXPECT_EQ(t.nor[r], and_of_nots);
    }
    // Double negation and XOR associativity.
    const auto twice = eval_logic(std::vector<BitVector>{t.nots[0], t.nots[1]});
    EXPECT_EQ(twice.nots[0], in[0]);
    EXPECT_EQ(twice.nots[1], in[1]);
    if (k == 3) {
      const auto ab = eval_logic(std::vector<BitVector>{in[0], in[1]}).xor_;
      const auto bc = eval_logic(std::vector<BitVector>{in[1], in[2]}).xor_;
      EXPECT_EQ(eval_logic(std::vector<BitVector>{ab, in[2]}).xor_, eval_logic(std::vector<BitVector>{in[0], bc}).xor_);
      EXPECT_EQ(eval_logic(std::vector<BitVector>{ab, in[2]}).xor_, t.xor_);
    }
  }
}

TEST(EvalLogic, Errors) {
  EXPECT_EQ(code_of([] { (void)eval_logic(std::vector<BitVector>{bits({1})}); }), ErrorCode::TooFewInputs);
  EXPECT_EQ(code_of([] { (void)eval_logic(std::vector<BitVector>{bits({1}), bits({1, 0})}); }),
            ErrorCode::LengthMismatch);
}

TEST(EvalLogic, EmptyVectorsGiveEmptyOutputs) {
  const auto t = eval_logic(std::vector<BitVector>{BitVector{}, BitVector{}});
  EXPECT_TRUE(t.and_.empty());
  EXPECT_TRUE(t.xnor.empty());
}
