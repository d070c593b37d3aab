#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "latsum/serialize.hpp"

using namespace latsum;

namespace {

BigRat q(long n, long d = 1) { return BigRat(mpz_class(n), mpz_class(d)); }

}  // namespace

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(q(-7, 3)).dump(), "\"-7/3\"");
  EXPECT_EQ(to_json(Poly()).dump(), "[]");
  EXPECT_EQ(to_json(closed_B(1)).dump(), R"({"num":["-12"],"den":["0","1","1"]})");
  EXPECT_EQ(to_json(AnyScalar(q(5))).dump(), "\"5\"");
}

TEST(Json, ScalarRoundTrip) {
  for (Index p = 1; p <= 10; ++p) {
    const RatFunc f = closed_A(p) + closed_B(p) / RatFunc::x();
    EXPECT_EQ(ratfunc_from_json(to_json(f)), f);
  }
  EXPECT_EQ(bigrat_from_json(to_json(q(22, 7))), q(22, 7));
  EXPECT_THROW(bigrat_from_json(json(1.5)), ParseError);
  EXPECT_THROW(ratfunc_from_json(json::parse(R"({"num":["1"]})")), ParseError);
  EXPECT_THROW(ratfunc_from_json(json::parse(R"({"num":["1"],"den":[]})")), DivisionByZero);
}

TEST(Json, SumRecord) {
  EXPECT_EQ(sum_record(SymbolicX{}, 1, Quantity::A, RatFunc()).dump(),
            R"({"p":1,"quantity":"A","mode":"symbolic","value":{"num":[],"den":["1"]}})");
  EXPECT_EQ(sum_record(FixedX{q(2)}, 2, Quantity::C, q(18)).dump(),
            R"({"p":2,"quantity":"C","mode":"fixed","x":"2","value":"18"})");
}

TEST(Json, Report) {
  ConjectureReport r;
  r.name = CheckName::conj4;
  r.pmax = 21;
  r.checked = 20;
  EXPECT_EQ(to_json(r).dump(),
            R"({"name":"conj4","pmax":21,"status":"pass","checked":20,"passed":20,"elapsed_ms":0})");
  r.failures = 1;
  r.first_fail = Failure{7, q(448), q(447)};
  EXPECT_EQ(to_json(r).dump(),
            R"({"name":"conj4","pmax":21,"status":"fail","checked":20,"passed":19,)"
            R"("first_fail":{"p":7,"expected":"448","got":"447"},"elapsed_ms":0})");
}

TEST(Sequence, ReadWrite) {
  std::istringstream in("1\n  -2/4 \n\n7\r\n");
  auto seq = read_sequence(in);
  EXPECT_EQ(seq, (std::vector<BigRat>{q(1), q(-1, 2), q(7)}));
  std::ostringstream out;
  write_sequence(out, seq);
  EXPECT_EQ(out.str(), "1\n-1/2\n7\n");
}

TEST(Sequence, BadLineIsNamed) {
  std::istringstream in("1\n2\nthree\n");
  try {
    read_sequence(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Candidate, JsonShape) {
  auto c = make_candidate({Poly(std::vector<BigRat>{q(-1)}), Poly(std::vector<BigRat>{q(-1)}),
                           Poly(std::vector<BigRat>{q(1)})});
  c.window_last = 8;
  EXPECT_EQ(to_json(c).dump(),
            R"({"order":2,"degree":0,"variable":"n","coeffs":[["-1"],["-1"],["1"]],"window":{"first":1,"last":8}})");
  EXPECT_EQ(candidate_from_json(to_json(c)), c);
  EXPECT_THROW(candidate_from_json(json::parse(R"({"order":3,"coeffs":[["1"],["1"]]})")), ParseError);
  EXPECT_THROW(candidate_from_json(json::parse(R"({"coeffs":[["1"],[]]})")), ArgumentError);
}

TEST(Table, JsonLinesAreDeterministic) {
  const Quantity which[] = {Quantity::B, Quantity::D};
  auto render = [&] {
    std::ostringstream os;
    write_table_jsonl(os, compute_table(make_bcmv(FixedX{q(7, 3)}), 6), which);
    return os.str();
  };
  const std::string first = render();
  EXPECT_EQ(render(), first);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 12);
  EXPECT_EQ(first.substr(0, first.find('\n')), R"({"p":1,"quantity":"B","mode":"fixed","x":"7/3","value":"-54/35"})");
}
