#include <doctest.h>

#include "autoseq/automata_ops.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/error.hpp"
#include "autoseq/serialization.hpp"

using namespace autoseq;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("values") {
  CHECK(value_to_json(Value::zero()) == Json(0));
  const Value w = Value::unit(Rational(1, 2), Rational(1, 3));
  CHECK(value_to_json(w) == Json{{"scale", "1/2"}, {"phase", "1/3"}});
  for (const auto& v : value_pool()) CHECK(value_from_json(value_to_json(v)) == v);
  CHECK(value_from_json(Json(-1)) == Value::from_int(-1));
  CHECK(kind_of([] { value_from_json(Json{{"scale", "1"}, {"phase", "0"}, {"x", 1}}); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { value_from_json(Json{{"scale", "1/0"}, {"phase", "0"}}); }) == ErrorKind::ParseError);
}

TEST_CASE("automata") {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const Dfao d = random_dfao(rng, 2 + i % 4, 6);
    CHECK(dfao_from_json(dfao_to_json(d)) == d);
  }
  auto j = dfao_to_json(Dfao::constant(2, Value::one()));
  j["extra"] = true;
  CHECK(kind_of([&] { dfao_from_json(j); }) == ErrorKind::ParseError);
  const auto bad = Json::parse(R"({"base":2,"initial":0,"states":[{"id":0,"output":1,"delta":[0]}]})");
  CHECK(kind_of([&] { dfao_from_json(bad); }) == ErrorKind::ParseError);
  const auto unstable =
      Json::parse(R"({"base":2,"initial":0,"states":[{"id":0,"output":0,"delta":[1,1]},{"id":1,"output":1,"delta":[1,1]}]})");
  CHECK(kind_of([&] { dfao_from_json(unstable); }) == ErrorKind::ZeroInstability);
}

TEST_CASE("characters") {
  for (const auto& chi : characters_mod(20)) CHECK(character_from_json(character_to_json(chi)) == chi);
  const auto j = Json::parse(R"({"modulus":4,"phases":{"1":"0","3":"1/2"}})");
  CHECK(character_from_json(j)(3) == Value::from_int(-1));
  const auto bad = Json::parse(R"({"modulus":4,"phases":{"1":"0","3":"1/4"}})");
  CHECK(kind_of([&] { character_from_json(bad); }) == ErrorKind::ParseError);
}

TEST_CASE("specs") {
  for (const auto& s : spec_corpus(2, 30)) CHECK(spec_from_json(spec_to_json(s)) == s);
  const auto pd = Json::parse(R"({"p":2,"f1":{"period":[1,-1]},"f2":{"kind":"periodic","modulus":2,"character_index":0}})");
  const auto s = spec_from_json(pd);
  CHECK(std::get<PeriodicMult>(s.f2) == PeriodicMult(2, {Value::zero(), Value::one()}));
  const auto fin = Json::parse(R"({"p":3,"f1":{"period":[1]},"f2":{"kind":"finite","prime_powers":{"2^2":-1,"5":1}}})");
  const auto& table = std::get<FiniteSupport>(spec_from_json(fin).f2).prime_powers();
  CHECK(table.at(4) == Value::from_int(-1));
  CHECK(table.at(5).is_one());
  auto unknown = pd;
  unknown["f1"]["offset"] = 1;
  CHECK(kind_of([&] { spec_from_json(unknown); }) == ErrorKind::ParseError);
  auto not_prime = pd;
  not_prime["p"] = 6;
  CHECK(kind_of([&] { spec_from_json(not_prime); }) == ErrorKind::SpecInvalid);
  auto bad_kind = pd;
  bad_kind["f2"]["kind"] = "dense";
  CHECK(kind_of([&] { spec_from_json(bad_kind); }) == ErrorKind::ParseError);
}

TEST_CASE("dot rendering") {
  const Dfao d(2, 0, {{1, 2}, {0, 3}, {2, 2}, {3, 3}},
               {Value::zero(), Value::zero(), Value::one(), Value::from_int(-1)});
  const auto dot = dfao_to_dot(d, "pd");
  CHECK(dot.rfind("digraph pd {", 0) == 0);
  CHECK(dot.find("s2 -> s2 [label=\"0,1\"]") != std::string::npos);
  CHECK(dot.find("s0 -> s1 [label=\"0\"]") != std::string::npos);
  CHECK(dot.back() == '\n');
}
