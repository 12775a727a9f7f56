#include "autoseq/serialization.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "autoseq/arithmetic.hpp"
#include "autoseq/error.hpp"

namespace autoseq {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::ParseError, std::string("unknown key \"") + key + "\" in " + what);
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::ParseError, std::string("missing \"") + key + "\" in " + what);
  return *it;
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<Value> values_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<Value> out;
  for (const auto& v : j) out.push_back(value_from_json(v));
  return out;
}

Json values_to_json(const std::vector<Value>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(value_to_json(v));
  return out;
}

std::string prime_power_key(std::uint64_t q) {
  PrimePower pp;
  as_prime_power(q, pp);
  return std::to_string(pp.prime) + "^" + std::to_string(pp.exponent);
}

std::uint64_t parse_prime_power_key(const std::string& key) {
  try {
    const auto caret = key.find('^');
    std::size_t used = 0;
    if (caret == std::string::npos) {
      const std::uint64_t v = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
      return v;
    }
    const std::uint64_t q = std::stoull(key.substr(0, caret), &used);
    if (used != caret) throw std::invalid_argument(key);
    const std::string e = key.substr(caret + 1);
    const auto exponent = static_cast<unsigned>(std::stoul(e, &used));
    if (used != e.size()) throw std::invalid_argument(key);
    return ipow(q, exponent);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad prime power \"" + key + "\"");
  }
}

}  // namespace

Json value_to_json(const Value& v) {
  if (v.is_zero()) return 0;
  return Json{{"scale", v.scale().fraction_str()}, {"phase", v.phase().fraction_str()}};
}

Value value_from_json(const Json& j) {
  if (j.is_number_integer()) return Value::from_int(j.get<std::int64_t>());
  only_keys(j, {"scale", "phase"}, "value");
  const auto& s = field(j, "scale", "value");
  const auto& p = field(j, "phase", "value");
  if (!s.is_string() || !p.is_string()) throw Error(ErrorKind::ParseError, "value scale and phase must be strings");
  try {
    return Value::unit(Rational::parse(s.get<std::string>()), Rational::parse(p.get<std::string>()));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("bad value: ") + e.what());
  }
}

Json dfao_to_json(const Dfao& d) {
  Json states = Json::array();
  for (std::size_t s = 0; s < d.size(); ++s) {
    states.push_back({{"id", s}, {"output", value_to_json(d.output(s))}, {"delta", d.delta()[s]}});
  }
  return {{"base", d.base()}, {"initial", d.initial()}, {"states", states}};
}

Dfao dfao_from_json(const Json& j) {
  only_keys(j, {"base", "initial", "states"}, "automaton");
  const auto base = as_u64(field(j, "base", "automaton"), "base");
  if (base < 2 || base > (1U << 20)) throw Error(ErrorKind::ParseError, "base out of range");
  const auto initial = as_u64(field(j, "initial", "automaton"), "initial");
  const auto& states = field(j, "states", "automaton");
  if (!states.is_array() || states.empty()) throw Error(ErrorKind::ParseError, "states must be a non-empty array");
  const std::size_t n = states.size();
  std::vector<std::vector<Dfao::State>> delta(n);
  std::vector<Value> out(n);
  std::vector<bool> filled(n, false);
  for (const auto& st : states) {
    only_keys(st, {"id", "output", "delta"}, "state");
    const auto id = as_u64(field(st, "id", "state"), "id");
    if (id >= n || filled[id]) throw Error(ErrorKind::ParseError, "state ids must be 0..n-1, each once");
    filled[id] = true;
    out[id] = value_from_json(field(st, "output", "state"));
    const auto& row = field(st, "delta", "state");
    if (!row.is_array() || row.size() != base) throw Error(ErrorKind::ParseError, "delta row length must equal base");
    for (const auto& t : row) delta[id].push_back(as_u64(t, "delta entry"));
  }
  try {
    return Dfao(static_cast<unsigned>(base), initial, std::move(delta), std::move(out));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::ParseError, e.what());
    throw;
  }
}

Json character_to_json(const DirichletCharacter& chi) {
  Json phases = Json::object();
  for (std::uint64_t r = 0; r < chi.modulus(); ++r) {
    if (chi.exponent(r) >= 0) phases[std::to_string(r)] = chi.phase(r).fraction_str();
  }
  return {{"modulus", chi.modulus()}, {"phases", phases}};
}

DirichletCharacter character_from_json(const Json& j) {
  only_keys(j, {"modulus", "phases"}, "character");
  const auto k = as_u64(field(j, "modulus", "character"), "modulus");
  const auto& ph = field(j, "phases", "character");
  if (!ph.is_object()) throw Error(ErrorKind::ParseError, "phases must be an object");
  std::map<std::uint64_t, Rational> phases;
  try {
    for (const auto& [key, v] : ph.items()) phases.emplace(std::stoull(key), Rational::parse(v.get<std::string>()));
    return DirichletCharacter::from_phases(k, phases);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad character: ") + e.what());
  }
}

Json eventually_periodic_to_json(const EventuallyPeriodicSeq& f1) {
  return {{"preperiod", values_to_json(f1.preperiod())}, {"period", values_to_json(f1.period())}};
}

Json mult_spec_to_json(const MultSpec& f2) {
  if (const auto* pm = std::get_if<PeriodicMult>(&f2)) {
    return {{"kind", "periodic_table"}, {"period", pm->period()}, {"values", values_to_json(pm->values())}};
  }
  Json table = Json::object();
  for (const auto& [q, v] : std::get<FiniteSupport>(f2).prime_powers()) table[prime_power_key(q)] = value_to_json(v);
  return {{"kind", "finite"}, {"prime_powers", table}};
}

Json spec_to_json(const TheoremFormSpec& spec) {
  return {{"p", spec.p}, {"f1", eventually_periodic_to_json(spec.f1)}, {"f2", mult_spec_to_json(spec.f2)}};
}

TheoremFormSpec spec_from_json(const Json& j) {
  only_keys(j, {"p", "f1", "f2"}, "spec");
  TheoremFormSpec spec;
  spec.p = as_u64(field(j, "p", "spec"), "p");
  const auto& f1 = field(j, "f1", "spec");
  only_keys(f1, {"preperiod", "period"}, "f1");
  std::vector<Value> pre;
  if (f1.contains("preperiod")) pre = values_from_json(f1["preperiod"], "preperiod");
  auto per = values_from_json(field(f1, "period", "f1"), "period");
  if (per.empty()) throw Error(ErrorKind::SpecInvalid, "f1 period must not be empty");
  spec.f1 = EventuallyPeriodicSeq(std::move(pre), std::move(per));

  const auto& f2 = field(j, "f2", "spec");
  const auto& kind_json = field(f2, "kind", "f2");
  if (!kind_json.is_string()) throw Error(ErrorKind::ParseError, "f2 kind must be a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "periodic") {
    only_keys(f2, {"kind", "modulus", "character_index"}, "f2");
    const auto k = as_u64(field(f2, "modulus", "f2"), "modulus");
    const auto idx = as_u64(field(f2, "character_index", "f2"), "character_index");
    if (k == 0 || k > 100000) throw Error(ErrorKind::SpecInvalid, "character modulus out of range");
    const auto chars = characters_mod(k);
    if (idx >= chars.size()) throw Error(ErrorKind::SpecInvalid, "character index out of range");
    if (!is_prime(spec.p)) throw Error(ErrorKind::SpecInvalid, "p is not prime");
    spec.f2 = PeriodicMult::from_character(chars[idx], spec.p);
  } else if (kind == "periodic_table") {
    only_keys(f2, {"kind", "period", "values"}, "f2");
    const auto d = as_u64(field(f2, "period", "f2"), "period");
    spec.f2 = PeriodicMult(d, values_from_json(field(f2, "values", "f2"), "values"));
  } else if (kind == "finite") {
    only_keys(f2, {"kind", "prime_powers"}, "f2");
    const auto& table = field(f2, "prime_powers", "f2");
    if (!table.is_object()) throw Error(ErrorKind::ParseError, "prime_powers must be an object");
    std::map<std::uint64_t, Value> entries;
    for (const auto& [key, v] : table.items()) entries.emplace(parse_prime_power_key(key), value_from_json(v));
    spec.f2 = FiniteSupport(std::move(entries));
  } else {
    throw Error(ErrorKind::ParseError, "unknown f2 kind \"" + kind + "\"");
  }
  validate(spec);
  return spec;
}

Json dense_to_json(const DenseData& dense) {
  Json primes = Json::array();
  for (std::uint64_t p : dense.primes()) {
    primes.push_back({{"p", p}, {"alpha", dense.alpha(p)}, {"pbar", dense.pbar(p)},
                      {"local", character_to_json(dense.local(p))}});
  }
  return {{"h", dense.h()}, {"lambda", dense.lambda()}, {"chi", character_to_json(dense.chi())}, {"primes", primes}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

std::string dfao_to_dot(const Dfao& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  start [shape=point];\n  start -> s0;\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    os << "  s" << s << " [shape=circle, label=\"" << s << " / " << d.output(s).str() << "\"];\n";
  }
  for (std::size_t s = 0; s < d.size(); ++s) {
    std::map<std::size_t, std::vector<unsigned>> grouped;
    for (unsigned x = 0; x < d.base(); ++x) grouped[d.next(s, x)].push_back(x);
    for (const auto& [t, digits] : grouped) {
      os << "  s" << s << " -> s" << t << " [label=\"";
      for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace autoseq
