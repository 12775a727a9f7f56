#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "autoseq/analysis.hpp"
#include "autoseq/arithmetic.hpp"
#include "autoseq/automata_ops.hpp"
#include "autoseq/classifier.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/error.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/multiplicativity.hpp"
#include "autoseq/pumping.hpp"
#include "autoseq/serialization.hpp"

namespace autoseq::cli {

namespace {

// Verdicts that are answers rather than input problems.
bool is_verdict_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ZeroInstability:
    case ErrorKind::Undetected:
    case ErrorKind::NotMultiplicative:
    case ErrorKind::PeriodUndetected:
    case ErrorKind::ReconstructionMismatch:
    case ErrorKind::CompositeNonPeriodic:
    case ErrorKind::NoFit:
    case ErrorKind::FormMismatch:
      return true;
    default:
      return false;
  }
}

struct Source {
  std::string spec_path;
  std::string dfao_path;
  std::string builtin;

  void add_to(CLI::App* cmd) {
    auto* s = cmd->add_option("--spec", spec_path, "sequence spec (JSON)");
    auto* d = cmd->add_option("--dfao,--spec-from-dfao", dfao_path, "automaton (JSON)");
    auto* b = cmd->add_option("--builtin", builtin, "period-doubling | squares | even-powers-of-2")
                  ->check(CLI::IsMember({"period-doubling", "squares", "even-powers-of-2"}));
    s->excludes(d)->excludes(b);
    d->excludes(b);
  }
};

struct Loaded {
  SequenceOracle oracle;
  std::optional<TheoremFormSpec> spec;
  std::optional<Dfao> dfao;
  unsigned natural_base = 0;
};

TheoremFormSpec period_doubling_spec() {
  TheoremFormSpec s;
  s.p = 2;
  s.f1 = EventuallyPeriodicSeq({}, {Value::one(), Value::from_int(-1)});
  s.f2 = PeriodicMult::from_character(DirichletCharacter::principal(2), 2);
  return s;
}

TheoremFormSpec even_powers_spec() {
  TheoremFormSpec s;
  s.p = 2;
  s.f1 = EventuallyPeriodicSeq({}, {Value::one(), Value::zero()});
  s.f2 = FiniteSupport{};
  return s;
}

Loaded load(const Source& src) {
  Loaded l;
  if (!src.spec_path.empty()) {
    l.spec = spec_from_json(read_json_file(src.spec_path));
  } else if (!src.dfao_path.empty()) {
    l.dfao = dfao_from_json(read_json_file(src.dfao_path));
  } else if (src.builtin == "period-doubling") {
    l.spec = period_doubling_spec();
  } else if (src.builtin == "even-powers-of-2") {
    l.spec = even_powers_spec();
  } else if (src.builtin == "squares") {
    l.oracle = [](std::uint64_t n) {
      std::uint64_t r = 0;
      while ((r + 1) * (r + 1) <= n) ++r;
      return r * r == n ? Value::one() : Value::zero();
    };
    l.natural_base = 2;
    return l;
  } else {
    throw Error(ErrorKind::InvalidArgument, "one of --spec, --dfao or --builtin is required");
  }
  if (l.spec) {
    l.oracle = theorem_form(*l.spec);
    l.natural_base = static_cast<unsigned>(l.spec->p);
  } else {
    l.oracle = as_oracle(*l.dfao);
    l.natural_base = l.dfao->base();
  }
  return l;
}

Dfao automaton_of(const Loaded& l) {
  if (l.dfao) return *l.dfao;
  if (l.spec) return dfao_for_spec(*l.spec);
  throw Error(ErrorKind::InvalidArgument, "this command needs --spec or --dfao");
}

std::string values_line(const SequenceOracle& a, std::uint64_t start, std::uint64_t count) {
  std::ostringstream os;
  for (std::uint64_t i = 0; i < count; ++i) os << (i ? "," : "") << a(start + i).str();
  return os.str();
}

Json complex_json(const HpComplex& z) { return {{"re", format_hp(z.re, 15)}, {"im", format_hp(z.im, 15)}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Each command fills this and returns its exit code.
using Action = std::function<int(std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative automatic sequences: construct, verify, classify", "autoseq"};
  app.require_subcommand(1);
  Action action;

  // gen
  Source gen_src;
  std::uint64_t gen_count = 16, gen_start = 1, gen_seed = 1;
  bool gen_random = false;
  std::string gen_format = "plain";
  auto* gen = app.add_subcommand("gen", "print terms, or random specs with --random");
  gen_src.add_to(gen);
  gen->add_option("--count", gen_count, "number of terms (or specs)")->check(CLI::PositiveNumber);
  gen->add_option("--start", gen_start, "first index");
  gen->add_flag("--random", gen_random, "emit random specs instead of terms");
  gen->add_option("--seed", gen_seed, "seed for --random");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"plain", "json", "csv"}));
  gen->callback([&] {
    action = [&](std::ostream& os) {
      if (gen_random) {
        Json arr = Json::array();
        for (const auto& s : spec_corpus(gen_seed, gen_count)) arr.push_back(spec_to_json(s));
        emit(os, arr);
        return 0;
      }
      const auto l = load(gen_src);
      if (gen_format == "plain") {
        os << values_line(l.oracle, gen_start, gen_count) << '\n';
      } else if (gen_format == "csv") {
        os << "n,value\n";
        for (std::uint64_t i = 0; i < gen_count; ++i) os << gen_start + i << ',' << l.oracle(gen_start + i).str() << '\n';
      } else {
        Json arr = Json::array();
        for (std::uint64_t i = 0; i < gen_count; ++i) arr.push_back(value_to_json(l.oracle(gen_start + i)));
        emit(os, {{"start", gen_start}, {"values", arr}});
      }
      return 0;
    };
  });

  // check-mult
  Source cm_src;
  std::uint64_t cm_bound = 4096;
  bool cm_complete = false;
  auto* cm = app.add_subcommand("check-mult", "certify (complete) multiplicativity on a range");
  cm_src.add_to(cm);
  cm->add_option("--N", cm_bound, "largest product checked")->check(CLI::Range(2ULL, 1ULL << 22));
  cm->add_flag("--complete", cm_complete, "check all pairs, not only coprime ones");
  cm->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(cm_src);
      const auto v = cm_complete ? is_completely_multiplicative(l.oracle, cm_bound)
                                 : is_multiplicative(l.oracle, cm_bound);
      const std::string mode = cm_complete ? "complete" : "coprime";
      if (std::holds_alternative<Certified>(v)) {
        emit(os, {{"verdict", "certified"}, {"mode", mode}, {"N", cm_bound}});
        return 0;
      }
      const auto c = std::get<Counterexample>(v);
      emit(os, {{"verdict", "counterexample"},
                {"mode", mode},
                {"N", cm_bound},
                {"m", c.m},
                {"n", c.n},
                {"a(m)", value_to_json(l.oracle(c.m))},
                {"a(n)", value_to_json(l.oracle(c.n))},
                {"a(mn)", value_to_json(l.oracle(c.m * c.n))}});
      return 1;
    };
  });

  // decompose
  Source dec_src;
  std::uint64_t dec_p = 0, dec_h = 4096;
  auto* dec = app.add_subcommand("decompose", "recover (p, f1, f2)");
  dec_src.add_to(dec);
  dec->add_option("--p", dec_p, "the prime (default: base of the input)");
  dec->add_option("--H", dec_h, "horizon")->check(CLI::Range(4ULL, 1ULL << 24));
  dec->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(dec_src);
      const std::uint64_t p = dec_p != 0 ? dec_p : l.natural_base;
      const auto d = decompose(l.oracle, p, dec_h);
      emit(os, {{"p", d.p},
                {"f1", eventually_periodic_to_json(d.f1)},
                {"f2", mult_spec_to_json(d.f2)},
                {"unique", d.unique},
                {"verified_to", d.verified_to}});
      return 0;
    };
  });

  // classify
  Source cl_src;
  std::uint64_t cl_bound = kDefaultModulusBound, cl_h = 4096, cl_base = 0, cl_n = 10000;
  bool cl_identities = false;
  auto* cl = app.add_subcommand("classify", "sparse/dense verdict with the fitted (h, lambda, chi)");
  cl_src.add_to(cl);
  cl->add_option("--B", cl_bound, "largest modulus tried")->check(CLI::Range(1ULL, 1ULL << 20));
  cl->add_option("--H", cl_h, "horizon")->check(CLI::Range(2ULL, 1ULL << 24));
  cl->add_option("--base", cl_base, "declared base (default: base of the input)");
  cl->add_flag("--identities", cl_identities, "also run the dense product-form and factor checks");
  cl->add_option("--N", cl_n, "range of the identity checks")->check(CLI::Range(2ULL, 1ULL << 22));
  cl->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(cl_src);
      const std::uint64_t base = cl_base != 0 ? cl_base : l.natural_base;
      const auto c = classify_sparse_dense(l.oracle, cl_bound, cl_h, base);
      Json j{{"modulus", c.modulus}, {"horizon", c.horizon}};
      int code = 0;
      if (c.verdict == Verdict::Sparse) {
        j["verdict"] = "sparse";
        const auto rep = sparse_support_analysis(l.oracle, cl_h, c.modulus);
        const std::size_t shown = std::min<std::size_t>(rep.support.size(), 64);
        j["support_count"] = rep.support.size();
        j["support"] = std::vector<std::uint64_t>(rep.support.begin(), rep.support.begin() + static_cast<std::ptrdiff_t>(shown));
        j["flagged"] = rep.flagged;
        Json ex = Json::object();
        for (const auto& [q, es] : rep.exponents) ex[std::to_string(q)] = es;
        j["exponents"] = ex;
        j["p_estimate"] = rep.p_estimate;
      } else {
        j["verdict"] = "dense";
        j["dense"] = dense_to_json(*c.dense);
        if (cl_identities) {
          Json ids = Json::object();
          const auto pf = dense_product_form_check(l.oracle, *c.dense, cl_n);
          if (const auto* f = std::get_if<Fail>(&pf)) {
            ids["product_form"] = {{"verdict", "fail"}, {"n", f->n}};
            code = 1;
          } else {
            ids["product_form"] = {{"verdict", "pass"}, {"N", cl_n}};
          }
          Json factors = Json::array();
          for (std::uint64_t q : c.dense->primes()) {
            const auto fv = periodic_factor_check(l.oracle, *c.dense, q, cl_n);
            Json fj{{"q", q}};
            if (const auto* ok = std::get_if<FactorPeriod>(&fv)) {
              fj["verdict"] = "periodic";
              fj["period"] = ok->period;
              fj["search_bound"] = ok->search_bound;
              fj["gamma"] = ok->gamma ? Json(*ok->gamma) : Json(nullptr);
            } else {
              const auto& bad = std::get<FactorFail>(fv);
              fj["verdict"] = "fail";
              fj["n"] = bad.n;
              fj["search_bound"] = bad.search_bound;
              fj["gamma"] = bad.gamma ? Json(*bad.gamma) : Json(nullptr);
              code = 1;
            }
            factors.push_back(fj);
          }
          ids["factors"] = factors;
          j["identities"] = ids;
        }
      }
      emit(os, j);
      return code;
    };
  });

  // mean
  Source mean_src;
  std::uint64_t mean_n = 100000;
  std::string mean_format = "json";
  auto* mean = app.add_subcommand("mean", "closed-form mean against the empirical mean");
  mean_src.add_to(mean);
  mean->add_option("--N", mean_n, "terms averaged")->check(CLI::Range(1ULL, 1ULL << 27));
  mean->add_option("--format", mean_format)->check(CLI::IsMember({"json", "csv"}));
  mean->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(mean_src);
      if (!l.spec) throw Error(ErrorKind::InvalidArgument, "mean needs a spec (--spec or a spec builtin)");
      if (mean_format == "csv") {
        write_mean_csv(os, mean_trace(*l.spec, mean_n));
        return 0;
      }
      const auto r = mean_report(*l.spec, mean_n);
      emit(os, {{"formula", complex_json(r.formula)},
                {"formula_is_zero", mean_formula_exact(*l.spec).is_zero()},
                {"empirical", complex_json(r.empirical)},
                {"N", r.count},
                {"discrepancy", format_hp(r.discrepancy, 15)}});
      return 0;
    };
  });

  // kernel
  Source k_src;
  unsigned k_base = 0;
  std::uint64_t k_t = kDefaultHorizon;
  std::size_t k_max = kDefaultMaxStates;
  auto* ker = app.add_subcommand("kernel", "truncated kernel closure and its automaton");
  k_src.add_to(ker);
  ker->add_option("--base", k_base, "kernel base (default: base of the input)");
  ker->add_option("--T", k_t, "truncation horizon")->check(CLI::Range(1ULL, 1ULL << 20));
  ker->add_option("--max-states", k_max, "class budget")->check(CLI::Range(1ULL, 1ULL << 16));
  ker->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(k_src);
      const unsigned base = k_base != 0 ? k_base : l.natural_base;
      try {
        const auto kt = kernel_closure(l.oracle, base, k_t, k_max);
        Json reps = Json::array();
        for (const auto& r : kt.representatives) reps.push_back({{"k", r.k}, {"r", r.r}});
        Json j{{"verdict", "closed"}, {"base", base}, {"T", k_t}, {"classes", kt.size()}, {"representatives", reps}};
        try {
          j["dfao"] = dfao_to_json(dfao_from_kernel(kt));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::ZeroInstability) throw;
          j["dfao"] = nullptr;
          j["note"] = e.what();
        }
        emit(os, j);
        return 0;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        emit(os, {{"verdict", "budget_exceeded"}, {"base", base}, {"T", k_t}, {"max_states", k_max}});
        return 1;
      }
    };
  });

  // minimize
  Source min_src;
  auto* mn = app.add_subcommand("minimize", "minimal automaton");
  min_src.add_to(mn);
  mn->callback([&] {
    action = [&](std::ostream& os) {
      emit(os, dfao_to_json(minimize(automaton_of(load(min_src)))));
      return 0;
    };
  });

  // pump
  Source pump_src;
  std::uint64_t pump_n = 0;
  unsigned pump_k = 8;
  auto* pump = app.add_subcommand("pump", "pumping witness checked by evaluation");
  pump_src.add_to(pump);
  pump->add_option("--n", pump_n, "index to pump")->required();
  pump->add_option("--k", pump_k, "largest repetition count checked")->check(CLI::Range(0U, 64U));
  pump->callback([&] {
    action = [&](std::ostream& os) {
      const auto d = automaton_of(load(pump_src));
      const auto w = pump_witness(d, pump_n);
      const Value target = d.eval(pump_n);
      Json checks = Json::array();
      int code = 0;
      for (unsigned k = 0; k <= pump_k; ++k) {
        const BigInt idx = pumped_index(w, d.base(), k);
        const Value v = eval_big(d, idx);
        if (v != target) code = 1;
        checks.push_back({{"k", k}, {"index", idx.str()}, {"value", v.str()}, {"ok", v == target}});
      }
      emit(os, {{"n", pump_n},
                {"value", target.str()},
                {"witness", {{"x", w.x.str()}, {"y", w.y.str()}, {"z", w.z.str()}, {"l1", w.l1}, {"l2", w.l2}, {"l3", w.l3}}},
                {"checks", checks},
                {"verdict", code == 0 ? "pass" : "fail"}});
      return code;
    };
  });

  // toeplitz
  Source tp_src;
  std::uint64_t tp_n = 500, tp_s = 200, tp_p = 0, tp_c = 0;
  auto* tp = app.add_subcommand("toeplitz", "a(n + s p n c) = a(n) scan");
  tp_src.add_to(tp);
  tp->add_option("--N", tp_n)->check(CLI::Range(1ULL, 1ULL << 20));
  tp->add_option("--S", tp_s)->check(CLI::Range(1ULL, 1ULL << 16));
  tp->add_option("--p", tp_p, "prime (default: from the spec)");
  tp->add_option("--c", tp_c, "period factor (default: from the spec)");
  tp->callback([&] {
    action = [&](std::ostream& os) {
      const auto l = load(tp_src);
      const std::uint64_t p = tp_p != 0 ? tp_p : l.natural_base;
      const std::uint64_t c = tp_c != 0 ? tp_c : (l.spec ? f2_period_factor(l.spec->f2) : 1);
      const auto v = toeplitz_check(l.oracle, p, c, tp_n, tp_s);
      Json j{{"p", p}, {"c", c}, {"N", tp_n}, {"S", tp_s}};
      if (const auto* f = std::get_if<Fail>(&v)) {
        j["verdict"] = "fail";
        j["n"] = f->n;
        emit(os, j);
        return 1;
      }
      j["verdict"] = "pass";
      emit(os, j);
      return 0;
    };
  });

  // density
  Source den_src;
  std::uint64_t den_n = 100000;
  std::string den_format = "json";
  auto* den = app.add_subcommand("density", "support density per decade");
  den_src.add_to(den);
  den->add_option("--N", den_n)->check(CLI::Range(10ULL, 1ULL << 27));
  den->add_option("--format", den_format)->check(CLI::IsMember({"json", "csv"}));
  den->callback([&] {
    action = [&](std::ostream& os) {
      const auto curve = support_density(load(den_src).oracle, den_n);
      if (den_format == "csv") {
        write_density_csv(os, curve);
        return 0;
      }
      Json pts = Json::array();
      for (const auto& pt : curve.points) pts.push_back({{"limit", pt.limit}, {"count", pt.count}});
      emit(os, {{"points", pts}, {"not_decreasing", curve.not_decreasing}});
      return 0;
    };
  });

  // complexity
  Source cx_src;
  std::size_t cx_l = 8;
  std::uint64_t cx_n = 10000, cx_gap = 0, cx_prefix = 0;
  std::string cx_format = "json";
  auto* cx = app.add_subcommand("complexity", "factor counts and recurrence gaps");
  cx_src.add_to(cx);
  cx->add_option("--L", cx_l)->check(CLI::Range(1ULL, 64ULL));
  cx->add_option("--N", cx_n)->check(CLI::Range(1ULL, 1ULL << 22));
  cx->add_option("--gap-limit", cx_gap, "bounded-gap threshold (default N/4)");
  cx->add_option("--tracked-prefix", cx_prefix, "only factors first seen by this start count (default N/100)");
  cx->add_option("--format", cx_format)->check(CLI::IsMember({"json", "csv"}));
  cx->callback([&] {
    action = [&](std::ostream& os) {
      const auto rep = word_complexity(load(cx_src).oracle, cx_l, cx_n, cx_gap, cx_prefix);
      if (cx_format == "csv") {
        write_complexity_csv(os, rep);
      } else {
        Json rows = Json::array();
        for (const auto& r : rep.rows) rows.push_back({{"length", r.length}, {"distinct", r.distinct}, {"max_gap", r.max_gap}});
        emit(os, {{"rows", rows},
                  {"gap_limit", rep.gap_limit},
                  {"tracked_prefix", rep.tracked_prefix},
                  {"bounded_gaps", rep.bounded_gaps}});
      }
      return rep.bounded_gaps ? 0 : 1;
    };
  });

  // export-dot
  Source dot_src;
  bool dot_min = false;
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of an automaton");
  dot_src.add_to(dot);
  dot->add_flag("--minimize", dot_min, "minimize first");
  dot->callback([&] {
    action = [&](std::ostream& os) {
      auto d = automaton_of(load(dot_src));
      os << dfao_to_dot(dot_min ? minimize(d) : d);
      return 0;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action(out);
  } catch (const Error& e) {
    if (is_verdict_error(e.kind())) {
      emit(out, {{"verdict", "error"}, {"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
      return 1;
    }
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  }
}

}  // namespace autoseq::cli
