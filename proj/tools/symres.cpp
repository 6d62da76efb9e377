// symres: resolutions of symmetric-algebra ideals from the command line.
//
//   symres resolve  FILE [--ideal iz|ix|ik]
//   symres verify   FILE
//   symres battery  --n 2 --eta 2 --count 20 --seed 7
//
// Exit status: 0 success, 1 a mathematical check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symres/symres.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace symres;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string file;
  std::string field;
  std::string order = "block";
  bool json = false;
  std::uint64_t seed = 7;
  std::optional<std::size_t> max_length;
  int d_max = 6;
  std::string ideal = "ix";
  int n = 2;
  std::vector<int> etas;
  std::size_t count = 20;
};

struct InputFailure {
  std::string message;
};

TermOrder term_order(const Options& o) { return o.order == "grevlex" ? TermOrder::GrevlexAll : TermOrder::Block; }

Json betti_json(const std::string& module, const BettiTable& t) {
  Json positions = Json::array();
  for (const auto& [i, row] : t.positions()) {
    Json shifts = Json::array();
    for (const auto& [d, m] : row) {
      Json s;
      s["x"] = d.x;
      s["y"] = d.y;
      s["mult"] = m;
      shifts.push_back(s);
    }
    Json p;
    p["i"] = i;
    p["shifts"] = shifts;
    positions.push_back(p);
  }
  Json j;
  j["module"] = module;
  j["positions"] = positions;
  return j;
}

Json optional_betti(const std::string& module, const std::optional<BettiTable>& t) {
  return t ? betti_json(module, *t) : Json(nullptr);
}

template <class T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json identity_json(const std::optional<IdentityCheck>& c) {
  if (!c) return nullptr;
  Json j;
  j["holds"] = c->holds;
  j["lhs"] = c->lhs;
  j["rhs"] = c->rhs;
  return j;
}

void print(const Options& o, const Json& j, const std::string& pretty) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << pretty;
  }
}

IdealFile load(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw InputFailure{"cannot open '" + o.file + "'"};
  try {
    return parse_ideal(in);
  } catch (const ParseError& e) {
    throw InputFailure{o.file + ": " + e.what()};
  }
}

/// Reads the input file and calls body(InputIdeal<Field>) over the selected field.
template <class Body>
int with_input(const Options& o, Body&& body) {
  IdealFile f = load(o);
  FieldSpec spec;
  try {
    spec = o.field.empty() ? f.field : FieldSpec::parse(o.field);
  } catch (const Error& e) {
    throw InputFailure{e.what()};
  }
  auto convert = [&](const auto& field) {
    try {
      return to_input_ideal(f, field);
    } catch (const Error& e) {
      throw InputFailure{o.file + ": over " + field.name() + ": " + e.what()};
    }
  };
  if (spec.rational()) return body(convert(RationalField{}));
  std::optional<PrimeField> k;
  try {
    k.emplace(spec.characteristic);
  } catch (const Error& e) {
    throw InputFailure{e.what()};
  }
  return body(convert(*k));
}

template <class Field>
struct Selected {
  RingPtr<Field> ring;
  std::vector<Polynomial<Field>> gens;
  std::string name;
};

template <class Field>
Selected<Field> select(const InputIdeal<Field>& in, const Options& o) {
  if (o.ideal == "iz") return {in.ring, in.generators, "I_Z"};
  auto st = SymmetricSetup<Field>::build(in, term_order(o), o.max_length);
  if (o.ideal == "ik") return {st.s, st.ik, "I_K"};
  return {st.s, st.ix, "I_X"};
}

std::string table_text(const BettiTable& t, bool y_free) {
  return t.empty() ? "0" : t.to_string(y_free);
}

template <class Field>
int cmd_resolve(const Options& o, const InputIdeal<Field>& in) {
  auto sel = select(in, o);
  auto rep = resolve_quotient(sel.ring, sel.gens, o.max_length);
  bool y_free = sel.ring->num_y() == 0;
  auto sub = is_subregular(rep.complex);
  Json j = betti_json(sel.name, rep.betti);
  j["length"] = rep.length;
  j["complete"] = rep.complete;
  if (!y_free) j["subregular"] = sub.subregular;
  std::ostringstream os;
  os << table_text(rep.betti, y_free) << "\n";
  os << "length " << rep.length;
  if (!y_free) os << ", subregular " << (sub.subregular ? "true" : "false");
  os << "\n";
  if (!rep.complete) os << "stopped at the length cap " << rep.length << "; the resolution is incomplete\n";
  print(o, j, os.str());
  return rep.complete ? kOk : kCheckFailed;
}

template <class Field>
int print_generators(const Options& o, const std::string& name, const std::vector<Polynomial<Field>>& gens) {
  Json list = Json::array();
  std::ostringstream os;
  for (const auto& g : gens) {
    auto d = g.bidegree().value_or(BiDegree{});
    Json e;
    e["bidegree"] = {d.x, d.y};
    e["poly"] = g.to_string();
    list.push_back(e);
    os << "(" << d.x << "," << d.y << ")  " << g.to_string() << "\n";
  }
  Json j;
  j["ideal"] = name;
  j["generators"] = list;
  print(o, j, os.str());
  return kOk;
}

template <class Field>
int cmd_sym_ideal(const Options& o, const InputIdeal<Field>& in) {
  auto st = SymmetricSetup<Field>::build(in, term_order(o), o.max_length);
  return print_generators(o, "I_X", st.ix);
}

template <class Field>
int cmd_koszul_hull(const Options& o, const InputIdeal<Field>& in) {
  auto s = in.ring->symmetric_extension(term_order(o));
  return print_generators(o, "I_K", koszul_hull_ideal(s, in.generators));
}

template <class Field>
int cmd_en(const Options& o, const InputIdeal<Field>& in) {
  auto s = in.ring->symmetric_extension(term_order(o));
  auto en = eagon_northcott_complex(s, in.generators);
  auto check = check_eagon_northcott(in, term_order(o));
  Json j = betti_json("EN", betti_table(en));
  j["complex"] = check.complex_ok;
  j["exact"] = check.exact;
  j["image_is_ik"] = check.image_is_ik;
  std::ostringstream os;
  os << table_text(betti_table(en), false) << "\n";
  os << "d*d = 0 " << (check.complex_ok ? "true" : "false") << ", exact " << (check.exact ? "true" : "false")
     << ", image = I_K " << (check.image_is_ik ? "true" : "false") << "\n";
  print(o, j, os.str());
  return check.ok() ? kOk : kCheckFailed;
}

Json hypotheses_json(const HypothesisReport& h) {
  Json j;
  j["num_generators_ok"] = h.num_generators_ok;
  j["equigenerated_ok"] = h.equigenerated_ok;
  j["dimension"] = h.dimension;
  j["projective_dimension"] = h.projective_dimension;
  j["is_cm"] = h.is_cm;
  j["degenerate_ci"] = h.degenerate_ci;
  j["applies"] = h.theorem_applies();
  return j;
}

std::string hypotheses_text(const HypothesisReport& h) {
  std::ostringstream os;
  os << "dim R/I_Z = " << h.dimension << ", pd = " << h.projective_dimension
     << ", cohen-macaulay dim 1 " << (h.is_cm ? "true" : "false");
  if (h.degenerate_ci) os << ", complete intersection (n = 1)";
  if (!h.num_generators_ok) os << ", generators not minimal";
  return os.str();
}

template <class Field>
int cmd_predict(const Options& o, const InputIdeal<Field>& in) {
  auto h = check_hypotheses(in);
  Json j;
  j["hypotheses"] = hypotheses_json(h);
  if (!h.theorem_applies()) {
    j["predicted"] = nullptr;
    print(o, j, "hypotheses fail: " + hypotheses_text(h) + "\n");
    return kCheckFailed;
  }
  auto iz = resolve_quotient(in.ring, in.generators, o.max_length);
  auto table = predicted_theorem_table(iz.betti, in.eta, in.n);
  if (o.json) {
    std::cout << betti_json("I_X", table).dump(2) << "\n";
  } else {
    std::cout << table.to_string() << "\n";
  }
  return kOk;
}

template <class Field>
int cmd_verify(const Options& o, const InputIdeal<Field>& in) {
  VerifyOptions vo;
  vo.order = term_order(o);
  vo.d_max = o.d_max;
  vo.max_length = o.max_length;
  auto rep = verify_theorem2(in, vo);

  Json j;
  j["field"] = in.ring->field().name();
  j["order"] = to_string(vo.order);
  j["n"] = in.n;
  j["eta"] = in.eta;
  j["hypotheses"] = hypotheses_json(rep.hypotheses);
  j["iz_betti"] = betti_json("I_Z", rep.iz_betti);
  j["computed_betti"] = betti_json("I_X", rep.computed_betti);
  j["predicted_betti"] = optional_betti("I_X", rep.predicted_betti);
  j["betti_match"] = optional_value(rep.betti_match);
  j["patched_betti"] = optional_betti("I_X", rep.patched_betti);
  j["patched_match"] = optional_value(rep.patched_match);
  j["quotient_resolution_match"] = optional_value(rep.quotient_resolution_match);
  j["subregular"] = rep.subregular;
  if (rep.subregular_witness) {
    const auto& w = *rep.subregular_witness;
    j["subregular_witness"] = {{"position", w.position}, {"row", w.row}, {"col", w.col}, {"y_degree", w.y_degree}};
  } else {
    j["subregular_witness"] = nullptr;
  }
  Json ids;
  ids["apply"] = rep.identities_apply;
  ids["colon"] = identity_json(rep.colon);
  ids["quotient_hilbert"] = identity_json(rep.quotient_hilbert);
  ids["h1"] = identity_json(rep.h1);
  Json sym1;
  sym1["holds"] = rep.sym1_ok;
  Json vals = Json::array();
  for (std::size_t d = 0; d < rep.sym1_values.size(); ++d) {
    vals.push_back({d, rep.sym1_values[d].first, rep.sym1_values[d].second});
  }
  sym1["values"] = vals;
  ids["sym1"] = sym1;
  j["identities"] = ids;
  j["resource_limited"] = rep.resource_limited;
  j["all_ok"] = rep.all_ok();

  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
  auto ident = [](const std::optional<IdentityCheck>& c) { return c ? (c->holds ? "true" : "false") : "n/a"; };
  std::ostringstream os;
  os << "field " << in.ring->field().name() << ", order " << to_string(vo.order) << ", n = " << in.n
     << ", eta = " << in.eta << "\n";
  os << "hypotheses: " << hypotheses_text(rep.hypotheses) << " -> "
     << (rep.hypotheses.theorem_applies() ? "hold" : "fail") << "\n";
  os << "I_Z:       " << table_text(rep.iz_betti, true) << "\n";
  os << "computed:  " << table_text(rep.computed_betti, false) << "\n";
  if (rep.predicted_betti) os << "predicted: " << table_text(*rep.predicted_betti, false) << "\n";
  if (rep.patched_betti) os << "patched:   " << table_text(*rep.patched_betti, false) << "\n";
  os << "betti_match " << flag(rep.betti_match) << ", patched_match " << flag(rep.patched_match)
     << ", quotient_resolution_match " << flag(rep.quotient_resolution_match) << "\n";
  os << "subregular " << (rep.subregular ? "true" : "false");
  if (rep.subregular_witness) {
    const auto& w = *rep.subregular_witness;
    os << " (d_" << w.position << " entry (" << w.row << "," << w.col << ") has y-degree " << w.y_degree << ")";
  }
  os << "\n";
  os << "colon " << ident(rep.colon) << ", quotient_hilbert " << ident(rep.quotient_hilbert) << ", h1 "
     << ident(rep.h1) << ", sym1 " << (rep.sym1_ok ? "true" : "false");
  if (!rep.identities_apply && rep.colon) os << " (colon, quotient_hilbert, h1 reported only: R/I_Z is not one-dimensional)";
  os << "\n";
  if (rep.resource_limited) os << "resource limit reached: a resolution was cut at the length cap\n";
  os << (rep.all_ok() ? "ok" : "FAILED") << "\n";
  print(o, j, os.str());
  return rep.all_ok() ? kOk : kCheckFailed;
}

template <class Field>
int cmd_dim(const Options& o, const InputIdeal<Field>& in) {
  auto sel = select(in, o);
  int dim = krull_dimension(sel.ring, sel.gens);
  Json j;
  j["ideal"] = sel.name;
  j["dimension"] = dim;
  std::ostringstream os;
  os << "dim " << (sel.ring->num_y() ? "S/" : "R/") << sel.name << " = " << dim << "\n";
  if (o.ideal == "iz") {
    auto h = check_hypotheses(in);
    j["projective_dimension"] = h.projective_dimension;
    j["is_cm"] = h.is_cm;
    os << "pd = " << h.projective_dimension << ", cohen-macaulay dim 1 " << (h.is_cm ? "true" : "false") << "\n";
  }
  print(o, j, os.str());
  return kOk;
}

template <class Field>
int cmd_hilbert(const Options& o, const InputIdeal<Field>& in) {
  auto sel = select(in, o);
  auto hs = hilbert_series(resolve_quotient(sel.ring, sel.gens, o.max_length).complex);
  Json num = Json::array();
  for (const auto& [d, c] : hs.numerator()) num.push_back({{"x", d.x}, {"y", d.y}, {"coeff", c}});
  Json vals = Json::array();
  std::ostringstream os;
  os << "HS(" << (sel.ring->num_y() ? "S/" : "R/") << sel.name << ") = " << hs.to_string() << "\n";
  int ymax = sel.ring->num_y() ? 1 : 0;
  for (int e = 0; e <= ymax; ++e) {
    os << "HF(d," << e << "), d = 0.." << o.d_max << ":";
    for (int d = 0; d <= o.d_max; ++d) {
      auto v = hs.coefficient({d, e});
      vals.push_back({{"x", d}, {"y", e}, {"dim", v}});
      os << " " << v;
    }
    os << "\n";
  }
  Json j;
  j["ideal"] = sel.name;
  j["numerator"] = num;
  j["denominator"] = {{"x", hs.num_x()}, {"y", hs.num_y()}};
  j["values"] = vals;
  print(o, j, os.str());
  return kOk;
}

int cmd_battery(const Options& o) {
  BatteryParams p;
  p.n = o.n;
  p.count = o.count;
  p.seed = o.seed;
  if (!o.etas.empty()) {
    p.etas = o.etas;
  } else if (o.n == 1) {
    p.etas = {2, 3, 4};
  }
  if (!o.field.empty()) {
    FieldSpec spec = FieldSpec::parse(o.field);
    if (spec.rational()) throw InputFailure{"battery runs over prime fields only"};
    p.primes = {spec.characteristic};
  }
  std::vector<TermOrder> orders{TermOrder::Block, TermOrder::GrevlexAll};
  VerifyOptions vo;
  vo.d_max = o.d_max;
  vo.max_length = o.max_length;
  auto cases = battery_cases(p);
  auto sum = run_battery(cases, p.primes, orders, vo, battery_threads());

  auto line = [&](std::size_t k, std::size_t of, const std::string& what) {
    return std::to_string(k) + "/" + std::to_string(of) + " " + what + "\n";
  };
  std::ostringstream os;
  os << line(sum.betti_match, sum.cases, "betti_match");
  os << line(sum.subregular, sum.cases, "subregular");
  os << line(sum.patched_match, sum.cases, "patched_match");
  os << line(sum.en_ok, sum.cases, "eagon_northcott");
  os << line(sum.fibre_ok, sum.cases, "fibre_rank");
  os << line(sum.sym1_ok, sum.cases, "sym1");
  if (sum.identities_applicable > 0) {
    os << line(sum.colon_ok, sum.identities_applicable, "colon");
    os << line(sum.quotient_ok, sum.identities_applicable, "quotient_hilbert");
    os << line(sum.h1_ok, sum.identities_applicable, "h1");
  }
  if (sum.identities_applicable < sum.cases) {
    std::size_t reported = 0, colon = 0, quotient = 0, h1 = 0;
    for (const auto& r : sum.results) {
      const auto& rep = r.runs.front().report;
      if (rep.identities_apply || !rep.colon) continue;
      ++reported;
      colon += rep.colon->holds;
      quotient += rep.quotient_hilbert && rep.quotient_hilbert->holds;
      h1 += rep.h1 && rep.h1->holds;
    }
    os << (sum.cases - sum.identities_applicable) << " cases with dim R/I_Z != 1: colon, quotient_hilbert, h1 not required";
    if (reported) {
      os << "; computed anyway: colon " << colon << "/" << reported << ", quotient_hilbert " << quotient << "/"
         << reported << ", h1 " << h1 << "/" << reported;
    }
    os << "\n";
  }
  os << line(sum.consistent, sum.cases, "consistent across primes and orders");
  for (const auto& r : sum.results) {
    bool ok = r.consistent;
    for (const auto& run : r.runs) ok = ok && run.report.all_ok() && run.en.ok() && run.fibre.ok(r.input.ideal.n);
    if (!ok) os << "FAILED " << r.input.label << " (seed " << r.input.ideal.seed << ")\n";
  }

  Json j;
  j["n"] = p.n;
  j["etas"] = p.etas;
  j["count"] = p.count;
  j["seed"] = p.seed;
  j["primes"] = p.primes;
  j["orders"] = {"block", "grevlex"};
  Json counts;
  counts["cases"] = sum.cases;
  counts["betti_match"] = sum.betti_match;
  counts["subregular"] = sum.subregular;
  counts["patched_match"] = sum.patched_match;
  counts["eagon_northcott"] = sum.en_ok;
  counts["fibre_rank"] = sum.fibre_ok;
  counts["sym1"] = sum.sym1_ok;
  counts["identities_applicable"] = sum.identities_applicable;
  counts["colon"] = sum.colon_ok;
  counts["quotient_hilbert"] = sum.quotient_ok;
  counts["h1"] = sum.h1_ok;
  counts["consistent"] = sum.consistent;
  counts["failures"] = sum.failures();
  j["summary"] = counts;
  Json cs = Json::array();
  for (const auto& r : sum.results) {
    const auto& first = r.runs.front().report;
    Json c;
    c["label"] = r.input.label;
    c["seed"] = r.input.ideal.seed;
    c["iz_betti"] = betti_json("I_Z", first.iz_betti);
    c["computed_betti"] = betti_json("I_X", first.computed_betti);
    c["betti_match"] = optional_value(first.betti_match);
    c["consistent"] = r.consistent;
    cs.push_back(c);
  }
  j["cases"] = cs;
  print(o, j, os.str());
  return sum.failures() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal bigraded resolutions of symmetric-algebra ideals"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--char", o.field, "Coefficient field: a prime below 2^31 or QQ (default: the file's field)");
  app.add_option("--order", o.order, "Term order on S")->check(CLI::IsMember({"block", "grevlex"}));
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for random inputs");
  app.add_option("--max-length", o.max_length, "Cap on resolution length");
  app.add_option("--d-max", o.d_max, "Largest degree for graded-piece checks")->check(CLI::NonNegativeNumber);

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Ideal file")->required();
    return sub;
  };
  auto with_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", o.ideal, "Which ideal: iz, ix or ik")->check(CLI::IsMember({"iz", "ix", "ik"}));
    return sub;
  };
  auto* resolve = with_ideal(file_cmd("resolve", "Minimal free resolution and Betti table"));
  auto* sym = file_cmd("sym-ideal", "Generators of I_X = (y.M)");
  auto* hull = file_cmd("koszul-hull", "Generators of I_K = (y.k_1)");
  auto* en = file_cmd("en", "Eagon-Northcott complex of the 2 x (n+1) matrix (y ; phi)");
  auto* predict = file_cmd("predict", "Predicted Betti table of I_X");
  auto* verify = file_cmd("verify", "Full verification report");
  auto* dim = with_ideal(file_cmd("dim", "Krull dimension"));
  auto* hilbert = with_ideal(file_cmd("hilbert", "Bigraded Hilbert series"));
  auto* battery = app.add_subcommand("battery", "Seeded randomized battery over two primes and two orders");
  battery->add_option("--n", o.n, "Number of variables minus one (1 or 2)")->check(CLI::IsMember({1, 2}));
  battery->add_option("--eta", o.etas, "Generator degrees, cycled")->check(CLI::Range(2, 8));
  battery->add_option("--count", o.count, "Number of cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (battery->parsed()) return cmd_battery(o);
    return with_input(o, [&](const auto& in) -> int {
      if (resolve->parsed()) return cmd_resolve(o, in);
      if (sym->parsed()) return cmd_sym_ideal(o, in);
      if (hull->parsed()) return cmd_koszul_hull(o, in);
      if (en->parsed()) return cmd_en(o, in);
      if (predict->parsed()) return cmd_predict(o, in);
      if (verify->parsed()) return cmd_verify(o, in);
      if (dim->parsed()) return cmd_dim(o, in);
      if (hilbert->parsed()) return cmd_hilbert(o, in);
      return kUsage;
    });
  } catch (const InputFailure& e) {
    std::cerr << "symres: " << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "symres: " << e.what() << "\n";
    return kCheckFailed;
  }
}
