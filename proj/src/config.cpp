#include "orelab/config.hpp"

#include <fstream>
#include <sstream>

namespace orelab {

namespace {

std::string jstr(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::parse_error, std::string(what) + " must be a string or integer");
}

std::vector<Scalar> parse_scalar_array(const json& j, BaseRing base,
                                       const char* what) {
  if (!j.is_array()) fail(ErrorCode::parse_error, std::string(what) + " must be an array");
  std::vector<Scalar> out;
  for (const auto& item : j) out.push_back(Scalar::parse(base, jstr(item, what)));
  return out;
}

AddMap parse_matrix(const json& j, BaseRing base, std::size_t dim,
                    const char* what) {
  if (!j.is_array() || j.size() != dim)
    fail(ErrorCode::parse_error, std::string(what) + " must be a " +
                                     std::to_string(dim) + "-row matrix");
  AddMap m(base, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != dim)
      fail(ErrorCode::parse_error, std::string(what) + " row length");
    for (std::size_t k = 0; k < dim; ++k)
      m.at(i, k) = Scalar::parse(base, jstr(row[k], what));
  }
  return m;
}

json matrix_json(const AddMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

MonoidElem parse_elem_json(const MonoidSpec& spec, const json& j) {
  if (j.is_array()) {
    std::vector<std::uint32_t> exps;
    for (const auto& e : j) exps.push_back(e.get<std::uint32_t>());
    MultiIndex f(std::move(exps));
    if (!is_finite(spec) && f.arity() == free_arity(spec)) return MonoidElem{f};
    fail(ErrorCode::parse_error, "multi-index element in a finite monoid");
  }
  return parse_monoid_elem(spec, jstr(j, "monoid element"));
}

Algebra parse_algebra(const json& j) {
  if (!j.contains("base") || !j.contains("dim") ||
      !j.contains("structure_constants") || !j.contains("unit"))
    fail(ErrorCode::parse_error,
         "algebra requires base, dim, structure_constants, unit");
  BaseRing base = BaseRing::parse(j.at("base").get<std::string>());
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Scalar> sc =
      parse_scalar_array(j.at("structure_constants"), base, "structure_constants");
  std::vector<Scalar> unit = parse_scalar_array(j.at("unit"), base, "unit");
  std::vector<std::string> names;
  if (j.contains("basis_names"))
    names = j.at("basis_names").get<std::vector<std::string>>();
  return Algebra(base, dim, std::move(sc), std::move(unit), std::move(names));
}

MonoidSpec parse_monoid(const json& j) {
  if (j.contains("free_commutative")) {
    return FreeCommutative{j.at("free_commutative").get<std::size_t>()};
  }
  FiniteMonoid fm;
  fm.size = j.at("size").get<std::size_t>();
  fm.identity = j.at("identity").get<std::size_t>();
  fm.cayley = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("order"))
    fm.order = j.at("order").get<std::vector<std::size_t>>();
  else {
    fm.order.resize(fm.size);
    for (std::size_t i = 0; i < fm.size; ++i) fm.order[i] = i;
  }
  if (j.contains("names")) fm.names = j.at("names").get<std::vector<std::string>>();
  return fm;
}

PiStructure parse_pi(const json& j, const MonoidSpec& monoid, const Algebra& alg) {
  if (j.contains("delta_generated")) {
    const json& dg = j.at("delta_generated");
    std::vector<AddMap> deltas;
    for (const auto& dj : dg.at("deltas"))
      deltas.push_back(parse_matrix(dj, alg.base(), alg.dim(), "delta"));
    if (!is_finite(monoid) && free_arity(monoid) != deltas.size())
      fail(ErrorCode::parse_error,
           "free_commutative arity must match the number of deltas");
    if (is_finite(monoid))
      fail(ErrorCode::parse_error,
           "delta_generated pi requires a free_commutative monoid");
    DeltaFamily family(alg, std::move(deltas));
    return PiStructure::delta_generated(family);
  }
  if (!j.contains("table"))
    fail(ErrorCode::parse_error, "pi requires table or delta_generated");
  std::vector<PiTableEntry> entries;
  for (const auto& ej : j.at("table")) {
    PiTableEntry e{parse_elem_json(monoid, ej.at("a")),
                   parse_elem_json(monoid, ej.at("b")),
                   parse_matrix(ej.at("matrix"), alg.base(), alg.dim(), "pi matrix")};
    entries.push_back(std::move(e));
  }
  return PiStructure::explicit_table(monoid, alg.base(), alg.dim(),
                                     std::move(entries));
}

SimplicityCaps parse_caps(const json& j) {
  SimplicityCaps caps;
  if (!j.is_object()) return caps;
  if (j.contains("weight_cap")) caps.weight_cap = j.at("weight_cap").get<std::uint64_t>();
  if (j.contains("orbit_bound")) caps.orbit_bound = j.at("orbit_bound").get<std::size_t>();
  if (j.contains("brute_cap")) caps.brute_cap = j.at("brute_cap").get<std::uint64_t>();
  if (j.contains("witness_cap")) caps.witness_cap = j.at("witness_cap").get<std::uint64_t>();
  return caps;
}

}  // namespace

ProblemConfig ProblemConfig::from_json(const json& j) {
  if (!j.contains("algebra") || !j.contains("monoid") || !j.contains("pi"))
    fail(ErrorCode::parse_error, "config requires algebra, monoid and pi sections");
  Algebra alg = parse_algebra(j.at("algebra"));
  MonoidSpec monoid = parse_monoid(j.at("monoid"));
  PiStructure pi = parse_pi(j.at("pi"), monoid, alg);
  SimplicityCaps caps;
  std::string strategy = "auto";
  if (j.contains("analysis")) {
    caps = parse_caps(j.at("analysis"));
    if (j.at("analysis").contains("strategy"))
      strategy = j.at("analysis").at("strategy").get<std::string>();
  }
  return ProblemConfig{std::move(alg), std::move(monoid), std::move(pi), caps,
                       strategy};
}

ProblemConfig ProblemConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("bad JSON: ") + e.what());
  }
  return from_json(j);
}

json ProblemConfig::echo() const {
  json out;
  json alg;
  alg["base"] = algebra.base().tag();
  alg["dim"] = algebra.dim();
  json sc = json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = 0; j < algebra.dim(); ++j)
      for (std::size_t k = 0; k < algebra.dim(); ++k)
        sc.push_back(algebra.sc(i, j, k).str());
  alg["structure_constants"] = sc;
  json unit = json::array();
  for (const auto& s : algebra.unit()) unit.push_back(s.str());
  alg["unit"] = unit;
  if (!algebra.basis_names().empty()) alg["basis_names"] = algebra.basis_names();
  out["algebra"] = alg;

  json mon;
  if (is_finite(monoid)) {
    const auto& fm = std::get<FiniteMonoid>(monoid);
    mon["size"] = fm.size;
    mon["identity"] = fm.identity;
    mon["cayley"] = fm.cayley;
    mon["order"] = fm.order;
    if (!fm.names.empty()) mon["names"] = fm.names;
  } else {
    mon["free_commutative"] = free_arity(monoid);
  }
  out["monoid"] = mon;

  json pij;
  if (pi.is_delta_generated()) {
    json ds = json::array();
    for (const auto& d : pi.deltas()) ds.push_back(matrix_json(d));
    pij["delta_generated"] = json{{"deltas", ds}};
  } else {
    json table = json::array();
    for (const auto& [key, m] : pi.table()) {
      json e;
      e["a"] = elem_str(monoid, key.first);
      e["b"] = elem_str(monoid, key.second);
      e["matrix"] = matrix_json(m);
      table.push_back(e);
    }
    pij["table"] = table;
  }
  out["pi"] = pij;

  json an;
  an["weight_cap"] = caps.weight_cap;
  an["orbit_bound"] = caps.orbit_bound;
  an["brute_cap"] = caps.brute_cap;
  an["witness_cap"] = caps.witness_cap;
  an["strategy"] = strategy;
  out["analysis"] = an;
  return out;
}

namespace {

json envelope(const ProblemConfig& cfg, const std::string& command) {
  json out;
  out["schema"] = 1;
  out["command"] = command;
  out["config"] = cfg.echo();
  return out;
}

json witness_json(const ProblemConfig& cfg, const AxiomWitness& w) {
  json out;
  if (w.a) out["a"] = elem_str(cfg.monoid, *w.a);
  if (w.b) out["b"] = elem_str(cfg.monoid, *w.b);
  if (w.c) out["c"] = elem_str(cfg.monoid, *w.c);
  if (!w.operands.empty()) {
    json ops = json::array();
    for (const auto& op : w.operands) ops.push_back(cfg.algebra.elem_str(op));
    out["operands"] = ops;
  }
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  return out;
}

json check_json(const ProblemConfig& cfg, const AxiomCheck& c) {
  json out;
  out["status"] = c.passed ? "pass" : "fail";
  out["exhaustive"] = c.exhaustive;
  if (!c.note.empty()) out["note"] = c.note;
  if (c.witness) out["witness"] = witness_json(cfg, *c.witness);
  return out;
}

}  // namespace

json ore_elem_json(const OreRing& ring, const OreElem& u) {
  json terms = json::array();
  const auto& ts = u.terms();
  // m_cmp-descending order, matching the text form.
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    json t;
    t["exp"] = elem_str(ring.monoid(), it->exp);
    json coords = json::array();
    for (const auto& s : it->coeff) coords.push_back(s.str());
    t["coords"] = coords;
    terms.push_back(t);
  }
  return terms;
}

CommandResult run_check(const ProblemConfig& cfg) {
  CommandResult res;
  res.report = envelope(cfg, "check");
  AxiomReport rep = check_all_axioms(cfg.algebra, cfg.pi, cfg.caps.weight_cap);

  json axioms;
  for (std::size_t i = 0; i < rep.checks.size(); ++i)
    axioms[axiom_name(static_cast<Axiom>(i))] = check_json(cfg, rep.checks[i]);
  axioms["commutative"] = check_json(cfg, rep.commutative);
  axioms["well_ordered"] = check_json(cfg, rep.well_ordered);
  res.report["result"]["axioms"] = axioms;

  const Classification& cls = rep.classification;
  json cj;
  cj["g_derivation"] = cls.g_derivation();
  cj["unital"] = cls.unital_g_derivation();
  cj["strong_left"] = cls.d(7);
  cj["strong_right"] = cls.d(8);
  cj["strong"] = cls.strong();
  cj["d_structure"] = cls.d_structure();
  cj["commutative"] = cls.commutative;
  cj["well_ordered"] = cls.well_ordered;
  cj["checked_up_to_weight"] = cls.capped ? json(cls.weight_cap) : json(nullptr);
  res.report["result"]["classification"] = cj;
  res.report["result"]["characteristic"] = cfg.algebra.characteristic();

  json fixed = json::array();
  for (const auto& r : fixed_subring(cfg.algebra, cfg.pi))
    fixed.push_back(cfg.algebra.elem_str(r));
  res.report["result"]["fixed_subring"] = fixed;

  std::ostringstream h;
  h << "axioms:";
  for (std::size_t i = 0; i < rep.checks.size(); ++i)
    h << " " << axiom_name(static_cast<Axiom>(i))
      << (rep.checks[i].passed ? "+" : "-");
  h << " commutative" << (cls.commutative ? "+" : "-") << " well_ordered"
    << (cls.well_ordered ? "+" : "-") << "\n";
  h << "classification: " << (cls.g_derivation() ? "G-derivation" : "not a G-derivation")
    << (cls.unital_g_derivation() ? ", unital" : "")
    << (cls.strong() ? ", strong" : "")
    << (cls.d_structure() ? ", D-structure" : ", not a D-structure") << "\n";
  h << "characteristic: " << cfg.algebra.characteristic() << "\n";
  h << "fixed subring dimension: " << fixed.size() << "\n";
  res.human = h.str();
  return res;
}

CommandResult run_mul(const ProblemConfig& cfg, const std::string& lhs,
                      const std::string& rhs) {
  CommandResult res;
  res.report = envelope(cfg, "mul");
  OreRing ring = OreRing::make(cfg.algebra, cfg.pi, cfg.caps.weight_cap);
  OreElem l = ring.parse(lhs);
  OreElem r = ring.parse(rhs);
  OreElem prod = ring.mul(l, r);
  res.report["result"]["lhs"] = ring.to_string(l);
  res.report["result"]["rhs"] = ring.to_string(r);
  res.report["result"]["product"] = ring.to_string(prod);
  res.report["result"]["product_terms"] = ore_elem_json(ring, prod);
  res.human = ring.to_string(l) + " * " + ring.to_string(r) + " = " +
              ring.to_string(prod) + "\n";
  return res;
}

CommandResult run_center(const ProblemConfig& cfg, std::uint64_t cap) {
  CommandResult res;
  res.report = envelope(cfg, "center");
  res.report["config"]["analysis"]["center_cap"] = cap;
  OreRing ring = OreRing::make(cfg.algebra, cfg.pi, cfg.caps.weight_cap);
  auto emit = [&](const CenterResult& cr) {
    json out;
    json basis = json::array();
    for (const auto& b : cr.basis) basis.push_back(ring.to_string(b));
    out["basis"] = basis;
    out["exact"] = cr.exact;
    out["cap"] = cr.cap;
    out["filtered"] = cr.filtered;
    out["note"] = cr.note;
    return out;
  };
  CenterResult zc = ring.center(cap);
  CenterResult zg = ring.zsg(cap);
  res.report["result"]["center"] = emit(zc);
  res.report["result"]["zsg"] = emit(zg);
  std::ostringstream h;
  h << "Z(S) basis within cap " << cap << " (" << zc.note << "):\n";
  for (const auto& b : zc.basis) h << "  " << ring.to_string(b) << "\n";
  h << "Z(S)^G basis within cap " << cap << ":\n";
  for (const auto& b : zg.basis) h << "  " << ring.to_string(b) << "\n";
  res.human = h.str();
  return res;
}

CommandResult run_simple(const ProblemConfig& cfg, const std::string& strategy) {
  CommandResult res;
  res.report = envelope(cfg, "simple");
  res.report["config"]["analysis"]["strategy"] = strategy;
  SimplicityReport rep = decide_auto(cfg.algebra, cfg.pi, cfg.caps, strategy);

  json out;
  out["verdict"] = verdict_name(rep.verdict);
  if (rep.g_verdict) out["g_verdict"] = verdict_name(*rep.g_verdict);
  out["method"] = rep.method;
  json hyps = json::array();
  for (const auto& [name, ok] : rep.hypotheses)
    hyps.push_back(json{{"name", name}, {"ok", ok}});
  out["hypotheses"] = hyps;
  out["notes"] = rep.notes;
  json caps;
  caps["weight_cap"] = rep.caps.weight_cap;
  caps["orbit_bound"] = rep.caps.orbit_bound;
  caps["brute_cap"] = rep.caps.brute_cap;
  caps["witness_cap"] = rep.caps.witness_cap;
  out["caps"] = caps;

  json evidence;
  if (rep.witness_generator)
    evidence["generator"] = cfg.algebra.elem_str(*rep.witness_generator);
  if (rep.witness_ideal_r) {
    json rows = json::array();
    for (const auto& row : rep.witness_ideal_r->rows) {
      json rj = json::array();
      for (const auto& s : row) rj.push_back(s.str());
      rows.push_back(rj);
    }
    evidence["proper_invariant_ideal_of_R"] = rows;
  }
  if (rep.witness_ideal_s)
    evidence["proper_ideal_of_S_dimension"] = rep.witness_ideal_s->rows.size();
  if (rep.central_witness) {
    OreRing ring = OreRing::make(cfg.algebra, cfg.pi, cfg.caps.weight_cap);
    evidence["central_non_constant"] = ring.to_string(*rep.central_witness);
  }
  out["evidence"] = evidence;
  res.report["result"] = out;

  std::ostringstream h;
  h << "verdict: " << verdict_name(rep.verdict) << " (method " << rep.method << ")\n";
  if (rep.g_verdict) h << "G-simplicity: " << verdict_name(*rep.g_verdict) << "\n";
  for (const auto& n : rep.notes) h << "  - " << n << "\n";
  res.human = h.str();
  res.exit_code = rep.verdict == Verdict::simple ? 0
                  : rep.verdict == Verdict::not_simple ? 1
                                                       : 2;
  return res;
}

}  // namespace orelab
