// algen: exact-arithmetic toolkit for hitting-set generators, circuit
// transforms, PIT pipelines, and generator-based reconstruction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "algen/circuit.hpp"
#include "algen/generator.hpp"
#include "algen/hitting.hpp"
#include "algen/reconstruction.hpp"
#include "algen/sparse_poly.hpp"
#include "algen/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace algen;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

size_t enum_cap_from_env(size_t flag_value) {
  if (const char* env = std::getenv("ALGEN_ENUM_CAP"))
    return static_cast<size_t>(std::stoull(env));
  return flag_value;
}

json point_to_json(const std::vector<Rat>& pt) {
  json arr = json::array();
  for (const Rat& v : pt) arr.push_back(rat_str(v));
  return arr;
}

void emit_hitting_set(const HittingSet& h, std::ostream& os) {
  json header;
  header["provenance"] = h.provenance;
  header["count"] = h.points.size();
  header["params"] = json::object();
  for (const auto& [key, val] : h.params) header["params"][key] = val;
  os << header.dump() << "\n";
  for (const auto& pt : h.points) os << point_to_json(pt).dump() << "\n";
}

HittingSet read_hitting_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  HittingSet h;
  h.provenance = "file";
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.is_object()) continue;  // header line
    std::vector<Rat> pt;
    for (const auto& v : j) pt.push_back(parse_rat(v.get<std::string>()));
    h.points.push_back(std::move(pt));
  }
  return h;
}

struct CommonCaps {
  long degree_cap = 4096;
  size_t term_cap = 2000000;
  size_t enum_cap = 1000000;
};

int cmd_gen(const std::string& poly_path, int n, std::string outdir) {
  if (outdir.empty()) outdir = ".";
  SparsePoly p = poly_from_text(read_file(poly_path));
  GeneratorMap g = build_gen(p, n);
  for (int i = 0; i <= n; ++i)
    write_file(outdir + "/component_" + std::to_string(i) + ".poly",
               poly_to_text(g.components[i]));
  json meta;
  meta["k"] = g.k;
  meta["n"] = g.n;
  meta["d"] = g.d;
  write_file(outdir + "/meta.json", meta.dump() + "\n");
  std::cout << meta.dump() << "\n";
  return 0;
}

int cmd_pit(const std::string& circ_path, const std::string& mode, int ideg,
            long degree_bound, int trials, uint64_t seed,
            const CommonCaps& caps) {
  Circuit c = parse_circuit(read_file(circ_path));
  PitResult r;
  json out;
  if (mode == "grid") {
    std::vector<Rat> S;
    for (int i = 0; i <= ideg; ++i) S.emplace_back(i);
    HittingSet h = trivial_grid_hitting_set(c.nvars(), ideg, S, caps.enum_cap);
    r = pit_deterministic(c, h);
    out["mode"] = "grid";
  } else {
    r = pit_random(c, degree_bound, trials, seed);
    out["mode"] = "random";
    out["trials"] = r.trials;
    out["error_bound"] = r.error_bound;
  }
  out["verdict"] = r.nonzero ? "nonzero" : "zero-on-set";
  if (r.witness) out["witness"] = point_to_json(*r.witness);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_hitset(const std::string& mode, int nvars, int ideg,
               const std::string& poly_path, long s, int t, int n,
               const std::string& out_path, const CommonCaps& caps) {
  HittingSet h;
  if (mode == "trivial") {
    std::vector<Rat> S;
    for (int i = 0; i <= ideg; ++i) S.emplace_back(i);
    h = trivial_grid_hitting_set(nvars, ideg, S, caps.enum_cap);
  } else {
    SparsePoly p = poly_from_text(read_file(poly_path));
    h = derand_pipeline(p, s, t, n, caps.enum_cap);
  }
  if (out_path.empty()) {
    emit_hitting_set(h, std::cout);
  } else {
    std::ostringstream ss;
    emit_hitting_set(h, ss);
    write_file(out_path, ss.str());
    std::cout << json{{"count", h.points.size()}}.dump() << "\n";
  }
  return 0;
}

int cmd_annihilate(const std::string& poly_path, int n, int D,
                   const std::string& out_path, const CommonCaps& caps) {
  SparsePoly p = poly_from_text(read_file(poly_path));
  GeneratorMap g = build_gen(p, n);
  auto ann = find_annihilator(g, D, caps.degree_cap, caps.term_cap);
  json out;
  out["found"] = ann.has_value();
  if (ann) {
    out["size"] = ann->size();
    if (!out_path.empty()) write_file(out_path, serialize_circuit(*ann));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_reconstruct(const std::string& circ_path, const std::string& poly_path,
                    int n, int D, bool blind, const std::string& out_path,
                    const CommonCaps& caps) {
  Circuit c = parse_circuit(read_file(circ_path));
  SparsePoly p = poly_from_text(read_file(poly_path));
  GeneratorMap g = build_gen(p, n);
  if (D <= 0) D = static_cast<int>(c.max_syntactic_degree());
  ReconstructionResult r =
      reconstruct(c, g, D, caps.degree_cap, caps.term_cap, !blind);
  for (const auto& st : r.steps) {
    json line;
    line["j"] = st.j;
    line["alpha_equals_psi"] = st.alpha_equals_psi;
    line["a_square_vanishes"] = st.a_square_vanishes;
    if (!blind) line["residual_zero"] = st.residual_zero;
    std::cout << line.dump() << "\n";
  }
  json fin;
  fin["derivative_order"] = r.derivative_order;
  fin["shift"] = point_to_json(r.shift);
  if (!blind) fin["match"] = (r.recovered == p);
  std::cout << fin.dump() << "\n";
  if (!out_path.empty()) write_file(out_path, poly_to_text(r.recovered));
  return 0;
}

int cmd_tau(int d, long s, int t, const std::string& emit_path,
            const CommonCaps& caps) {
  TauReport rep = tau_pipeline(d, s, t, caps.enum_cap);
  json out;
  json coeffs = json::array();
  for (int i = 0; i <= d; ++i) coeffs.push_back(rat_str(rep.p_d.coeff({i})));
  out["p_d_coeffs"] = coeffs;
  out["max_abs_coeff"] = rep.max_abs_coeff.get_str();
  out["coeff_bound"] = rep.coeff_bound.get_str();
  out["count"] = rep.hset.points.size();
  out["max_coord_bits"] = rep.max_coord_bits;
  std::cout << out.dump() << "\n";
  if (!emit_path.empty()) {
    std::ostringstream ss;
    emit_hitting_set(rep.hset, ss);
    write_file(emit_path, ss.str());
  }
  return 0;
}

int cmd_bootstrap(const std::string& h_path, int k, long s, int t, int n,
                  const std::string& out_path, const CommonCaps& caps) {
  HittingSet h_small = read_hitting_set(h_path);
  HittingSet h = bootstrap_pipeline(h_small, k, s, t, n, caps.enum_cap);
  if (out_path.empty()) {
    emit_hitting_set(h, std::cout);
  } else {
    std::ostringstream ss;
    emit_hitting_set(h, ss);
    write_file(out_path, ss.str());
    std::cout << json{{"count", h.points.size()}}.dump() << "\n";
  }
  return 0;
}

int cmd_params(unsigned long s, const std::string& delta_str, int k) {
  DerandParams p = derand_params(s, parse_rat(delta_str), k);
  json out;
  out["t"] = p.t;
  out["d_bits"] = bit_length(p.d);
  out["d_prime_bits"] = bit_length(p.d_prime);
  out["hitting_set_size_bits"] = p.size_bits;
  // decimal strings only when printable in reasonable space
  if (bit_length(p.hitting_set_size) <= 100000) {
    out["d"] = p.d.get_str();
    out["d_prime"] = p.d_prime.get_str();
    out["hitting_set_size"] = p.hitting_set_size.get_str();
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_transform(const std::string& pass, const std::string& circ_path,
                  int var, int order, int D, int hom_degree,
                  const std::string& cp_path, const std::string& out_path) {
  SizeLedger ledger;
  Circuit result(0);
  if (pass == "coeff") {
    result = coefficient_circuits(parse_circuit(read_file(circ_path)), var, D,
                                  &ledger);
  } else if (pass == "derivative") {
    result = derivative_circuit(parse_circuit(read_file(circ_path)), var,
                                order, D, &ledger);
  } else if (pass == "strassen") {
    result = strassen_homogenize(parse_circuit(read_file(circ_path)),
                                 hom_degree, &ledger)
                 .circuit;
  } else if (pass == "partial-hom") {
    Circuit base_circ = parse_circuit(read_file(circ_path));
    auto base_polys = expand_to_poly(base_circ, 4096, 2000000);
    HomogeneousCircuit base{base_circ, {}};
    for (const auto& bp : base_polys)
      base.output_degrees.push_back(std::max(bp.degree(), 0));
    result = partial_homogenize(base, parse_circuit(read_file(cp_path)),
                                hom_degree, &ledger)
                 .circuit;
  } else {
    throw std::runtime_error("unknown pass: " + pass);
  }
  json out;
  out["pass"] = ledger.pass;
  out["input_size"] = ledger.input_size;
  out["output_size"] = ledger.output_size;
  out["budget_value"] = ledger.budget_value;
  std::cout << out.dump() << "\n";
  if (!out_path.empty()) write_file(out_path, serialize_circuit(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hitting-set generator & PIT toolkit"};
  app.require_subcommand(1);

  CommonCaps caps;
  app.add_option("--degree-cap", caps.degree_cap, "expansion degree cap");
  app.add_option("--term-cap", caps.term_cap, "expansion term cap");
  app.add_option("--enum-cap", caps.enum_cap, "point enumeration cap");

  std::string poly_path, circ_path, out_path, mode = "grid", delta = "8";
  std::string h_path, cp_path, pass;
  int n = 0, D = 0, ideg = 1, nvars = 1, var = 0, order = 1, hom_degree = 0;
  int k = 1, t = 1, d = 1;
  long s = 1, degree_bound = 8;
  int trials = 20;
  uint64_t seed = 0;
  bool blind = false;

  auto* gen = app.add_subcommand("gen", "emit generator components");
  gen->add_option("-P", poly_path)->required();
  gen->add_option("-n", n)->required();
  gen->add_option("-o", out_path);

  auto* pit = app.add_subcommand("pit", "polynomial identity test");
  pit->add_option("-C", circ_path)->required();
  pit->add_option("--mode", mode)->check(CLI::IsMember({"grid", "random"}));
  pit->add_option("--ideg", ideg);
  pit->add_option("--degree-bound", degree_bound);
  pit->add_option("--trials", trials);
  pit->add_option("--seed", seed);

  auto* hitset = app.add_subcommand("hitset", "emit a hitting set");
  hitset->add_option("--mode", mode)->check(CLI::IsMember({"trivial", "gen"}));
  hitset->add_option("--nvars", nvars);
  hitset->add_option("--ideg", ideg);
  hitset->add_option("-P", poly_path);
  hitset->add_option("-s", s);
  hitset->add_option("-t", t);
  hitset->add_option("-n", n);
  hitset->add_option("-o", out_path);

  auto* ann = app.add_subcommand("annihilate", "search annihilating circuit");
  ann->add_option("-P", poly_path)->required();
  ann->add_option("-n", n)->required();
  ann->add_option("-D", D)->required();
  ann->add_option("-o", out_path);

  auto* rec = app.add_subcommand("reconstruct", "recover P from annihilator");
  rec->add_option("-C", circ_path)->required();
  rec->add_option("-P", poly_path)->required();
  rec->add_option("-n", n)->required();
  rec->add_option("-D", D);
  rec->add_flag("--blind", blind);
  rec->add_option("-o", out_path);

  auto* tau = app.add_subcommand("tau-demo", "tau-conjecture pipeline");
  tau->add_option("-d", d)->required();
  tau->add_option("-s", s)->required();
  tau->add_option("-t", t);
  tau->add_option("-o", out_path);

  auto* boot = app.add_subcommand("bootstrap-demo", "bootstrap pipeline");
  boot->add_option("--H", h_path)->required();
  boot->add_option("-k", k)->required();
  boot->add_option("-s", s)->required();
  boot->add_option("-t", t);
  boot->add_option("-n", n)->required();
  boot->add_option("-o", out_path);

  auto* par = app.add_subcommand("params", "derandomization parameters");
  par->add_option("-s", s)->required();
  par->add_option("--delta", delta);
  par->add_option("-k", k);

  auto* tr = app.add_subcommand("transform", "circuit transformation pass");
  tr->add_option("--pass", pass)
      ->required()
      ->check(CLI::IsMember({"coeff", "derivative", "strassen", "partial-hom"}));
  tr->add_option("-C", circ_path)->required();
  tr->add_option("--cp", cp_path);
  tr->add_option("--var", var);
  tr->add_option("--order", order);
  tr->add_option("-D", D);
  tr->add_option("--hom-degree", hom_degree);
  tr->add_option("-o", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  caps.enum_cap = enum_cap_from_env(caps.enum_cap);
  try {
    if (gen->parsed()) return cmd_gen(poly_path, n, out_path);
    if (pit->parsed())
      return cmd_pit(circ_path, mode, ideg, degree_bound, trials, seed, caps);
    if (hitset->parsed())
      return cmd_hitset(mode == "grid" ? "trivial" : mode, nvars, ideg,
                        poly_path, s, t, n, out_path, caps);
    if (ann->parsed()) return cmd_annihilate(poly_path, n, D, out_path, caps);
    if (rec->parsed())
      return cmd_reconstruct(circ_path, poly_path, n, D, blind, out_path,
                             caps);
    if (tau->parsed()) return cmd_tau(d, s, t, out_path, caps);
    if (boot->parsed())
      return cmd_bootstrap(h_path, k, s, t, n, out_path, caps);
    if (par->parsed())
      return cmd_params(static_cast<unsigned long>(s), delta, k);
    if (tr->parsed())
      return cmd_transform(pass, circ_path, var, order, D, hom_degree, cp_path,
                           out_path);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
