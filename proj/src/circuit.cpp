#include "algen/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algen {

void Circuit::check_child(int id) const {
  if (id < 0 || id >= static_cast<int>(gates_.size()))
    throw std::invalid_argument("circuit: child id out of range");
}

int Circuit::add_input(int var) {
  if (var < 0 || var >= nvars_)
    throw std::invalid_argument("circuit: input variable out of range");
  gates_.emplace_back(InputGate{var});
  return static_cast<int>(gates_.size()) - 1;
}

int Circuit::add_const(Rat value) {
  gates_.emplace_back(ConstGate{std::move(value)});
  return static_cast<int>(gates_.size()) - 1;
}

int Circuit::add_add(std::vector<WireIn> children) {
  if (children.empty())
    throw std::invalid_argument("circuit: add gate needs fan-in >= 1");
  for (const auto& w : children) check_child(w.gate);
  gates_.emplace_back(AddGate{std::move(children)});
  return static_cast<int>(gates_.size()) - 1;
}

int Circuit::add_mul(WireIn lhs, WireIn rhs) {
  check_child(lhs.gate);
  check_child(rhs.gate);
  gates_.emplace_back(MulGate{std::move(lhs), std::move(rhs)});
  return static_cast<int>(gates_.size()) - 1;
}

void Circuit::set_outputs(std::vector<int> outs) {
  for (int id : outs) check_child(id);
  outputs_ = std::move(outs);
}

long Circuit::syntactic_degree(int gate) const {
  std::vector<long> deg(gate + 1, 0);
  for (int i = 0; i <= gate; ++i) {
    const GateKind& g = gates_[i];
    if (std::holds_alternative<InputGate>(g)) {
      deg[i] = 1;
    } else if (std::holds_alternative<ConstGate>(g)) {
      deg[i] = 0;
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      long m = 0;
      for (const auto& w : a->children) m = std::max(m, deg[w.gate]);
      deg[i] = m;
    } else {
      const auto& m = std::get<MulGate>(g);
      deg[i] = deg[m.lhs.gate] + deg[m.rhs.gate];
    }
  }
  return deg[gate];
}

long Circuit::max_syntactic_degree() const {
  long m = 0;
  for (int id : outputs_) m = std::max(m, syntactic_degree(id));
  return m;
}

std::vector<Rat> Circuit::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("circuit eval: arity mismatch");
  std::vector<Rat> val(gates_.size());
  for (size_t i = 0; i < gates_.size(); ++i) {
    const GateKind& g = gates_[i];
    if (const auto* in = std::get_if<InputGate>(&g)) {
      val[i] = point[in->var];
    } else if (const auto* c = std::get_if<ConstGate>(&g)) {
      val[i] = c->value;
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      Rat acc(0);
      for (const auto& w : a->children) acc += w.weight * val[w.gate];
      val[i] = acc;
    } else {
      const auto& m = std::get<MulGate>(g);
      val[i] = (m.lhs.weight * val[m.lhs.gate]) *
               (m.rhs.weight * val[m.rhs.gate]);
    }
  }
  std::vector<Rat> out;
  out.reserve(outputs_.size());
  for (int id : outputs_) out.push_back(val[id]);
  return out;
}

namespace {

std::vector<SparsePoly> run_over_polys(const Circuit& c,
                                       const std::vector<SparsePoly>& inputs,
                                       long degree_cap, size_t term_cap,
                                       std::optional<TruncateSpec> trunc) {
  const int pv = inputs.empty() ? 0 : inputs[0].nvars();
  auto reduce = [&](SparsePoly p) {
    if (trunc) p = truncate_block(p, *trunc);
    if (p.degree() > degree_cap)
      throw CapExceeded(CapExceeded::Degree, "degree cap exceeded");
    if (p.term_count() > term_cap)
      throw CapExceeded(CapExceeded::Terms, "term cap exceeded");
    return p;
  };
  std::vector<SparsePoly> val(c.size(), SparsePoly(pv));
  for (size_t i = 0; i < c.size(); ++i) {
    const GateKind& g = c.gates()[i];
    if (const auto* in = std::get_if<InputGate>(&g)) {
      val[i] = reduce(inputs[in->var]);
    } else if (const auto* k = std::get_if<ConstGate>(&g)) {
      val[i] = SparsePoly::constant(pv, k->value);
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      SparsePoly acc(pv);
      for (const auto& w : a->children) acc = acc + val[w.gate] * w.weight;
      val[i] = reduce(std::move(acc));
    } else {
      const auto& m = std::get<MulGate>(g);
      val[i] = reduce((val[m.lhs.gate] * m.lhs.weight) *
                      (val[m.rhs.gate] * m.rhs.weight));
    }
  }
  std::vector<SparsePoly> out;
  out.reserve(c.outputs().size());
  for (int id : c.outputs()) out.push_back(val[id]);
  return out;
}

}  // namespace

SparsePoly truncate_block(const SparsePoly& p, const TruncateSpec& spec) {
  if (spec.prefix_vars < 0) return truncate_mod_ideal(p, spec.m);
  SparsePoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int block_deg = 0;
    for (int i = 0; i < spec.prefix_vars; ++i) block_deg += e[i];
    if (block_deg < spec.m) r.add_term(e, c);
  }
  return r;
}

std::vector<SparsePoly> expand_to_poly(const Circuit& c, long degree_cap,
                                       size_t term_cap) {
  if (degree_cap <= 0 || term_cap == 0)
    throw std::invalid_argument("expand_to_poly: caps must be positive");
  std::vector<SparsePoly> inputs;
  inputs.reserve(c.nvars());
  for (int i = 0; i < c.nvars(); ++i)
    inputs.push_back(SparsePoly::variable(c.nvars(), i));
  return run_over_polys(c, inputs, degree_cap, term_cap, std::nullopt);
}

std::vector<SparsePoly> compose_circuit_with_polys(
    const Circuit& c, const std::vector<SparsePoly>& subs, long degree_cap,
    size_t term_cap, std::optional<TruncateSpec> truncate_mod) {
  if (static_cast<int>(subs.size()) != c.nvars())
    throw std::invalid_argument("compose: substitution arity mismatch");
  for (const auto& s : subs)
    if (s.nvars() != subs[0].nvars())
      throw std::invalid_argument("compose: substitutions disagree on nvars");
  return run_over_polys(c, subs, degree_cap, term_cap, truncate_mod);
}

namespace {

int parse_gate_ref(const std::string& tok, const std::vector<int>& id_map) {
  if (tok.size() < 2 || tok[0] != 'g')
    throw std::invalid_argument("circuit: expected gate reference, got " + tok);
  int ext = std::stoi(tok.substr(1));
  if (ext < 0 || ext >= static_cast<int>(id_map.size()) || id_map[ext] < 0)
    throw std::invalid_argument("circuit: reference to undeclared gate g" +
                                std::to_string(ext));
  return id_map[ext];
}

// Accepts "g<id>" or "(<p/q>)*g<id>".
WireIn parse_wire(const std::string& tok, const std::vector<int>& id_map) {
  if (tok[0] == '(') {
    auto close = tok.find(")*g");
    if (close == std::string::npos)
      throw std::invalid_argument("circuit: malformed weighted wire " + tok);
    Rat w = parse_rat(tok.substr(1, close - 1));
    return {w, parse_gate_ref(tok.substr(close + 2), id_map)};
  }
  return {Rat(1), parse_gate_ref(tok, id_map)};
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<int> id_map;  // external id -> internal id, -1 if unseen
  Circuit c;
  std::vector<int> outs;
  bool have_header = false;
  auto map_slot = [&](int ext) -> int& {
    if (ext < 0) throw std::invalid_argument("circuit: negative gate id");
    if (ext >= static_cast<int>(id_map.size())) id_map.resize(ext + 1, -1);
    return id_map[ext];
  };
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "header") {
      std::string nv;
      if (!(ls >> nv) || nv.rfind("nvars=", 0) != 0)
        throw std::invalid_argument("circuit: bad header line");
      c = Circuit(std::stoi(nv.substr(6)));
      have_header = true;
      continue;
    }
    if (!have_header)
      throw std::invalid_argument("circuit: missing header line");
    if (tok == "out") {
      std::string ref;
      while (ls >> ref) outs.push_back(parse_gate_ref(ref, id_map));
      continue;
    }
    if (tok[0] != 'g')
      throw std::invalid_argument("circuit: unexpected token " + tok);
    int ext = std::stoi(tok.substr(1));
    std::string eq, kind;
    if (!(ls >> eq >> kind) || eq != "=")
      throw std::invalid_argument("circuit: malformed gate line: " + line);
    int& slot = map_slot(ext);
    if (slot >= 0)
      throw std::invalid_argument("circuit: duplicate gate g" +
                                  std::to_string(ext));
    if (kind == "input") {
      std::string v;
      if (!(ls >> v) || v[0] != 'x')
        throw std::invalid_argument("circuit: bad input gate: " + line);
      slot = c.add_input(std::stoi(v.substr(1)));
    } else if (kind == "const") {
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("circuit: bad const: " + line);
      slot = c.add_const(parse_rat(v));
    } else if (kind == "add") {
      std::vector<WireIn> ws;
      std::string w;
      while (ls >> w) ws.push_back(parse_wire(w, id_map));
      slot = c.add_add(std::move(ws));
    } else if (kind == "mul") {
      std::vector<WireIn> ws;
      std::string w;
      while (ls >> w) ws.push_back(parse_wire(w, id_map));
      if (ws.size() < 2)
        throw std::invalid_argument("circuit: mul needs >= 2 children");
      // left-fold n-ary products into binary gates
      int acc = c.add_mul(ws[0], ws[1]);
      for (size_t i = 2; i < ws.size(); ++i)
        acc = c.add_mul({Rat(1), acc}, ws[i]);
      slot = acc;
    } else {
      throw std::invalid_argument("circuit: unknown gate kind " + kind);
    }
  }
  if (!have_header) throw std::invalid_argument("circuit: empty input");
  c.set_outputs(std::move(outs));
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "header nvars=" << c.nvars() << "\n";
  for (size_t i = 0; i < c.size(); ++i) {
    os << "g" << i << " = ";
    const GateKind& g = c.gates()[i];
    if (const auto* in = std::get_if<InputGate>(&g)) {
      os << "input x" << in->var;
    } else if (const auto* k = std::get_if<ConstGate>(&g)) {
      os << "const " << rat_str(k->value);
    } else if (const auto* a = std::get_if<AddGate>(&g)) {
      os << "add";
      for (const auto& w : a->children)
        os << " (" << rat_str(w.weight) << ")*g" << w.gate;
    } else {
      const auto& m = std::get<MulGate>(g);
      os << "mul (" << rat_str(m.lhs.weight) << ")*g" << m.lhs.gate << " ("
         << rat_str(m.rhs.weight) << ")*g" << m.rhs.gate;
    }
    os << "\n";
  }
  os << "out";
  for (int id : c.outputs()) os << " g" << id;
  os << "\n";
  return os.str();
}

}  // namespace algen
