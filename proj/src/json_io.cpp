#include "ocl/json_io.hpp"

#include <fstream>

namespace ocl {

using nlohmann::json;

namespace {

json effect_to_json(const Edge& e) {
  if (e.is_reset()) return json("reset");
  return json(e.effect);
}

int effect_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "reset") throw std::invalid_argument("bad effect: " + j.dump());
    return kEffectReset;
  }
  if (!j.is_number_integer()) throw std::invalid_argument("bad effect: " + j.dump());
  return j.get<int>();
}

json header(const char* type, const Oca& m) {
  json j;
  j["type"] = type;
  j["alphabet"] = m.alphabet().names();
  j["states"] = m.state_names();
  j["initial"] = m.state_name(m.initial());
  json finals = json::array();
  for (StateId q = 0; q < m.num_states(); ++q)
    if (m.is_final(q)) finals.push_back(m.state_name(q));
  j["finals"] = finals;
  return j;
}

json oca_transitions(const Oca& m, bool named_tests) {
  json ts = json::array();
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (int test = 0; test <= m.m(); ++test) {
      for (int sym = 0; sym < m.alphabet().size(); ++sym) {
        const Edge& e = m.edge(q, test, sym);
        if (!e.defined()) continue;
        json t;
        t["from"] = m.state_name(q);
        if (named_tests)
          t["test"] = test == 0 ? "zero" : "pos";
        else
          t["test"] = test;
        t["symbol"] = m.alphabet().name(sym);
        t["to"] = m.state_name(e.to);
        t["effect"] = effect_to_json(e);
        ts.push_back(t);
      }
    }
  }
  return ts;
}

struct Parts {
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> finals;
  Alphabet alphabet;
};

Parts parts_from_json(const json& j) {
  Parts p;
  p.states = j.at("states").get<std::vector<std::string>>();
  p.initial = j.at("initial").get<std::string>();
  p.finals = j.at("finals").get<std::vector<std::string>>();
  p.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
  return p;
}

}  // namespace

json machine_to_json(const Doca& machine) {
  json j = header("doca", machine);
  j["transitions"] = oca_transitions(machine, true);
  return j;
}

json machine_to_json(const MDoca& machine) {
  json j = header("mdoca", machine);
  j["m"] = machine.m();
  j["transitions"] = oca_transitions(machine, false);
  return j;
}

json machine_to_json(const Dfa& dfa) {
  json j;
  j["type"] = "dfa";
  j["alphabet"] = dfa.alphabet().names();
  j["states"] = dfa.state_names();
  j["initial"] = dfa.state_name(dfa.initial());
  json finals = json::array();
  for (StateId q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_final(q)) finals.push_back(dfa.state_name(q));
  j["finals"] = finals;
  json ts = json::array();
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      if (dfa.next(q, sym) < 0) continue;
      json t;
      t["from"] = dfa.state_name(q);
      t["symbol"] = dfa.alphabet().name(sym);
      t["to"] = dfa.state_name(dfa.next(q, sym));
      ts.push_back(t);
    }
  }
  j["transitions"] = ts;
  return j;
}

namespace {

template <typename M>
void fill_oca_transitions(M& out, const json& j, bool named_tests, int m) {
  for (const json& t : j.at("transitions")) {
    auto from = out.state_index(t.at("from").get<std::string>());
    auto to = out.state_index(t.at("to").get<std::string>());
    if (!from || !to) throw std::invalid_argument("transition references unknown state");
    auto sym = out.alphabet().index_of(t.at("symbol").get<std::string>());
    if (!sym) throw std::invalid_argument("transition references unknown symbol");
    int test;
    if (named_tests) {
      std::string s = t.at("test").get<std::string>();
      if (s == "zero")
        test = 0;
      else if (s == "pos")
        test = 1;
      else
        throw std::invalid_argument("bad test: " + s);
    } else {
      test = t.at("test").get<int>();
      if (test < 0 || test > m) throw std::invalid_argument("test out of range");
    }
    out.set_edge(*from, test, *sym, *to, effect_from_json(t.at("effect")));
  }
}

}  // namespace

Doca doca_from_json(const json& j) {
  Parts p = parts_from_json(j);
  Doca out(p.states, p.initial, p.finals, p.alphabet);
  fill_oca_transitions(out, j, true, 1);
  return out;
}

MDoca mdoca_from_json(const json& j) {
  Parts p = parts_from_json(j);
  int m = j.at("m").get<int>();
  MDoca out(m, p.states, p.initial, p.finals, p.alphabet);
  fill_oca_transitions(out, j, false, m);
  return out;
}

Dfa dfa_from_json(const json& j) {
  Parts p = parts_from_json(j);
  Dfa out(p.states, p.initial, p.finals, p.alphabet);
  for (const json& t : j.at("transitions")) {
    auto from = out.state_index(t.at("from").get<std::string>());
    auto to = out.state_index(t.at("to").get<std::string>());
    if (!from || !to) throw std::invalid_argument("transition references unknown state");
    auto sym = out.alphabet().index_of(t.at("symbol").get<std::string>());
    if (!sym) throw std::invalid_argument("transition references unknown symbol");
    out.set_next(*from, *sym, *to);
  }
  return out;
}

AnyMachine machine_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "doca") return doca_from_json(j);
  if (type == "mdoca") return mdoca_from_json(j);
  if (type == "dfa") return dfa_from_json(j);
  throw std::invalid_argument("unknown machine type: " + type);
}

LoadedMachine load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(in);
  LoadedMachine out{machine_from_json(j), 0};
  std::visit([&](auto& m) { out.completed_entries = complete_with_sink(m); }, out.machine);
  return out;
}

Doca as_doca(const AnyMachine& machine) {
  if (const Doca* d = std::get_if<Doca>(&machine)) return *d;
  if (const MDoca* m = std::get_if<MDoca>(&machine)) return mdoca_to_doca(*m);
  return dfa_as_doca(std::get<Dfa>(machine));
}

void save_machine_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace ocl
