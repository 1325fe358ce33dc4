#include "ocl/dot.hpp"

namespace ocl {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string effect_label(const Edge& e) {
  if (e.is_reset()) return "r";
  if (e.effect > 0) return "+" + std::to_string(e.effect);
  return std::to_string(e.effect);
}

}  // namespace

void export_dot(std::ostream& out, const Oca& machine, const std::string& title) {
  out << "digraph " << quote(title) << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  out << "  __start -> " << quote(machine.state_name(machine.initial())) << ";\n";
  for (StateId q = 0; q < machine.num_states(); ++q) {
    out << "  " << quote(machine.state_name(q));
    out << " [shape=" << (machine.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  for (StateId q = 0; q < machine.num_states(); ++q) {
    for (int test = 0; test <= machine.m(); ++test) {
      for (int sym = 0; sym < machine.alphabet().size(); ++sym) {
        const Edge& e = machine.edge(q, test, sym);
        if (!e.defined()) continue;
        std::string test_label =
            machine.m() == 1 ? (test == 0 ? "=0" : ">0") : "=" + std::to_string(test);
        out << "  " << quote(machine.state_name(q)) << " -> " << quote(machine.state_name(e.to))
            << " [label=" << quote(machine.alphabet().name(sym) + " [" + test_label + "] / " +
                                   effect_label(e))
            << "];\n";
      }
    }
  }
  out << "}\n";
}

void export_dot(std::ostream& out, const Dfa& dfa, const RegionPartition* regions,
                const std::string& title) {
  out << "digraph " << quote(title) << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  out << "  __start -> " << quote(dfa.state_name(dfa.initial())) << ";\n";
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    out << "  " << quote(dfa.state_name(q));
    out << " [shape=" << (dfa.is_final(q) ? "doublecircle" : "circle");
    if (regions) {
      switch (regions->region[q]) {
        case Region::InitialRegion:
          out << ", style=filled, fillcolor=gray80";
          break;
        case Region::Border:
          out << ", style=filled, fillcolor=black, fontcolor=white";
          break;
        case Region::RegionOfInterest:
          out << ", style=filled, fillcolor=white";
          break;
        case Region::None:
          out << ", style=dashed";
          break;
      }
    }
    out << "];\n";
  }
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      if (dfa.next(q, sym) < 0) continue;
      out << "  " << quote(dfa.state_name(q)) << " -> " << quote(dfa.state_name(dfa.next(q, sym)))
          << " [label=" << quote(dfa.alphabet().name(sym)) << "];\n";
    }
  }
  out << "}\n";
}

}  // namespace ocl
