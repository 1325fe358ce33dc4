#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ocl/assembly.hpp"
#include "ocl/dot.hpp"
#include "ocl/json_io.hpp"
#include "ocl/protocol.hpp"
#include "ocl/testkit.hpp"

namespace {

using namespace ocl;

// Words on the command line: plain concatenation when every symbol is a single
// character, comma-separated symbols otherwise (PrimeMatch symbols like p2).
Word parse_cli_word(const Alphabet& alphabet, const std::string& text) {
  if (text.find(',') != std::string::npos) {
    Word w;
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      std::string sym = text.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!sym.empty()) {
        auto idx = alphabet.index_of(sym);
        if (!idx) throw std::invalid_argument("unknown symbol: " + sym);
        w.push_back(static_cast<char>(*idx));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return w;
  }
  bool single = true;
  for (const std::string& s : alphabet.names()) single = single && s.size() == 1;
  if (!single)
    throw std::invalid_argument(
        "alphabet has multi-character symbols; separate the word's symbols with commas");
  Word w;
  for (char c : text) {
    auto idx = alphabet.index_of(std::string(1, c));
    if (!idx) throw std::invalid_argument(std::string("unknown symbol: ") + c);
    w.push_back(static_cast<char>(*idx));
  }
  return w;
}

Alphabet parse_alphabet_list(const std::string& text) {
  std::vector<std::string> syms;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string s = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!s.empty()) syms.push_back(s);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Alphabet(syms);
}

Doca load_doca_warned(const std::string& path) {
  LoadedMachine lm = load_machine_file(path);
  if (lm.completed_entries > 0)
    std::cerr << "note: " << path << ": " << lm.completed_entries
              << " missing transitions routed to a fresh sink\n";
  return as_doca(lm.machine);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

long long teacher_bound_for(const PolynomialProfile& profile, int n_max, long long cap) {
  BigInt best(1);
  for (int n = 1; n <= n_max; ++n) {
    BigInt a = profile.eval("f", profile.docasize(n));
    BigInt b = profile.polytwo(n);
    if (a > best) best = a;
    if (b > best) best = b;
  }
  long long v;
  if (!best.to_i64(v) || v > cap) return cap;
  return v;
}

void warn_profile(const PolynomialProfile& profile, int n_max) {
  for (int n = std::max(2, 1); n <= n_max; ++n) {
    auto violations = validate_profile(profile, n);
    if (!violations.empty()) {
      std::cerr << "note: profile '" << profile.name() << "' violates " << violations.size()
                << " f-bound inequalities at n=" << n
                << " (desk profiles do; results are re-checked by bounded equivalence)\n";
      return;
    }
  }
}

struct LearnArgs {
  std::string teacher;
  std::string profile = "desk-small";
  std::string alphabet;
  int n_max = 6;
  long long ce_bound = 5000;
  long long re_bound = 0;
  std::string out;
  std::string stats;
  std::string dot;
  bool verbose = false;
};

int run_learn(const LearnArgs& args) {
  PolynomialProfile profile = PolynomialProfile::resolve(args.profile);
  warn_profile(profile, args.n_max);

  std::unique_ptr<Teacher> owned;
  std::unique_ptr<TcpTeacherConnection> conn;
  if (args.teacher.rfind("tcp:", 0) == 0) {
    std::string rest = args.teacher.substr(4);
    size_t colon = rest.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("tcp teacher must look like tcp:host:port");
    if (args.alphabet.empty())
      throw std::invalid_argument("a tcp teacher needs --alphabet (it is not on the wire)");
    conn = connect_teacher_tcp(rest.substr(0, colon), std::stoi(rest.substr(colon + 1)),
                               parse_alphabet_list(args.alphabet));
  } else {
    Doca target = load_doca_warned(args.teacher);
    owned = std::make_unique<DocaTeacher>(std::move(target),
                                          teacher_bound_for(profile, args.n_max, args.ce_bound));
  }
  Teacher& teacher = conn ? static_cast<Teacher&>(*conn->teacher) : *owned;

  OclOptions opts;
  opts.n_max = args.n_max;
  opts.re_length_bound_override = args.re_bound;
  if (args.verbose) opts.log = [](const std::string& line) { std::cerr << line << "\n"; };

  OclResult result = run_ocl(teacher, profile, opts);
  if (!result.ok) {
    std::cerr << "learning failed: n_max=" << args.n_max << " exhausted";
    if (result.last_counterexample)
      std::cerr << "; last counterexample: "
                << teacher.alphabet().format(*result.last_counterexample);
    std::cerr << "\nstats: " << result.stats_json().dump() << "\n";
    return 1;
  }

  write_output(args.out, machine_to_json(result.machine).dump(2) + "\n");
  if (!args.stats.empty()) write_output(args.stats, result.stats_json().dump(2) + "\n");
  if (!args.dot.empty() && result.final_construct) {
    std::ostringstream dot;
    export_dot(dot, result.final_construct->behavioral, &result.final_construct->part,
               "behavioral");
    write_output(args.dot, dot.str());
  }
  std::cerr << "learned a " << result.machine.num_states() << "-state DOCA at n="
            << result.n_final << " (MQ=" << result.stats.mq_count
            << ", MEQ=" << result.stats.meq_count << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OCL: active learning and approximate minimization for deterministic "
               "one-counter automata"};
  app.require_subcommand(1);

  LearnArgs learn_args;
  CLI::App* learn = app.add_subcommand("learn", "learn a DOCA from a teacher");
  learn->add_option("--teacher", learn_args.teacher, "target machine JSON file or tcp:host:port")
      ->required();
  learn->add_option("--profile", learn_args.profile, "polynomial profile name or JSON file");
  learn->add_option("--n-max", learn_args.n_max, "give up after this state-count guess");
  learn->add_option("--ce-bound", learn_args.ce_bound, "hard cap on the counterexample bound");
  learn->add_option("--re-bound", learn_args.re_bound,
                    "restricted-equivalence length bound (0 = profile default)");
  learn->add_option("--alphabet", learn_args.alphabet, "comma-separated symbols (tcp teacher)");
  learn->add_option("--out", learn_args.out, "output machine file (default stdout)");
  learn->add_option("--stats", learn_args.stats, "stats JSON file");
  learn->add_option("--dot", learn_args.dot, "behavioral DFA DOT file with regions tinted");
  learn->add_flag("--verbose", learn_args.verbose, "log queries to stderr");

  std::string min_target;
  CLI::App* minimize = app.add_subcommand("minimize", "approximately minimize a DOCA");
  minimize->add_option("machine", min_target, "DOCA JSON file")->required();
  minimize->add_option("--profile", learn_args.profile, "polynomial profile name or JSON file");
  minimize->add_option("--n-max", learn_args.n_max, "give up after this state-count guess");
  minimize->add_option("--ce-bound", learn_args.ce_bound, "hard cap on the counterexample bound");
  minimize->add_option("--re-bound", learn_args.re_bound,
                       "restricted-equivalence length bound (0 = profile default)");
  minimize->add_option("--out", learn_args.out, "output machine file (default stdout)");
  minimize->add_option("--stats", learn_args.stats, "stats JSON file");
  minimize->add_option("--dot", learn_args.dot, "behavioral DFA DOT file");
  minimize->add_flag("--verbose", learn_args.verbose, "log queries to stderr");

  std::string equiv_a, equiv_b;
  long long equiv_bound = 0;
  CLI::App* equiv = app.add_subcommand("equiv", "bounded equivalence of two machines");
  equiv->add_option("a", equiv_a)->required();
  equiv->add_option("b", equiv_b)->required();
  equiv->add_option("--bound", equiv_bound, "word-length bound")->required();

  std::string run_machine, run_word;
  CLI::App* run_cmd = app.add_subcommand("run", "run a word and report the final configuration");
  run_cmd->add_option("machine", run_machine)->required();
  run_cmd->add_option("word", run_word, "symbols; comma-separated when multi-character");

  std::string lexmin_file;
  CLI::App* lexmin_cmd = app.add_subcommand("lexmin", "print lexicographic witnesses of a DFA");
  lexmin_cmd->add_option("dfa", lexmin_file)->required();

  int gen_states = 3;
  uint64_t gen_seed = 0;
  double gen_reset = 0.1;
  std::string gen_alphabet = "a,b";
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen-random", "generate a random DOCA");
  gen->add_option("--states", gen_states)->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--reset-prob", gen_reset);
  gen->add_option("--alphabet", gen_alphabet);
  gen->add_option("--out", gen_out);

  std::string dot_file, dot_regions, dot_out;
  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("machine", dot_file)->required();
  dot_cmd->add_option("--regions", dot_regions, "profile,n: tint a DFA's regions");
  dot_cmd->add_option("--out", dot_out);

  std::string serve_file;
  int serve_port = 0;
  long long serve_bound = 5000;
  CLI::App* serve = app.add_subcommand("serve-teacher", "serve the teacher wire protocol");
  serve->add_option("machine", serve_file)->required();
  serve->add_option("--port", serve_port)->required();
  serve->add_option("--ce-bound", serve_bound, "counterexample length bound");

  try {
    app.parse(argc, argv);

    if (learn->parsed()) return run_learn(learn_args);
    if (minimize->parsed()) {
      learn_args.teacher = min_target;
      return run_learn(learn_args);
    }
    if (equiv->parsed()) {
      Doca a = load_doca_warned(equiv_a);
      Doca b = load_doca_warned(equiv_b);
      if (!(a.alphabet() == b.alphabet()))
        throw std::invalid_argument("machines have different alphabets");
      auto ce = min_distinguishing_word(a, a.initial_configuration(), b,
                                        b.initial_configuration(), equiv_bound);
      if (ce) {
        std::cout << "CE " << a.alphabet().format(*ce) << "\n";
        return 1;
      }
      std::cout << "OK\n";
      return 0;
    }
    if (run_cmd->parsed()) {
      Doca m = load_doca_warned(run_machine);
      Word w = parse_cli_word(m.alphabet(), run_word);
      Configuration c = run(m, w);
      bool ok = m.is_final(c.state);
      std::cout << (ok ? "accept" : "reject") << " (" << m.state_name(c.state) << ", "
                << c.counter << ")\n";
      return ok ? 0 : 1;
    }
    if (lexmin_cmd->parsed()) {
      std::ifstream in(lexmin_file);
      if (!in) throw std::invalid_argument("cannot open " + lexmin_file);
      AnyMachine any = machine_from_json(nlohmann::json::parse(in));
      Dfa* dfa = std::get_if<Dfa>(&any);
      if (!dfa) throw std::invalid_argument("lexmin needs a DFA file");
      complete_with_sink(*dfa);
      auto witnesses = lexmin_witnesses(*dfa);
      std::vector<std::pair<Word, StateId>> rows;
      for (const auto& [q, w] : witnesses) rows.push_back({w, q});
      std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return length_lex_less(x.first, y.first);
      });
      for (const auto& [w, q] : rows)
        std::cout << dfa->state_name(q) << "\t" << dfa->alphabet().format(w) << "\n";
      return 0;
    }
    if (gen->parsed()) {
      Doca d = testkit::random_doca(gen_states, parse_alphabet_list(gen_alphabet), gen_seed,
                                    gen_reset);
      write_output(gen_out, machine_to_json(d).dump(2) + "\n");
      return 0;
    }
    if (dot_cmd->parsed()) {
      std::ifstream in(dot_file);
      if (!in) throw std::invalid_argument("cannot open " + dot_file);
      AnyMachine any = machine_from_json(nlohmann::json::parse(in));
      std::ostringstream out;
      if (Dfa* dfa = std::get_if<Dfa>(&any)) {
        complete_with_sink(*dfa);
        if (!dot_regions.empty()) {
          size_t comma = dot_regions.rfind(',');
          if (comma == std::string::npos)
            throw std::invalid_argument("--regions wants profile,n");
          PolynomialProfile profile =
              PolynomialProfile::resolve(dot_regions.substr(0, comma));
          long long n = std::stoll(dot_regions.substr(comma + 1));
          RegionPartition part = partition(*dfa, profile, n);
          export_dot(out, *dfa, &part);
        } else {
          export_dot(out, *dfa);
        }
      } else if (Doca* d = std::get_if<Doca>(&any)) {
        complete_with_sink(*d);
        export_dot(out, *d);
      } else {
        MDoca& m = std::get<MDoca>(any);
        complete_with_sink(m);
        export_dot(out, m);
      }
      write_output(dot_out, out.str());
      return 0;
    }
    if (serve->parsed()) {
      Doca target = load_doca_warned(serve_file);
      DocaTeacher teacher(std::move(target), serve_bound);
      std::cerr << "serving teacher on port " << serve_port << "\n";
      serve_teacher_tcp(teacher, serve_port);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
