#include "flac/suite.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "flac/parser.hpp"

namespace flac {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  std::size_t p = line.find("--");
  return p == std::string::npos ? line : line.substr(0, p);
}

std::string dirname(const std::string& path) {
  std::size_t p = path.find_last_of('/');
  return p == std::string::npos ? std::string(".") : path.substr(0, p);
}

}  // namespace

HarnessConfig load_config(const std::string& path) {
  HarnessConfig cfg;
  std::ifstream in(path);
  if (!in) return cfg;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "pcmost") cfg.pc_most = parse_principal(value);
    else if (key == "fuel") cfg.fuel = std::stoull(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "factorization_bound") cfg.factorization_bound = std::stoull(value);
  }
  return cfg;
}

namespace {

std::vector<Term> parse_attack_list(const std::string& text) {
  std::vector<Term> out;
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::runtime_error("unterminated attack list");
    body = body.substr(1, body.size() - 2);
  }
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ';' && depth == 0)) {
      std::string piece = trim(body.substr(start, i - start));
      if (!piece.empty()) out.push_back(parse_term(piece, true));
      start = i + 1;
      continue;
    }
    if (body[i] == '(' || body[i] == '[' || body[i] == '<' || body[i] == '{') ++depth;
    if (body[i] == ')' || body[i] == ']' || body[i] == '>' || body[i] == '}') --depth;
  }
  return out;
}

}  // namespace

Suite load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open suite '" + path + "'");
  Suite suite;
  suite.dir = dirname(path);

  std::string line;
  int lineno = 0;
  std::optional<SuiteEntry> cur;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (!cur) {
      std::istringstream hdr(line);
      std::string kind, name, brace;
      hdr >> kind >> name >> brace;
      if ((kind != "ni" && kind != "rd") || brace != "{")
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 'ni <name> {' or 'rd <name> {'");
      cur = SuiteEntry{};
      cur->kind = kind == "ni" ? SuiteEntry::Kind::ni : SuiteEntry::Kind::rd;
      cur->name = name;
      continue;
    }
    if (line == "}") {
      suite.entries.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "program") cur->program_path = value;
    else if (key == "secret") cur->secret = value;
    else if (key == "input1") cur->input1 = parse_term(value, true);
    else if (key == "input2") cur->input2 = parse_term(value, true);
    else if (key == "subst") {
      std::size_t eq = value.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": subst needs '='");
      cur->subst_sources.emplace_back(trim(value.substr(0, eq)), trim(value.substr(eq + 1)));
    } else if (key == "pc") cur->pc_override = parse_principal(value);
    else if (key == "H") cur->H = parse_principal(value);
    else if (key == "observer") cur->observer = parse_principal(value);
    else if (key == "proj")
      cur->pi = value == "integ" ? Projection::integ : Projection::conf;
    else if (key == "attacks1") cur->attacks1 = parse_attack_list(value);
    else if (key == "attacks2") cur->attacks2 = parse_attack_list(value);
    else if (key == "attacker_context") cur->attacker_context_text = value;
    else if (key == "mode") cur->full_runs = value == "full";
    else if (key == "expect") cur->expect = value;
    else if (key == "reason") cur->reason = value;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
  }
  if (cur) throw std::runtime_error(path + ": unterminated entry '" + cur->name + "'");
  return suite;
}

namespace {

Term load_subst_term(const std::string& dir, const std::string& source) {
  if (source.rfind("file:", 0) == 0)
    return parse_program_file(dir + "/" + source.substr(5), true).term;
  return parse_term(source, true);
}

std::string status_word(const std::string& described) {
  std::size_t sp = described.find_first_of(" (");
  return sp == std::string::npos ? described : described.substr(0, sp);
}

}  // namespace

std::vector<SuiteOutcome> run_suite(const Suite& suite, const HarnessConfig& cfg,
                                    std::ostream* log) {
  std::vector<SuiteOutcome> outcomes;
  for (const auto& entry : suite.entries) {
    SuiteOutcome outcome;
    outcome.name = entry.name;
    outcome.expected = entry.expect;
    std::string described;
    try {
      ProgramFile prog = parse_program_file(suite.dir + "/" + entry.program_path, true);
      TypingContext gamma = TypingContext::of(prog.gamma);
      const Type* secret_type = gamma.lookup(entry.secret);
      if (!secret_type)
        throw std::runtime_error("secret '" + entry.secret + "' not in program gamma");
      Principal pc = entry.pc_override ? *entry.pc_override
                                       : prog.pc.value_or(Principal::top().project(Projection::integ));
      std::vector<std::pair<std::string, Term>> subst;
      for (const auto& [name, src] : entry.subst_sources)
        subst.emplace_back(name, load_subst_term(suite.dir, src));

      if (entry.kind == SuiteEntry::Kind::ni) {
        NiSpec spec;
        spec.program = prog.term;
        spec.gamma = gamma;
        spec.context = prog.context;
        spec.pc = pc;
        spec.secret = entry.secret;
        spec.secret_type = *secret_type;
        spec.input1 = entry.input1;
        spec.input2 = entry.input2;
        spec.subst = subst;
        spec.H = entry.H;
        spec.observer = entry.observer;
        spec.pi = entry.pi;
        spec.fuel = cfg.fuel;
        spec.factor_bound = cfg.factorization_bound;
        described = ni_check(spec).describe();
      } else {
        RdSpec spec;
        spec.program = prog.term;
        spec.gamma = gamma;
        spec.context = prog.context;
        spec.attacker_context = entry.attacker_context_text
                                    ? parse_delegation_context(*entry.attacker_context_text)
                                    : prog.context;
        spec.pc = pc;
        spec.secret = entry.secret;
        spec.secret_type = *secret_type;
        spec.input1 = entry.input1;
        spec.input2 = entry.input2;
        spec.subst = subst;
        spec.attacks1 = entry.attacks1;
        spec.attacks2 = entry.attacks2;
        spec.H = entry.H;
        spec.full_runs = entry.full_runs;
        spec.fuel = cfg.fuel;
        described = rd_check(spec).describe();
      }
    } catch (const std::exception& e) {
      described = std::string("error (") + e.what() + ")";
    }
    outcome.got = described;
    outcome.ok = status_word(described) == entry.expect &&
                 (entry.reason.empty() || described.find(entry.reason) != std::string::npos);
    if (log)
      *log << (outcome.ok ? "ok   " : "FAIL ") << outcome.name << ": expected " << entry.expect
           << (entry.reason.empty() ? "" : " (" + entry.reason + ")") << ", got " << described
           << "\n";
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace flac
