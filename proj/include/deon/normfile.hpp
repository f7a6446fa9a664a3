#pragma once

// Batch front end: norm files in, query reports out.
//
// A norm file is a line-oriented document, one directive per line,
// `#` starting a comment:
//
//   atoms <name>+                        vocabulary (exactly once, first)
//   param <name>+                        parameter atoms (optional)
//   premise <sentence>                   fact or obligation, in force order
//   query accept <sentence>              acceptance in the folded state
//   query valid1 <sentence>              order-sensitive validity
//   query valid <sentence>               validity over all premise orders
//   query diagnose                       violation-versus-exception test
//   dump dot <ideality|normality> <path> Graphviz snapshot of the ordering
//
// Directives are processed in order; queries and dumps see the premises
// declared above them. The report is one `query <k>: YES|NO` line per
// query (vacuous verdicts are flagged), then a `---` separator and a
// single machine-readable JSON line. Identical input bytes produce
// identical report bytes.
//
// Exit codes: 0 on success regardless of verdicts, 2 on parse errors,
// 3 on engine errors.

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deon/diagnose.hpp"
#include "deon/dot.hpp"
#include "deon/entail.hpp"
#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/state.hpp"
#include "deon/update.hpp"

namespace deon {

class NormFileError : public Error {
 public:
  NormFileError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct RunOptions {
  bool explain = false;
  std::size_t max_atoms = kDefaultMaxAtoms;
  std::size_t max_premises = kDefaultMaxPremises;
};

struct Directive {
  enum class Kind { Premise, QueryAccept, QueryValid1, QueryValid, QueryDiagnose, DumpDot };

  Kind kind;
  std::optional<Sentence> sentence;
  RelationKind relation = RelationKind::Ideality;
  std::string path;
  std::size_t line = 0;
};

struct NormFile {
  std::shared_ptr<const Vocabulary> vocab;
  std::vector<std::string> parameters;
  std::vector<Directive> directives;
};

struct QueryResult {
  std::size_t index = 0;  // 1-based, in input order
  std::string kind;
  std::optional<std::string> sentence;
  bool verdict = false;
  bool vacuous = false;
  std::vector<std::vector<std::size_t>> orders;  // 0-based premise indices
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::optional<std::string> unwitnessed;
};

struct QueryReport {
  std::vector<QueryResult> queries;
  std::string human_text;
  std::string machine_text;

  std::string text() const { return human_text + "---\n" + machine_text; }
};

struct RunResult {
  int exit_code = 0;
  QueryReport report;
  std::string error;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

inline std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline NormFile parse_norm_file(std::istream& in, const RunOptions& opts = {}) {
  NormFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = detail::strip(line);
    if (body.empty()) continue;

    std::istringstream words(body);
    std::string head;
    words >> head;
    std::string rest = detail::strip(body.substr(head.size()));

    auto need_vocab = [&]() -> const Vocabulary& {
      if (!file.vocab) throw NormFileError("atoms must be declared before '" + head + "'", line_no);
      return *file.vocab;
    };
    auto parse = [&](const std::string& text) -> Sentence {
      try {
        return parse_sentence(text, need_vocab());
      } catch (const ParseError& e) {
        throw NormFileError(e.what(), line_no);
      }
    };

    if (head == "atoms") {
      if (file.vocab) throw NormFileError("duplicate atoms line", line_no);
      auto names = detail::split_words(rest);
      if (names.empty()) throw NormFileError("atoms line declares no atoms", line_no);
      if (names.size() > opts.max_atoms)
        throw NormFileError("vocabulary of " + std::to_string(names.size()) +
                                " atoms exceeds the cap of " + std::to_string(opts.max_atoms),
                            line_no);
      try {
        file.vocab = std::make_shared<Vocabulary>(std::move(names));
      } catch (const Error& e) {
        throw NormFileError(e.what(), line_no);
      }
    } else if (head == "param") {
      const Vocabulary& vocab = need_vocab();
      auto names = detail::split_words(rest);
      if (names.empty()) throw NormFileError("param line declares no atoms", line_no);
      for (auto& name : names) {
        if (!vocab.index_of(name))
          throw NormFileError("parameter '" + name + "' is not a declared atom", line_no);
        for (const auto& existing : file.parameters)
          if (existing == name) throw NormFileError("duplicate parameter '" + name + "'", line_no);
        file.parameters.push_back(std::move(name));
      }
    } else if (head == "premise") {
      if (rest.empty()) throw NormFileError("premise line has no sentence", line_no);
      file.directives.push_back({Directive::Kind::Premise, parse(rest), {}, "", line_no});
    } else if (head == "query") {
      std::string sub;
      words >> sub;
      std::string arg = detail::strip(rest.substr(sub.size()));
      if (sub == "accept" || sub == "valid1" || sub == "valid") {
        if (arg.empty()) throw NormFileError("query " + sub + " has no sentence", line_no);
        Directive::Kind kind = sub == "accept"   ? Directive::Kind::QueryAccept
                               : sub == "valid1" ? Directive::Kind::QueryValid1
                                                 : Directive::Kind::QueryValid;
        file.directives.push_back({kind, parse(arg), {}, "", line_no});
      } else if (sub == "diagnose") {
        if (!arg.empty()) throw NormFileError("query diagnose takes no argument", line_no);
        need_vocab();
        file.directives.push_back({Directive::Kind::QueryDiagnose, std::nullopt, {}, "", line_no});
      } else {
        throw NormFileError("unknown query kind '" + sub + "'", line_no);
      }
    } else if (head == "dump") {
      std::string what, relname;
      words >> what >> relname;
      if (what != "dot") throw NormFileError("unknown dump kind '" + what + "'", line_no);
      RelationKind rel;
      if (relname == "ideality")
        rel = RelationKind::Ideality;
      else if (relname == "normality")
        rel = RelationKind::Normality;
      else
        throw NormFileError("dump dot expects 'ideality' or 'normality'", line_no);
      std::string path = detail::strip(rest.substr(what.size() + 1 + relname.size()));
      if (path.empty()) throw NormFileError("dump dot has no output path", line_no);
      need_vocab();
      file.directives.push_back({Directive::Kind::DumpDot, std::nullopt, rel, path, line_no});
    } else {
      throw NormFileError("unknown directive '" + head + "'", line_no);
    }
  }
  if (!file.vocab) throw NormFileError("no atoms line", line_no == 0 ? 1 : line_no);
  return file;
}

namespace detail {

inline nlohmann::ordered_json machine_json(const NormFile& file,
                                           const std::vector<QueryResult>& queries,
                                           bool explain) {
  nlohmann::ordered_json doc;
  doc["atoms"] = file.vocab->atoms();
  doc["parameters"] = file.parameters;
  doc["queries"] = nlohmann::ordered_json::array();
  for (const QueryResult& q : queries) {
    nlohmann::ordered_json row;
    row["index"] = q.index;
    row["kind"] = q.kind;
    if (q.sentence)
      row["sentence"] = *q.sentence;
    else
      row["sentence"] = nullptr;
    row["verdict"] = q.verdict ? "YES" : "NO";
    row["vacuous"] = q.vacuous;
    if (explain) {
      if (q.kind == "valid") {
        auto orders = nlohmann::ordered_json::array();
        for (const auto& order : q.orders) {
          auto one = nlohmann::ordered_json::array();
          for (std::size_t i : order) one.push_back(i + 1);
          orders.push_back(std::move(one));
        }
        row["orders"] = std::move(orders);
      }
      if (q.kind == "diagnose") {
        auto witnesses = nlohmann::ordered_json::array();
        for (const auto& [from, to] : q.witnesses)
          witnesses.push_back(nlohmann::ordered_json::array({from, to}));
        row["witnesses"] = std::move(witnesses);
        row["unwitnessed"] = q.unwitnessed ? nlohmann::ordered_json(*q.unwitnessed)
                                           : nlohmann::ordered_json(nullptr);
      }
    }
    doc["queries"].push_back(std::move(row));
  }
  return doc;
}

}  // namespace detail

inline RunResult run(std::istream& in, const RunOptions& opts = {}) {
  RunResult result;
  NormFile file;
  try {
    file = parse_norm_file(in, opts);
  } catch (const NormFileError& e) {
    result.exit_code = 2;
    result.error = e.what();
    return result;
  }

  std::ostringstream human;
  std::vector<Sentence> premises;
  DeonticState state = minimal_state(file.vocab);
  std::size_t query_no = 0;

  for (const Directive& d : file.directives) {
    try {
      switch (d.kind) {
        case Directive::Kind::Premise:
          state = update(state, *d.sentence);
          premises.push_back(*d.sentence);
          break;
        case Directive::Kind::QueryAccept:
        case Directive::Kind::QueryValid1: {
          QueryResult q;
          q.index = ++query_no;
          q.kind = d.kind == Directive::Kind::QueryAccept ? "accept" : "valid1";
          q.sentence = to_string(*d.sentence);
          q.verdict = accepts(state, *d.sentence);
          human << "query " << q.index << ": " << (q.verdict ? "YES" : "NO") << "\n";
          result.report.queries.push_back(std::move(q));
          break;
        }
        case Directive::Kind::QueryValid: {
          QueryResult q;
          q.index = ++query_no;
          q.kind = "valid";
          q.sentence = to_string(*d.sentence);
          EntailmentReport rep = entails(premises, *d.sentence, file.vocab, opts.max_premises);
          q.verdict = rep.verdict;
          q.vacuous = rep.vacuous;
          q.orders = std::move(rep.qualifying_orders);
          human << "query " << q.index << ": " << (q.verdict ? "YES" : "NO");
          if (q.vacuous) human << " (vacuous: premises jointly unacceptable)";
          human << "\n";
          if (opts.explain)
            for (const auto& order : q.orders) {
              human << "  order:";
              for (std::size_t i : order) human << " " << i + 1;
              human << "\n";
            }
          result.report.queries.push_back(std::move(q));
          break;
        }
        case Directive::Kind::QueryDiagnose: {
          QueryResult q;
          q.index = ++query_no;
          q.kind = "diagnose";
          DiagnosisReport rep =
              violation_proper(state, AtomPartition::with_parameters(*file.vocab, file.parameters));
          q.verdict = rep.violation;
          for (const auto& [from, to] : rep.witnesses)
            q.witnesses.emplace_back(world_label(from, *file.vocab),
                                     world_label(to, *file.vocab));
          if (rep.unwitnessed) q.unwitnessed = world_label(*rep.unwitnessed, *file.vocab);
          human << "query " << q.index << ": " << (q.verdict ? "YES" : "NO") << "\n";
          if (opts.explain) {
            for (const auto& [from, to] : q.witnesses)
              human << "  witness: " << from << " => " << to << "\n";
            if (q.unwitnessed) human << "  unwitnessed: " << *q.unwitnessed << "\n";
          }
          result.report.queries.push_back(std::move(q));
          break;
        }
        case Directive::Kind::DumpDot: {
          std::ofstream out(d.path, std::ios::binary);
          if (!out) throw Error("cannot open '" + d.path + "' for writing");
          export_dot(state, d.relation, out);
          break;
        }
      }
    } catch (const ParseError& e) {
      result.exit_code = 2;
      result.error = "line " + std::to_string(d.line) + ": " + e.what();
      result.report.human_text = human.str();
      return result;
    } catch (const Error& e) {
      result.exit_code = 3;
      result.error = "line " + std::to_string(d.line) + ": " + e.what();
      result.report.human_text = human.str();
      return result;
    }
  }

  result.report.human_text = human.str();
  result.report.machine_text =
      detail::machine_json(file, result.report.queries, opts.explain).dump() + "\n";
  return result;
}

}  // namespace deon
