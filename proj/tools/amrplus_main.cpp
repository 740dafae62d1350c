// amrplus: parse, validate, upgrade, translate, export, score, and check
// entailment for indexed-AMR documents.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amrplus/amrplus.hpp"
#include "amrplus/json_io.hpp"

namespace {

using namespace amrplus;

struct InputDocument {
  std::string id;  // <file>:<ordinal>
  AmrPlusDocument doc;
};

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AmrError(ErrorCode::Io, "cannot open '" + path + "'");
  }
  return read_stream(in);
}

// Reads every document from the given files (stdin when none), tagging each
// with <source>:<ordinal>. Parse failures are reported per file.
struct Batch {
  std::vector<InputDocument> docs;
  int failures = 0;
};

Batch load_documents(const std::vector<std::string>& files) {
  Batch batch;
  std::vector<std::string> sources = files;
  if (sources.empty()) sources.push_back("-");
  for (const auto& path : sources) {
    std::string label = path == "-" ? "stdin" : path;
    try {
      std::string text = read_file(path);
      auto docs = parse_all(text);
      for (std::size_t i = 0; i < docs.size(); ++i) {
        batch.docs.push_back(
            {label + ":" + std::to_string(i + 1), std::move(docs[i])});
      }
    } catch (const AmrError& e) {
      std::cerr << label << ": " << e.what() << "\n";
      ++batch.failures;
    }
  }
  return batch;
}

LexMap load_lexmap(const std::string& path) {
  if (path.empty()) return LexMap::builtin();
  std::ifstream in(path);
  if (!in) {
    throw AmrError(ErrorCode::Io, "cannot open lexmap '" + path + "'");
  }
  return LexMap::load(in);
}

struct Options {
  std::vector<std::string> files;
  std::string lexmap_path;
  std::string accommodate;
  std::string format = "box";
  std::uint64_t seed = 0;
  int restarts = 16;
  int max_domain = 3;
};

int run_parse(const Options& opt) {
  Batch batch = load_documents(opt.files);
  for (const auto& [id, doc] : batch.docs) {
    if (opt.format == "json") {
      std::cout << to_json(doc).dump() << "\n";
    } else {
      std::cout << print(doc) << "\n";
    }
  }
  return batch.failures ? 1 : 0;
}

int run_validate(const Options& opt) {
  Batch batch = load_documents(opt.files);
  int failures = batch.failures;
  for (const auto& [id, doc] : batch.docs) {
    try {
      ContextStructure st = validate(doc);
      if (opt.format == "json") {
        Json j = to_json(st);
        j["id"] = id;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << id << ": OK root=" << st.root << "\n";
      }
    } catch (const AmrError& e) {
      std::cerr << id << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_upgrade(const Options& opt) {
  Batch batch = load_documents(opt.files);
  int failures = batch.failures;
  for (const auto& [id, doc] : batch.docs) {
    try {
      UpgradeResult result = upgrade(doc);
      if (opt.format == "json") {
        std::cout << to_json(result.document).dump() << "\n";
      } else {
        std::cout << print(result.document) << "\n";
      }
      for (const auto& notice : result.notices) {
        std::cerr << "REVIEW " << id << " " << notice.variable << " "
                  << notice.reason << "\n";
      }
    } catch (const AmrError& e) {
      std::cerr << id << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_drs(const Options& opt, bool clause_format) {
  LexMap lex = load_lexmap(opt.lexmap_path);
  Accommodation mode = accommodation_from_string(
      opt.accommodate.empty() ? "none" : opt.accommodate);
  Batch batch = load_documents(opt.files);
  int failures = batch.failures;
  bool first = true;
  for (const auto& [id, doc] : batch.docs) {
    try {
      ContextStructure st = validate(doc);
      DrsOutput out = translate(doc, st, lex, mode);
      std::string fmt = clause_format ? "clauses" : opt.format;
      if (fmt == "json") {
        std::cout << to_json(out).dump() << "\n";
      } else if (fmt == "clauses") {
        if (!first) std::cout << "\n";
        std::cout << render_clauses(out);
      } else {
        if (!first) std::cout << "\n";
        std::cout << render_box(out);
      }
      first = false;
    } catch (const AmrError& e) {
      std::cerr << id << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_triples(const Options& opt) {
  Batch batch = load_documents(opt.files);
  int failures = batch.failures;
  bool first = true;
  for (const auto& [id, doc] : batch.docs) {
    try {
      ContextStructure st = validate(doc);
      auto triples = export_triples(doc, st);
      if (opt.format == "json") {
        std::cout << to_json(triples).dump() << "\n";
      } else {
        if (!first) std::cout << "\n";
        std::cout << write_triples(triples);
      }
      first = false;
    } catch (const AmrError& e) {
      std::cerr << id << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

int run_match(const Options& opt) {
  if (opt.files.size() != 2) {
    std::cerr << "match expects exactly two triple files\n";
    return 2;
  }
  auto a = read_triples(read_file(opt.files[0]));
  auto b = read_triples(read_file(opt.files[1]));
  MatchResult r = smatch_score(a, b, opt.restarts, opt.seed);
  if (opt.format == "json") {
    std::cout << to_json(r).dump() << "\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "P=%.4f R=%.4f F1=%.4f", r.precision,
                  r.recall, r.f1);
    std::cout << buf << "\n";
  }
  return 0;
}

int run_entail(const Options& opt) {
  if (opt.files.size() != 2) {
    std::cerr << "entail expects a premise file and a conclusion file\n";
    return 2;
  }
  LexMap lex = load_lexmap(opt.lexmap_path);
  Accommodation mode = accommodation_from_string(
      opt.accommodate.empty() ? "global" : opt.accommodate);
  auto to_formula = [&](const std::string& path) {
    auto docs = parse_all(read_file(path));
    if (docs.size() != 1) {
      throw AmrError(ErrorCode::BadInput,
                     path + ": expected exactly one document");
    }
    ContextStructure st = validate(docs[0]);
    return drs_to_fol(translate(docs[0], st, lex, mode), mode);
  };
  Formula premise = to_formula(opt.files[0]);
  Formula conclusion = to_formula(opt.files[1]);
  EntailmentVerdict verdict =
      check_entailment(premise, conclusion, opt.max_domain);
  if (opt.format == "json") {
    std::cout << to_json(verdict).dump() << "\n";
  } else if (const auto* r = std::get_if<Refuted>(&verdict)) {
    std::cout << "REFUTED\n" << model_to_text(r->countermodel);
  } else {
    std::cout << "ENTAILED-UP-TO " << opt.max_domain << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scoped meaning representations: indexed AMR to DRS and logic"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd, bool with_files = true) {
    if (with_files) {
      cmd->add_option("files", opt.files, "input files ('-' or none = stdin)");
    }
    cmd->add_option("--lexmap", opt.lexmap_path,
                    "concept/role mapping file (default: built-in table)");
    cmd->add_option("--format", opt.format,
                    "output format: box, clauses, or json")
        ->check(CLI::IsMember({"box", "clauses", "json"}));
    cmd->add_option("--accommodate", opt.accommodate,
                    "presupposition accommodation: none, global, local")
        ->check(CLI::IsMember({"none", "global", "local"}));
    cmd->add_option("--seed", opt.seed, "base seed for randomized restarts");
    cmd->add_option("--restarts", opt.restarts,
                    "hill-climbing restarts (default 16)");
    cmd->add_option("--max-domain", opt.max_domain,
                    "countermodel search bound (default 3)");
  };

  auto* cmd_parse =
      app.add_subcommand("parse", "parse documents and print them back");
  auto* cmd_validate =
      app.add_subcommand("validate", "check scoping constraints");
  auto* cmd_upgrade = app.add_subcommand(
      "upgrade", "index plain AMRs and rewrite polarity/universals");
  auto* cmd_drs =
      app.add_subcommand("drs", "translate to discourse representation");
  auto* cmd_clauses =
      app.add_subcommand("clauses", "translate and print flat clauses");
  auto* cmd_triples =
      app.add_subcommand("triples", "export evaluation triples");
  auto* cmd_match =
      app.add_subcommand("match", "score two triple files (P/R/F1)");
  auto* cmd_entail = app.add_subcommand(
      "entail", "bounded countermodel search between two documents");
  for (auto* cmd : {cmd_parse, cmd_validate, cmd_upgrade, cmd_drs, cmd_clauses,
                    cmd_triples, cmd_match, cmd_entail}) {
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_parse->parsed()) return run_parse(opt);
    if (cmd_validate->parsed()) return run_validate(opt);
    if (cmd_upgrade->parsed()) return run_upgrade(opt);
    if (cmd_drs->parsed()) return run_drs(opt, false);
    if (cmd_clauses->parsed()) return run_drs(opt, true);
    if (cmd_triples->parsed()) return run_triples(opt);
    if (cmd_match->parsed()) return run_match(opt);
    if (cmd_entail->parsed()) return run_entail(opt);
  } catch (const AmrError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
