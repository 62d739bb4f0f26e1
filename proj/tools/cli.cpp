#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "klcells/asymptotic.hpp"
#include "klcells/conjugacy.hpp"
#include "klcells/errors.hpp"
#include "klcells/hecke.hpp"
#include "klcells/json_io.hpp"

namespace klcells::cli {

using nlohmann::json;

std::vector<std::string> split_coordinates(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw std::invalid_argument("empty coordinate in '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("no coordinates given");
  return out;
}

namespace {

Lambda make_lambda(const RootDatum& d, const RunConfig& c) {
  return Lambda::parse(d, split_coordinates(c.lambda), c.tau);
}

std::string run_hecke(const RootDatum& d, const RunConfig& c) {
  if (c.expr.empty()) throw std::invalid_argument("hecke needs --expr with a query file");
  std::ifstream in(c.expr);
  if (!in) throw std::invalid_argument("cannot read " + c.expr);
  json queries;
  try {
    queries = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed query file: ") + e.what());
  }
  OrbitHecke h(d, make_lambda(d, c), c.max_len);
  auto element = [&](const json& j) { return hecke_from_json(h, j.dump()); };
  json results = json::array();
  try {
    for (const auto& q : queries.at("queries")) {
      std::string op = q.at("op").get<std::string>();
      HeckeElement value;
      if (op == "product") {
        value = h.multiply(element(q.at("left")), element(q.at("right")));
      } else if (op == "bar") {
        value = h.bar(element(q.at("arg")));
      } else if (op == "kl") {
        json term = {{"terms", {{{"word", q.at("word")}, {"lambda", q.at("lambda")}, {"poly", {{0, 1}}}}}}};
        value = h.kl_basis_element(element(term).begin()->first);
      } else if (op == "toC") {
        value = h.to_c_basis(element(q.at("arg")));
      } else {
        throw std::invalid_argument("unknown hecke operation '" + op + "'");
      }
      results.push_back({{"op", op}, {"value", json::parse(hecke_json(h, value))}});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("unexpected query shape: ") + e.what());
  }
  return json({{"bound", c.max_len}, {"results", results}}).dump(2) + "\n";
}

std::string run_cells(const RootDatum& d, const RunConfig& c) {
  OrbitCells oc = cells_of_W_times_orbit(d, make_lambda(d, c), c.max_len);
  const auto rep = static_cast<std::size_t>(oc.representative);
  json out = {{"type", d.type()},
              {"caseFlag", to_string(d.case_flag())},
              {"lambda", oc.orbit[rep].coordinate_strings()},
              {"wLambda", json::parse(cells_json(cell_listing(*oc.tables[rep], oc.w_lambda_cells[rep])))},
              {"orbitCells", json::parse(cells_json(cell_listing(oc)))}};
  if (c.with_table) out["structureTable"] = json::parse(structure_table_json(*oc.tables[rep]));
  return out.dump(2) + "\n";
}

}  // namespace

RunResult run(const RunConfig& c) {
  RunResult r;
  try {
    if (c.max_len < 0 || c.clevel < 0) throw std::invalid_argument("bounds must be nonnegative");
    RootDatum d = build_root_datum(c.type, parse_case(c.case_flag));
    if (c.verb == "describe") {
      r.output = datum_json(d);
    } else if (c.verb == "lambda") {
      r.output = geometry_json(LambdaGeometry(d, make_lambda(d, c)), c.clevel);
    } else if (c.verb == "hecke") {
      r.output = run_hecke(d, c);
    } else if (c.verb == "cells") {
      r.output = run_cells(d, c);
    } else if (c.verb == "verify") {
      VerificationReport rep = verify_theorem(d, make_lambda(d, c), c.max_len);
      r.output = report_json(rep);
      if (!rep.pass()) {
        bool only_stability = true;
        for (const auto& ch : rep.checks)
          if (!ch.pass && ch.name != "stabilized") only_stability = false;
        r.status = only_stability ? kTruncation : kInvariant;
      }
    } else {
      throw std::invalid_argument("unknown verb '" + c.verb + "'");
    }
  } catch (const TruncationError& e) {
    r = {kTruncation, error_json("truncation", e.what(), e.bound())};
  } catch (const UnsupportedError& e) {
    r = {kTruncation, error_json("unsupported", e.what())};
  } catch (const InvariantViolation& e) {
    r = {kInvariant, error_json("invariant-violation", e.what())};
  } catch (const std::invalid_argument& e) {
    r = {kUsage, error_json("usage", e.what())};
  }
  return r;
}

namespace {

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells of W x o and the unipotent classes they correspond to"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file with defaults for the options below");
  RunConfig c;
  app.add_option("--type", c.type, "A1, A1xA1, A2, B2 or G2")->required();
  app.add_option("--case", c.case_flag, "A (finite) or B (affine)")->capture_default_str();
  app.add_option("--lambda", c.lambda, "comma separated p/q coordinates")->capture_default_str();
  app.add_option("--tau", c.tau, "c' coordinate (case B)")->capture_default_str();
  app.add_option("--max-len", c.max_len, "length bound")->capture_default_str();
  app.add_option("--clevel", c.clevel, "level bound for listed roots")->capture_default_str();
  app.add_option("--out", c.out, "write the JSON here instead of stdout");
  app.add_option("--expr", c.expr, "query file for hecke");
  app.add_flag("--table", c.with_table, "include the structure table (cells)");
  const std::pair<const char*, const char*> verbs[] = {
      {"describe", "root datum, simple roots and delta"},
      {"lambda", "Pi_lambda, R_lambda and the Coxeter matrix of W_lambda"},
      {"hecke", "evaluate a query file in H_o"},
      {"cells", "cells of W x o and of W_lambda"},
      {"verify", "compare cells with unipotent classes"}};
  for (auto [verb, help] : verbs) app.add_subcommand(verb, help)->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.verb = app.get_subcommands().front()->get_name();
  RunResult r = run(c);
  try {
    if (c.out.empty()) {
      out << r.output;
    } else {
      write_atomically(c.out, r.output);
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (r.status != kOk) err << "klcells: exit status " << r.status << "\n";
  return r.status;
}

}  // namespace klcells::cli
