#pragma once

#include <string>
#include <vector>

#include "klcells/asymptotic.hpp"
#include "klcells/conjugacy.hpp"
#include "klcells/hecke.hpp"
#include "klcells/lambda.hpp"
#include "klcells/lambda_geometry.hpp"
#include "klcells/root_datum.hpp"
#include "klcells/weyl.hpp"

// JSON documents are exchanged as strings; keys are emitted sorted, so equal
// values always give identical text. Readers re-validate what they parse and
// throw std::invalid_argument on inconsistent input.

namespace klcells {

std::string datum_json(const RootDatum& d);
/// Rebuilds the datum from type and caseFlag and checks the other fields.
RootDatum datum_from_json(const std::string& text);

std::string lambda_json(const Lambda& lambda);
Lambda lambda_from_json(const RootDatum& d, const std::string& text);

/// {word, linearPart, translation}.
std::string weyl_json(const RootDatum& d, const WeylElement& w);
WeylElement weyl_from_json(const RootDatum& d, const std::string& text);

/// Roots of R_lambda up to the level bound, Pi_lambda, the Coxeter matrix
/// (0 for infinity) and Omega-bar when lambda has tau = 0.
std::string geometry_json(const LambdaGeometry& geom, int level_bound);
LambdaGeometry geometry_from_json(const RootDatum& d, const std::string& text);

/// {orbit, bound, terms: [{word, lambda, poly: [[exp, coeff], ...]}]}.
std::string hecke_json(const OrbitHecke& h, const HeckeElement& a);
HeckeElement hecke_from_json(const OrbitHecke& h, const std::string& text);

struct CellMember {
  std::vector<int> word;
  std::vector<std::string> lambda;
  friend bool operator==(const CellMember&, const CellMember&) = default;
};

struct CellEntry {
  int id = 0;
  int a_value = 0;
  std::vector<CellMember> members;
  friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

/// A cell partition as plain data: words are in the generators of the table
/// the partition lives in.
struct CellListing {
  int bound = 0;
  bool stabilized = false;
  std::vector<CellEntry> two_sided;
  std::vector<CellEntry> left;
  std::vector<CellEntry> right;
  friend bool operator==(const CellListing&, const CellListing&) = default;
};

/// Cells of W_lambda; words in Pi_lambda.
CellListing cell_listing(const StructureTable& table, const CellPartition& p);
/// Cells of W x o; words in the simple reflections of W.
CellListing cell_listing(const OrbitCells& oc);

std::string cells_json(const CellListing& c);
CellListing cells_from_json(const std::string& text);

/// Nonzero r^z_{x,y} for x, y in the support, z anywhere.
std::string structure_table_json(const StructureTable& table);

std::string report_json(const VerificationReport& r);
VerificationReport report_from_json(const RootDatum& d, const std::string& text);

/// {error: {kind, message, bound?}}.
std::string error_json(const std::string& kind, const std::string& message, int bound = -1);

}  // namespace klcells
