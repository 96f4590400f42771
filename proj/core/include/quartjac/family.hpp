#ifndef QUARTJAC_FAMILY_HPP
#define QUARTJAC_FAMILY_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "quartjac/latticecert.hpp"
#include "quartjac/quartic_iso.hpp"

namespace quartjac {

struct JobSpec {
  long m = 0;
  int digits = 30;  // decimal digits in printed approximations, >= 7
  std::optional<Precision> precision_bits;
  enum class Format { Text, Json };
  Format format = Format::Text;
  std::optional<std::string> out_path;
};

struct AlphaReport {
  long d = 1;
  IntPoly poly;  // minimal polynomial, or the squarefree defining poly
  bool minimal_recovered = false;
  std::string name;
  std::string decimal;
  std::string j_decimal;
};

struct QuarticReport {
  long d = 1;
  CurveEquation equation;
  std::vector<std::pair<std::string, std::string>> decimals;  // name -> pinned decimal
  std::vector<std::pair<std::string, std::string>> radii;     // name -> radius bound
  bool nonsingular = false;
  bool twisting_nonzero = false;
  IsoCertificate lattice;
};

struct PairVerdict {
  long d1 = 0, d2 = 0;
  IsoVerdict verdict = IsoVerdict::Undecided;
};

struct FamilyReport {
  long m = 0;
  long h = 0;
  IntPoly f, g;
  Precision precision_bits = 0;  // precision at which f was rounded
  int digits = 30;
  std::vector<AlphaReport> alphas;
  CurveEquation hyperelliptic;
  std::string hyper_c0_decimal, hyper_c0_radius;
  std::vector<QuarticReport> quartics;
  std::vector<PairVerdict> pairwise;
  DistinctnessCertificate distinctness;
  std::vector<std::string> notes;
};

// Runs the full pipeline for one m.
FamilyReport build_family_report(const JobSpec& job);

std::string report_text(const FamilyReport& report);
nlohmann::json report_json(const FamilyReport& report);

nlohmann::json intpoly_json(const IntPoly& p);
IntPoly intpoly_from_json(const nlohmann::json& j);
nlohmann::json curve_equation_json(const CurveEquation& eq,
                                   const std::vector<std::pair<std::string, std::string>>& decimals,
                                   const std::vector<std::pair<std::string, std::string>>& radii);
nlohmann::json certificate_json(const IsoCertificate& cert);
nlohmann::json distinctness_json(const DistinctnessCertificate& cert);

std::string to_string(IsoVerdict v);

// "a,b,c" with entries given as integers, fractions p/q, exact decimals, or
// midpoint+-radius balls like 1.25+-0.001.
QuarticTriple parse_triple(const std::string& text);

}  // namespace quartjac

#endif
