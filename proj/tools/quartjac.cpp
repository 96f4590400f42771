// Command-line driver: class polynomials, curve families with isomorphic
// Jacobians, quartic isomorphism tests, and lattice-level certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quartjac/family.hpp"

namespace {

using namespace quartjac;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInternal = 4;

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (path) {
    std::ofstream out(*path);
    if (!out) throw domain_error("cannot open output file " + *path);
    out << text;
  } else {
    std::cout << text;
  }
}

int cmd_classpoly(long m) {
  ClassPolyResult r = class_polynomial(OrderSpec::create(m));
  std::cout << r.f.to_string() << "\n";
  return kExitOk;
}

int cmd_family(const JobSpec& job) {
  FamilyReport rep = build_family_report(job);
  if (job.format == JobSpec::Format::Json)
    write_output(report_json(rep).dump(2) + "\n", job.out_path);
  else
    write_output(report_text(rep), job.out_path);
  for (const auto& q : rep.quartics)
    if (!q.nonsingular || !q.twisting_nonzero || !q.lattice.torsion.all_ok())
      return kExitInternal;
  return kExitOk;
}

json invariant_json(const StrictClassInvariant& inv) {
  json squares = json::array();
  for (const auto& s : inv.squares)
    squares.push_back(s.is_exact() ? s.rational().get_str() : s.ball(96).decimal(24));
  return {{"squares", squares},
          {"product", inv.product.is_exact() ? inv.product.rational().get_str()
                                             : inv.product.ball(96).decimal(24)}};
}

int cmd_iso(const std::string& t1s, const std::string& t2s,
            const std::optional<std::string>& out, bool json_format) {
  QuarticTriple t1 = parse_triple(t1s);
  QuarticTriple t2 = parse_triple(t2s);
  if (!is_nonsingular(t1) || !is_nonsingular(t2)) {
    std::cerr << "error: input quartic is singular\n";
    return kExitValidation;
  }
  IsoVerdict v = are_isomorphic(t1, t2);
  json doc = {{"verdict", to_string(v)}, {"descriptors", json::array()}};
  for (const QuarticTriple* t : {&t1, &t2}) {
    IsoClassDescriptor d = descriptor(*t);
    json classes = json::array();
    for (const auto& inv : d.strict_classes) classes.push_back(invariant_json(inv));
    doc["descriptors"].push_back(classes);
  }
  if (json_format) {
    write_output(doc.dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    text << to_string(v) << "\n";
    for (int i = 0; i < 2; ++i) {
      text << "curve " << i + 1 << " strict classes:\n";
      for (const auto& inv : doc["descriptors"][i])
        text << "  squares {" << inv["squares"][0].get<std::string>() << ", "
             << inv["squares"][1].get<std::string>() << ", "
             << inv["squares"][2].get<std::string>() << "}, product "
             << inv["product"].get<std::string>() << "\n";
    }
    write_output(text.str(), out);
  }
  return kExitOk;
}

int cmd_certify(long m, long d, const std::optional<std::string>& out) {
  IsoCertificate cert = build_certificate(m, d);
  write_output(certificate_json(cert).dump(2) + "\n", out);
  return cert.torsion.all_ok() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit plane quartics and a hyperelliptic curve sharing an unpolarized Jacobian"};
  app.require_subcommand(1);

  long m = 0, d = 0;
  JobSpec job;
  std::string format = "text";
  std::string out_path;
  std::string triple1, triple2;

  auto* sub_classpoly = app.add_subcommand("classpoly", "Hilbert class polynomial for Z[sqrt(-m)]");
  sub_classpoly->add_option("--m", m, "even squarefree m >= 2")->required();

  auto* sub_family = app.add_subcommand("family", "full curve family with certificates");
  sub_family->add_option("--m", m, "even squarefree m >= 2")->required();
  sub_family->add_option("--digits", job.digits, "decimal digits to print (>= 7)");
  long precision_bits = 0;
  auto* prec_opt = sub_family->add_option("--precision-bits", precision_bits,
                                          "override the working precision");
  sub_family->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub_family->add_option("--out", out_path, "write the report to a file");

  auto* sub_iso = app.add_subcommand("iso", "decide isomorphism of Q(a,b,c) quartics");
  sub_iso->add_option("triple1", triple1, "a,b,c (rationals, decimals, or mid+-rad)")->required();
  sub_iso->add_option("triple2", triple2, "a,b,c")->required();
  sub_iso->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub_iso->add_option("--out", out_path, "write the verdict to a file");

  auto* sub_certify = app.add_subcommand("certify", "lattice-level Jacobian isomorphism certificate");
  sub_certify->add_option("--m", m, "even squarefree m >= 2")->required();
  sub_certify->add_option("--d", d, "odd positive divisor of m")->required();
  sub_certify->add_option("--out", out_path, "write the certificate to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    std::optional<std::string> out =
        out_path.empty() ? std::nullopt : std::make_optional(out_path);
    if (sub_classpoly->parsed()) return cmd_classpoly(m);
    if (sub_family->parsed()) {
      job.m = m;
      if (prec_opt->count() > 0) job.precision_bits = precision_bits;
      job.format = format == "json" ? JobSpec::Format::Json : JobSpec::Format::Text;
      job.out_path = out;
      return cmd_family(job);
    }
    if (sub_iso->parsed()) return cmd_iso(triple1, triple2, out, format == "json");
    if (sub_certify->parsed()) return cmd_certify(m, d, out);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const precision_exhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const recognition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitValidation;
}
