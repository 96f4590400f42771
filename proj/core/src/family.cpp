#include "quartjac/family.hpp"

#include <cmath>
#include <sstream>

namespace quartjac {

using nlohmann::json;

namespace {

Precision digits_to_bits(int digits) {
  return static_cast<Precision>(std::ceil(digits * 3.3219280948873626)) + 32;
}

// ball for a QVal with certified radius below 2^-prec
RealBall tight_ball(const QVal& v, Precision prec) {
  return refine_until(
      [&](Precision p) {
        RealBall b = v.ball(p);
        if (b.radius_log2() >= -prec)
          throw undecidable_error("coefficient ball too wide");
        return b;
      },
      prec + 32);
}

std::string radius_string(const RealBall& b) {
  mpq_class r = b.radius();
  if (r == 0) return "0";
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDU);
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3Re", t);
  mpfr_clear(t);
  return buf;
}

}  // namespace

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "Isomorphic";
    case IsoVerdict::NonIsomorphic: return "NonIsomorphic";
    case IsoVerdict::Undecided: return "Undecided";
  }
  return "?";
}

FamilyReport build_family_report(const JobSpec& job) {
  if (job.digits < 7) throw domain_error("digits must be >= 7");
  const Precision prec = job.precision_bits.value_or(digits_to_bits(job.digits));

  AlphaPipeline pipe = build_alpha_pipeline(job.m);
  const AlphaTable& table = pipe.table;
  OrderSpec order = OrderSpec::create(job.m);

  FamilyReport rep;
  rep.m = job.m;
  rep.h = pipe.classpoly.h;
  rep.f = pipe.classpoly.f;
  rep.g = pipe.g;
  rep.precision_bits = pipe.classpoly.precision;
  rep.digits = job.digits;

  for (const auto& e : table.entries) {
    AlphaReport ar;
    ar.d = e.d;
    ar.name = e.alpha->name;
    ar.minimal_recovered = e.alpha->minimal.has_value();
    ar.poly = ar.minimal_recovered ? *e.alpha->minimal : e.alpha->defining;
    ar.decimal = refine(*e.alpha, prec).decimal(job.digits);
    ComplexBall j = e.j;
    if (j.radius_log2() >= -prec)
      j = j_eval(tau_of_form(two_torsion_form(order, e.d), order, prec + 64), prec);
    ar.j_decimal = j.real().decimal(job.digits);
    rep.alphas.push_back(std::move(ar));
  }

  const auto& a1 = table.entry(1);
  rep.hyperelliptic = hyperelliptic_equation(a1.alpha);
  {
    RealBall c0 = tight_ball(rep.hyperelliptic.coefficients.front().second, prec);
    rep.hyper_c0_decimal = c0.decimal(job.digits);
    rep.hyper_c0_radius = radius_string(c0);
  }

  std::vector<std::pair<long, QuarticTriple>> triples;
  for (long d : table.quartic_divisors()) {
    const auto& ad = table.entry(d);
    QuarticBuild qb = quartic_coeffs(a1.alpha, ad.alpha);
    QuarticReport qr;
    qr.d = d;
    qr.equation = qb.equation;
    for (const auto& [name, val] : qb.equation.coefficients) {
      RealBall b = tight_ball(val, prec);
      qr.decimals.emplace_back(name, b.decimal(job.digits));
      qr.radii.emplace_back(name, radius_string(b));
    }
    qr.nonsingular = is_nonsingular(qb.triple);
    qr.twisting_nonzero = twisting_nonzero(a1.alpha, ad.alpha);
    qr.lattice = build_certificate(job.m, d);
    triples.emplace_back(d, qb.triple);
    rep.quartics.push_back(std::move(qr));
  }

  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = i + 1; j < triples.size(); ++j)
      rep.pairwise.push_back({triples[i].first, triples[j].first,
                              are_isomorphic(triples[i].second, triples[j].second)});

  rep.distinctness = distinctness_certificate(table);

  rep.notes = {
      "irreducibility of f over Q is assumed, not certified",
      "identification of the real roots of f with the j(A_d) is classical and "
      "checked here only through the root/divisor count",
      "Jacobian isomorphism is certified at the elliptic-lattice level; the "
      "genus-3 analytic map itself is not constructed",
  };
  for (const auto& ar : rep.alphas)
    if (!ar.minimal_recovered)
      rep.notes.push_back("minimal polynomial of " + ar.name +
                          " not recovered; squarefree defining polynomial reported");
  return rep;
}

json intpoly_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

IntPoly intpoly_from_json(const json& j) {
  std::vector<std::string> coeffs;
  for (const auto& v : j) coeffs.push_back(v.get<std::string>());
  return IntPoly::from_coeff_strings(coeffs);
}

json curve_equation_json(const CurveEquation& eq,
                         const std::vector<std::pair<std::string, std::string>>& decimals,
                         const std::vector<std::pair<std::string, std::string>>& radii) {
  json coeffs = json::object();
  auto decimal_of = [&](const std::string& name) -> std::string {
    for (const auto& [n, v] : decimals)
      if (n == name) return v;
    return "";
  };
  auto radius_of = [&](const std::string& name) -> std::string {
    for (const auto& [n, v] : radii)
      if (n == name) return v;
    return "";
  };
  for (const auto& [name, val] : eq.coefficients)
    coeffs[name] = {{"expr", val.expr()},
                    {"decimal", decimal_of(name)},
                    {"radius", radius_of(name)}};
  json minpolys = json::object();
  for (const auto& [name, poly] : eq.minpolys) minpolys[name] = intpoly_json(poly);
  return {{"kind", eq.kind == CurveEquation::Kind::Hyperelliptic ? "hyperelliptic" : "quartic"},
          {"coefficients", coeffs},
          {"minpolys", minpolys}};
}

json certificate_json(const IsoCertificate& cert) {
  json matrix = json::array();
  for (const auto& row : cert.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    matrix.push_back(r);
  }
  json coord = json::array();
  for (const auto& row : cert.coord) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    coord.push_back(r);
  }
  return {{"m", cert.m},
          {"d", cert.d},
          {"u", cert.u},
          {"v", cert.v},
          {"matrix", matrix},
          {"coord_matrix", coord},
          {"det", cert.det.get_str()},
          {"unscaled_det", cert.unscaled_det.get_str()},
          {"torsion",
           {{"T-left", cert.torsion.t_left},
            {"T-right", cert.torsion.t_right},
            {"S-diagonal",
             {{"S=1/2", {{"ok", cert.torsion.s_half.ok}, {"target", cert.torsion.s_half.target}}},
              {"S=omega/2",
               {{"ok", cert.torsion.s_omega.ok}, {"target", cert.torsion.s_omega.target}}}}}}}};
}

json distinctness_json(const DistinctnessCertificate& cert) {
  json records = json::array();
  for (const auto& r : cert.records)
    records.push_back({{"lhs-expr", r.lhs},
                       {"rhs-expr", r.rhs},
                       {"relation", r.relation},
                       {"certified-gap", r.certified_gap}});
  return {{"m", cert.m}, {"vacuous", cert.vacuous}, {"records", records}};
}

json report_json(const FamilyReport& rep) {
  json alphas = json::array();
  for (const auto& a : rep.alphas)
    alphas.push_back({{"d", a.d},
                      {"name", a.name},
                      {"minpoly", intpoly_json(a.poly)},
                      {"minimal_recovered", a.minimal_recovered},
                      {"decimal", a.decimal},
                      {"j", a.j_decimal}});
  json quartics = json::array();
  for (const auto& q : rep.quartics) {
    json eq = curve_equation_json(q.equation, q.decimals, q.radii);
    quartics.push_back({{"d", q.d},
                        {"equation", eq},
                        {"nonsingular", q.nonsingular},
                        {"twisting_nonzero", q.twisting_nonzero},
                        {"lattice_certificate", certificate_json(q.lattice)}});
  }
  json pairwise = json::array();
  for (const auto& p : rep.pairwise)
    pairwise.push_back({{"d1", p.d1}, {"d2", p.d2}, {"verdict", to_string(p.verdict)}});
  return {{"m", rep.m},
          {"h", rep.h},
          {"f", intpoly_json(rep.f)},
          {"g", intpoly_json(rep.g)},
          {"precision_bits", rep.precision_bits},
          {"digits", rep.digits},
          {"alpha_table", alphas},
          {"hyperelliptic",
           curve_equation_json(rep.hyperelliptic, {{"c0", rep.hyper_c0_decimal}},
                               {{"c0", rep.hyper_c0_radius}})},
          {"quartics", quartics},
          {"pairwise_isomorphism", pairwise},
          {"distinctness", distinctness_json(rep.distinctness)},
          {"notes", rep.notes}};
}

std::string report_text(const FamilyReport& rep) {
  std::ostringstream out;
  out << "m = " << rep.m << "   (discriminant " << -4 * rep.m << ", class number " << rep.h
      << ")\n\n";
  out << "f = " << rep.f.to_string() << "\n";
  out << "g = " << rep.g.to_string() << "\n\n";
  out << "alpha table (alpha_d = mu(sqrt(m)/d), one per odd divisor d):\n";
  for (const auto& a : rep.alphas) {
    out << "  " << a.name << " ~= " << a.decimal << "\n";
    out << "    "
        << (a.minimal_recovered ? "minimal polynomial: " : "defining polynomial (squarefree): ")
        << a.poly.to_string() << "\n";
    out << "    j(A_" << a.d << ") ~= " << a.j_decimal << "\n";
  }
  out << "\nhyperelliptic H(alpha_1):  W^2 = X^4 + Y^4 + c0,  1 = X^2 + Y^2\n";
  out << "  c0 = " << rep.hyperelliptic.coefficients.front().second.expr()
      << " ~= " << rep.hyper_c0_decimal << "\n";
  for (const auto& q : rep.quartics) {
    out << "\nquartic C(alpha_1, alpha_" << q.d
        << "):  X^4 + Y^4 + Z^4 + a*X^2*Y^2 + b*X^2*Z^2 + c*Y^2*Z^2 = 0\n";
    for (size_t i = 0; i < q.equation.coefficients.size(); ++i) {
      const auto& [name, val] = q.equation.coefficients[i];
      out << "  " << name << " = " << val.expr() << " ~= " << q.decimals[i].second << "\n";
    }
    out << "  nonsingular: " << (q.nonsingular ? "certified" : "NO") << "\n";
    out << "  twisting factor nonzero: " << (q.twisting_nonzero ? "certified" : "NO") << "\n";
    out << "  lattice certificate (m=" << q.lattice.m << ", d=" << q.lattice.d
        << "): u=" << q.lattice.u << " v=" << q.lattice.v
        << ", coordinate det = " << q.lattice.det.get_str() << ", torsion "
        << (q.lattice.torsion.all_ok() ? "verified (both S_1 candidates)" : "FAILED") << "\n";
  }
  out << "\npairwise quartic isomorphism tests:\n";
  if (rep.pairwise.empty()) out << "  (fewer than two quartics)\n";
  for (const auto& p : rep.pairwise)
    out << "  C(alpha_1, alpha_" << p.d1 << ") vs C(alpha_1, alpha_" << p.d2 << "): "
        << to_string(p.verdict) << "\n";
  out << "\ndistinctness certificate" << (rep.distinctness.vacuous ? " (vacuous)" : "") << ":\n";
  for (const auto& r : rep.distinctness.records)
    out << "  " << r.lhs << " " << r.relation << " " << r.rhs << "   (gap >= "
        << r.certified_gap << ")\n";
  out << "\nunchecked assumptions:\n";
  for (const auto& n : rep.notes) out << "  - " << n << "\n";
  return out.str();
}

namespace {

QVal parse_value(const std::string& tok) {
  auto pm = tok.find("+-");
  auto parse_decimal = [](const std::string& s) -> mpq_class {
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };
  try {
    if (pm != std::string::npos) {
      mpq_class mid = parse_decimal(tok.substr(0, pm));
      mpq_class rad = parse_decimal(tok.substr(pm + 2));
      if (rad < 0) throw domain_error("negative radius");
      if (rad == 0) return QVal::exact(mid, tok);
      mpq_class lo = mid - rad, hi = mid + rad;
      return QVal::algebraic(
          [lo, hi](Precision p) { return RealBall::from_interval(lo, hi, p); }, tok);
    }
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
      mpq_class q(tok);
      q.canonicalize();
      return QVal::exact(q, tok);
    }
    return QVal::exact(parse_decimal(tok), tok);
  } catch (const std::invalid_argument&) {
    throw domain_error("cannot parse coefficient '" + tok + "'");
  }
}

}  // namespace

QuarticTriple parse_triple(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw domain_error("triple must have exactly three entries");
  return QuarticTriple{parse_value(parts[0]), parse_value(parts[1]), parse_value(parts[2])};
}

}  // namespace quartjac
