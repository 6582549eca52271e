#include "apolar/report.hpp"

#include <sstream>

#include "apolar/apolar.hpp"
#include "apolar/decomp.hpp"
#include "apolar/errors.hpp"
#include "apolar/orbits.hpp"
#include "apolar/parse.hpp"
#include "apolar/raysum.hpp"
#include "apolar/scheme.hpp"

namespace apolar {

namespace {

using nlohmann::json;

json num(long v) { return std::to_string(v); }

json int_vector(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(std::to_string(x));
  return a;
}

json generator_list(const std::vector<Operator>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.str());
  return a;
}

}  // namespace

json build_report(const DpPoly& f, const ReportOptions& opts) {
  json out;
  out["input"] = f.str();
  out["field"] = f.field().str();
  out["vars"] = num(f.vars());
  out["degree"] = f.is_zero() ? json("-inf") : num(f.degree());

  if (f.is_zero())
    throw ZeroInputError("the zero polynomial has no invariants to report");

  if (opts.hilbert || opts.decomposition) {
    out["socle_degree"] = num(f.degree());
    std::vector<int> h = hilbert_function(f);
    out["hilbert"] = int_vector(h);
    long total = 0;
    for (int x : h) total += x;
    out["apolar_degree"] = num(total);
  }
  if (opts.decomposition && f.degree() >= 1) {
    json rows = json::array();
    SymDecomp dec = symmetric_decomposition(f);
    for (const auto& row : dec.rows) rows.push_back(int_vector(row));
    out["symmetric_decomposition"] = rows;
    json flt = json::array();
    LinearFiltration filtration = linear_filtration(f);
    for (const auto& space : filtration.spaces) {
      json basis = json::array();
      for (const auto& l : space) basis.push_back(l.str());
      flt.push_back(basis);
    }
    out["linear_filtration"] = flt;
  }
  if (opts.annihilator) {
    out["annihilator_generators"] = generator_list(annihilator(f).generators());
  }
  if (opts.standard_form && f.degree() >= 1) {
    json sf;
    StandardFormCheck check = is_standard_form(f);
    sf["is_standard"] = check.is_standard;
    if (check.violating_degree)
      sf["violating_degree"] = num(*check.violating_degree);
    sf["normalized"] = standard_form(f).g.str();
    out["standard_form"] = sf;
  }
  if (opts.orbit) {
    OrbitTangent tangent = orbit_tangent(f);
    json orb;
    orb["dim_tangent"] = num(tangent.dim_tangent);
    orb["dim_unipotent"] = num(tangent.dim_unipotent);
    out["orbit"] = orb;
  }
  if (opts.hs_tangent) {
    HSchemeCertificate cert = hs_tangent_dim(f);
    json hs;
    hs["n"] = num(cert.n);
    hs["r"] = num(cert.r);
    hs["tangent_dim"] = num(cert.tangent_dim);
    hs["tangent_minimal"] = cert.tangent_minimal;
    hs["hilbert_of_I2"] = int_vector(cert.hilbert_of_I2);
    out["hs_tangent"] = hs;
  }
  if (opts.hilbert && f.is_homogeneous() && f.degree() >= 1) {
    json ranks = json::array();
    for (int a = 0; a <= f.degree(); ++a)
      ranks.push_back(num(catalecticant(f, a).rank));
    out["catalecticant_ranks"] = ranks;
  }
  if (opts.cat_degree) {
    Catalecticant cat = catalecticant(f, *opts.cat_degree);
    json c;
    c["a"] = num(cat.a);
    c["rank"] = num(cat.rank);
    json rows = json::array();
    for (const auto& row : cat.matrix) {
      json r = json::array();
      for (const auto& s : row) r.push_back(s.str());
      rows.push_back(r);
    }
    c["matrix"] = rows;
    out["catalecticant"] = c;
  }
  if (opts.secant_r) {
    SecantVerdict v = secant_membership(f, *opts.secant_r);
    json s;
    s["r"] = num(*opts.secant_r);
    s["middle_rank"] = num(v.middle_rank);
    s["rank_at_most_r"] = v.rank_at_most_r;
    s["proven_sharp"] = v.proven_sharp;
    out["secant"] = s;
  }
  if (opts.gm_limit) {
    TruncatedIdeal lim = gm_limit(f);
    json g;
    g["generators"] = generator_list(lim.generators());
    g["colength"] = num(lim.quotient_dimension());
    out["gm_limit"] = g;
  }
  if ((opts.ray || opts.flatness) && opts.ray_partial) {
    Operator partial = parse_operator(*opts.ray_partial, f.vars(), f.field());
    if (opts.ray) {
      RaySumSpec spec{f, partial, opts.ray_degree};
      DpPoly g = ray_sum(spec);
      json r;
      r["polynomial"] = g.str();
      r["hilbert"] = int_vector(hilbert_function(g));
      r["annihilator_matches_formula"] =
          ray_sum_annihilator(spec).equals(annihilator(g, g.degree() + 2));
      HSchemeCertificate cert = hs_tangent_dim(g);
      r["tangent_dim"] = num(cert.tangent_dim);
      r["tangent_minimal"] = cert.tangent_minimal;
      out["ray_sum"] = r;
    }
    if (opts.flatness) {
      FlatnessVerdict v = flatness_criterion(f, partial);
      json fl;
      fl["holds"] = v.holds;
      if (v.witness) fl["witness"] = v.witness->str();
      out["flatness"] = fl;
    }
  }
  return out;
}

namespace {

void render_value(std::ostringstream& os, const std::string& key,
                  const json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render_value(os, k, sub, indent + 2);
  } else if (v.is_array()) {
    os << pad << key << ": " << v.dump() << "\n";
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) render_value(os, k, v, 0);
  return os.str();
}

}  // namespace apolar
