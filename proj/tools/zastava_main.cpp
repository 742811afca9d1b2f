#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zastava/config.hpp"
#include "zastava/oracles.hpp"
#include "zastava/semiinfinite.hpp"
#include "zastava/stalks.hpp"

using namespace zastava;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVConvention =
    "v-convention: v^m stands for the m-th power of the half-twist-and-shift; "
    "a summand W(i)[2i] contributes dim(W)*v^(2i), a graded piece W_n contributes dim(W_n)*v^(-n)";

struct Options {
  std::string config_path;
  std::string type;
  int rank = 0;
  std::string cartan;
  std::string product;
  std::string levi = "";
  std::string format = "pretty";
  bool verify = false;
};

Vec parse_vec(const std::string& s) {
  Vec out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> parse_matrix(const std::string& s) {
  std::vector<Vec> out;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) out.push_back(parse_vec(row));
  return out;
}

std::vector<FactorSpec> parse_product(const std::string& s) {
  std::vector<FactorSpec> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2) throw std::invalid_argument("bad product factor: " + item);
    out.push_back({item[0], std::stoi(item.substr(1))});
  }
  return out;
}

RootDatum make_datum(const Options& o) {
  if (!o.config_path.empty()) return root_datum_from_json(load_json_file(o.config_path));
  if (!o.cartan.empty()) return build_root_datum(parse_matrix(o.cartan));
  if (!o.product.empty()) return build_product_datum(parse_product(o.product));
  if (!o.type.empty()) {
    if (o.type.size() != 1) throw std::invalid_argument("--type expects a single letter A-G");
    return build_root_datum(o.type[0], o.rank);
  }
  throw std::invalid_argument("no root datum given: use --config, --type/--rank, --product or --cartan");
}

std::vector<int> make_levi(const Options& o, const RootDatum& rd) {
  if (!o.config_path.empty()) {
    auto j = load_json_file(o.config_path);
    if (j.contains("levi")) return levi_from_json(j, rd);
  }
  std::vector<int> levi;
  for (Int x : parse_vec(o.levi)) {
    if (x < 1 || x > rd.rank) throw std::invalid_argument("levi index out of range (1-based)");
    levi.push_back((int)x - 1);
  }
  return levi;
}

std::string vec_str(const Vec& v) { return detail::vec_to_string(v); }

std::string poly_str(const StalkPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (auto& [e, c] : p.coeffs) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += e == 1 ? "v" : "v^" + std::to_string(e);
  }
  return out;
}

ordered_json poly_json(const StalkPolynomial& p) {
  ordered_json j = ordered_json::object();
  for (auto& [e, c] : p.coeffs) j[std::to_string(e)] = c;
  return j;
}

ordered_json partition_json(const VectorPartition& p) {
  ordered_json arr = ordered_json::array();
  for (auto& [part, n] : p.parts) arr.push_back(ordered_json::array({part, n}));
  return arr;
}

std::string partition_str(const VectorPartition& p) {
  if (p.parts.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (auto& [part, n] : p.parts) {
    if (!first) out += ", ";
    first = false;
    out += vec_str(part);
    if (n > 1) out += "x" + std::to_string(n);
  }
  return out + "}";
}

void emit(const Options& o, const ordered_json& j, const std::string& pretty,
          const std::string& csv) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else if (o.format == "csv")
    std::cout << csv;
  else
    std::cout << pretty;
}

int verified_note(const Options& o, bool ok, const std::string& what) {
  if (!o.verify) return 0;
  if (o.format == "pretty") std::cout << "verify: " << (ok ? "ok" : "MISMATCH") << " (" << what << ")\n";
  return ok ? 0 : 3;
}

VectorPartition parse_decomposition(const ParabolicData& pd, const Theta& theta, const std::string& spec) {
  // "1,0:2;0,1:1" -> parts (1,0) x2, (0,1) x1
  VectorPartition A;
  A.total = theta;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    Int n = 1;
    std::string head = item;
    if (colon != std::string::npos) {
      head = item.substr(0, colon);
      n = std::stoll(item.substr(colon + 1));
    }
    A.parts.push_back({parse_vec(head), n});
  }
  std::sort(A.parts.begin(), A.parts.end(),
            [](auto& a, auto& b) { return graded_lex_less(b.first, a.first); });
  for (size_t i = 0; i + 1 < A.parts.size(); ++i)
    if (A.parts[i].first == A.parts[i + 1].first)
      throw std::invalid_argument("decomposition parts must be distinct (use :n for multiplicity)");
  (void)pd;
  return A;
}

// ---------------------------------------------------------------- roots

int cmd_roots(const Options& o) {
  RootDatum rd = make_datum(o);
  ordered_json j;
  j["datum"] = rd.label;
  j["rank"] = rd.rank;
  j["torus_rank"] = rd.torus_rank;
  j["cartan"] = rd.cartan;
  j["positive_coroots"] = ordered_json::array();
  for (auto& g : rd.positive_coroots) j["positive_coroots"].push_back(g.c);
  j["positive_roots"] = ordered_json::array();
  for (auto& g : rd.positive_roots) j["positive_roots"].push_back(g.c);

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  rank: " << rd.rank;
  if (rd.torus_rank) pretty << "  torus rank: " << rd.torus_rank;
  pretty << "\ncartan <alpha_i, acheck_j>:\n";
  for (auto& row : rd.cartan) pretty << "  " << vec_str(row) << "\n";
  pretty << "positive coroots (" << rd.positive_coroots.size() << "):\n";
  for (auto& g : rd.positive_coroots) pretty << "  " << vec_str(g.c) << "\n";
  pretty << "positive roots (" << rd.positive_roots.size() << "):\n";
  for (auto& g : rd.positive_roots) pretty << "  " << vec_str(g.c) << "\n";

  csv << "kind,coords\n";
  for (auto& g : rd.positive_coroots) csv << "coroot,\"" << vec_str(g.c) << "\"\n";
  for (auto& g : rd.positive_roots) csv << "root,\"" << vec_str(g.c) << "\"\n";

  emit(o, j, pretty.str(), csv.str());

  bool ok = rd.positive_coroots.size() == rd.positive_roots.size();
  for (int i = 0; ok && i < rd.rank; ++i) {
    std::multiset<Vec> image, expect;
    for (auto& g : rd.positive_coroots) image.insert(rd.reflect(g, i).c);
    for (auto& g : rd.positive_coroots) expect.insert(g.c);
    expect.erase(expect.find(rd.simple_coroot(i).c));
    expect.insert((Int(-1) * rd.simple_coroot(i)).c);
    ok = image == expect;
  }
  return verified_note(o, ok, "reflection closure");
}

// ------------------------------------------------------------- parabolic

int cmd_parabolic(const Options& o) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["quotient_rank"] = pd.quotient_rank();
  j["coroot_projections"] = ordered_json::array();
  for (auto& t : pd.coroot_projections()) j["coroot_projections"].push_back(t);
  j["flat_of_units"] = ordered_json::array();
  for (int k = 0; k < pd.quotient_rank(); ++k) {
    Theta unit(pd.quotient_rank(), 0);
    unit[k] = 1;
    j["flat_of_units"].push_back(pd.flat(unit).c);
  }
  j["two_rho_levi"] = pd.two_rho_levi().c;
  j["wall_vector"] = wall_vector(pd, 1).c;

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string() << "  quotient rank: "
         << pd.quotient_rank() << "\n";
  pretty << "coroot projections:";
  for (auto& t : pd.coroot_projections()) pretty << " " << vec_str(t);
  pretty << "\nflat of unit vectors:";
  for (int k = 0; k < pd.quotient_rank(); ++k) {
    Theta unit(pd.quotient_rank(), 0);
    unit[k] = 1;
    pretty << " " << vec_str(pd.flat(unit).c);
  }
  pretty << "\n2*rho of the Levi: " << vec_str(pd.two_rho_levi().c) << "\n";
  pretty << "minimal wall vector: " << vec_str(wall_vector(pd, 1).c) << "\n";

  csv << "key,value\n";
  csv << "quotient_rank," << pd.quotient_rank() << "\n";

  emit(o, j, pretty.str(), csv.str());

  bool ok = true;
  for (int k = 0; k < pd.quotient_rank() && ok; ++k) {
    Theta unit(pd.quotient_rank(), 0);
    unit[k] = 1;
    ok = pd.is_levi_dominant(pd.flat(unit)) && pd.project(pd.flat(unit)) == unit;
  }
  return verified_note(o, ok, "flat lifts are Levi-dominant");
}

// ------------------------------------------------------------ partitions

int cmd_partitions(const Options& o, const std::string& theta_s) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  Theta theta = parse_vec(theta_s);
  auto decs = enumerate_decompositions(pd, theta);
  auto parts = enumerate_coroot_partitions(pd, theta);

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["theta"] = theta;
  j["decompositions"] = {{"count", decs.size()}, {"items", ordered_json::array()}};
  for (auto& d : decs) j["decompositions"]["items"].push_back(partition_json(d));
  j["coroot_partitions"] = {{"count", parts.size()}, {"items", ordered_json::array()}};
  for (auto& p : parts) j["coroot_partitions"]["items"].push_back(partition_json(p));
  auto pp = principal_partition(pd, theta);
  j["principal_partition"] = pp ? partition_json(*pp) : ordered_json(nullptr);

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string() << "  theta: " << vec_str(theta)
         << "\n";
  pretty << "decompositions into positive parts: " << decs.size() << "\n";
  for (auto& d : decs) pretty << "  " << partition_str(d) << "  |.| = " << d.size() << "\n";
  pretty << "partitions into coroot projections: " << parts.size() << "\n";
  for (auto& p : parts) pretty << "  " << partition_str(p) << "  |.| = " << p.size() << "\n";
  pretty << "principal partition: " << (pp ? partition_str(*pp) : std::string("absent")) << "\n";

  csv << "kind,parts,size\n";
  for (auto& d : decs) csv << "decomposition,\"" << partition_str(d) << "\"," << d.size() << "\n";
  for (auto& p : parts) csv << "partition,\"" << partition_str(p) << "\"," << p.size() << "\n";

  emit(o, j, pretty.str(), csv.str());

  bool ok = true;
  if (pd.levi.empty()) ok = (Int)parts.size() == oracle::kostant_pf(rd, pd.lift(theta).c);
  return verified_note(o, ok, pd.levi.empty() ? "Kostant recursion" : "no Borel oracle for this Levi");
}

// ----------------------------------------------------------------- irrep

int cmd_irrep(const Options& o, const std::string& hw_s, bool on_levi) {
  RootDatum rd = make_datum(o);
  std::vector<int> tag = on_levi ? make_levi(o, rd) : rd.all_indices();
  Coweight hw{parse_vec(hw_s)};
  hw.c.resize(rd.total_rank(), 0);
  Character c = irreducible_character(rd, tag, hw);

  ordered_json j;
  j["datum"] = rd.label;
  j["highest_weight"] = hw.c;
  j["dim"] = c.dim();
  j["weights"] = ordered_json::array();
  for (auto& [w, m] : c.weights) j["weights"].push_back({{"weight", w.c}, {"mult", m}});

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  highest weight: " << vec_str(hw.c) << "  dim: " << c.dim()
         << "\n";
  for (auto& [w, m] : c.weights) pretty << "  " << vec_str(w.c) << "  x" << m << "\n";
  csv << "weight,mult\n";
  for (auto& [w, m] : c.weights) csv << "\"" << vec_str(w.c) << "\"," << m << "\n";

  emit(o, j, pretty.str(), csv.str());
  return verified_note(o, c.dim() == weyl_dimension(rd, tag, hw), "Weyl dimension formula");
}

// ---------------------------------------------------------------- branch

int cmd_branch(const Options& o, const std::string& hw_s) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  Coweight hw{parse_vec(hw_s)};
  hw.c.resize(rd.total_rank(), 0);
  auto dec = branch_to_levi(pd, hw);

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["highest_weight"] = hw.c;
  j["constituents"] = ordered_json::array();
  for (auto& [w, m] : dec) j["constituents"].push_back({{"highest_weight", w.c}, {"mult", m}});

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string() << "  highest weight: "
         << vec_str(hw.c) << "\n";
  for (auto& [w, m] : dec)
    pretty << "  " << vec_str(w.c) << "  x" << m << "  (dim " << weyl_dimension(rd, pd.levi, w)
           << ")\n";
  csv << "highest_weight,mult\n";
  for (auto& [w, m] : dec) csv << "\"" << vec_str(w.c) << "\"," << m << "\n";

  emit(o, j, pretty.str(), csv.str());

  Int total = 0;
  for (auto& [w, m] : dec) total += m * weyl_dimension(rd, pd.levi, w);
  return verified_note(o, total == weyl_dimension(rd, rd.all_indices(), hw),
                       "constituent dimensions sum to the ambient dimension");
}

// ------------------------------------------------------------------- sym

int cmd_sym(const Options& o, const std::string& hw_s, bool of_u, Int n, const std::string& theta_s) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  Character base;
  if (of_u) {
    base = u_module_character(pd);
  } else {
    Coweight hw{parse_vec(hw_s)};
    hw.c.resize(rd.total_rank(), 0);
    base = irreducible_character(rd, rd.all_indices(), hw);
  }
  Character s = sym_power(rd, base, n);
  if (!theta_s.empty()) s = theta_component(pd, s, parse_vec(theta_s));

  ordered_json j;
  j["datum"] = rd.label;
  j["n"] = n;
  j["dim"] = s.dim();
  j["weights"] = ordered_json::array();
  for (auto& [w, m] : s.weights) j["weights"].push_back({{"weight", w.c}, {"mult", m}});

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  Sym^" << n << (of_u ? " of the dual nilradical" : "")
         << "  dim: " << s.dim() << "\n";
  for (auto& [w, m] : s.weights) pretty << "  " << vec_str(w.c) << "  x" << m << "\n";
  csv << "weight,mult\n";
  for (auto& [w, m] : s.weights) csv << "\"" << vec_str(w.c) << "\"," << m << "\n";

  emit(o, j, pretty.str(), csv.str());

  bool ok = true;
  std::string what = "oracle guards exceeded, skipped";
  if (base.dim() <= 8 && n <= 5) {
    Character brute = oracle::brute_sym_power(rd, base, n);
    if (!theta_s.empty()) brute = theta_component(pd, brute, parse_vec(theta_s));
    ok = s == brute;
    what = "brute-force multiset enumeration";
  }
  return verified_note(o, ok, what);
}

// -------------------------------------------------------------- u-module

int cmd_u_module(const Options& o) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  auto u = u_module(pd);

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["total_dim"] = u.total_dim();
  j["components"] = ordered_json::array();
  for (auto& [t, c] : u.components) {
    ordered_json comp;
    comp["theta"] = t;
    comp["dim"] = c.dim();
    comp["weights"] = ordered_json::array();
    for (auto& [w, m] : c.weights) comp["weights"].push_back(w.c);
    auto dec = decompose(rd, c);
    comp["highest_weight"] = dec.at(0).first.c;
    j["components"].push_back(comp);
  }

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string() << "  dim u: " << u.total_dim()
         << "\n";
  for (auto& [t, c] : u.components) {
    pretty << "theta " << vec_str(t) << "  dim " << c.dim() << "  weights:";
    for (auto& [w, m] : c.weights) pretty << " " << vec_str(w.c);
    pretty << "\n";
  }
  csv << "theta,dim\n";
  for (auto& [t, c] : u.components) csv << "\"" << vec_str(t) << "\"," << c.dim() << "\n";

  emit(o, j, pretty.str(), csv.str());
  return verified_note(o, (size_t)u.total_dim() == pd.coroots_outside_levi().size(),
                       "weights are exactly the coroots outside the Levi");
}

// -------------------------------------------------------------------- nf

int cmd_nf(const Options& o, const std::string& sym_theta, Int sym_i, bool signed_conv) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  auto nf = n_f(pd);

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["entries"] = ordered_json::array();
  for (auto& [t, g] : nf.by_theta)
    for (auto& [d, m] : g) j["entries"].push_back({{"theta", t}, {"degree", d}, {"dim", m}});

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string()
         << "  kernel of f inside the dual nilradical\n";
  for (auto& [t, g] : nf.by_theta)
    for (auto& [d, m] : g)
      pretty << "  theta " << vec_str(t) << "  degree " << d << "  dim " << m << "\n";
  csv << "theta,degree,dim\n";
  for (auto& [t, g] : nf.by_theta)
    for (auto& [d, m] : g) csv << "\"" << vec_str(t) << "\"," << d << "," << m << "\n";

  if (!sym_theta.empty()) {
    Theta t = parse_vec(sym_theta);
    auto conv = signed_conv ? SymConvention::Signed : SymConvention::Plain;
    GradedDims s = sym_n_f(pd, t, sym_i, conv);
    j["sym"] = {{"theta", t}, {"i", sym_i}, {"signed", signed_conv}, {"dims", ordered_json::object()}};
    for (auto& [d, m] : s) j["sym"]["dims"][std::to_string(d)] = m;
    pretty << "Sym^" << sym_i << " at theta " << vec_str(t)
           << (signed_conv ? " (signed)" : " (plain)") << ":";
    if (s.empty()) pretty << " 0";
    for (auto& [d, m] : s) pretty << " [degree " << d << "] " << m;
    pretty << "\n";
  }

  emit(o, j, pretty.str(), csv.str());

  bool ok = true;
  for (auto& [t, g] : nf.by_theta) {
    auto u = u_module(pd);
    auto profile = principal_grading(pd, u.components.at(t));
    ok = ok && oracle::sl2_strings_bruteforce(profile) == g;
  }
  return verified_note(o, ok, "greedy string peeling");
}

// --------------------------------------------------------------- ic-stalk

int cmd_ic_stalk(const Options& o, const std::string& space, const std::string& theta_s, bool a0,
                 const std::string& decomp_s, bool signed_conv) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  Theta theta = parse_vec(theta_s);
  pd.check_theta(theta);
  auto conv = signed_conv ? SymConvention::Signed : SymConvention::Plain;

  VectorPartition A = trivial_decomposition(theta);
  if (!decomp_s.empty()) A = parse_decomposition(pd, theta, decomp_s);
  else if (!a0 && (space == "bunpw" || space == "bunp-naive"))
    throw std::invalid_argument("ic-stalk with --space " + space + " needs --A0 or --decomp");

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["space"] = space;
  j["theta"] = theta;
  j["v_convention"] = kVConvention;

  std::ostringstream pretty, csv;
  pretty << "# " << kVConvention << "\n";
  pretty << "space: " << space << "  datum: " << rd.label << "  levi: " << pd.levi_string()
         << "  theta: " << vec_str(theta) << "\n";

  bool ok = true;
  std::string what = "polynomial positivity";

  if (space == "bunpw") {
    auto rep = bunpw_stalk(pd, A);
    j["stratum"] = partition_json(A);
    j["normalization"] = rep.normalization;
    j["factors"] = ordered_json::array();
    pretty << "stratum: " << partition_str(A) << "  normalization exponent: " << rep.normalization
           << "\n";
    for (auto& [t, dec] : rep.factors) {
      ordered_json f;
      f["theta"] = t;
      f["terms"] = ordered_json::array();
      pretty << "factor at part " << vec_str(t) << ":\n";
      for (auto& term : dec.terms) {
        f["terms"].push_back({{"hw", term.hw.c}, {"mult", term.mult}, {"exp", term.exp}});
        pretty << "  label " << vec_str(term.hw.c) << "  x" << term.mult << "  v^" << term.exp
               << "\n";
      }
      j["factors"].push_back(f);
    }
    csv << "part,label,mult,exp\n";
    for (auto& [t, dec] : rep.factors)
      for (auto& term : dec.terms)
        csv << "\"" << vec_str(t) << "\",\"" << vec_str(term.hw.c) << "\"," << term.mult << ","
            << term.exp << "\n";
    auto evald = bunpw_eval(pd, rep);
    for (auto& [e, c] : evald.coeffs) ok = ok && c >= 0;
  } else if (space == "bunp-naive") {
    StalkPolynomial p = bunp_naive_stalk(pd, A, conv);
    j["stratum"] = partition_json(A);
    j["convention"] = signed_conv ? "signed" : "plain";
    j["poly"] = poly_json(p);
    pretty << "stratum: " << partition_str(A) << "  convention: "
           << (signed_conv ? "signed" : "plain") << "\n";
    pretty << "poly: " << poly_str(p) << "\n";
    csv << "exponent,coeff\n";
    for (auto& [e, c] : p.coeffs) csv << e << "," << c << "\n";
    for (auto& [e, c] : p.coeffs) ok = ok && c > 0 && e >= (Int)A.size();
    what = "positivity and the support bound";
  } else if (space == "zastava") {
    auto rep = zastava_data(pd, theta);
    j["dim"] = rep.dim;
    j["summands"] = ordered_json::array();
    for (auto& [P, s] : rep.summands)
      j["summands"].push_back({{"partition", partition_json(P)}, {"shift", s}});
    pretty << "model dimension: " << rep.dim << "\n";
    for (auto& [P, s] : rep.summands)
      pretty << "  summand " << partition_str(P) << "  shift " << s << "\n";
    csv << "partition,shift\n";
    for (auto& [P, s] : rep.summands) csv << "\"" << partition_str(P) << "\"," << s << "\n";
    for (auto& [P, s] : rep.summands) ok = ok && s <= -1;
    ok = ok && rep.dim >= 0;
    what = "nonnegative dimension, strictly negative shifts";
  } else if (space == "pushforward") {
    auto rep = pushforward_stalk(pd, theta);
    j["summands"] = ordered_json::array();
    for (auto& [P, p] : rep.summands)
      j["summands"].push_back({{"partition", partition_json(P)}, {"poly", poly_json(p)}});
    pretty << "summands over partitions (fiber at distinct points):\n";
    for (auto& [P, p] : rep.summands)
      pretty << "  " << partition_str(P) << "  poly: " << poly_str(p) << "\n";
    csv << "partition,poly\n";
    for (auto& [P, p] : rep.summands) csv << "\"" << partition_str(P) << "\",\"" << poly_str(p) << "\"\n";
    for (auto& [P, p] : rep.summands)
      for (auto& [e, c] : p.coeffs) ok = ok && c > 0;
  } else {
    throw std::invalid_argument("unknown --space " + space +
                                " (expected bunpw|bunp-naive|zastava|pushforward)");
  }

  emit(o, j, pretty.str(), csv.str());
  return verified_note(o, ok, what);
}

// -------------------------------------------------------------------- mv

int cmd_mv(const Options& o, const std::string& nu_s, const std::string& lambda_s, Int stable_scan) {
  RootDatum rd = make_datum(o);
  ParabolicData pd(rd, make_levi(o, rd));
  Coweight nu{parse_vec(nu_s)};
  nu.c.resize(rd.total_rank(), 0);

  ordered_json j;
  j["datum"] = rd.label;
  j["levi"] = ordered_json::array();
  for (int i : pd.levi) j["levi"].push_back(i + 1);
  j["nu"] = nu.c;

  std::ostringstream pretty, csv;
  pretty << "datum: " << rd.label << "  levi: " << pd.levi_string() << "  nu: " << vec_str(nu.c)
         << "\n";
  csv << "key,value\n";

  bool ok = true;
  std::string what = "bound consistency";

  if (!lambda_s.empty()) {
    Coweight lam{parse_vec(lambda_s)};
    lam.c.resize(rd.total_rank(), 0);
    Rational bound = mv_dim_bound(pd, nu, lam);
    Int count = mv_component_count(pd, nu, lam);
    j["lambda"] = lam.c;
    std::ostringstream bs;
    bs << bound;
    j["dim_bound"] = bs.str();
    j["component_count"] = count;
    pretty << "lambda: " << vec_str(lam.c) << "\n";
    pretty << "dimension bound <nu+lambda, rho>: " << bound << "\n";
    pretty << "top components (Hom multiplicity): " << count << "\n";
    csv << "dim_bound," << bound << "\n";
    csv << "component_count," << count << "\n";
  } else {
    auto rep = semiinf_component_count(pd, nu);
    std::ostringstream bs;
    bs << rep.dim_bound;
    j["dim_bound"] = bs.str();
    j["component_count"] = rep.component_count;
    if (!rep.note.empty()) j["note"] = rep.note;
    pretty << "dimension bound <nu, rho>: " << rep.dim_bound << "\n";
    pretty << "top components against the opposite unipotent orbit: " << rep.component_count << "\n";
    if (!rep.note.empty()) pretty << "note: " << rep.note << "\n";
    csv << "component_count," << rep.component_count << "\n";

    if (stable_scan > 0) {
      j["stable_scan"] = ordered_json::array();
      pretty << "stabilization scan (wall shifts):\n";
      Int depth = std::max<Int>(1, nu.height());
      for (Int k = 1; k <= stable_scan; ++k) {
        Coweight mu = Int(k) * wall_vector(pd, depth);
        Int c = shifted_component_count(pd, nu, mu);
        j["stable_scan"].push_back({{"mu_wall", mu.c}, {"count", c}});
        pretty << "  mu' = " << vec_str(mu.c) << "  count " << c << "\n";
        ok = ok && c == rep.component_count;
      }
      what = "wall-shifted counts match the stable value";
    }
  }

  emit(o, j, pretty.str(), csv.str());
  return verified_note(o, ok, what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zastava: exact root-system, partition, character and graded-dimension computations\n"
      "for the stalk combinatorics of parabolic compactifications"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON config file (type/rank|product|cartan, levi)");
    sub->add_option("--type", o.type, "simple type letter A-G");
    sub->add_option("--rank", o.rank, "rank of the simple type");
    sub->add_option("--cartan", o.cartan, "explicit Cartan matrix rows, e.g. \"2,-1;-1,2\"");
    sub->add_option("--product", o.product, "product of factors, e.g. \"A2,T1\"");
    sub->add_option("--levi", o.levi, "Levi subset, 1-based comma list (empty = Borel)")
        ->expected(0, 1);
    sub->add_option("--format", o.format, "pretty|json|csv")->default_str("pretty");
    sub->add_flag("--verify", o.verify, "rerun the relevant oracle and report match/mismatch");
  };

  std::string theta, hw, nu, lambda, space, decomp, sym_theta;
  bool on_levi = false, of_u = false, a0 = false, signed_conv = false;
  Int n = 0, sym_i = 0, stable_scan = 0;

  auto* roots = app.add_subcommand("roots", "positive roots and coroots of the datum");
  add_common(roots);

  auto* parabolic = app.add_subcommand("parabolic", "quotient-lattice data of a proper parabolic");
  add_common(parabolic);

  auto* partitions = app.add_subcommand("partitions", "decompositions and coroot partitions of theta");
  add_common(partitions);
  partitions->add_option("--theta", theta, "theta coordinates over the non-Levi simple indices")->required();

  auto* irrep = app.add_subcommand("irrep", "weight multiplicities of an irreducible");
  add_common(irrep);
  irrep->add_option("--hw", hw, "highest weight, simple-coroot coordinates")->required();
  irrep->add_flag("--on-levi", on_levi, "take the irreducible of the Levi instead of the full group");

  auto* branch = app.add_subcommand("branch", "restriction of an irreducible to the Levi");
  add_common(branch);
  branch->add_option("--hw", hw, "highest weight, simple-coroot coordinates")->required();

  auto* sym = app.add_subcommand("sym", "symmetric power of a character");
  add_common(sym);
  sym->add_option("--n", n, "symmetric power")->required();
  sym->add_option("--hw", hw, "highest weight of the base irreducible");
  sym->add_flag("--u", of_u, "use the dual nilradical as the base");
  sym->add_option("--theta", theta, "optional theta slice");

  auto* umod = app.add_subcommand("u-module", "the dual nilradical with its quotient grading");
  add_common(umod);

  auto* nf = app.add_subcommand("nf", "the graded kernel of f inside the dual nilradical");
  add_common(nf);
  nf->add_option("--sym-theta", sym_theta, "also print Sym^i at this theta");
  nf->add_option("--sym-i", sym_i, "symmetric power for --sym-theta");
  nf->add_flag("--super", signed_conv, "signed symmetric powers in odd degrees");

  auto* ic = app.add_subcommand("ic-stalk", "stalk data of the compactification sheaves");
  add_common(ic);
  ic->add_option("--space", space, "bunpw|bunp-naive|zastava|pushforward")->required();
  ic->add_option("--theta", theta, "theta coordinates")->required();
  ic->add_flag("--A0", a0, "use the one-part stratum (main diagonal)");
  ic->add_option("--decomp", decomp, "stratum decomposition, e.g. \"1,0:2;0,1\"");
  ic->add_flag("--super", signed_conv, "signed symmetric powers in odd degrees (bunp-naive)");

  auto* mv = app.add_subcommand("mv", "semi-infinite intersection bounds and component counts");
  add_common(mv);
  mv->add_option("--nu", nu, "Levi-dominant coweight")->required();
  mv->add_option("--lambda", lambda, "dominant coweight of the full group");
  mv->add_option("--stable-scan", stable_scan, "check this many wall shifts for stabilization");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(o);
    if (parabolic->parsed()) return cmd_parabolic(o);
    if (partitions->parsed()) return cmd_partitions(o, theta);
    if (irrep->parsed()) return cmd_irrep(o, hw, on_levi);
    if (branch->parsed()) return cmd_branch(o, hw);
    if (sym->parsed()) return cmd_sym(o, hw, of_u, n, theta);
    if (umod->parsed()) return cmd_u_module(o);
    if (nf->parsed()) return cmd_nf(o, sym_theta, sym_i, signed_conv);
    if (ic->parsed()) return cmd_ic_stalk(o, space, theta, a0, decomp, signed_conv);
    if (mv->parsed()) return cmd_mv(o, nu, lambda, stable_scan);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
