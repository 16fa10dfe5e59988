#include "osculant/catalog.hpp"

#include <sstream>

#include "osculant/errors.hpp"
#include "osculant/parser.hpp"

namespace osculant {

namespace {

constexpr const char* kOracle = "symbolic-rank oracle";
constexpr const char* kVanish = "higher derivatives vanish";
constexpr const char* kClosed = "closed form for linear embeddings";
constexpr const char* kFormula = "dual dimension formula from h and d_t";

Parametrization from_exprs(const std::string& name, int k,
                           const std::vector<std::string>& exprs) {
  std::vector<Poly> coords;
  coords.reserve(exprs.size());
  for (const std::string& e : exprs) coords.push_back(parse_polynomial(e, k));
  return make_polynomial_parametrization(name, k, std::move(coords));
}

void put(std::map<std::string, ExpectedValue>& m, const std::string& key, long long v,
         const char* note) {
  m[key] = ExpectedValue{v, note};
}

// "family(3,5)" -> {3, 5}; empty when the name is not of that shape.
std::vector<int> family_args(const std::string& name, const std::string& family) {
  if (name.size() <= family.size() + 2 || name.compare(0, family.size(), family) != 0 ||
      name[family.size()] != '(' || name.back() != ')') {
    return {};
  }
  std::vector<int> args;
  std::string inner = name.substr(family.size() + 1, name.size() - family.size() - 2);
  std::stringstream ss(inner);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size() || v < 0) return {};
      args.push_back(v);
    } catch (...) {
      return {};
    }
  }
  return args;
}

CatalogEntry make_linear(int k, int n) {
  if (k < 1 || n < k) throw UnknownVariety("linear(" + std::to_string(k) + "," + std::to_string(n) + ")");
  std::vector<std::string> exprs;
  for (int i = 1; i <= k; ++i) exprs.push_back("u" + std::to_string(i));
  for (int i = k; i < n; ++i) exprs.push_back("0");
  CatalogEntry e;
  e.name = "linear(" + std::to_string(k) + "," + std::to_string(n) + ")";
  e.parametrization = from_exprs(e.name, k, exprs);
  for (int t = 1; t <= 6; ++t) put(e.expected, "d_" + std::to_string(t), k, kVanish);
  for (int t = 2; t <= 4; ++t) {
    put(e.expected, "Delta_" + std::to_string(t), -1, kVanish);
    long long delta = binomial(k - 1 + t, t);
    put(e.expected, "delta_" + std::to_string(t), delta, kClosed);
    put(e.expected, "delta_global_" + std::to_string(t), delta, kClosed);
  }
  // The osculating variety is the linear space itself. When 2k <= N the
  // expectation 2k is honest and the defect k is charged; otherwise the
  // ambient truncates the expectation and no defect is charged.
  for (int t = 1; t <= 4; ++t) {
    put(e.expected, "tan_" + std::to_string(t), k, kClosed);
    put(e.expected, "o_" + std::to_string(t), 2 * k <= n ? k : 0, kClosed);
    put(e.expected, "h_" + std::to_string(t), 0, "constant osculating spaces");
  }
  if (k < n) put(e.expected, "dual_1", n - 1 - k, kFormula);
  return e;
}

CatalogEntry make_rnc(int n) {
  if (n < 1 || n > 6) throw UnknownVariety("rnc(" + std::to_string(n) + ")");
  std::vector<std::string> exprs;
  for (int i = 1; i <= n; ++i) exprs.push_back(i == 1 ? "u1" : "u1^" + std::to_string(i));
  CatalogEntry e;
  e.name = "rnc(" + std::to_string(n) + ")";
  e.parametrization = from_exprs(e.name, 1, exprs);
  for (int t = 1; t <= 6; ++t) {
    put(e.expected, "d_" + std::to_string(t), std::min(t, n), kOracle);
    put(e.expected, "Delta_" + std::to_string(t), t <= n ? 0 : -1, kOracle);
    if (t >= 2) put(e.expected, "delta_" + std::to_string(t), t <= n ? 0 : 1, kOracle);
    if (t <= 4) put(e.expected, "o_" + std::to_string(t), 0, kOracle);
  }
  if (n >= 2) {
    put(e.expected, "h_1", 1, kOracle);
    put(e.expected, "tan_1", std::min(2, n), kOracle);
    put(e.expected, "tan_2", std::min(3, n), kOracle);
    put(e.expected, "dual_1", n - 2 + 1, kFormula);  // h + n - 1 - d_1
  }
  return e;
}

CatalogEntry make_named(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "plane_cubic_p3") {
    e.parametrization = from_exprs(name, 1, {"u1", "u1^3", "2*u1 + 3*u1^3"});
    put(e.expected, "d_1", 1, kOracle);
    put(e.expected, "d_2", 2, kOracle);
    put(e.expected, "d_3", 2, kOracle);
    put(e.expected, "d_4", 2, kOracle);
    put(e.expected, "Delta_2", 0, kOracle);
    put(e.expected, "Delta_3", -1, kOracle);
    put(e.expected, "o_2", 1, kOracle);
    put(e.expected, "o_3", 1, kOracle);
    put(e.expected, "h_1", 1, kOracle);
    put(e.expected, "h_3", 0, "osculating plane is constant");
    put(e.expected, "thmA_3_applicable", 1, kOracle);
    put(e.expected, "thmA_3_pass", 1, kOracle);
  } else if (name == "veronese2") {
    e.parametrization = from_exprs(name, 2, {"u1", "u2", "u1^2", "u1*u2", "u2^2"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 5, kOracle);
    put(e.expected, "d_3", 5, kOracle);
    put(e.expected, "delta_2", 0, kOracle);
    put(e.expected, "delta_3", 4, "third partials of quadratics vanish");
    put(e.expected, "delta_global_2", 0, kOracle);
    put(e.expected, "delta_global_3", 4, "third partials of quadratics vanish");
    put(e.expected, "Delta_2", 2, kOracle);
    put(e.expected, "Delta_3", -1, kOracle);
    put(e.expected, "tan_1", 4, kOracle);
    put(e.expected, "o_1", 0, kOracle);
    put(e.expected, "o_2", 0, kOracle);
    put(e.expected, "h_1", 2, kOracle);
    put(e.expected, "h_2", 0, "osculating space fills the ambient");
    put(e.expected, "dual_1", 4, kFormula);
    put(e.expected, "thmB_1_applicable", 1, kOracle);
    put(e.expected, "thmB_1_pass", 1, kOracle);
  } else if (name == "v3p2") {
    e.parametrization = from_exprs(name, 2,
                                   {"u1", "u2", "u1^2", "u1*u2", "u2^2", "u1^3", "u1^2*u2",
                                    "u1*u2^2", "u2^3"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 5, kOracle);
    put(e.expected, "d_3", 9, kOracle);
    put(e.expected, "delta_2", 0, kOracle);
    put(e.expected, "Delta_2", 2, kOracle);
    put(e.expected, "Delta_3", 3, kOracle);
    put(e.expected, "o_1", 0, kOracle);
    put(e.expected, "h_1", 2, kOracle);
  } else if (name == "segre21") {
    e.parametrization = from_exprs(name, 3, {"u1", "u2", "u3", "u1*u3", "u2*u3"});
    put(e.expected, "d_1", 3, kOracle);
    put(e.expected, "d_2", 5, kOracle);
    put(e.expected, "delta_2", 4, "includes the trivial relations forced by N < k_2");
    put(e.expected, "Delta_2", 1, kOracle);
    put(e.expected, "o_1", 0, kOracle);
    put(e.expected, "thmA_2_applicable", 0, "expectation truncated by the ambient");
  } else if (name == "cone_rnc4") {
    e.parametrization = from_exprs(name, 2, {"u1", "u1^2", "u1^3", "u1^4 + u2"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 3, kOracle);
    put(e.expected, "d_3", 4, kOracle);
    put(e.expected, "delta_2", 2, kOracle);
    put(e.expected, "Delta_2", 0, kOracle);
    put(e.expected, "tan_1", 3, kOracle);
    put(e.expected, "o_1", 1, kOracle);
    put(e.expected, "h_1", 1, kOracle);
    put(e.expected, "h_2", 1, kOracle);
    put(e.expected, "dual_1", 2, kFormula);
    put(e.expected, "thmA_2_applicable", 1, kOracle);
    put(e.expected, "thmA_2_pass", 1, kOracle);
    put(e.expected, "thmB_1_applicable", 0, "form dimension below both gates");
  } else if (name == "cone_rnc5") {
    e.parametrization = from_exprs(name, 2, {"u1", "u1^2", "u1^3", "u1^4", "u1^5 + u2"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 3, kOracle);
    put(e.expected, "d_3", 4, kOracle);
    put(e.expected, "d_4", 5, kOracle);
    put(e.expected, "delta_2", 2, kOracle);
    put(e.expected, "Delta_2", 0, kOracle);
    put(e.expected, "Delta_3", 0, kOracle);
    put(e.expected, "tan_2", 4, "osculating 3-spaces depend on one parameter only");
    put(e.expected, "o_1", 1, kOracle);
    put(e.expected, "o_2", 1, kOracle);
    put(e.expected, "h_1", 1, kOracle);
    put(e.expected, "h_3", 1, kOracle);
    put(e.expected, "thmA_2_applicable", 1, kOracle);
    put(e.expected, "thmA_2_pass", 1, kOracle);
    put(e.expected, "thmA_3_applicable", 1, kOracle);
    put(e.expected, "thmA_3_pass", 1, kOracle);
  } else if (name == "cone_veronese") {
    e.parametrization = from_exprs(name, 3, {"u1", "u2", "u1^2", "u1*u2", "u2^2", "u3"});
    put(e.expected, "d_1", 3, kOracle);
    put(e.expected, "d_2", 6, kOracle);
    put(e.expected, "delta_2", 3, kOracle);
    put(e.expected, "Delta_2", 2, kOracle);
    put(e.expected, "tan_1", 5, kOracle);
    put(e.expected, "o_1", 1, kOracle);
    put(e.expected, "h_1", 2, kOracle);
    put(e.expected, "dual_1", 4, kFormula);
    put(e.expected, "thmA_2_applicable", 0, "fundamental form too large: ell = 0");
    put(e.expected, "thmB_1_applicable", 1, kOracle);
    put(e.expected, "thmB_1_pass", 1, kOracle);
  } else if (name == "cone_v3p2") {
    e.parametrization = from_exprs(name, 3,
                                   {"u1", "u2", "u1^2", "u1*u2", "u2^2", "u1^3", "u1^2*u2",
                                    "u1*u2^2", "u2^3", "u3"});
    put(e.expected, "d_1", 3, kOracle);
    put(e.expected, "d_2", 6, kOracle);
    put(e.expected, "d_3", 10, kOracle);
    put(e.expected, "delta_2", 3, kOracle);
    put(e.expected, "Delta_2", 2, kOracle);
    put(e.expected, "Delta_3", 3, kOracle);
    put(e.expected, "chain_3_pass", 1, "proper quadric subsystem absorbs the partials");
  } else if (name == "tangentdev_rnc3") {
    e.parametrization =
        from_exprs(name, 2, {"u1 + u2", "u1^2 + 2*u1*u2", "u1^3 + 3*u1^2*u2"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 3, kOracle);
    put(e.expected, "delta_2", 2, kOracle);
    put(e.expected, "Delta_2", 0, kOracle);
    put(e.expected, "o_1", 0, "expectation truncated by the ambient");
    put(e.expected, "h_1", 1, kOracle);
  } else if (name == "tangentdev_rnc4") {
    e.parametrization = from_exprs(
        name, 2, {"u1 + u2", "u1^2 + 2*u1*u2", "u1^3 + 3*u1^2*u2", "u1^4 + 4*u1^3*u2"});
    put(e.expected, "d_1", 2, kOracle);
    put(e.expected, "d_2", 3, kOracle);
    put(e.expected, "d_3", 4, kOracle);
    put(e.expected, "delta_2", 2, kOracle);
    put(e.expected, "Delta_2", 0, kOracle);
    put(e.expected, "tan_1", 3, "tangent planes constant along rulings");
    put(e.expected, "o_1", 1, kOracle);
    put(e.expected, "h_1", 1, kOracle);
    put(e.expected, "thmA_2_applicable", 1, kOracle);
    put(e.expected, "thmA_2_pass", 1, kOracle);
    put(e.expected, "thmB_1_applicable", 0, "form dimension below both gates");
  } else {
    throw UnknownVariety(name);
  }
  return e;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  if (auto args = family_args(name, "linear"); args.size() == 2) {
    return make_linear(args[0], args[1]);
  }
  if (auto args = family_args(name, "rnc"); args.size() == 1) {
    return make_rnc(args[0]);
  }
  return make_named(name);
}

std::map<std::string, ExpectedValue> catalog_expected(const std::string& name) {
  return catalog_get(name).expected;
}

std::vector<std::string> catalog_names() {
  return {"linear(3,5)",   "rnc(2)",        "rnc(3)",          "rnc(4)",
          "rnc(5)",        "rnc(6)",        "plane_cubic_p3",  "veronese2",
          "v3p2",          "segre21",       "cone_rnc4",       "cone_rnc5",
          "cone_veronese", "cone_v3p2",     "tangentdev_rnc3", "tangentdev_rnc4"};
}

std::string catalog_listing() {
  std::string out;
  out += "families:\n";
  out += "  linear(k,N)   k-plane embedded in projective N-space\n";
  out += "  rnc(n)        rational normal curve of degree n, n <= 6\n";
  out += "named varieties:\n";
  for (const std::string& name : catalog_names()) {
    if (name.rfind("linear(", 0) == 0 || name.rfind("rnc(", 0) == 0) continue;
    const CatalogEntry e = catalog_get(name);
    out += "  " + name + "  (k=" + std::to_string(e.parametrization.k) +
           ", N=" + std::to_string(e.parametrization.N) + ")\n";
  }
  return out;
}

}  // namespace osculant
