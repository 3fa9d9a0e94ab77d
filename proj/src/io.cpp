#include "tricheb/io.hpp"

#include "tricheb/chebyshev.hpp"

#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

namespace tricheb {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const PiRational& x) {
  return Json{{"rat", x.rat_part().to_string()}, {"pi", x.pi_part().to_string()}};
}

PiRational pi_rational_from_json(const Json& j) {
  return {Rational::parse(j.at("rat").get<std::string>()), Rational::parse(j.at("pi").get<std::string>())};
}

Json to_json(const BBPoly& p) {
  Json coeffs = Json::array();
  for (const TriIndex& z : tri_indices(p.degree())) {
    coeffs.push_back({{"i", z.i}, {"j", z.j}, {"k", z.k}, {"value", p[z].to_string()}});
  }
  return Json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

BBPoly bbpoly_from_json(const Json& j) {
  try {
    const int n = j.at("degree").get<int>();
    if (n < 0) throw std::invalid_argument("negative degree");
    BBPoly p = BBPoly::zero(n);
    std::set<TriIndex> seen;
    for (const Json& c : j.at("coeffs")) {
      const TriIndex z{c.at("i").get<int>(), c.at("j").get<int>(), c.at("k").get<int>()};
      if (z.i < 0 || z.j < 0 || z.k < 0 || z.degree() != n) {
        throw std::invalid_argument("coefficient index does not match the degree");
      }
      if (!seen.insert(z).second) throw std::invalid_argument("duplicate coefficient index");
      p[z] = Rational::parse(c.at("value").get<std::string>());
    }
    if (seen.size() != tri_count(n)) throw std::invalid_argument("missing coefficient indices");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

void write_coeffs_csv(std::ostream& os, const BBPoly& p) {
  os << "i,j,k,value\n";
  for (const TriIndex& z : tri_indices(p.degree())) {
    os << z.i << ',' << z.j << ',' << z.k << ',' << p[z].to_string() << '\n';
  }
}

void write_cheb_table_csv(std::ostream& os, int max_n) {
  os << "n,r,i,value\n";
  for (int n = 0; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      const ChebBernCoeffs m = cheb_bernstein_coeffs(n, r);
      for (int i = 0; i <= n; ++i) os << n << ',' << r << ',' << i << ',' << m.values[i] << '\n';
    }
  }
}

void write_gram_csv(std::ostream& os, const GramMatrix& g) {
  os << "m,r,m2,s,rat_part,pi_part,float_value\n";
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      os << g.members[a].m << ',' << g.members[a].r << ',' << g.members[b].m << ','
         << g.members[b].r << ',';
      if (g.mode == GramMode::kExact) {
        os << g.exact_entry(a, b).rat_part() << ',' << g.exact_entry(a, b).pi_part();
      } else {
        os << ',';
      }
      os << ',' << format_double(g.value(a, b)) << '\n';
    }
  }
}

Json to_json(const GramMatrix& g) {
  Json entries = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      Json e{{"m", g.members[a].m}, {"r", g.members[a].r}, {"m2", g.members[b].m}, {"s", g.members[b].r}};
      if (g.mode == GramMode::kExact) e["exact"] = to_json(g.exact_entry(a, b));
      e["float_value"] = g.value(a, b);
      entries.push_back(std::move(e));
    }
  }
  return Json{{"max_degree", g.max_degree},
              {"gamma", g.gamma.to_string()},
              {"mode", g.mode == GramMode::kExact ? "exact" : "quadrature"},
              {"diagonal", g.is_diagonal()},
              {"entries", std::move(entries)}};
}

Json to_json(const ProjectionResult& pr) {
  Json coeffs = Json::array();
  for (const ProjectionCoefficient& c : pr.coefficients) {
    coeffs.push_back({{"m", c.index.m}, {"r", c.index.r}, {"value", c.value}});
  }
  return Json{{"degree", pr.degree},
              {"gamma", pr.gamma},
              {"coefficients", std::move(coeffs)},
              {"residual_norm", pr.residual_norm}};
}

void write_projection_csv(std::ostream& os, const ProjectionResult& pr) {
  os << "m,r,value\n";
  for (const ProjectionCoefficient& c : pr.coefficients) {
    os << c.index.m << ',' << c.index.r << ',' << format_double(c.value) << '\n';
  }
}

}  // namespace tricheb
