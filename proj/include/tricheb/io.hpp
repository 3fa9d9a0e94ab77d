#ifndef TRICHEB_IO_HPP_
#define TRICHEB_IO_HPP_

#include "tricheb/approx.hpp"
#include "tricheb/bernstein.hpp"
#include "tricheb/exactnum.hpp"
#include "tricheb/weighted_ip.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace tricheb {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal ("%.17g").
std::string format_double(double x);

Json to_json(const PiRational& x);  // {"rat": "p/q", "pi": "p/q"}
PiRational pi_rational_from_json(const Json& j);

/// {"degree": n, "coeffs": [{"i":..,"j":..,"k":..,"value":"p/q"}, ...]}
Json to_json(const BBPoly& p);
/// Throws std::invalid_argument on schema violations (missing or duplicate
/// indices, wrong degree).
BBPoly bbpoly_from_json(const Json& j);

/// Header "i,j,k,value" then one row per coefficient in dense-layout order.
void write_coeffs_csv(std::ostream& os, const BBPoly& p);

/// Header "n,r,i,value": Bernstein coefficients of T_r in degree n for all
/// 0 <= r <= n <= max_n.
void write_cheb_table_csv(std::ostream& os, int max_n);

/// Header "m,r,m2,s,rat_part,pi_part,float_value"; exact parts are empty in
/// quadrature mode.
void write_gram_csv(std::ostream& os, const GramMatrix& g);
Json to_json(const GramMatrix& g);

/// {"degree": n, "gamma": g, "coefficients": [{"m":..,"r":..,"value":..}], "residual_norm": ..}
Json to_json(const ProjectionResult& pr);
void write_projection_csv(std::ostream& os, const ProjectionResult& pr);

}  // namespace tricheb

#endif  // TRICHEB_IO_HPP_
