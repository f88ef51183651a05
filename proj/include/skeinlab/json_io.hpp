#pragma once

#include "skeinlab/balanced_lattice.hpp"
#include "skeinlab/detect.hpp"
#include "skeinlab/qtorus.hpp"
#include "skeinlab/sl2.hpp"

#include <json.hpp>

namespace skeinlab {

using json = nlohmann::json;

// Integral values as JSON integers when they fit, otherwise "p/q" strings.
json rational_json(const Rational& q);
Rational parse_rational_json(const json& j);

// {order, coeffs}; coefficients over the power basis 1, zeta, ..., zeta^{phi(m)-1}.
json cyclotomic_json(const Cyclotomic& x);
// Accepts a number, a rational string, or {order, coeffs}; bare rationals use default_order.
Cyclotomic parse_cyclotomic(const json& j, int default_order);

json int_matrix_json(const IntMatrix& m);
json vector_json(const std::vector<Integer>& v);

json triangulation_json(const Triangulation& t);

json sl2_json(const SL2Mat& m);  // [[a, b], [c, d]]
// [[a,b],[c,d]] or [a,b,c,d] with entries as in parse_cyclotomic.
SL2Mat parse_sl2(const json& j, int default_order);

// {genus, field: {cyclotomicOrder}, images: [[a,b,c,d], ...]}
json rep_json(const SL2Rep& rho);
SL2Rep parse_rep(const json& j);

// {matrix: [[a,b],[c,d]]} or {words: {a1: "...", b1: "...", ...}}; also the
// strings "T_alpha" and "T_beta" for the built-in genus one twists.
MappingClass parse_mapping_class(const json& j, int genus);
FreeGroupEndomorphism parse_automorphism(const json& j, int genus);
json mapping_class_json(const MappingClass& phi);

// {pq: [p, q]} on the built-in torus, or {triangulation, coords: {edgeId: n}}
// (coords may also be a plain array) on Delta_genus.
NormalCurve parse_curve(const json& j, int genus);
json curve_json(const NormalCurve& c);

json support_json(const TraceSupport& s);
json certificate_json(const Certificate& c);
json leaf_json(const LeafDescriptor& d);
json torus_element_json(const TorusElement& x);

}  // namespace skeinlab
