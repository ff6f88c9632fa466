#pragma once

#include <string>

#include "core/charpoly.hpp"
#include "core/matrix.hpp"
#include "core/rank.hpp"
#include "core/runtime.hpp"

namespace garank {

// Wire formats:
//   multivector  {"signature":[p,q],"mode":"exact"|"float",
//                 "terms":[{"blade":[a1,...],"re":...,"im":...}]}
//                blades as strictly increasing 1-based lists, [] for e;
//                exact re/im are strings "num/den", float re/im are numbers
//   char poly    {"coeffs":[{"re":..,"im":..},...],"det":{"re":..,"im":..}}
//   rank result  {"rank":r,"path":"general|normal|small_dim",
//                 "witnesses":{"C":[...],"tol":...}}
//   matrix       {"rows":r,"cols":c,"entries":[[{"re":..,"im":..},...],...]}

std::string multivector_to_json(const AnyMultivector& m);
AnyMultivector multivector_from_json(const std::string& text);

std::string charpoly_to_json(const CharPoly<FloatComplex>& cp);
std::string charpoly_to_json(const CharPoly<GaussianRational>& cp);

std::string scalar_to_json(const FloatComplex& v);
std::string scalar_to_json(const GaussianRational& v);

std::string rank_result_to_json(const RankResult& r);

std::string matrix_to_json(const Matrix<FloatComplex>& m);
std::string matrix_to_json(const Matrix<GaussianRational>& m);
// mode chosen by entry type in the JSON (strings = exact)
Matrix<FloatComplex> matrix_from_json_float(const std::string& text);
Matrix<GaussianRational> matrix_from_json_exact(const std::string& text);

}  // namespace garank
