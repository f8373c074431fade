/*
   Copyright 2026 The symlat Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Shared fixtures: the groups and modules of the worked examples.

#pragma once

#include <string>
#include <vector>

#include "symlat/fixedpoints.hpp"
#include "symlat/group.hpp"
#include "symlat/laurent.hpp"
#include "symlat/windows.hpp"

namespace symlat::testing {

inline Cyclotomic q(std::int64_t v, int conductor = 1) { return Cyclotomic::from_rational(conductor, Rational(v)); }

inline LaurentPoly poly(std::size_t n, const std::string& text, int conductor = 1) {
  return LaurentPoly::parse(n, conductor, text);
}

inline ModuleVector vec(std::size_t n, const std::vector<std::string>& entries, int conductor = 1) {
  std::vector<LaurentPoly> polys;
  for (const auto& e : entries) polys.push_back(poly(n, e, conductor));
  return ModuleVector(std::move(polys));
}

inline ModulePresentation principal(std::size_t n, const std::string& text, int conductor = 1) {
  return ModulePresentation{n, 1, conductor, {vec(n, {text}, conductor)}};
}

// sigma -> sigma^-1 on Z.
inline GroupTable reflections(int conductor = 1) {
  return generate_group(1, conductor, {AutElement::monomial_map({{-1}}, conductor)});
}

// sigma -> zeta_d sigma on Z.
inline GroupTable roots_of_unity(int d) {
  return generate_group(1, d, {AutElement::homothety({Cyclotomic::root_of_unity(d, 1)})});
}

// sigma -> -sigma on Z.
inline GroupTable sign_homothety() { return generate_group(1, 2, {AutElement::homothety({q(-1, 2)})}); }

// Swap of sigma_1 and sigma_2.
inline GroupTable swap2(int conductor = 1) {
  return generate_group(2, conductor, {AutElement::monomial_map({{0, 1}, {1, 0}}, conductor)});
}

inline GroupTable trivial_group(std::size_t n, int conductor = 1) {
  return generate_group(n, conductor, {AutElement::identity(n, conductor)});
}

inline Window interval(std::int64_t lo, std::int64_t hi) {
  std::set<Exponent> pts;
  for (std::int64_t x = lo; x <= hi; ++x) pts.insert(Exponent{x});
  return Window(1, std::move(pts));
}

inline std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi, std::int64_t step = 1) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

}  // namespace symlat::testing
