// Copyright 2026 The phull Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "phull/compacta.hpp"
#include "phull/extremal.hpp"
#include "phull/families.hpp"
#include "phull/jensen.hpp"
#include "phull/polynomial.hpp"
#include "phull/scanner.hpp"
#include "phull/spectrum.hpp"

namespace phull {

using Json = nlohmann::json;

/// Throws invalid_argument naming the first key of `j` outside `allowed`.
void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

Json complex_json(Complex z);
Complex complex_from_json(const Json& j);
Json cvector_json(const CVector& v);
CVector cvector_from_json(const Json& j);
/// Finite numbers as numbers, the rest as null.
Json number_json(double v);

/// {n, d, coeffs: [[re, im], ...]} in graded-lex order.
Json to_json(const HomogeneousPolynomial& p);
HomogeneousPolynomial polynomial_from_json(const Json& j);

/// {kind, ...}; entire_graph accepts {"function": "exp", "terms": T} instead
/// of an explicit Taylor list.
Json to_json(const CurveGenerator& g);
CurveGenerator generator_from_json(const Json& j);

/// {n, generator, orbit_size, points: [[[re, im] x (n+1)], ...]}
Json to_json(const SampledCompactum& K);
SampledCompactum compactum_from_json(const Json& j);

SolverOptions solver_from_json(const Json& j);
Json to_json(const SolverOptions& s);
Thresholds thresholds_from_json(const Json& j);
Json to_json(const Thresholds& t);
ChartSpec chart_from_json(const Json& j);
Json to_json(const ChartSpec& c);
GridSpec grid_from_json(const Json& j);
Json to_json(const GridSpec& g);

Json to_json(const ExtremalResult& r);
Json to_json(const VeroneseReport& r);
Json to_json(const HomNorm& h);
Json to_json(const TripleNormReport& r);
Json to_json(const SupermultiplicativityReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const GelfandReport& r);
Json to_json(const ExclusionCertificate& c);
Json to_json(const CurveProbeResult& r);
Json to_json(const DualityReport& r);
Json to_json(const WeakInequalityReport& r);
Json to_json(const HarmonicityReport& r);
/// Summary without the node field.
Json green_summary(const GreenProblem& g);
/// {chart, grid, degrees, thresholds, K fingerprint, cells, failed_cells}
Json scan_manifest(const ScanField& f, const SampledCompactum& K);

}  // namespace phull
