// SPDX-License-Identifier: Apache-2.0
//
// mueller-cone: cone-side numerics for Stokes vectors and Mueller matrices
// Copyright (C) 2026 the mueller-cone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Stable-schema JSON views of the report types. Every top-level document
// carries {"schema": "mueller-cone/1", "kind": ...}; matrices are row-major
// number arrays; numbers serialize as lossless shortest-round-trip decimals.

#ifndef MUELLERCONE_REPORT_JSON_HPP
#define MUELLERCONE_REPORT_JSON_HPP

#include <json.hpp>

#include "muellercone/approx.hpp"
#include "muellercone/conespec.hpp"
#include "muellercone/ecm.hpp"
#include "muellercone/mueller.hpp"
#include "muellercone/stokes.hpp"

namespace muellercone {

inline constexpr const char* kReportSchema = "mueller-cone/1";

inline nlohmann::json to_json(const Matrix4& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.push_back(m(i, j));
    return a;
}

inline nlohmann::json to_json(const Matrix16& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) a.push_back(m(i, j));
    return a;
}

inline nlohmann::json to_json(const Eigen::Vector3d& v) {
    return nlohmann::json::array({v[0], v[1], v[2]});
}

inline nlohmann::json to_json(const Vector4& v) {
    return nlohmann::json::array({v[0], v[1], v[2], v[3]});
}

inline nlohmann::json stokes_report_json(const StokesVector& s, const Tolerances& tol) {
    return {
        {"schema", kReportSchema},
        {"kind", "stokes"},
        {"vector", to_json(s.to_vector())},
        {"q_g", q_g(s)},
        {"class", to_string(classify(s, tol))},
        {"tol", tol.zero_tol},
    };
}

inline nlohmann::json to_json(const MuellerReport& r) {
    return {
        {"schema", kReportSchema},
        {"kind", "mueller_report"},
        {"verdict", r.verdict},
        {"min_q", r.min_q},
        {"argmin_q", to_json(r.argmin_q)},
        {"min_b", r.min_b},
        {"argmin_b", to_json(r.argmin_b)},
        {"samples", r.samples},
        {"tol", r.tol},
        {"resolution", r.resolution},
    };
}

inline nlohmann::json to_json(const NecessaryConditions& nc) {
    return {
        {"first_column_stokes", nc.first_column_stokes},
        {"first_row_stokes", nc.first_row_stokes},
        {"zero_a_implies_zero", nc.zero_a_implies_zero},
        {"submatrix_norm_ok", nc.submatrix_norm_ok},
        {"all", nc.all()},
    };
}

inline nlohmann::json to_json(const SpectralReport& r) {
    nlohmann::json peripheral = nlohmann::json::array();
    for (const auto& lam : r.peripheral_eigenvalues)
        peripheral.push_back({{"re", lam.real()}, {"im", lam.imag()}});
    nlohmann::json doc = {
        {"schema", kReportSchema},
        {"kind", "spectral_report"},
        {"rho", r.rho},
        {"rho_is_eigenvalue", r.rho_is_eigenvalue},
        {"rho_simple", r.rho_simple},
        {"peripheral_eigenvalues", peripheral},
        {"peripheral_all_simple", r.peripheral_all_simple},
        {"unique_K_eigenvector", r.unique_K_eigenvector},
        {"degree_condition", r.degree_condition},
    };
    doc["perron_vector"] = r.perron_vector ? to_json(*r.perron_vector) : nlohmann::json();
    doc["perron_in_K"] =
        r.perron_in_K ? nlohmann::json(to_string(*r.perron_in_K)) : nlohmann::json();
    return doc;
}

inline nlohmann::json approx_result_json(const ApproxResult& r, const std::string& mode,
                                         const std::string& label,
                                         const std::string& output_file) {
    return {
        {"schema", kReportSchema},
        {"kind", "approx"},
        {"mode", mode},
        {"label", label},
        {"output", to_json(r.output)},
        {"changed", r.changed},
        {"epsilon_used", r.epsilon_used},
        {"path", to_string(r.path)},
        {"output_file", output_file},
    };
}

inline nlohmann::json to_json(const WSelection& s) {
    nlohmann::json doc = {
        {"W", to_json(s.W)},
        {"provenance", to_string(s.provenance)},
    };
    doc["eigenvalue_used"] =
        s.eigenvalue_used ? nlohmann::json(*s.eigenvalue_used) : nlohmann::json();
    return doc;
}

inline nlohmann::json to_json(const CalibrationResult& r) {
    return {
        {"schema", kReportSchema},
        {"kind", "ecm"},
        {"H", to_json(r.H)},
        {"selection", to_json(r.selection)},
        {"new_M_raw", to_json(r.new_M_raw)},
        {"new_M_final", to_json(r.new_M_final)},
        {"det_new_M_final", r.new_M_final.determinant()},
        {"mueller_report", to_json(r.mueller_report)},
        {"diagnostics", r.diagnostics},
    };
}

}  // namespace muellercone

#endif  // MUELLERCONE_REPORT_JSON_HPP
