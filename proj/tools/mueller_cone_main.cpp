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
// Command-line frontend. Reports go to stdout as JSON, diagnostics to
// stderr. Exit codes: 0 = property holds / success, 1 = property fails,
// 2 = input or parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "muellercone/muellercone.hpp"

namespace mc = muellercone;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;

mc::Tolerances env_tolerances() {
    mc::Tolerances tol;
    if (const char* raw = std::getenv("MUELLER_CONE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end != raw && *end == '\0' && v > 0.0)
            tol.zero_tol = v;
        else
            std::cerr << "warning: ignoring invalid MUELLER_CONE_TOL value '" << raw
                      << "'\n";
    }
    return tol;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

mc::Matrix4 load_matrix(const std::string& path) {
    try {
        return mc::parse_matrix_text(read_file(path));
    } catch (const mc::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

mc::StokesVector load_stokes(const std::string& path) {
    try {
        return mc::StokesVector::from_vector(mc::parse_stokes_text(read_file(path)));
    } catch (const mc::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_check_stokes(const std::string& file, const mc::Tolerances& tol) {
    const mc::StokesVector s = load_stokes(file);
    emit(mc::stokes_report_json(s, tol));
    return mc::classify(s, tol) != mc::ConeClass::Outside ? kExitHolds : kExitFails;
}

int run_check_mueller(const std::string& file, int resolution, const mc::Tolerances& tol) {
    const mc::Matrix4 m = load_matrix(file);
    const mc::MuellerReport rep = mc::is_mueller(m, resolution, tol);
    nlohmann::json doc = mc::to_json(rep);
    doc["necessary_conditions"] = mc::to_json(mc::necessary_conditions(m, tol));
    emit(doc);
    return rep.verdict ? kExitHolds : kExitFails;
}

int run_norm(const std::string& file) {
    const mc::Matrix4 m = load_matrix(file);
    emit({{"schema", mc::kReportSchema},
          {"kind", "spectral_norm"},
          {"value", mc::spectral_norm(m)}});
    return kExitHolds;
}

int run_spectral(const std::string& file, const mc::Tolerances& tol) {
    const mc::Matrix4 m = load_matrix(file);
    const mc::SpectralReport rep = mc::birkhoff_report(m, tol);
    emit(mc::to_json(rep));
    return rep.rho_is_eigenvalue && rep.degree_condition ? kExitHolds : kExitFails;
}

int run_cone_spectrum_test(const std::string& file, int resolution, bool primitive,
                           const mc::Tolerances& tol) {
    const mc::Matrix4 m = load_matrix(file);
    const char* kind = primitive ? "primitive" : "irreducible";
    nlohmann::json doc = {{"schema", mc::kReportSchema}, {"kind", kind}};

    const bool zero = m.cwiseAbs().maxCoeff() <= tol.zero_tol;
    const mc::MuellerReport mrep = mc::is_mueller(m, resolution, tol);
    doc["mueller_verdict"] = mrep.verdict;
    if (zero || !mrep.verdict) {
        doc["result"] = false;
        doc["note"] = zero ? "the zero matrix is excluded"
                           : "matrix fails the Mueller certificate";
        emit(doc);
        return kExitFails;
    }
    const auto [result, rep] = primitive ? mc::is_K_primitive(m, resolution, tol)
                                         : mc::is_K_irreducible(m, resolution, tol);
    doc["result"] = result;
    doc["spectral_report"] = mc::to_json(rep);
    emit(doc);
    return result ? kExitHolds : kExitFails;
}

int run_approx(const std::string& file, const std::string& mode, int n, int resolution,
               const mc::Tolerances& tol) {
    const mc::Matrix4 m = load_matrix(file);
    mc::ApproxResult res;
    std::string label;
    if (mode == "mueller") {
        res = mc::approx_mueller(m, resolution, tol);
        label = "M(mu)";
    } else if (mode == "invertible") {
        res = mc::make_invertible(m, tol);
        label = "M(inv)";
    } else if (mode == "mueller-inv") {
        res = mc::approx_invertible_mueller(m, resolution, tol);
        label = "M(mu-inv)";
    } else {  // primitive
        res.output = mc::approx_primitive(m, n, resolution, tol);
        res.changed = true;
        res.epsilon_used = 2.0 / n;
        res.path = mc::ApproxPath::ShiftedByE11;
        label = "M(pri)";
    }
    const std::filesystem::path in(file);
    const std::filesystem::path out =
        in.parent_path() / (in.stem().string() + "." + mode + ".txt");
    write_file(out.string(), mc::render_matrix(res.output));
    emit(mc::approx_result_json(res, mode, label, out.string()));
    return kExitHolds;
}

int run_qgrid(const std::string& file, int resolution, const std::string& out,
              const mc::Tolerances& tol) {
    const mc::Matrix4 m = load_matrix(file);
    const std::string csv = mc::qgrid_csv(m, resolution, tol);
    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    return kExitHolds;
}

int run_ecm(const std::string& m_file, const std::string& aw_file,
            const std::string& amw_file, const std::string& out, int resolution,
            const mc::Tolerances& tol) {
    mc::CalibrationInput input;
    input.M = load_matrix(m_file);
    input.aw = load_matrix(aw_file);
    input.amw = load_matrix(amw_file);
    if (std::abs(input.M(0, 0)) <= tol.zero_tol)
        std::cerr << "warning: entry (1,1) of the target matrix is zero; continuing, the "
                     "repair operators handle singular inputs\n";

    const mc::CalibrationResult result = mc::calibrate(input, resolution, tol);
    const nlohmann::json doc = mc::to_json(result);
    emit(doc);
    if (!out.empty()) write_file(out, doc.dump(2) + "\n");

    const double norm = mc::spectral_norm(result.new_M_final);
    const bool invertible = std::abs(result.new_M_final.determinant()) >
                            tol.zero_tol * norm * norm * norm * norm;
    return result.mueller_report.verdict && invertible ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cone-side diagnostics and calibration for polarized-light matrices"};
    app.require_subcommand(1);
    const mc::Tolerances tol = env_tolerances();

    std::string file, out_path;
    std::string m_file, aw_file, amw_file;
    std::string mode = "mueller";
    int resolution = 1001;
    int n = 1;
    double tol_override = tol.zero_tol;

    auto* check_stokes = app.add_subcommand("check-stokes", "classify a 4-vector against the cone");
    check_stokes->add_option("file", file, "one line with 4 numbers")->required();

    auto* check_mueller = app.add_subcommand("check-mueller", "run the sampled Mueller certificate");
    check_mueller->add_option("file", file, "matrix file")->required();
    check_mueller->add_option("--resolution", resolution, "disk grid resolution (default 1001)");
    check_mueller->add_option("--tol", tol_override, "zero tolerance override");

    auto* norm_cmd = app.add_subcommand("norm", "spectral norm of a matrix");
    norm_cmd->add_option("file", file, "matrix file")->required();

    auto* spectral = app.add_subcommand("spectral", "dominant-eigenvalue diagnostics");
    spectral->add_option("file", file, "matrix file")->required();

    auto* irreducible = app.add_subcommand("irreducible", "cone irreducibility test");
    irreducible->add_option("file", file, "matrix file")->required();
    irreducible->add_option("--resolution", resolution, "certificate grid resolution");

    auto* primitive = app.add_subcommand("primitive", "cone primitivity test");
    primitive->add_option("file", file, "matrix file")->required();
    primitive->add_option("--resolution", resolution, "certificate grid resolution");

    auto* approx = app.add_subcommand("approx", "approximation operators");
    approx->add_option("file", file, "matrix file")->required();
    approx->add_option("--mode", mode, "mueller | invertible | mueller-inv | primitive")
        ->check(CLI::IsMember({"mueller", "invertible", "mueller-inv", "primitive"}))
        ->required();
    approx->add_option("--n", n, "primitivity shift denominator (mode primitive)")
        ->check(CLI::PositiveNumber);
    approx->add_option("--resolution", resolution, "certificate grid resolution");

    auto* qgrid = app.add_subcommand("qgrid", "CSV dump of the certificate grid");
    qgrid->add_option("file", file, "matrix file")->required();
    qgrid->add_option("--resolution", resolution, "disk grid resolution (default 1001)");
    qgrid->add_option("--out", out_path, "output CSV path (stdout when omitted)");

    auto* ecm = app.add_subcommand("ecm", "eigenvalue calibration pipeline");
    ecm->add_option("M", m_file, "target calibration matrix file")->required();
    ecm->add_option("aw", aw_file, "measurement without sample")->required();
    ecm->add_option("amw", amw_file, "measurement with sample")->required();
    ecm->add_option("--out", out_path, "also write the JSON report here");
    ecm->add_option("--resolution", resolution, "certificate grid resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    mc::Tolerances effective = tol;
    effective.zero_tol = tol_override;

    try {
        if (check_stokes->parsed()) return run_check_stokes(file, effective);
        if (check_mueller->parsed()) return run_check_mueller(file, resolution, effective);
        if (norm_cmd->parsed()) return run_norm(file);
        if (spectral->parsed()) return run_spectral(file, effective);
        if (irreducible->parsed())
            return run_cone_spectrum_test(file, resolution, false, effective);
        if (primitive->parsed())
            return run_cone_spectrum_test(file, resolution, true, effective);
        if (approx->parsed()) return run_approx(file, mode, n, resolution, effective);
        if (qgrid->parsed()) return run_qgrid(file, resolution, out_path, effective);
        if (ecm->parsed())
            return run_ecm(m_file, aw_file, amw_file, out_path, resolution, effective);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
