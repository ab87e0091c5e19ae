#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV encodings of measures, symbols, mates, certificates and
 * matrices.
 *
 * Field names are fixed:
 *   measure   {"atoms":[{"re":..,"im":..,"weight":..}, ...]}
 *   symbol    {"c":{"re":..,"im":..},"gamma":{..},"beta":{..}}
 *   synthesis {"alpha":{"re":..,"im":..},"lambda":{..}}
 *   mate      {"rho":..,"sigma":{"re":..,"im":..}}
 *   certificate {"kind":..,"pass":..,"witness":..,"tolerance":..,"context":{..}}
 * CSV matrices are row major with each cell written as two columns "re,im".
 */

#include <cctype>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbr/debranges.hpp"
#include "dbr/dirichlet.hpp"
#include "dbr/moments.hpp"
#include "dbr/operator_lab.hpp"
#include "dbr/synthesis.hpp"

namespace dbr::io {

using Json = nlohmann::ordered_json;

/// Adding 0.0 maps -0.0 to +0.0 so conjugates of real values print as 0.0.
inline Json complex_to_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re")) throw std::invalid_argument("complex value needs a \"re\" field");
    return {j.at("re").get<double>(), j.value("im", 0.0)};
}

inline Json measure_to_json(const PointMassMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back(Json{{"re", a.location.value().real()}, {"im", a.location.value().imag()}, {"weight", a.weight}});
    return Json{{"atoms", atoms}};
}

inline PointMassMeasure measure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
        throw std::invalid_argument("measure JSON needs an \"atoms\" array");
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back(Atom{DiskPoint(complex_from_json(a)), a.at("weight").get<double>()});
    return PointMassMeasure(std::move(atoms));
}

inline Json symbol_to_json(const MoebiusSymbol& b) {
    return Json{{"c", complex_to_json(b.c())}, {"gamma", complex_to_json(b.gamma())}, {"beta", complex_to_json(b.beta())}};
}

/// Raw coefficients; validity is checked by the caller (validate_symbol).
struct SymbolCoefficients {
    Complex c, gamma, beta;
};

inline SymbolCoefficients symbol_coefficients_from_json(const Json& j) {
    for (const char* key : {"c", "gamma", "beta"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("symbol JSON is missing \"") + key + "\"");
    return {complex_from_json(j.at("c")), complex_from_json(j.at("gamma")), complex_from_json(j.at("beta"))};
}

inline SynthesisInput synthesis_input_from_json(const Json& j) {
    return SynthesisInput{complex_from_json(j.at("alpha")), DiskPoint(complex_from_json(j.at("lambda")))};
}

inline Json synthesis_input_to_json(const SynthesisInput& in) {
    return Json{{"alpha", complex_to_json(in.alpha)}, {"lambda", complex_to_json(in.lambda.value())}};
}

inline Json mate_to_json(const PythagoreanPair& p) {
    return Json{{"rho", p.rho()}, {"sigma", complex_to_json(p.sigma())}};
}

inline Json certificate_to_json(const Certificate& c) {
    Json j{{"kind", c.kind}, {"pass", c.pass}, {"witness", c.witness}, {"tolerance", c.tolerance}};
    j["context"] = c.context;
    return j;
}

inline Json recovery_to_json(const RecoveryResult& r) {
    Json j = measure_to_json(r.measure);
    j["residual"] = r.residual;
    j["condition"] = r.condition;
    return j;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline void write_matrix_csv(std::ostream& os, const CMatrix& m) {
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c).real() << ',' << m(r, c).imag();
        }
        os << '\n';
    }
}

inline CMatrix read_matrix_csv(std::istream& is) {
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad CSV number \"" + cell + "\"");
            }
        }
        if (vals.size() % 2 != 0) throw std::invalid_argument("CSV row has an odd number of columns");
        std::vector<Complex> row;
        for (std::size_t k = 0; k < vals.size(); k += 2) row.emplace_back(vals[k], vals[k + 1]);
        rows.push_back(std::move(row));
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != n)
            throw std::invalid_argument("CSV matrix is not square");
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

inline void write_matrix_csv_file(const std::string& path, const CMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_matrix_csv(out, m);
}

inline CMatrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix_csv(in);
}

/**
 * @brief Parses "re", "re+imi", "re-imi", "imi" or "i" forms, e.g. "0.3+0.4i",
 * "-0.7", "2i", "-1e-3-2.5i".
 */
inline Complex parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty complex value");
    auto to_double = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != part.size()) throw std::invalid_argument("cannot parse complex value \"" + text + "\"");
        return v;
    };
    if (s.back() != 'i') return {to_double(s), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, to_double(body)};
    return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

}  // namespace dbr::io
