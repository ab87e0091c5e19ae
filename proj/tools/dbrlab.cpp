// dbrlab: batch driver for the D(mu) / H(b) toolkit.
//
// Every subcommand writes one JSON document (to --out or stdout). Commands
// that emit certificates exit 0 only when all of them pass, 1 when any fails
// and 2 on input errors.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dbr/dbr.hpp"
#include "dbr/io.hpp"

namespace {

using dbr::Complex;
using dbr::io::Json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::map<std::string, double> default_tolerances() {
    return {
        {"mate", 1e-12},          // |a|^2 + |b|^2 - 1 on roots of unity
        {"norm_equality", 1e-9},  // max |G_D(mu) - G_H(b)|
        {"nsd", 1e-10},           // largest eigenvalue of B_n
        {"rank", 1e-8},           // relative singular value cut-off
        {"moment", 1e-12},        // defect vs moment matrix, relative to max(1, mass)
        {"recovery", 1e-8},       // atom and weight error
        {"kernel", 1e-8},         // relative error of kernel norms
    };
}

struct Common {
    std::string out;
    std::vector<std::string> tol_overrides;
    std::map<std::string, double> tol = default_tolerances();

    void resolve() {
        for (const auto& kv : tol_overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw InputError("--tol expects key=value, got \"" + kv + "\"");
            const std::string key = kv.substr(0, eq);
            if (!tol.count(key)) throw InputError("unknown tolerance key \"" + key + "\"");
            double v = 0.0;
            try {
                v = std::stod(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw InputError("bad tolerance value in \"" + kv + "\"");
            }
            if (!(v > 0.0) || !std::isfinite(v)) throw InputError("tolerance \"" + key + "\" must be positive");
            tol[key] = v;
        }
    }
};

void emit(const Common& common, const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (common.out.empty() || common.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(common.out);
    if (!f) throw InputError("cannot write " + common.out);
    f << text;
}

int status_of(const std::vector<dbr::Certificate>& certs) {
    for (const auto& c : certs)
        if (!c.pass) return 1;
    return 0;
}

Json certificates_json(const std::vector<dbr::Certificate>& certs) {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(dbr::io::certificate_to_json(c));
    return arr;
}

dbr::PointMassMeasure load_measure(const std::string& path) { return dbr::io::measure_from_json(dbr::io::read_json_file(path)); }

// Single-atom input given either as a measure file or as --alpha/--lambda.
struct AtomSource {
    std::string measure;
    std::string alpha;
    std::string lambda;

    void add_to(CLI::App* app) {
        app->add_option("--measure", measure, "measure JSON with at most one atom")->check(CLI::ExistingFile);
        app->add_option("--alpha", alpha, "atom amplitude, weight = |alpha|^2");
        app->add_option("--lambda", lambda, "atom location in the closed disk");
    }

    dbr::SynthesisInput get() const {
        if (!measure.empty()) {
            if (!alpha.empty() || !lambda.empty()) throw InputError("give either --measure or --alpha/--lambda, not both");
            const auto mu = load_measure(measure);
            if (mu.size() > 1)
                throw InputError("measure has " + std::to_string(mu.size()) +
                                 " atoms; H(b) of a Moebius symbol has a rank-1 shift defect, so only "
                                 "single-atom measures |alpha|^2 delta_lambda have a matching symbol");
            if (mu.empty()) return {0.0, dbr::DiskPoint(0.0)};
            const auto& a = mu.atoms().front();
            return {std::sqrt(a.weight), a.location};
        }
        if (alpha.empty() || lambda.empty()) throw InputError("need --measure or both --alpha and --lambda");
        return {dbr::io::parse_complex(alpha), dbr::DiskPoint(dbr::io::parse_complex(lambda))};
    }
};

int cmd_mate(const Common& common, const std::string& symbol_path) {
    const auto raw = dbr::io::symbol_coefficients_from_json(dbr::io::read_json_file(symbol_path));
    const auto st = dbr::validate_symbol(raw.c, raw.gamma, raw.beta);
    if (!st.nonextreme) throw InputError(st.reason);
    const dbr::MoebiusSymbol b(raw.c, raw.gamma, raw.beta);
    const auto pair = dbr::pythagorean_mate(b);

    dbr::Certificate c;
    c.kind = "pythagorean_identity";
    c.tolerance = common.tol.at("mate");
    c.witness = pair.unit_circle_deviation(64);
    c.pass = c.witness <= c.tolerance;
    c.context["samples"] = 64;
    c.context["ratio_factor"] = pair.ratio_factor();

    Json doc = dbr::io::mate_to_json(pair);
    doc["certificates"] = certificates_json({c});
    emit(common, doc);
    return status_of({c});
}

int cmd_synthesize(const Common& common, const std::string& alpha, const std::string& lambda) {
    const Complex lam = dbr::io::parse_complex(lambda);
    if (std::abs(lam) > 1.0 + dbr::kDiskSlack) throw InputError("|lambda| > 1: atom must lie in the closed disk");
    const auto out = dbr::synthesize_symbol({dbr::io::parse_complex(alpha), dbr::DiskPoint(lam)});
    emit(common, dbr::io::symbol_to_json(out.symbol()));
    return 0;
}

int cmd_verify_equality(const Common& common, const AtomSource& src, int n, const std::string& gram_dir) {
    const auto in = src.get();
    const auto cert = dbr::verify_norm_equality(in, static_cast<std::size_t>(n), common.tol.at("norm_equality"));
    if (!gram_dir.empty()) {
        std::filesystem::create_directories(gram_dir);
        const auto mu = dbr::PointMassMeasure::single(in.alpha, in.lambda.value());
        const auto pair = dbr::pythagorean_mate(dbr::synthesize_symbol(in).symbol());
        dbr::io::write_matrix_csv_file(gram_dir + "/dmu_gram.csv", dbr::dmu_gram(mu, n).entries);
        dbr::io::write_matrix_csv_file(gram_dir + "/hb_gram.csv", dbr::hb_gram(pair, n).entries);
    }
    Json doc;
    doc["input"] = dbr::io::synthesis_input_to_json(in);
    doc["certificates"] = certificates_json({cert});
    emit(common, doc);
    return status_of({cert});
}

int cmd_certify(const Common& common, const std::string& measure_path, int n, int n_max) {
    if (n_max < 1 || n_max >= n) throw InputError("--n-max must satisfy 1 <= n_max < N");
    const auto mu = load_measure(measure_path);
    const auto g = dbr::dmu_gram(mu, n);
    std::vector<dbr::Certificate> certs;
    for (int k = 1; k <= n_max; ++k) {
        auto c = dbr::certify_nsd(dbr::hyperexpansive_form(g, k), common.tol.at("nsd"));
        certs.push_back(std::move(c));
    }

    const dbr::CMatrix defect = dbr::defect_matrix(g);
    dbr::Certificate rank;
    rank.kind = "defect_rank";
    rank.tolerance = common.tol.at("rank");
    const int r = dbr::numerical_rank(defect, rank.tolerance);
    rank.witness = std::abs(r - static_cast<int>(mu.size()));
    rank.pass = rank.witness == 0.0;
    rank.context["rank"] = r;
    rank.context["atoms"] = mu.size();
    certs.push_back(std::move(rank));

    dbr::Certificate moments;
    moments.kind = "moment_identity";
    moments.tolerance = common.tol.at("moment");
    const double scale = std::max(1.0, mu.total_mass());
    moments.witness = dbr::max_abs_entry(defect - dbr::moment_matrix(mu, static_cast<std::size_t>(n - 1))) / scale;
    moments.pass = moments.witness <= moments.tolerance;
    moments.context["scale"] = scale;
    certs.push_back(std::move(moments));

    Json doc;
    doc["measure"] = dbr::io::measure_to_json(mu);
    doc["N"] = n;
    doc["n_max"] = n_max;
    doc["certificates"] = certificates_json(certs);
    emit(common, doc);
    return status_of(certs);
}

int cmd_recover(const Common& common, const std::string& moments_path, const std::string& measure_path, int n,
                const std::string& k_text) {
    if (moments_path.empty() == measure_path.empty()) throw InputError("give exactly one of --moments or --measure");
    std::optional<int> k;
    if (k_text != "auto") {
        try {
            std::size_t used = 0;
            k = std::stoi(k_text, &used);
            if (used != k_text.size()) throw std::invalid_argument(k_text);
        } catch (const std::exception&) {
            throw InputError("--k expects \"auto\" or a non-negative integer");
        }
        if (*k < 0) throw InputError("--k expects \"auto\" or a non-negative integer");
    }
    std::optional<dbr::PointMassMeasure> mu;
    dbr::CMatrix m;
    if (!moments_path.empty()) {
        m = dbr::io::read_matrix_csv_file(moments_path);
    } else {
        mu = load_measure(measure_path);
        m = dbr::defect_matrix(dbr::dmu_gram(*mu, static_cast<std::size_t>(n) + 1));
    }
    const auto rec = dbr::recover_atoms(m, k, common.tol.at("rank"));
    Json doc = dbr::io::recovery_to_json(rec);
    if (!mu) {
        emit(common, doc);
        return 0;
    }
    dbr::Certificate c;
    c.kind = "recovery_roundtrip";
    c.tolerance = common.tol.at("recovery");
    const auto match = dbr::match_measures(*mu, rec.measure);
    if (match) {
        c.witness = std::max(match->location_error, match->weight_error);
        c.context["location_error"] = match->location_error;
        c.context["weight_error"] = match->weight_error;
    } else {
        c.witness = std::numeric_limits<double>::infinity();
        c.context["error"] = "atom count mismatch";
    }
    c.pass = c.witness <= c.tolerance;
    doc["certificates"] = certificates_json({c});
    emit(common, doc);
    return status_of({c});
}

double relative_error(double closed, double truncated) {
    return std::abs(closed - truncated) / std::max(std::abs(closed), std::numeric_limits<double>::min());
}

int cmd_kernel_norms(const Common& common, const AtomSource& src, std::vector<std::string> w_text, int degree,
                     int samples, unsigned seed) {
    const auto in = src.get();
    std::vector<Complex> ws;
    for (const auto& t : w_text) ws.push_back(dbr::io::parse_complex(t));
    if (ws.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> radius(0.0, 0.8), angle(-std::numbers::pi, std::numbers::pi);
        for (int i = 0; i < samples; ++i) ws.push_back(std::polar(radius(rng), angle(rng)));
    }
    const auto mu = dbr::PointMassMeasure::single(in.alpha, in.lambda.value());
    const auto pair = dbr::pythagorean_mate(dbr::synthesize_symbol(in).symbol());

    dbr::Certificate dm, hb;
    dm.kind = "dmu_kernel_norm";
    hb.kind = "hb_kernel_norm";
    dm.tolerance = hb.tolerance = common.tol.at("kernel");
    Json rows = Json::array();
    for (const Complex w : ws) {
        if (!(std::abs(w) < 1.0)) throw InputError("kernel point must satisfy |w| < 1");
        const auto k = dbr::ComplexPoly::cauchy_kernel(w, static_cast<std::size_t>(degree));
        const double d_closed = dbr::dmu_cauchy_norm(in.alpha, in.lambda, w);
        const double d_trunc = dbr::dirichlet_integral(k, mu);
        const double h_closed = dbr::hb_cauchy_norm(pair, w);
        const double h_trunc = dbr::hb_norm_sq(k, pair);
        const double d_err = d_closed == 0.0 ? std::abs(d_trunc) : relative_error(d_closed, d_trunc);
        const double h_err = relative_error(h_closed, h_trunc);
        dm.witness = std::max(dm.witness, d_err);
        hb.witness = std::max(hb.witness, h_err);
        rows.push_back(Json{{"w", dbr::io::complex_to_json(w)},
                            {"dmu_closed", d_closed},
                            {"dmu_truncated", d_trunc},
                            {"hb_closed", h_closed},
                            {"hb_truncated", h_trunc}});
    }
    dm.pass = dm.witness <= dm.tolerance;
    hb.pass = hb.witness <= hb.tolerance;
    dm.context["degree"] = hb.context["degree"] = degree;

    Json doc;
    doc["input"] = dbr::io::synthesis_input_to_json(in);
    doc["points"] = rows;
    doc["certificates"] = certificates_json({dm, hb});
    emit(common, doc);
    return status_of({dm, hb});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dbrlab: Dirichlet-type and de Branges-Rovnyak space verifications"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out,-o", common.out, "output file (default stdout)");
    app.add_option("--tol", common.tol_overrides, "tolerance override key=value (repeatable)");

    std::string symbol_path;
    auto* mate = app.add_subcommand("mate", "Pythagorean mate of a Moebius symbol");
    mate->add_option("--symbol", symbol_path, "symbol JSON")->required()->check(CLI::ExistingFile);

    std::string alpha, lambda;
    auto* synth = app.add_subcommand("synthesize", "symbol b = A z / (1 - B z) for mu = |alpha|^2 delta_lambda");
    synth->add_option("--alpha", alpha)->required();
    synth->add_option("--lambda", lambda)->required();

    AtomSource eq_src;
    int eq_n = 24;
    std::string gram_dir;
    auto* verify = app.add_subcommand("verify-equality", "compare D(mu) and H(b) monomial Grams");
    eq_src.add_to(verify);
    verify->add_option("--N", eq_n, "Gram size")->check(CLI::Range(2, 4096));
    verify->add_option("--gram-dir", gram_dir, "directory for dmu_gram.csv and hb_gram.csv");

    std::string cert_measure;
    int cert_n = 24, n_max = 5;
    auto* certify = app.add_subcommand("certify", "hyperexpansivity, defect rank and moment identity");
    certify->add_option("--measure", cert_measure)->required()->check(CLI::ExistingFile);
    certify->add_option("--N", cert_n, "Gram size")->check(CLI::Range(2, 4096));
    certify->add_option("--n-max", n_max, "highest form order")->check(CLI::Range(1, dbr::kMaxBinomialOrder));

    std::string moments_path, rec_measure, k_text = "auto";
    int rec_n = 24;
    auto* recover = app.add_subcommand("recover", "recover atoms from a moment matrix");
    recover->add_option("--moments", moments_path, "moment matrix CSV")->check(CLI::ExistingFile);
    recover->add_option("--measure", rec_measure, "measure JSON (forward model, then recover)")
        ->check(CLI::ExistingFile);
    recover->add_option("--N", rec_n, "moment matrix size for --measure")->check(CLI::Range(1, 4096));
    recover->add_option("--k", k_text, "atom count or auto");

    AtomSource kn_src;
    std::vector<std::string> w_text;
    int degree = 300, samples = 10;
    unsigned seed = 2024;
    auto* kernel = app.add_subcommand("kernel-norms", "closed-form vs truncated Cauchy-kernel norms");
    kn_src.add_to(kernel);
    kernel->add_option("--w", w_text, "kernel point (repeatable)");
    kernel->add_option("--degree", degree, "kernel truncation degree")->check(CLI::Range(1, 100000));
    kernel->add_option("--samples", samples, "random points when no --w is given")->check(CLI::Range(1, 10000));
    kernel->add_option("--seed", seed, "seed for random points");

    CLI11_PARSE(app, argc, argv);

    try {
        common.resolve();
        if (*mate) return cmd_mate(common, symbol_path);
        if (*synth) return cmd_synthesize(common, alpha, lambda);
        if (*verify) return cmd_verify_equality(common, eq_src, eq_n, gram_dir);
        if (*certify) return cmd_certify(common, cert_measure, cert_n, n_max);
        if (*recover) return cmd_recover(common, moments_path, rec_measure, rec_n, k_text);
        if (*kernel) return cmd_kernel_norms(common, kn_src, w_text, degree, samples, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
