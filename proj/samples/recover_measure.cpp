// Forward model then inverse: a measure file goes through the D(mu) Gram
// matrix, the shift defect and back to atoms.
//
//   recover_measure data/three_atoms.json

#include <cstdio>

#include "dbr/dbr.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s measure.json [N]\n", argv[0]);
        return 2;
    }
    try {
        const auto mu = dbr::io::measure_from_json(dbr::io::read_json_file(argv[1]));
        const std::size_t n = argc > 2 ? std::stoul(argv[2]) : 2 * mu.size() + 4;
        const auto defect = dbr::defect_matrix(dbr::dmu_gram(mu, n));
        std::printf("defect rank: %d (atoms: %zu)\n", dbr::numerical_rank(defect, 1e-8), mu.size());

        const auto rec = dbr::recover_atoms(defect);
        for (const auto& a : rec.measure.atoms())
            std::printf("  %.12f %+.12fi  weight %.12f\n", a.location.value().real(), a.location.value().imag(),
                        a.weight);
        std::printf("residual %.3e, condition %.3g\n", rec.residual, rec.condition);
        if (const auto m = dbr::match_measures(mu, rec.measure))
            std::printf("location error %.3e, weight error %.3e\n", m->location_error, m->weight_error);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
