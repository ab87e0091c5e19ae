// Largest eigenvalue of the forms B_1..B_n for the shift on D(mu).

#include <cstdio>

#include "dbr/dbr.hpp"

int main(int argc, char** argv) {
    const char* path = argc > 1 ? argv[1] : nullptr;
    const auto mu = path ? dbr::io::measure_from_json(dbr::io::read_json_file(path))
                         : dbr::PointMassMeasure::single(1.0, std::polar(1.0, 0.5));
    const auto g = dbr::dmu_gram(mu, 32);
    for (int n = 1; n <= 6; ++n) {
        const auto c = dbr::certify_nsd(dbr::hyperexpansive_form(g, n), 1e-10);
        std::printf("B_%d  max eigenvalue %+.3e  %s\n", n, c.witness, c.pass ? "nsd" : "NOT nsd");
    }
    return 0;
}
