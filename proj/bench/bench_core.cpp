// Benchmark: serial reference loop vs the OpenMP per-vertex kernel on
// generated KE graphs, with a result-equality check at each size.
//
//   ./core_bench [n] [mu] [p] [seed]

#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "kecore/cli.hpp"
#include "kecore/core_solver.hpp"
#include "kecore/generator.hpp"

using namespace kecore;

namespace {

double time_once(const Graph& g, int workers) {
    double started = omp_get_wtime();
    if (workers == 0)
        compute_core_serial(g);
    else
        compute_core(g, CoreMode::Auto, workers);
    return omp_get_wtime() - started;
}

} // namespace

int main(int argc, char** argv) {
    GenSpec spec{2000, 700, 0.01, 7, GenFlavor::Ke};
    if (argc > 1) spec.n = std::atoi(argv[1]);
    if (argc > 2) spec.mu = std::atoi(argv[2]);
    if (argc > 3) spec.extra_edge_prob = std::atof(argv[3]);
    if (argc > 4) spec.seed = std::strtoull(argv[4], nullptr, 10);

    Graph g = gen_ke(spec);
    std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
              << " mu=" << spec.mu << " p=" << spec.extra_edge_prob << " seed=" << spec.seed
              << "\n";

    CoreResult reference = compute_core_serial(g);
    std::string reference_doc = cli::core_result_to_json(g, reference).dump();
    std::cout << "algorithm: " << to_string(reference.algorithm)
              << ", |core|=" << reference.core.size() << "\n\n";

    double serial = time_once(g, 0);
    std::cout << "serial reference:  " << serial << " s\n";

    std::vector<int> worker_counts{1, 2, 4, 8};
    if (int hw = omp_get_max_threads(); hw > 8) worker_counts.push_back(hw);
    for (int workers : worker_counts) {
        CoreResult result = compute_core(g, CoreMode::Auto, workers);
        if (cli::core_result_to_json(g, result).dump() != reference_doc) {
            std::cerr << "MISMATCH against serial reference at workers=" << workers << "\n";
            return 1;
        }
        double t = time_once(g, workers);
        std::cout << "omp workers=" << workers << ":    " << t << " s  (speedup "
                  << serial / t << "x)\n";
    }
    return 0;
}
