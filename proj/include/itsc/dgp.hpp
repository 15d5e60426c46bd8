#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "itsc/core.hpp"
#include "itsc/rng.hpp"

namespace itsc {

enum class DgpKind { Dgp1, Dgp2, Dgp3 };

struct DgpSpec {
    DgpKind kind = DgpKind::Dgp1;
    double rho = 0.0;        // correlation between center and range residuals
    int length = 100;        // T
    int l_series = 100;      // DGP1 infinite-sum truncation
    int burn_in = 200;       // DGP2 discarded warm-up steps
    std::uint64_t seed = 0;

    void check() const;
};

struct LabeledDataset {
    std::vector<IntervalSeries> uni;
    std::vector<MvIntervalSeries> mv;
    int classes = 0;
    std::vector<std::string> class_map;  // label -> generating rho / scenario

    bool multivariate() const { return !mv.empty(); }
    std::size_t size() const { return multivariate() ? mv.size() : uni.size(); }
    int label_of(std::size_t i) const;
};

// One draw of (eps_c, eps_r) ~ N(0, [[1, rho/2], [rho/2, 1/4]]) via the
// closed-form Cholesky factor; |rho| = 1 degrades to the rank-1 case.
std::pair<double, double> residual_pair(double rho, Rng& rng);

std::vector<std::pair<double, double>> sample_residuals(double rho, int T, Rng& rng);

IntervalSeries gen_dgp1(const DgpSpec& spec);
IntervalSeries gen_dgp2(const DgpSpec& spec);
IntervalSeries gen_dgp3(const DgpSpec& spec);
IntervalSeries gen_dgp(const DgpSpec& spec);

// One class per rho, per_class samples each, labels by position in rhos.
// Sample i uses the RNG stream derived from (seed, i); see stream_seed.
LabeledDataset build_dataset(DgpKind kind, const std::vector<double>& rhos, int per_class, int T,
                             std::uint64_t seed, int l_series = 100, int burn_in = 200);

enum class MvScenario { C1, C2 };

// C1: classes = the three DGPs, dimensions = rhos.
// C2: classes = rhos, dimensions = the three DGPs.
// Dimension d of sample i uses the stream derived from (seed, i, d).
LabeledDataset build_multivariate(MvScenario scenario, const std::vector<double>& rhos,
                                  int per_class, int T, std::uint64_t seed, int l_series = 100,
                                  int burn_in = 200);

namespace detail {

using PairSource = std::function<std::pair<double, double>(int)>;       // t -> (c, r)
using TermSource = std::function<std::pair<double, double>(int, int)>;  // (t, l) -> (c, r)

// Deterministic cores, exposed so tests can inject zero or constant noise.
CenterRange dgp1_center_range(int T, int l_series, const TermSource& z, const PairSource& eps);
CenterRange dgp2_center_range(int T, int burn_in, const PairSource& eps);
CenterRange dgp3_center_range(int T, const PairSource& eps);

}  // namespace detail

}  // namespace itsc
