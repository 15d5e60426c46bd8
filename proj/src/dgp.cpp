#include "itsc/dgp.hpp"

#include <cmath>
#include <string>

#include "itsc/errors.hpp"

namespace itsc {

namespace {

constexpr double kPhi[2][2] = {{0.2, -0.1}, {0.1, 0.2}};
constexpr double kGamma[2][2] = {{-0.6, 0.3}, {0.3, 0.6}};

inline std::pair<double, double> mat2(const double m[2][2], std::pair<double, double> v) {
    return {m[0][0] * v.first + m[0][1] * v.second, m[1][0] * v.first + m[1][1] * v.second};
}

std::string rho_tag(double rho) {
    std::string s = "rho=" + std::to_string(rho);
    while (s.size() > 5 && s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

void DgpSpec::check() const {
    if (length < 2) throw ConfigError("dgp: T must be >= 2");
    if (l_series < 1) throw ConfigError("dgp: l_series must be >= 1");
    if (std::abs(rho) > 1.0) throw ConfigError("dgp: |rho| must be <= 1");
    if (burn_in < 0) throw ConfigError("dgp: burn_in must be >= 0");
}

int LabeledDataset::label_of(std::size_t i) const {
    const auto& lab = multivariate() ? mv[i].label : uni[i].label;
    return lab.value_or(-1);
}

std::pair<double, double> residual_pair(double rho, Rng& rng) {
    // Cholesky of [[1, rho/2], [rho/2, 1/4]]: L = [[1, 0], [rho/2, sqrt(1-rho^2)/2]]
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    const double c = z1;
    const double r = 0.5 * rho * z1 + 0.5 * std::sqrt(std::max(0.0, 1.0 - rho * rho)) * z2;
    return {c, r};
}

std::vector<std::pair<double, double>> sample_residuals(double rho, int T, Rng& rng) {
    if (std::abs(rho) > 1.0) throw ConfigError("sample_residuals: |rho| must be <= 1");
    std::vector<std::pair<double, double>> out(static_cast<std::size_t>(T));
    for (auto& p : out) p = residual_pair(rho, rng);
    return out;
}

namespace detail {

CenterRange dgp1_center_range(int T, int l_series, const TermSource& z, const PairSource& eps) {
    CenterRange cr;
    cr.center.resize(static_cast<std::size_t>(T));
    cr.range.resize(static_cast<std::size_t>(T));
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    for (int t = 0; t < T; ++t) {
        // l = 1 term is deterministic: pi_1 * Phi * (1, 1)^T
        auto x = mat2(kPhi, {1.0, 1.0});
        double c = inv_sqrt3 * x.first;
        double r = inv_sqrt3 * x.second;
        for (int l = 2; l <= l_series; ++l) {
            const double pi_l = inv_sqrt3 / (static_cast<double>(l) * l);
            auto zf = mat2(kPhi, z(t, l));
            c += pi_l * zf.first;
            r += pi_l * zf.second;
        }
        auto e = eps(t);
        cr.center[t] = c + e.first;
        cr.range[t] = r + e.second;
    }
    return cr;
}

CenterRange dgp2_center_range(int T, int burn_in, const PairSource& eps) {
    CenterRange cr;
    cr.center.reserve(static_cast<std::size_t>(T));
    cr.range.reserve(static_cast<std::size_t>(T));
    std::pair<double, double> x{0.0, 0.0};
    std::pair<double, double> eps_prev{0.0, 0.0};
    for (int t = 1; t <= burn_in + T; ++t) {
        const auto e = eps(t);
        const auto phix = mat2(kPhi, x);
        const auto ge = mat2(kGamma, eps_prev);
        x = {phix.first + e.first - ge.first, phix.second + e.second - ge.second};
        eps_prev = e;
        if (t > burn_in) {
            cr.center.push_back(x.first);
            cr.range.push_back(x.second);
        }
    }
    return cr;
}

CenterRange dgp3_center_range(int T, const PairSource& eps) {
    CenterRange cr;
    cr.center.resize(static_cast<std::size_t>(T));
    cr.range.resize(static_cast<std::size_t>(T));
    std::pair<double, double> eps_prev{0.0, 0.0};  // eps_0 = 0
    for (int t = 1; t <= T; ++t) {
        const auto e = eps(t);
        const auto ge = mat2(kGamma, eps_prev);
        cr.center[t - 1] = e.first - ge.first;
        cr.range[t - 1] = e.second - ge.second;
        eps_prev = e;
    }
    return cr;
}

}  // namespace detail

IntervalSeries gen_dgp1(const DgpSpec& spec) {
    spec.check();
    Rng rng(spec.seed);
    // Draw order per t: z_{t,2}..z_{t,L}, then eps_t.
    auto z = [&](int, int) { return residual_pair(spec.rho, rng); };
    auto eps = [&](int) { return residual_pair(spec.rho, rng); };
    return from_center_range(detail::dgp1_center_range(spec.length, spec.l_series, z, eps), true);
}

IntervalSeries gen_dgp2(const DgpSpec& spec) {
    spec.check();
    Rng rng(spec.seed);
    auto eps = [&](int) { return residual_pair(spec.rho, rng); };
    return from_center_range(detail::dgp2_center_range(spec.length, spec.burn_in, eps), true);
}

IntervalSeries gen_dgp3(const DgpSpec& spec) {
    spec.check();
    Rng rng(spec.seed);
    auto eps = [&](int) { return residual_pair(spec.rho, rng); };
    return from_center_range(detail::dgp3_center_range(spec.length, eps), true);
}

IntervalSeries gen_dgp(const DgpSpec& spec) {
    switch (spec.kind) {
        case DgpKind::Dgp1: return gen_dgp1(spec);
        case DgpKind::Dgp2: return gen_dgp2(spec);
        case DgpKind::Dgp3: return gen_dgp3(spec);
    }
    throw ConfigError("unknown dgp kind");
}

LabeledDataset build_dataset(DgpKind kind, const std::vector<double>& rhos, int per_class, int T,
                             std::uint64_t seed, int l_series, int burn_in) {
    if (rhos.empty()) throw ConfigError("build_dataset: rhos must be nonempty");
    if (per_class < 1) throw ConfigError("build_dataset: per_class must be >= 1");
    LabeledDataset ds;
    ds.classes = static_cast<int>(rhos.size());
    for (double rho : rhos) ds.class_map.push_back(rho_tag(rho));
    for (int c = 0; c < ds.classes; ++c) {
        for (int k = 0; k < per_class; ++k) {
            DgpSpec spec;
            spec.kind = kind;
            spec.rho = rhos[static_cast<std::size_t>(c)];
            spec.length = T;
            spec.l_series = l_series;
            spec.burn_in = burn_in;
            spec.seed = stream_seed(seed, static_cast<std::uint64_t>(c) * per_class + k);
            IntervalSeries s = gen_dgp(spec);
            s.label = c;
            ds.uni.push_back(std::move(s));
        }
    }
    return ds;
}

LabeledDataset build_multivariate(MvScenario scenario, const std::vector<double>& rhos,
                                  int per_class, int T, std::uint64_t seed, int l_series,
                                  int burn_in) {
    if (rhos.empty()) throw ConfigError("build_multivariate: rhos must be nonempty");
    if (per_class < 1) throw ConfigError("build_multivariate: per_class must be >= 1");
    static const DgpKind kKinds[3] = {DgpKind::Dgp1, DgpKind::Dgp2, DgpKind::Dgp3};
    LabeledDataset ds;
    const bool c1 = scenario == MvScenario::C1;
    const int K = c1 ? 3 : static_cast<int>(rhos.size());
    const int p = c1 ? static_cast<int>(rhos.size()) : 3;
    ds.classes = K;
    for (int c = 0; c < K; ++c)
        ds.class_map.push_back(c1 ? "DGP" + std::to_string(c + 1) : rho_tag(rhos[c]));
    for (int c = 0; c < K; ++c) {
        for (int k = 0; k < per_class; ++k) {
            MvIntervalSeries s;
            s.label = c;
            for (int d = 0; d < p; ++d) {
                DgpSpec spec;
                spec.kind = c1 ? kKinds[c] : kKinds[d];
                spec.rho = c1 ? rhos[static_cast<std::size_t>(d)] : rhos[static_cast<std::size_t>(c)];
                spec.length = T;
                spec.l_series = l_series;
                spec.burn_in = burn_in;
                spec.seed = stream_seed(seed, static_cast<std::uint64_t>(c) * per_class + k,
                                        static_cast<std::uint64_t>(d));
                IntervalSeries dim = gen_dgp(spec);
                s.lower.push_back(std::move(dim.lower));
                s.upper.push_back(std::move(dim.upper));
            }
            ds.mv.push_back(std::move(s));
        }
    }
    return ds;
}

}  // namespace itsc
