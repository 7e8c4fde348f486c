#include "whls/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "whls/criteria.hpp"
#include "whls/kernel.hpp"
#include "whls/serialize.hpp"

namespace whls {

void SweepSpec::validate() const {
    if (p_count < 2 || q_count < 2) throw domain_error("SweepSpec: count must be >= 2");
    if (!(p_min < p_max && q_min < q_max)) throw domain_error("SweepSpec: min must be < max");
    if (!(p_min > 0.0 && q_min > 0.0)) throw domain_error("SweepSpec: p, q must be > 0");
    Params{n, alpha, sigma1, sigma2, p_min, q_min}.validate();
}

double SweepSpec::p_at(std::size_t i) const {
    return p_min + (p_max - p_min) * static_cast<double>(i) / static_cast<double>(p_count - 1);
}

double SweepSpec::q_at(std::size_t j) const {
    return q_min + (q_max - q_min) * static_cast<double>(j) / static_cast<double>(q_count - 1);
}

namespace {

std::string sweep_row(const SweepSpec& spec, double p, double q) {
    const Params params{spec.n, spec.alpha, spec.sigma1, spec.sigma2, p, q};
    const Classification c = classify(params);
    const double nan = std::nan("");
    const DerivedExponents e = c.exponents_valid ? c.exponents
                                                 : DerivedExponents{nan, nan, nan, nan};
    std::ostringstream out;
    out << format_double(p) << ',' << format_double(q) << ',' << format_double(e.theta1)
        << ',' << format_double(e.theta2) << ',' << format_double(e.M) << ','
        << format_double(params.n - params.alpha) << ',' << format_double(e.hyperbola_lhs)
        << ',' << to_string(c.general_verdict) << ',' << to_string(c.radial_verdict) << '\n';
    return out.str();
}

} // namespace

std::string run_sweep(const SweepSpec& spec, int threads) {
    spec.validate();
    const std::size_t rows = spec.p_count * spec.q_count;
    std::vector<std::string> buffer(rows);

    unsigned want = threads > 0 ? static_cast<unsigned>(threads) : default_thread_count();
    want = std::min<unsigned>(want, static_cast<unsigned>(rows));

    auto work = [&](unsigned tid) {
        for (std::size_t k = tid; k < rows; k += want) {
            const std::size_t i = k / spec.q_count, j = k % spec.q_count;
            buffer[k] = sweep_row(spec, spec.p_at(i), spec.q_at(j));
        }
    };
    if (want <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < want; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::string out = "p,q,theta1,theta2,M,n_minus_alpha,hyperbola_lhs,"
                      "general_verdict,radial_verdict\n";
    for (const std::string& row : buffer) out += row;
    return out;
}

void run_sweep_to_file(const SweepSpec& spec, const std::string& path, int threads) {
    write_text_file(path, run_sweep(spec, threads));
}

} // namespace whls
