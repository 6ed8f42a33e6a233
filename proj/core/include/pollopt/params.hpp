#ifndef POLLOPT_PARAMS_HPP
#define POLLOPT_PARAMS_HPP

#include <json.hpp>

#include "pollopt/errors.hpp"

namespace pollopt {

/// Arrival/service rates and the two waiting-cost rates of the two-queue
/// polling system. Immutable after construction; construction validates
/// lambda > 0, mu > 0, c >= 0, d >= 0 and rho = lambda/mu < 1.
class ModelParams {
  public:
    ModelParams(double lambda, double mu, double c, double d);

    double lambda() const { return lambda_; }
    double mu() const { return mu_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double rho() const { return lambda_ / mu_; }

    bool operator==(const ModelParams&) const = default;

  private:
    double lambda_;
    double mu_;
    double c_;
    double d_;
};

ModelParams validate_params(double lambda, double mu, double c, double d);

void to_json(nlohmann::json& j, const ModelParams& p);
ModelParams params_from_json(const nlohmann::json& j);

/// Probability of joining queue 1 (no information) or the busy queue
/// (partial information). rho1/rho2 are the per-queue traffic intensities
/// under the split.
class SplitProbability {
  public:
    explicit SplitProbability(double p);

    double p() const { return p_; }
    double p1() const { return p_; }
    double p2() const { return 1.0 - p_; }
    double rho1(const ModelParams& m) const { return m.rho() * p_; }
    double rho2(const ModelParams& m) const { return m.rho() * (1.0 - p_); }

  private:
    double p_;
};

/// Comparison with the tie tolerance used by the policy classifications:
/// exact equality always ties; otherwise a relative tolerance of 1e-12.
bool classification_tie(double a, double b);

}  // namespace pollopt

#endif
