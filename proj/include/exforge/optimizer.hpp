#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exforge/network.hpp"

namespace exforge {

enum class OptimizerKind { sgd_momentum, adam };

// Milestones are fractions of the total budget/steps, matching the
// "decay at 0.1x, 0.3x, 0.5x of training" convention.
struct ScheduleMilestone {
    double fraction = 0.0;
    double factor = 1.0;
};

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::sgd_momentum;
    double learning_rate = 0.1;
    double momentum = 0.0;      // sgd only, in [0,1)
    double weight_decay = 0.0;  // applied as g += wd * theta before the update
    double beta1 = 0.9;         // adam
    double beta2 = 0.999;       // adam
    double eps = 1e-8;          // adam
    std::vector<ScheduleMilestone> schedule;

    static OptimizerConfig sgd(double lr, double momentum = 0.0, double weight_decay = 0.0);
    static OptimizerConfig adam(double lr, double weight_decay = 0.0);
};

// One optimizer instance per trained network. Moment buffers are allocated on
// first step and must keep matching the parameter shapes afterwards.
class Optimizer {
public:
    explicit Optimizer(OptimizerConfig cfg);

    const OptimizerConfig& config() const { return cfg_; }
    std::uint64_t steps_taken() const { return step_; }

    // learning_rate times the product of factors of all milestones with
    // fraction <= progress.
    double effective_lr(double progress) const;

    // progress in [0,1]: fraction of the total budget consumed so far.
    void step(Network& net, const std::vector<LayerGrads>& grads, double progress);

private:
    void validate(const Network& net, const std::vector<LayerGrads>& grads);

    OptimizerConfig cfg_;
    std::uint64_t step_ = 0;
    // Flattened per-layer buffers: [w momentum/m, b momentum/m, w v, b v, ...]
    std::vector<Tensor> first_moment_;
    std::vector<Tensor> second_moment_;
};

}  // namespace exforge
