#include "exforge/optimizer.hpp"

#include <cmath>

namespace exforge {

OptimizerConfig OptimizerConfig::sgd(double lr, double momentum, double weight_decay) {
    OptimizerConfig cfg;
    cfg.kind = OptimizerKind::sgd_momentum;
    cfg.learning_rate = lr;
    cfg.momentum = momentum;
    cfg.weight_decay = weight_decay;
    return cfg;
}

OptimizerConfig OptimizerConfig::adam(double lr, double weight_decay) {
    OptimizerConfig cfg;
    cfg.kind = OptimizerKind::adam;
    cfg.learning_rate = lr;
    cfg.weight_decay = weight_decay;
    return cfg;
}

Optimizer::Optimizer(OptimizerConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.learning_rate <= 0.0) throw ConfigError("optimizer: learning rate must be positive");
    if (cfg_.momentum < 0.0 || cfg_.momentum >= 1.0)
        throw ConfigError("optimizer: momentum must be in [0,1)");
    if (cfg_.weight_decay < 0.0) throw ConfigError("optimizer: weight decay must be >= 0");
    for (const auto& m : cfg_.schedule)
        if (m.fraction < 0.0 || m.fraction > 1.0 || m.factor <= 0.0)
            throw ConfigError("optimizer: bad schedule milestone");
}

double Optimizer::effective_lr(double progress) const {
    double lr = cfg_.learning_rate;
    for (const auto& m : cfg_.schedule)
        if (m.fraction <= progress) lr *= m.factor;
    return lr;
}

void Optimizer::validate(const Network& net, const std::vector<LayerGrads>& grads) {
    if (grads.size() != net.layer_count())
        throw ValidationError("optimizer: gradient list does not match layer count");
    for (std::size_t l = 0; l < grads.size(); ++l) {
        if (!grads[l].weights.same_shape(net.layers()[l].weights) ||
            !grads[l].bias.same_shape(net.layers()[l].bias))
            throw ValidationError("optimizer: gradient shapes do not mirror parameters");
    }
    if (first_moment_.empty()) {
        for (const auto& layer : net.layers()) {
            first_moment_.push_back(Tensor(layer.weights.shape()));
            first_moment_.push_back(Tensor(layer.bias.shape()));
            if (cfg_.kind == OptimizerKind::adam) {
                second_moment_.push_back(Tensor(layer.weights.shape()));
                second_moment_.push_back(Tensor(layer.bias.shape()));
            }
        }
    } else if (first_moment_.size() != 2 * net.layer_count()) {
        throw ValidationError("optimizer: bound to a different network shape");
    }
}

void Optimizer::step(Network& net, const std::vector<LayerGrads>& grads, double progress) {
    validate(net, grads);
    const double lr = effective_lr(progress);
    ++step_;

    auto update = [&](Tensor& theta, const Tensor& grad, Tensor& m1, Tensor* m2) {
        for (std::size_t i = 0; i < theta.size(); ++i) {
            double g = grad[i] + cfg_.weight_decay * theta[i];
            switch (cfg_.kind) {
                case OptimizerKind::sgd_momentum: {
                    m1[i] = cfg_.momentum * m1[i] + g;
                    theta[i] -= lr * m1[i];
                    break;
                }
                case OptimizerKind::adam: {
                    m1[i] = cfg_.beta1 * m1[i] + (1.0 - cfg_.beta1) * g;
                    (*m2)[i] = cfg_.beta2 * (*m2)[i] + (1.0 - cfg_.beta2) * g * g;
                    const double t = static_cast<double>(step_);
                    const double m_hat = m1[i] / (1.0 - std::pow(cfg_.beta1, t));
                    const double v_hat = (*m2)[i] / (1.0 - std::pow(cfg_.beta2, t));
                    theta[i] -= lr * m_hat / (std::sqrt(v_hat) + cfg_.eps);
                    break;
                }
            }
        }
    };

    auto& layers = net.mutable_layers();
    for (std::size_t l = 0; l < layers.size(); ++l) {
        Tensor* m2w = cfg_.kind == OptimizerKind::adam ? &second_moment_[2 * l] : nullptr;
        Tensor* m2b = cfg_.kind == OptimizerKind::adam ? &second_moment_[2 * l + 1] : nullptr;
        update(layers[l].weights, grads[l].weights, first_moment_[2 * l], m2w);
        update(layers[l].bias, grads[l].bias, first_moment_[2 * l + 1], m2b);
    }
}

}  // namespace exforge
