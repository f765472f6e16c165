#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exforge/tensor.hpp"

namespace exforge {

enum class Activation { identity, relu, tanh };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct DenseLayer {
    Tensor weights;  // out x in
    Tensor bias;     // out
    Activation activation = Activation::identity;

    std::size_t in_dim() const { return weights.cols(); }
    std::size_t out_dim() const { return weights.rows(); }
};

// Per-layer parameter gradients, shapes mirroring DenseLayer.
struct LayerGrads {
    Tensor weights;
    Tensor bias;
};

// Activations recorded by forward_cached; consumed by backward. Tied to the
// parameter revision it was computed against so stale caches are rejected.
struct ForwardCache {
    Tensor input;                       // batch x in
    std::vector<Tensor> pre;            // per layer: batch x out, before activation
    std::vector<Tensor> post;           // per layer: batch x out, after activation
    std::uint64_t revision = 0;

    const Tensor& output() const { return post.back(); }
    const Tensor& last_preactivation() const { return pre.back(); }
};

struct BackwardResult {
    std::vector<LayerGrads> params;
    Tensor input_grad;  // batch x in
};

// Where the upstream gradient of backward() is anchored. `preactivation`
// injects at the last layer's pre-activation values, which is how the attack
// pushes an estimated image gradient through a tanh-terminated generator.
enum class UpstreamAt { output, preactivation };

// Ordered dense layers. Parameters are only mutated through
// mutable_layers()/optimizer steps, which bump the revision counter used to
// detect stale forward caches.
class Network {
public:
    Network() = default;
    explicit Network(std::vector<DenseLayer> layers);

    // Glorot-style uniform init, biases zero, deterministic per seed.
    static Network mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                       std::size_t output_dim, Activation hidden_act, Activation output_act,
                       std::uint64_t seed);

    std::size_t input_dim() const { return layers_.empty() ? 0 : layers_.front().in_dim(); }
    std::size_t output_dim() const { return layers_.empty() ? 0 : layers_.back().out_dim(); }
    std::size_t layer_count() const { return layers_.size(); }
    std::size_t parameter_count() const;

    const std::vector<DenseLayer>& layers() const { return layers_; }
    std::vector<DenseLayer>& mutable_layers() {
        ++revision_;
        return layers_;
    }
    std::uint64_t revision() const { return revision_; }

    // Applies every layer (affine + its configured activation). For a
    // classifier built with an identity output layer this yields logits.
    Tensor forward(const Tensor& x) const;

    ForwardCache forward_cached(const Tensor& x) const;

    // Exact gradients of sum(upstream ⊙ anchor) for parameters and input,
    // where anchor is the output (default) or the last pre-activation.
    BackwardResult backward(const ForwardCache& cache, const Tensor& upstream,
                            UpstreamAt at = UpstreamAt::output) const;

    // Subtracts each output column's mean from the final layer so the mean
    // logit starts at zero; cross-entropy updates and weight decay preserve
    // that property, which is what makes mean-corrected logit recovery sharp.
    void center_output_layer();

private:
    void validate_chain() const;

    std::vector<DenseLayer> layers_;
    std::uint64_t revision_ = 0;
};

// Versioned JSON checkpoint; round-trips are value-exact for finite doubles.
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& text);
void save_network(const Network& net, const std::string& path);
Network load_network(const std::string& path);

}  // namespace exforge
