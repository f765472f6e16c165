#include "exforge/network.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "exforge/rng.hpp"
#include "exforge/util.hpp"

namespace exforge {

namespace {

constexpr int kCheckpointVersion = 1;

double apply_activation(Activation a, double z) {
    switch (a) {
        case Activation::identity: return z;
        case Activation::relu: return z > 0.0 ? z : 0.0;
        case Activation::tanh: return std::tanh(z);
    }
    return z;
}

// Derivative expressed in terms of the pre-activation z. relu'(0) := 0.
double activation_derivative(Activation a, double z) {
    switch (a) {
        case Activation::identity: return 1.0;
        case Activation::relu: return z > 0.0 ? 1.0 : 0.0;
        case Activation::tanh: {
            const double t = std::tanh(z);
            return 1.0 - t * t;
        }
    }
    return 1.0;
}

// out[b,:] += x[b,:] * W^T, i.e. the affine map of one dense layer.
void affine_forward(const DenseLayer& layer, const Tensor& x, Tensor& out) {
    const std::size_t batch = x.rows();
    const std::size_t in = layer.in_dim();
    const std::size_t n_out = layer.out_dim();
    for (std::size_t b = 0; b < batch; ++b) {
        const double* xb = x.row_ptr(b);
        double* ob = out.row_ptr(b);
        for (std::size_t o = 0; o < n_out; ++o) {
            const double* w = layer.weights.row_ptr(o);
            double acc = layer.bias[o];
            for (std::size_t i = 0; i < in; ++i) acc += w[i] * xb[i];
            ob[o] = acc;
        }
    }
}

}  // namespace

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::identity: return "identity";
        case Activation::relu: return "relu";
        case Activation::tanh: return "tanh";
    }
    return "identity";
}

Activation activation_from_name(const std::string& name) {
    if (name == "identity") return Activation::identity;
    if (name == "relu") return Activation::relu;
    if (name == "tanh") return Activation::tanh;
    throw ValidationError("unknown activation: " + name);
}

Network::Network(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
    validate_chain();
}

void Network::validate_chain() const {
    if (layers_.empty()) throw ShapeError("network must have at least one layer");
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const DenseLayer& layer = layers_[l];
        if (layer.weights.rank() != 2 || layer.bias.rank() != 1)
            throw ShapeError("layer " + std::to_string(l) + ": bad parameter ranks");
        if (layer.bias.size() != layer.out_dim())
            throw ShapeError("layer " + std::to_string(l) + ": bias/weights mismatch");
        if (l > 0 && layers_[l - 1].out_dim() != layer.in_dim())
            throw ShapeError("layer " + std::to_string(l) + ": does not chain with previous");
    }
}

Network Network::mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                     std::size_t output_dim, Activation hidden_act, Activation output_act,
                     std::uint64_t seed) {
    if (input_dim == 0 || output_dim == 0)
        throw ShapeError("mlp: input and output dims must be positive");
    Rng rng(mix_seed(seed, 0xA11C));
    std::vector<std::size_t> dims;
    dims.push_back(input_dim);
    for (std::size_t h : hidden) dims.push_back(h);
    dims.push_back(output_dim);

    std::vector<DenseLayer> layers;
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        const std::size_t in = dims[l];
        const std::size_t out = dims[l + 1];
        DenseLayer layer;
        layer.weights = Tensor::matrix(out, in);
        layer.bias = Tensor({out});
        layer.activation = (l + 2 == dims.size()) ? output_act : hidden_act;
        const double bound = std::sqrt(6.0 / static_cast<double>(in + out));
        for (std::size_t i = 0; i < layer.weights.size(); ++i)
            layer.weights[i] = rng.uniform(-bound, bound);
        layers.push_back(std::move(layer));
    }
    return Network(std::move(layers));
}

std::size_t Network::parameter_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers_) n += layer.weights.size() + layer.bias.size();
    return n;
}

Tensor Network::forward(const Tensor& x) const { return forward_cached(x).post.back(); }

ForwardCache Network::forward_cached(const Tensor& x) const {
    if (x.rank() != 2) throw ShapeError("forward: expected batch x dim input");
    if (x.cols() != input_dim())
        throw ShapeError("forward: input width " + std::to_string(x.cols()) +
                         " != network input dim " + std::to_string(input_dim()));
    require_finite(x, "forward");

    ForwardCache cache;
    cache.input = x;
    cache.revision = revision_;
    const Tensor* current = &cache.input;
    for (const DenseLayer& layer : layers_) {
        Tensor pre = Tensor::matrix(x.rows(), layer.out_dim());
        affine_forward(layer, *current, pre);
        Tensor post = pre;
        if (layer.activation != Activation::identity) {
            for (std::size_t i = 0; i < post.size(); ++i)
                post[i] = apply_activation(layer.activation, post[i]);
        }
        cache.pre.push_back(std::move(pre));
        cache.post.push_back(std::move(post));
        current = &cache.post.back();
    }
    return cache;
}

BackwardResult Network::backward(const ForwardCache& cache, const Tensor& upstream,
                                 UpstreamAt at) const {
    if (cache.revision != revision_)
        throw ValidationError("backward: cache is stale (parameters changed since forward)");
    if (cache.pre.size() != layers_.size() || cache.input.rank() != 2)
        throw ValidationError("backward: cache does not match this network");
    if (upstream.rows() != cache.input.rows() || upstream.cols() != output_dim())
        throw ShapeError("backward: upstream shape mismatch");
    require_finite(upstream, "backward");

    const std::size_t batch = cache.input.rows();
    BackwardResult result;
    result.params.resize(layers_.size());

    // delta = dL/d(pre-activation of current layer)
    Tensor delta = upstream;
    for (std::size_t l = layers_.size(); l-- > 0;) {
        const DenseLayer& layer = layers_[l];
        const bool skip_activation = (at == UpstreamAt::preactivation && l + 1 == layers_.size());
        if (!skip_activation && layer.activation != Activation::identity) {
            const Tensor& pre = cache.pre[l];
            for (std::size_t i = 0; i < delta.size(); ++i)
                delta[i] *= activation_derivative(layer.activation, pre[i]);
        }

        const Tensor& layer_input = (l == 0) ? cache.input : cache.post[l - 1];
        LayerGrads& grads = result.params[l];
        grads.weights = Tensor::matrix(layer.out_dim(), layer.in_dim());
        grads.bias = Tensor({layer.out_dim()});
        for (std::size_t b = 0; b < batch; ++b) {
            const double* db = delta.row_ptr(b);
            const double* ib = layer_input.row_ptr(b);
            for (std::size_t o = 0; o < layer.out_dim(); ++o) {
                const double d = db[o];
                if (d == 0.0) continue;
                grads.bias[o] += d;
                double* gw = grads.weights.row_ptr(o);
                for (std::size_t i = 0; i < layer.in_dim(); ++i) gw[i] += d * ib[i];
            }
        }

        // Propagate to the layer input: next_delta = delta * W.
        Tensor next = Tensor::matrix(batch, layer.in_dim());
        for (std::size_t b = 0; b < batch; ++b) {
            const double* db = delta.row_ptr(b);
            double* nb = next.row_ptr(b);
            for (std::size_t o = 0; o < layer.out_dim(); ++o) {
                const double d = db[o];
                if (d == 0.0) continue;
                const double* w = layer.weights.row_ptr(o);
                for (std::size_t i = 0; i < layer.in_dim(); ++i) nb[i] += d * w[i];
            }
        }
        delta = std::move(next);
    }
    result.input_grad = std::move(delta);
    return result;
}

void Network::center_output_layer() {
    DenseLayer& out = mutable_layers().back();
    const std::size_t k = out.out_dim();
    for (std::size_t j = 0; j < out.in_dim(); ++j) {
        double mean = 0.0;
        for (std::size_t o = 0; o < k; ++o) mean += out.weights.at(o, j);
        mean /= static_cast<double>(k);
        for (std::size_t o = 0; o < k; ++o) out.weights.at(o, j) -= mean;
    }
    double bias_mean = 0.0;
    for (std::size_t o = 0; o < k; ++o) bias_mean += out.bias[o];
    bias_mean /= static_cast<double>(k);
    for (std::size_t o = 0; o < k; ++o) out.bias[o] -= bias_mean;
}

std::string network_to_json(const Network& net) {
    JsonWriter w;
    w.begin_object();
    w.key("version").value(kCheckpointVersion);
    w.key("input_dim").value(static_cast<std::uint64_t>(net.input_dim()));
    w.key("output_dim").value(static_cast<std::uint64_t>(net.output_dim()));
    w.key("layers").begin_array();
    for (const DenseLayer& layer : net.layers()) {
        w.begin_object();
        w.key("activation").value(activation_name(layer.activation));
        w.key("weights").begin_array();
        for (std::size_t o = 0; o < layer.out_dim(); ++o) {
            w.begin_array();
            for (std::size_t i = 0; i < layer.in_dim(); ++i) w.value(layer.weights.at(o, i));
            w.end_array();
        }
        w.end_array();
        w.key("bias").value_array(layer.bias.data());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

Network network_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || doc.value("version", 0) != kCheckpointVersion)
        throw IoError("checkpoint: unsupported version");
    std::vector<DenseLayer> layers;
    for (const auto& jl : doc.at("layers")) {
        DenseLayer layer;
        layer.activation = activation_from_name(jl.at("activation").get<std::string>());
        const auto& jw = jl.at("weights");
        const std::size_t out = jw.size();
        if (out == 0) throw IoError("checkpoint: empty weight matrix");
        const std::size_t in = jw.at(0).size();
        layer.weights = Tensor::matrix(out, in);
        for (std::size_t o = 0; o < out; ++o) {
            const auto& row = jw.at(o);
            if (row.size() != in) throw IoError("checkpoint: ragged weight matrix");
            for (std::size_t i = 0; i < in; ++i) layer.weights.at(o, i) = row.at(i).get<double>();
        }
        layer.bias = Tensor({out});
        const auto& jb = jl.at("bias");
        if (jb.size() != out) throw IoError("checkpoint: bias length mismatch");
        for (std::size_t o = 0; o < out; ++o) layer.bias[o] = jb.at(o).get<double>();
        layers.push_back(std::move(layer));
    }
    Network net(std::move(layers));
    const auto want_in = doc.at("input_dim").get<std::size_t>();
    const auto want_out = doc.at("output_dim").get<std::size_t>();
    if (net.input_dim() != want_in || net.output_dim() != want_out)
        throw IoError("checkpoint: declared dims do not match layers");
    return net;
}

void save_network(const Network& net, const std::string& path) {
    write_file(path, network_to_json(net));
}

Network load_network(const std::string& path) { return network_from_json(read_file(path)); }

}  // namespace exforge
