#include "exforge/data.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "exforge/rng.hpp"
#include "exforge/util.hpp"

namespace exforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clip_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// 6x6 glyphs for digits 0..9, row-major, '1' = lit pixel.
const char* kGlyphs[10] = {
    "011110"
    "100001"
    "100001"
    "100001"
    "100001"
    "011110",

    "001100"
    "011100"
    "001100"
    "001100"
    "001100"
    "111111",

    "011110"
    "100001"
    "000110"
    "001100"
    "011000"
    "111111",

    "111110"
    "000001"
    "001110"
    "000001"
    "000001"
    "111110",

    "000110"
    "001110"
    "010110"
    "100110"
    "111111"
    "000110",

    "111111"
    "100000"
    "111110"
    "000001"
    "100001"
    "011110",

    "011110"
    "100000"
    "111110"
    "100001"
    "100001"
    "011110",

    "111111"
    "000001"
    "000010"
    "000100"
    "001000"
    "001000",

    "011110"
    "100001"
    "011110"
    "100001"
    "100001"
    "011110",

    "011110"
    "100001"
    "100001"
    "011111"
    "000001"
    "011110",
};

// Class centers for the blobs family: rejection-sampled so no two classes
// collapse onto each other, deterministic per seed.
std::vector<Tensor> blob_centers(std::size_t k, std::size_t d, Rng& rng) {
    std::vector<Tensor> centers;
    double min_dist = 0.9;
    for (std::size_t c = 0; c < k; ++c) {
        Tensor best({d});
        double best_sep = -1.0;
        for (int attempt = 0; attempt < 64; ++attempt) {
            Tensor cand({d});
            for (std::size_t j = 0; j < d; ++j) cand[j] = rng.uniform(-0.75, 0.75);
            double sep = 1e30;
            for (const Tensor& prev : centers) {
                double dist2 = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    const double diff = cand[j] - prev[j];
                    dist2 += diff * diff;
                }
                sep = std::min(sep, std::sqrt(dist2));
            }
            if (sep > best_sep) {
                best_sep = sep;
                best = cand;
            }
            if (sep >= min_dist) break;
        }
        centers.push_back(std::move(best));
    }
    return centers;
}

void fill_blobs(Dataset& ds, const SyntheticSpec& spec, Rng& rng, Rng& center_rng) {
    const auto centers = blob_centers(spec.k, spec.d, center_rng);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const int label = ds.labels[i];
        for (std::size_t j = 0; j < spec.d; ++j)
            ds.inputs.at(i, j) = clip_unit(centers[label][j] + rng.normal(0.0, spec.noise_sigma));
    }
}

void fill_spirals(Dataset& ds, const SyntheticSpec& spec, Rng& rng) {
    // K interleaved arms, radius 0.1..0.92, 1.6 turns total.
    const double turns = 1.6;
    for (std::size_t i = 0; i < spec.n; ++i) {
        const int label = ds.labels[i];
        const double t = rng.uniform();
        const double radius = 0.10 + 0.82 * t;
        const double angle = 2.0 * kPi * label / static_cast<double>(spec.k) + turns * 2.0 * kPi * t;
        ds.inputs.at(i, 0) = clip_unit(radius * std::cos(angle) + rng.normal(0.0, spec.noise_sigma));
        ds.inputs.at(i, 1) = clip_unit(radius * std::sin(angle) + rng.normal(0.0, spec.noise_sigma));
    }
}

void fill_grid_digits(Dataset& ds, const SyntheticSpec& spec, Rng& rng) {
    for (std::size_t i = 0; i < spec.n; ++i) {
        const char* glyph = kGlyphs[ds.labels[i]];
        for (std::size_t j = 0; j < spec.d; ++j) {
            const double base = glyph[j] == '1' ? 0.8 : -0.8;
            ds.inputs.at(i, j) = clip_unit(base + rng.normal(0.0, spec.noise_sigma));
        }
    }
}

void fill_uniform_noise(Dataset& ds, const SyntheticSpec& spec, Rng& rng) {
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.d; ++j) ds.inputs.at(i, j) = rng.uniform(-1.0, 1.0);
}

void fill_standard_normal_noise(Dataset& ds, const SyntheticSpec& spec, Rng& rng) {
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.d; ++j) ds.inputs.at(i, j) = clip_unit(rng.normal());
}

}  // namespace

const char* family_name(DataFamily f) {
    switch (f) {
        case DataFamily::blobs: return "blobs";
        case DataFamily::spirals: return "spirals";
        case DataFamily::grid_digits: return "grid-digits";
        case DataFamily::uniform_noise: return "uniform-noise";
        case DataFamily::standard_normal_noise: return "standard-normal-noise";
    }
    return "blobs";
}

DataFamily family_from_name(const std::string& name) {
    if (name == "blobs") return DataFamily::blobs;
    if (name == "spirals") return DataFamily::spirals;
    if (name == "grid-digits") return DataFamily::grid_digits;
    if (name == "uniform-noise") return DataFamily::uniform_noise;
    if (name == "standard-normal-noise") return DataFamily::standard_normal_noise;
    throw ConfigError("unknown dataset family: " + name);
}

std::string SyntheticSpec::describe() const {
    return std::string(family_name(family)) + "-n" + std::to_string(n) + "-d" + std::to_string(d) +
           "-k" + std::to_string(k) + "-s" + std::to_string(seed);
}

Dataset generate(const SyntheticSpec& spec, Split split) {
    if (spec.n == 0 || spec.d == 0 || spec.k == 0)
        throw ConfigError("generate: n, d, k must be positive");
    if (spec.family == DataFamily::spirals && spec.d != 2)
        throw ConfigError("generate: spirals require d = 2");
    if (spec.family == DataFamily::grid_digits && (spec.d != 36 || spec.k > 10))
        throw ConfigError("generate: grid-digits require d = 36 and k <= 10");
    if (spec.noise_sigma < 0.0) throw ConfigError("generate: noise_sigma must be >= 0");

    Dataset ds;
    ds.name = spec.describe();
    ds.d = spec.d;
    ds.k = spec.k;
    ds.split = split;
    ds.inputs = Tensor::matrix(spec.n, spec.d);
    ds.labels.resize(spec.n);
    // Round-robin labels: class-balanced up to the remainder.
    for (std::size_t i = 0; i < spec.n; ++i) ds.labels[i] = static_cast<int>(i % spec.k);

    Rng rng(mix_seed(spec.seed, split == Split::train ? 0xD1 : 0xD2));
    // Blob centers are shared between splits: same task, fresh samples.
    Rng center_rng(mix_seed(spec.seed, 0xC0));

    switch (spec.family) {
        case DataFamily::blobs: fill_blobs(ds, spec, rng, center_rng); break;
        case DataFamily::spirals: fill_spirals(ds, spec, rng); break;
        case DataFamily::grid_digits: fill_grid_digits(ds, spec, rng); break;
        case DataFamily::uniform_noise: fill_uniform_noise(ds, spec, rng); break;
        case DataFamily::standard_normal_noise: fill_standard_normal_noise(ds, spec, rng); break;
    }
    return ds;
}

Tensor interpolate(const Tensor& x_target, const Tensor& x_surrogate, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw ValidationError("interpolate: lambda must lie in [0,1]");
    require_same_shape(x_target, x_surrogate, "interpolate");
    Tensor out(x_target.shape());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (1.0 - lambda) * x_target[i] + lambda * x_surrogate[i];
    return out;
}

Dataset skew_classes(const Dataset& ds, const std::vector<int>& keep) {
    if (keep.empty()) throw ValidationError("skew_classes: keep set must be non-empty");
    for (int c : keep)
        if (c < 0 || static_cast<std::size_t>(c) >= ds.k)
            throw ValidationError("skew_classes: class out of range");

    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (std::find(keep.begin(), keep.end(), ds.labels[i]) != keep.end()) rows.push_back(i);

    Dataset out;
    out.name = ds.name + "-skew";
    out.d = ds.d;
    out.k = ds.k;
    out.split = ds.split;
    out.inputs = rows.empty() ? Tensor() : Tensor::matrix(rows.size(), ds.d);
    out.labels.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < ds.d; ++j) out.inputs.at(r, j) = ds.inputs.at(rows[r], j);
        out.labels.push_back(ds.labels[rows[r]]);
    }
    return out;
}

Tensor adapt_shape(const Tensor& x, std::size_t d_dst) {
    if (x.rank() != 1) throw ShapeError("adapt_shape: expected a rank-1 tensor");
    if (d_dst == 0) throw ShapeError("adapt_shape: destination dim must be positive");
    Tensor out({d_dst});
    for (std::size_t j = 0; j < d_dst; ++j) out[j] = x[j % x.size()];
    return out;
}

Tensor adapt_shape_rows(const Tensor& x, std::size_t d_dst) {
    if (x.rank() != 2) throw ShapeError("adapt_shape_rows: expected a rank-2 tensor");
    if (d_dst == 0) throw ShapeError("adapt_shape_rows: destination dim must be positive");
    Tensor out = Tensor::matrix(x.rows(), d_dst);
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const double* src = x.row_ptr(r);
        double* dst = out.row_ptr(r);
        for (std::size_t j = 0; j < d_dst; ++j) dst[j] = src[j % x.cols()];
    }
    return out;
}

std::string dataset_to_json(const Dataset& ds) {
    JsonWriter w;
    w.begin_object();
    w.key("name").value(ds.name);
    w.key("d").value(static_cast<std::uint64_t>(ds.d));
    w.key("k").value(static_cast<std::uint64_t>(ds.k));
    w.key("split").value(ds.split == Split::train ? "train" : "test");
    w.key("inputs").begin_array();
    for (std::size_t r = 0; r < ds.size(); ++r) {
        w.begin_array();
        for (std::size_t j = 0; j < ds.d; ++j) w.value(ds.inputs.at(r, j));
        w.end_array();
    }
    w.end_array();
    w.key("labels").begin_array();
    for (int label : ds.labels) w.value(label);
    w.end_array();
    w.end_object();
    return w.str();
}

Dataset dataset_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Dataset ds;
    ds.name = doc.at("name").get<std::string>();
    ds.d = doc.at("d").get<std::size_t>();
    ds.k = doc.at("k").get<std::size_t>();
    const std::string split = doc.at("split").get<std::string>();
    if (split != "train" && split != "test") throw IoError("dataset: bad split tag");
    ds.split = split == "train" ? Split::train : Split::test;
    const auto& ji = doc.at("inputs");
    const auto& jl = doc.at("labels");
    if (ji.size() != jl.size()) throw IoError("dataset: inputs/labels length mismatch");
    ds.inputs = Tensor::matrix(ji.size(), ds.d);
    ds.labels.resize(jl.size());
    for (std::size_t r = 0; r < ji.size(); ++r) {
        const auto& row = ji.at(r);
        if (row.size() != ds.d) throw IoError("dataset: row width mismatch");
        for (std::size_t j = 0; j < ds.d; ++j) ds.inputs.at(r, j) = row.at(j).get<double>();
        ds.labels[r] = jl.at(r).get<int>();
        if (ds.labels[r] < 0 || static_cast<std::size_t>(ds.labels[r]) >= ds.k)
            throw IoError("dataset: label out of range");
    }
    return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    write_file(path, dataset_to_json(ds));
}

Dataset load_dataset(const std::string& path) { return dataset_from_json(read_file(path)); }

}  // namespace exforge
