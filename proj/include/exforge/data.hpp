#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exforge/tensor.hpp"

namespace exforge {

enum class DataFamily { blobs, spirals, grid_digits, uniform_noise, standard_normal_noise };

const char* family_name(DataFamily f);
DataFamily family_from_name(const std::string& name);

enum class Split { train, test };

// Generation is a pure function of the spec: equal specs give bit-identical
// datasets. The test split derives its stream from the same seed.
struct SyntheticSpec {
    DataFamily family = DataFamily::blobs;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    double noise_sigma = 0.1;
    std::uint64_t seed = 0;

    std::string describe() const;
};

struct Dataset {
    std::string name;
    std::size_t d = 0;
    std::size_t k = 0;
    Split split = Split::train;
    Tensor inputs;               // n x d, every coordinate in [-1,1]
    std::vector<int> labels;     // n entries in {0..k-1}

    std::size_t size() const { return labels.size(); }
};

Dataset generate(const SyntheticSpec& spec, Split split = Split::train);

// x_in = (1-lambda) * x_t + lambda * x_s, element-wise. Shapes must already
// agree (run adapt_shape first when they do not).
Tensor interpolate(const Tensor& x_target, const Tensor& x_surrogate, double lambda);

// Keep only samples whose label is in `keep`; class count metadata unchanged.
Dataset skew_classes(const Dataset& ds, const std::vector<int>& keep);

// Tile-and-truncate a vector to the requested width (truncate when shrinking).
Tensor adapt_shape(const Tensor& x, std::size_t d_dst);
// Row-wise version for batches.
Tensor adapt_shape_rows(const Tensor& x, std::size_t d_dst);

std::string dataset_to_json(const Dataset& ds);
Dataset dataset_from_json(const std::string& text);
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace exforge
