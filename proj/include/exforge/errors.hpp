#pragma once

#include <stdexcept>
#include <string>

namespace exforge {

// Shape/dimension mismatches between tensors, layers or batches.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Bad values: non-finite inputs, stale caches, arguments out of range.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Unsupported or inconsistent configuration (family/dim combos, tau < 1, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Query refused because the ledger cannot fund it. No partial charges.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Query input outside the oracle's declared [-1,1]^d domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// White-box diagnostic requested while the oracle runs in strict mode.
struct PolicyError : std::runtime_error {
    explicit PolicyError(const std::string& what) : std::runtime_error(what) {}
};

// Training diverged (non-finite loss) or could not proceed.
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

// File / socket / serialization failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exforge
