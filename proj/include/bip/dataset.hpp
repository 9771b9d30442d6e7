#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "bip/selector.hpp"

namespace bip {

/// One environment's samples: n_e rows of p features plus the outcome.
struct EnvBlock {
    int env_id = 0;  // original label as given in the input
    Matrix X;        // n_e x p
    Vector y;        // n_e
};

/// Feature/outcome observations grouped by environment label.
///
/// Environments are re-indexed to 0..E-1 in first-appearance order when read
/// from files; env_id keeps the original label. Instances are treated as
/// immutable after validation and are safe to share across workers.
struct MultiEnvDataset {
    std::vector<EnvBlock> environments;
    int p = 0;

    int num_envs() const { return static_cast<int>(environments.size()); }

    Eigen::Index total_rows() const {
        Eigen::Index n = 0;
        for (const auto& env : environments) n += env.y.size();
        return n;
    }
};

/// Checks all dataset invariants; returns the dataset unchanged on success.
inline const MultiEnvDataset& validate_dataset(const MultiEnvDataset& data) {
    if (data.environments.empty())
        throw Error(ErrorCode::EmptyEnvironment, "dataset has no environments");
    if (data.p <= 0) throw Error(ErrorCode::ShapeMismatch, "feature count must be positive");
    for (std::size_t e = 0; e < data.environments.size(); ++e) {
        const auto& env = data.environments[e];
        const std::string where = "environment " + std::to_string(e);
        if (env.y.size() < 1)
            throw Error(ErrorCode::EmptyEnvironment, where + " has no rows");
        if (env.X.rows() != env.y.size())
            throw Error(ErrorCode::ShapeMismatch, where + ": rows(X) != len(y)");
        if (env.X.cols() != data.p)
            throw Error(ErrorCode::ShapeMismatch, where + ": feature count differs from dataset p");
        if (!env.X.allFinite() || !env.y.allFinite())
            throw Error(ErrorCode::NonFiniteValue, where + " contains NaN or Inf");
    }
    return data;
}

}  // namespace bip
