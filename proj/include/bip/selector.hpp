#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bip/error.hpp"

namespace bip {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Binary inclusion vector z over p features.
class FeatureSelector {
  public:
    FeatureSelector() = default;

    explicit FeatureSelector(int p) : bits_(static_cast<std::size_t>(p), 0) {}

    static FeatureSelector from_bits(std::vector<std::uint8_t> bits) {
        for (auto b : bits) {
            if (b > 1) throw Error(ErrorCode::ConfigInvalid, "selector entries must be 0 or 1");
        }
        FeatureSelector z;
        z.bits_ = std::move(bits);
        return z;
    }

    static FeatureSelector from_string(const std::string& s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1')
                throw Error(ErrorCode::ConfigInvalid, "selector string must contain only 0/1");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return from_bits(std::move(bits));
    }

    int size() const { return static_cast<int>(bits_.size()); }

    /// Cardinality ||z||_0.
    int count() const {
        int c = 0;
        for (auto b : bits_) c += b;
        return c;
    }

    bool test(int j) const { return bits_[static_cast<std::size_t>(j)] != 0; }

    void set(int j, bool value) { bits_[static_cast<std::size_t>(j)] = value ? 1 : 0; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::vector<int> selected_columns() const {
        std::vector<int> cols;
        for (int j = 0; j < size(); ++j)
            if (test(j)) cols.push_back(j);
        return cols;
    }

    std::vector<int> complement_columns() const {
        std::vector<int> cols;
        for (int j = 0; j < size(); ++j)
            if (!test(j)) cols.push_back(j);
        return cols;
    }

    /// Sub-matrix x^z: the columns of X where the bit is set, in order.
    Matrix extract(const Matrix& X) const {
        if (X.cols() != size())
            throw Error(ErrorCode::DimensionMismatch, "selector length does not match columns");
        const auto cols = selected_columns();
        Matrix sub(X.rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < cols.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = X.col(cols[i]);
        return sub;
    }

    /// Sub-matrix x^{-z}: the columns where the bit is clear.
    Matrix extract_complement(const Matrix& X) const {
        if (X.cols() != size())
            throw Error(ErrorCode::DimensionMismatch, "selector length does not match columns");
        const auto cols = complement_columns();
        Matrix sub(X.rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < cols.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = X.col(cols[i]);
        return sub;
    }

    /// Bitstring with index 1 leftmost, e.g. [1,0,1] -> "101".
    std::string bit_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t j = 0; j < bits_.size(); ++j)
            if (bits_[j]) s[j] = '1';
        return s;
    }

    friend bool operator==(const FeatureSelector& a, const FeatureSelector& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const FeatureSelector& a, const FeatureSelector& b) { return !(a == b); }

    /// Lexicographic order on the bit vector (leftmost bit most significant).
    friend bool operator<(const FeatureSelector& a, const FeatureSelector& b) {
        return std::lexicographical_compare(a.bits_.begin(), a.bits_.end(), b.bits_.begin(), b.bits_.end());
    }

    /// True when the selected set is a subset of other's selected set.
    bool subset_of(const FeatureSelector& other) const {
        if (size() != other.size())
            throw Error(ErrorCode::DimensionMismatch, "selector lengths differ");
        for (int j = 0; j < size(); ++j)
            if (test(j) && !other.test(j)) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (auto b : bits_) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return h;
    }

  private:
    std::vector<std::uint8_t> bits_;
};

struct FeatureSelectorHash {
    std::size_t operator()(const FeatureSelector& z) const { return z.hash(); }
};

}  // namespace bip
