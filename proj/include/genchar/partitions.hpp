#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genchar/errors.hpp"

namespace genchar {

// Weakly decreasing nonnegative integers; trailing zeros are normalised away.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return int(parts_.size()); }
    long weight() const;
    // 1-based part access; zero beyond the length.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    // Frobenius coordinates (alpha | beta), both strictly decreasing.
    std::pair<std::vector<int>, std::vector<int>> frobenius() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

// All partitions with |lambda| <= max_weight and l(lambda) <= max_length,
// ordered by weight then reverse-lexicographically.
std::vector<Partition> partitions_up_to(int max_weight, int max_length);

// All partitions fitting in a rows x cols box (lambda_1 <= cols, length <= rows).
std::vector<Partition> partitions_in_box(int rows, int cols);

// Weakly decreasing integer tuple of a stated length; a GL_n dominant weight.
class Signature {
  public:
    Signature() = default;
    explicit Signature(std::vector<int> parts);
    static Signature from_partition(const Partition& p, int n);

    int n() const { return int(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_.at(i - 1); } // 1-based

    bool is_partition() const;
    Partition to_partition() const;

    // Split (lambda_1..lambda_n) = (mu_1..mu_p, -nu_q..-nu_1) with
    // q = #{i : lambda_i < 0}; zero parts belong to mu.
    void split(Partition& mu, Partition& nu, int& p, int& q) const;
    static Signature join(const Partition& mu, const Partition& nu, int p, int q);

    Signature shifted(int k) const; // all parts + k

    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

// Integral Gelfand-Tsetlin patterns with the given top row. rows[i] has
// i+1 entries (0-based); rows[n-1] is the top row; interlacing
// rows[i+1][j] >= rows[i][j] >= rows[i+1][j+1] holds throughout.
using GtPattern = std::vector<std::vector<int>>;
void enumerate_gt_patterns(const std::vector<int>& top,
                           const std::function<void(const GtPattern&)>& visit);
std::vector<GtPattern> all_gt_patterns(const std::vector<int>& top);

} // namespace genchar
