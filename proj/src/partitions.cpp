#include "genchar/partitions.hpp"

#include <algorithm>

namespace genchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) fail(Errc::BadInput, "partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0)
        fail(Errc::BadInput, "partition parts must be nonnegative");
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> Partition::frobenius() const {
    Partition conj = conjugate();
    std::vector<int> alpha, beta;
    for (int i = 1; i <= length() && part(i) >= i; ++i) {
        alpha.push_back(part(i) - i);
        beta.push_back(conj.part(i) - i);
    }
    return {alpha, beta};
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_length == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, max_length - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_up_to(int max_weight, int max_length) {
    std::vector<Partition> out;
    std::vector<int> acc;
    for (int w = 0; w <= max_weight; ++w) gen_partitions(w, w, max_length, acc, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<Partition> all = partitions_up_to(rows * cols, rows);
    for (auto& p : all)
        if (p.length() <= rows && p.part(1) <= cols) out.push_back(std::move(p));
    return out;
}

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) fail(Errc::BadInput, "signature parts must be weakly decreasing");
}

Signature Signature::from_partition(const Partition& p, int n) {
    if (p.length() > n) fail(Errc::LengthExceedsN, "partition longer than signature length");
    std::vector<int> parts(n, 0);
    for (int i = 1; i <= p.length(); ++i) parts[i - 1] = p.part(i);
    return Signature(std::move(parts));
}

bool Signature::is_partition() const {
    return parts_.empty() || parts_.back() >= 0;
}

Partition Signature::to_partition() const {
    if (!is_partition()) fail(Errc::BadInput, "signature has negative parts");
    return Partition(parts_);
}

void Signature::split(Partition& mu, Partition& nu, int& p, int& q) const {
    std::vector<int> mu_parts, nu_parts;
    for (int v : parts_)
        if (v >= 0)
            mu_parts.push_back(v);
        else
            nu_parts.push_back(-v);
    p = int(mu_parts.size());
    q = int(nu_parts.size());
    std::reverse(nu_parts.begin(), nu_parts.end());
    mu = Partition(std::move(mu_parts));
    nu = Partition(std::move(nu_parts));
}

Signature Signature::join(const Partition& mu, const Partition& nu, int p, int q) {
    if (mu.length() > p || nu.length() > q)
        fail(Errc::SplitMismatch, "partition does not fit the stated block length");
    std::vector<int> parts;
    for (int i = 1; i <= p; ++i) parts.push_back(mu.part(i));
    for (int i = q; i >= 1; --i) parts.push_back(-nu.part(i));
    return Signature(std::move(parts));
}

Signature Signature::shifted(int k) const {
    std::vector<int> parts = parts_;
    for (int& v : parts) v += k;
    return Signature(std::move(parts));
}

std::string Signature::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void gen_gt_rows(GtPattern& rows, int i, const std::function<void(const GtPattern&)>& visit) {
    if (i < 0) {
        visit(rows);
        return;
    }
    // Fill row i (i+1 entries) interlacing with row i+1.
    const std::vector<int>& above = rows[i + 1];
    std::function<void(int)> fill = [&](int j) {
        if (j > i) {
            gen_gt_rows(rows, i - 1, visit);
            return;
        }
        int hi = above[j];
        int lo = above[j + 1];
        for (int v = hi; v >= lo; --v) {
            rows[i][j] = v;
            fill(j + 1);
        }
    };
    fill(0);
}

} // namespace

void enumerate_gt_patterns(const std::vector<int>& top,
                           const std::function<void(const GtPattern&)>& visit) {
    int n = int(top.size());
    if (n == 0) fail(Errc::BadInput, "GT pattern needs at least one row");
    for (int i = 1; i < n; ++i)
        if (top[i] > top[i - 1]) fail(Errc::BadInput, "top row must be weakly decreasing");
    GtPattern rows(n);
    for (int i = 0; i < n; ++i) rows[i].assign(i + 1, 0);
    rows[n - 1] = top;
    gen_gt_rows(rows, n - 2, visit);
}

std::vector<GtPattern> all_gt_patterns(const std::vector<int>& top) {
    std::vector<GtPattern> out;
    enumerate_gt_patterns(top, [&](const GtPattern& g) { out.push_back(g); });
    return out;
}

} // namespace genchar
