#include "wreathstab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreathstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (parts_[i] < inner.parts_[i]) return false;
    return true;
}

BigInt Partition::standard_tableaux_count() const {
    // n! over the product of hook lengths
    if (parts_.empty()) return 1;
    std::vector<int> col_len(parts_[0], 0);
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[r]; ++c) ++col_len[c];
    BigInt hooks = 1;
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[r]; ++c) hooks *= (parts_[r] - c) + (col_len[c] - r) - 1;
    return factorial(sum_) / hooks;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

BigInt partition_count(int n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    // p(m, k): partitions of m into parts of size <= k
    std::vector<std::vector<BigInt>> p(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : BigInt(0));
    return p[n][n];
}

namespace {

// Horizontal strips are exactly the shapes mu >= lambda with the rows
// interlacing: mu_r >= lambda_r >= mu_{r+1}. Rows of mu are chosen top to
// bottom, largest first, so the output is lexicographically decreasing.
void strips_rec(const Partition& lambda, int row, int remaining, std::vector<int>& acc,
                std::vector<Partition>& out) {
    if (row == lambda.length()) {
        // optional single row below lambda; it must absorb all leftover boxes
        if (remaining == 0) {
            out.push_back(Partition(acc));
        } else if (row == 0 || remaining <= lambda.part(row - 1)) {
            acc.push_back(remaining);
            out.push_back(Partition(acc));
            acc.pop_back();
        }
        return;
    }
    int lo = lambda.part(row);
    int hi = row == 0 ? lo + remaining : std::min(lambda.part(row - 1), lo + remaining);
    for (int mu_row = hi; mu_row >= lo; --mu_row) {
        acc.push_back(mu_row);
        strips_rec(lambda, row + 1, remaining - (mu_row - lo), acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("horizontal_strip_additions: negative box count");
    std::vector<Partition> out;
    std::vector<int> acc;
    strips_rec(lambda, 0, m, acc, out);
    return out;
}

int Multipartition::total() const {
    int t = 0;
    for (const auto& p : components) t += p.sum();
    return t;
}

std::string Multipartition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += ',';
        s += components[i].to_string();
    }
    s += ')';
    return s;
}

}  // namespace wreathstab
