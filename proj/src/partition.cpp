#include "qinterp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qinterp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::one_row(int m) {
    return m == 0 ? Partition() : Partition(std::vector<int>{m});
}

Partition Partition::rectangle(int rows, int width) {
    if (rows < 0 || width < 0) throw std::invalid_argument("rectangle: negative shape");
    if (rows == 0 || width == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    const Partition t = transpose();
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < part(i); ++j) {
            Cell c;
            c.row = i;
            c.col = j;
            c.arm = part(i) - j - 1;
            c.coarm = j;
            c.leg = t.part(j) - i - 1;
            c.coleg = i;
            c.hook = c.arm + c.leg + 1;
            c.content = c.coarm - c.coleg;
            out.push_back(c);
        }
    }
    return out;
}

int Partition::n_stat() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * part(i);
    return s;
}

int Partition::n_stat_transpose() const {
    int s = 0;
    for (int p : parts_) s += p * (p - 1) / 2;
    return s;
}

int Partition::content_sum() const { return n_stat_transpose() - n_stat(); }

int Partition::D_stat(int N) const {
    if (length() > N) throw std::invalid_argument("D_stat: partition has more than N parts");
    const long long closed =
        content_sum() + static_cast<long long>(N - 1) * size() + binom(N, 3);
    long long direct = 0;
    for (int i = 1; i <= N; ++i) direct += binom(part(i - 1) + N - i, 2);
    if (closed != direct) throw std::logic_error("D_stat: routes disagree");
    return static_cast<int>(closed);
}

std::vector<int> Partition::padded(int N) const {
    if (length() > N) throw std::invalid_argument("padded: partition has more than N parts");
    std::vector<int> p = parts_;
    p.resize(static_cast<std::size_t>(N), 0);
    return p;
}

Partition Partition::with_column_added(int k, int N) const {
    if (k < 0) throw std::invalid_argument("with_column_added: negative width");
    std::vector<int> p = padded(N);
    for (auto& x : p) x += k;
    return Partition(std::move(p));
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return parts_ < o.parts_;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "]";
    return out.str();
}

namespace {

void enumerate_within(const std::vector<int>& bound, std::size_t i, int prev,
                      std::vector<int>& cur, std::vector<Partition>& out) {
    // Stopping here (all remaining parts zero) yields a valid subpartition.
    out.emplace_back(cur);
    if (i == bound.size()) return;
    const int hi = std::min(prev, bound[i]);
    for (int p = 1; p <= hi; ++p) {
        cur.push_back(p);
        enumerate_within(bound, i + 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> subpartitions(const Partition& bound) {
    std::vector<Partition> out;
    if (bound.is_empty()) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    enumerate_within(bound.parts(), 0, bound.part(0), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enumerate_of(int remaining, int max_part, int slots, std::vector<int>& cur,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_of(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_len) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> cur;
    enumerate_of(k, k, max_len, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int k, int max_len) {
    std::vector<Partition> out;
    for (int s = 0; s <= k; ++s) {
        auto of = partitions_of(s, max_len);
        out.insert(out.end(), of.begin(), of.end());
    }
    return out;
}

bool hook_product_identity_check(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("hook identity: length > N");
    LaurentV lhs = 1;
    for (const Cell& c : lambda.cells()) lhs *= (LaurentV(1) - LaurentV::v_pow(c.hook));

    const std::vector<int> pad = lambda.padded(N);
    std::vector<int> bar(pad.size());
    for (std::size_t i = 0; i < pad.size(); ++i)
        bar[i] = pad[i] + N - static_cast<int>(i) - 1;

    LaurentV num = 1;
    for (int b : bar)
        for (int j = 1; j <= b; ++j) num *= (LaurentV(1) - LaurentV::v_pow(j));
    LaurentV den = 1;
    for (std::size_t i = 0; i < bar.size(); ++i)
        for (std::size_t j = i + 1; j < bar.size(); ++j)
            den *= (LaurentV(1) - LaurentV::v_pow(bar[i] - bar[j]));

    LaurentV rhs;
    if (!try_divide(num, den, rhs)) return false;
    return lhs == rhs;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace qinterp
