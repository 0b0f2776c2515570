#pragma once

#include <string>
#include <vector>

#include "qinterp/laurent.hpp"

namespace qinterp {

// Young-diagram cell with its combinatorial statistics. Rows and columns are
// 0-based; arm/leg count cells strictly to the right/below, co-arm/co-leg
// strictly to the left/above. hook = arm + leg + 1, content = coarm - coleg.
struct Cell {
    int row = 0, col = 0;
    int arm = 0, leg = 0, coarm = 0, coleg = 0;
    int hook = 0, content = 0;
};

// Weakly decreasing sequence of positive integers (trailing zeros trimmed).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // zeros trimmed, must be weakly decreasing
    static Partition one_row(int m);
    static Partition rectangle(int rows, int width);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;               // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;          // 0-based, 0 beyond length
    bool is_empty() const { return parts_.empty(); }

    Partition transpose() const;
    bool contains(const Partition& other) const;  // coordinatewise >=
    std::vector<Cell> cells() const;

    int n_stat() const;             // n(lambda) = sum (i-1) lambda_i
    int n_stat_transpose() const;   // n(lambda') = sum lambda_i (lambda_i - 1)/2
    int content_sum() const;        // c(lambda) = n(lambda') - n(lambda)
    // D_N(lambda) = c(lambda) + (N-1)|lambda| + binom(N,3); computed by two
    // routes (closed form and sum of binom(lambda_i + N - i, 2)) and checked.
    int D_stat(int N) const;

    std::vector<int> padded(int N) const;  // parts with zeros up to length N
    Partition with_column_added(int k, int N) const;  // lambda + k^N

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Total order: by size, then lexicographic on parts. Refines containment.
    bool operator<(const Partition& o) const;

    std::string str() const;  // "[3,2]", "[]" for the empty partition

private:
    std::vector<int> parts_;
};

// All partitions contained in `bound`, in (size, lex) order.
std::vector<Partition> subpartitions(const Partition& bound);
// All partitions of size exactly k with at most max_len parts, (size, lex) order.
std::vector<Partition> partitions_of(int k, int max_len);
// All partitions of size <= k with at most max_len parts, (size, lex) order.
std::vector<Partition> partitions_up_to(int k, int max_len);

// Verifies prod_cells (1 - t^{h}) == prod_i prod_{j<=lam_i+N-i} (1-t^j)
//                                     / prod_{i<j} (1-t^{(lam_i+N-i)-(lam_j+N-j)})
// as exact polynomials (t is represented by the base variable of LaurentV).
bool hook_product_identity_check(const Partition& lambda, int N);

// binom(n, k) as plain integer.
long long binom(int n, int k);

}  // namespace qinterp
