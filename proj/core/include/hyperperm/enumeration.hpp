#ifndef HYPERPERM_ENUMERATION_HPP
#define HYPERPERM_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperperm/dperm.hpp"
#include "hyperperm/karytree.hpp"

namespace hyperperm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact 1/(dn+1) * C(dn+1, n): the number of d-ary trees with n internal
/// nodes.
BigInt fuss_catalan(int d, int n);

BigInt factorial(int n);
/// (n!)^{d-1}, the number of d-permutations of size n.
BigInt dperm_space_size(int d, int n);

/// Raised when an exhaustive operation would enumerate more permutations
/// than the configured budget allows.
class budget_error : public std::runtime_error {
public:
    budget_error(int d, int n, BigInt required, std::uint64_t budget);

    BigInt required;
    std::uint64_t budget;
};

struct EnumerationOptions {
    std::uint64_t budget = 10'000'000;  // permutations per (d, n) cell
    int jobs = 1;
};

/// dperm_space_size as a machine word, or budget_error when it exceeds the
/// budget.
std::uint64_t checked_space_size(int d, int n, std::uint64_t budget);

/// Streams every d-permutation of size n exactly once, in a fixed order:
/// rows advance lexicographically, last row fastest. Index `i` in the stream
/// equals the mixed-radix number whose digits are the rows' lexicographic
/// ranks, first row most significant.
class DPermStream {
public:
    DPermStream(int d, int n);
    DPermStream(int d, int n, std::uint64_t start_index);

    std::optional<DPermutation> next();

    /// Random access into the stream order (used to partition work).
    static DPermutation at(int d, int n, std::uint64_t index);

private:
    int d_;
    int n_;
    bool done_ = false;
    std::vector<std::vector<int>> rows_;
};

/// Every k-ary tree with n internal nodes exactly once, deterministic order;
/// the count equals fuss_catalan(k, n).
std::vector<KaryTree> all_kary_trees(int k, int n);

/// |{perm : not has_p1 and not has_231}| over the full space, exhaustively.
BigInt count_avoiders(int d, int n, const EnumerationOptions& opts = {});

/// Exhaustive count of permutations satisfying an arbitrary pure predicate;
/// the workhorse behind count_avoiders and the experimental pattern sets.
BigInt count_matching(int d, int n, const std::function<bool(const DPermutation&)>& predicate,
                      const EnumerationOptions& opts = {});

/// Avoider counts next to the Fuss-Catalan prediction for n in
/// [n_min, n_max].
struct CountTable {
    int d = 0;
    int n_min = 0;
    std::vector<BigInt> avoiders;
    std::vector<BigInt> expected;

    bool all_match() const;
    /// CSV with header "d,n,avoiders,fuss_catalan,match".
    std::string to_csv() const;
    /// OEIS-style b-file: one "n a(n)" line per entry.
    std::string to_bfile() const;
};

CountTable count_avoiders_table(int d, int n_min, int n_max,
                                const EnumerationOptions& opts = {});

struct VerifyReport {
    int d = 0;
    int n = 0;
    std::uint64_t checked = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

/// Exhaustively asserts: avoiding both patterns is equivalent to being
/// admissible with respect to the staircase orders. Counterexamples are
/// rendered permutations.
VerifyReport verify_equivalence(int d, int n, const EnumerationOptions& opts = {});

struct BijectionReport {
    int d = 0;
    int n = 0;
    std::uint64_t checked = 0;
    std::uint64_t admissible = 0;
    std::uint64_t trees = 0;
    BigInt avoiders;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Exhaustively asserts, for the staircase orders: the max-tree map is
/// injective on admissible permutations, tree_to_perm is a two-sided
/// inverse over the family's trees, and the avoider count equals the d-ary
/// tree count reached through restrict_to_kary.
BijectionReport verify_bijection(int d, int n, const EnumerationOptions& opts = {});

}  // namespace hyperperm

#endif
