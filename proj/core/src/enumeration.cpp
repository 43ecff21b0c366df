#include "hyperperm/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "hyperperm/bijection.hpp"
#include "hyperperm/orders.hpp"
#include "hyperperm/patterns.hpp"

namespace hyperperm {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pool[static_cast<std::size_t>(i)] = i + 1;
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t f = factorial_u64(n);
    for (int i = n; i >= 1; --i) {
        f /= static_cast<std::uint64_t>(i);
        std::uint64_t digit = rank / f;
        rank %= f;
        out.push_back(pool[static_cast<std::size_t>(digit)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

/// Splits [0, total) into `jobs` contiguous ranges and merges the per-range
/// results in range order, so the outcome is independent of the job count.
template <typename R, typename Fn>
std::vector<R> run_partitioned(std::uint64_t total, int jobs, Fn&& work) {
    int workers = jobs < 1 ? 1 : jobs;
    if (total < static_cast<std::uint64_t>(workers)) {
        workers = total == 0 ? 1 : static_cast<int>(total);
    }
    std::vector<R> results(static_cast<std::size_t>(workers));
    if (workers == 1) {
        results[0] = work(std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(workers);
        std::uint64_t hi =
            total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(workers);
        threads.emplace_back(
            [&results, &work, t, lo, hi]() { results[static_cast<std::size_t>(t)] = work(lo, hi); });
    }
    for (auto& thread : threads) {
        thread.join();
    }
    return results;
}

}  // namespace

BigInt fuss_catalan(int d, int n) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument("fuss_catalan requires d >= 1 and n >= 0");
    }
    // C(dn+1, n) accumulated exactly: numerator (dn+1)...(dn+2-n) over n!.
    BigInt binom = 1;
    for (int i = 1; i <= n; ++i) {
        binom *= d * n + 2 - i;
        binom /= i;
    }
    return binom / (d * n + 1);
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

BigInt dperm_space_size(int d, int n) {
    if (d < 2 || n < 0) {
        throw std::invalid_argument("dperm_space_size requires d >= 2 and n >= 0");
    }
    BigInt size = 1;
    BigInt f = factorial(n);
    for (int l = 1; l < d; ++l) {
        size *= f;
    }
    return size;
}

budget_error::budget_error(int d, int n, BigInt required_, std::uint64_t budget_)
    : std::runtime_error("enumeration budget exceeded: (d=" + std::to_string(d) +
                         ", n=" + std::to_string(n) + ") needs " + required_.str() +
                         " permutations, budget " + std::to_string(budget_)),
      required(std::move(required_)),
      budget(budget_) {}

std::uint64_t checked_space_size(int d, int n, std::uint64_t budget) {
    BigInt size = dperm_space_size(d, n);
    if (size > budget) {
        throw budget_error(d, n, size, budget);
    }
    return size.convert_to<std::uint64_t>();
}

DPermStream::DPermStream(int d, int n) : DPermStream(d, n, 0) {}

DPermStream::DPermStream(int d, int n, std::uint64_t start_index) : d_(d), n_(n) {
    if (d < 2 || n < 0) {
        throw std::invalid_argument("stream requires d >= 2 and n >= 0");
    }
    if (n > 20) {
        throw std::invalid_argument("stream indexing supports sizes up to 20 (n! fits 64 bits)");
    }
    std::uint64_t nfact = factorial_u64(n);
    rows_.resize(static_cast<std::size_t>(d - 1));
    for (int l = d - 2; l >= 0; --l) {
        rows_[static_cast<std::size_t>(l)] = unrank_permutation(n, start_index % nfact);
        start_index /= nfact;
    }
    if (start_index > 0) {
        done_ = true;  // start beyond the end of the space
    }
}

std::optional<DPermutation> DPermStream::next() {
    if (done_) {
        return std::nullopt;
    }
    DPermutation current{rows_};
    // Odometer: advance the last row, carrying leftward on wraparound.
    for (int l = d_ - 2; l >= 0; --l) {
        if (std::next_permutation(rows_[static_cast<std::size_t>(l)].begin(),
                                  rows_[static_cast<std::size_t>(l)].end())) {
            return current;
        }
    }
    done_ = true;
    return current;
}

DPermutation DPermStream::at(int d, int n, std::uint64_t index) {
    DPermStream stream(d, n, index);
    auto perm = stream.next();
    if (!perm) {
        throw std::invalid_argument("stream index out of range");
    }
    return *perm;
}

std::vector<KaryTree> all_kary_trees(int k, int n) {
    if (k < 1 || n < 0) {
        throw std::invalid_argument("all_kary_trees requires k >= 1 and n >= 0");
    }
    std::vector<std::vector<KaryTree>> memo(static_cast<std::size_t>(n) + 1);
    memo[0].push_back(KaryTree::leaf(k));
    for (int m = 1; m <= n; ++m) {
        auto& out = memo[static_cast<std::size_t>(m)];
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        // Child internal-node counts summing to m-1, in lexicographic order;
        // for each split, the cartesian product of child choices.
        std::function<void(int, int)> assign = [&](int child, int remaining) {
            if (child == k - 1) {
                sizes[static_cast<std::size_t>(child)] = remaining;
                std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
                while (true) {
                    std::vector<KaryTree> children;
                    children.reserve(static_cast<std::size_t>(k));
                    for (int c = 0; c < k; ++c) {
                        children.push_back(memo[static_cast<std::size_t>(
                            sizes[static_cast<std::size_t>(c)])][pick[static_cast<std::size_t>(c)]]);
                    }
                    out.push_back(KaryTree::internal(k, std::move(children)));
                    int c = k - 1;
                    while (c >= 0) {
                        auto& idx = pick[static_cast<std::size_t>(c)];
                        if (++idx <
                            memo[static_cast<std::size_t>(sizes[static_cast<std::size_t>(c)])].size()) {
                            break;
                        }
                        idx = 0;
                        --c;
                    }
                    if (c < 0) {
                        break;
                    }
                }
                return;
            }
            for (int s = 0; s <= remaining; ++s) {
                sizes[static_cast<std::size_t>(child)] = s;
                assign(child + 1, remaining - s);
            }
        };
        assign(0, m - 1);
    }
    return memo[static_cast<std::size_t>(n)];
}

BigInt count_matching(int d, int n, const std::function<bool(const DPermutation&)>& predicate,
                      const EnumerationOptions& opts) {
    std::uint64_t total = checked_space_size(d, n, opts.budget);
    auto counts = run_partitioned<std::uint64_t>(
        total, opts.jobs, [d, n, &predicate](std::uint64_t lo, std::uint64_t hi) {
            DPermStream stream(d, n, lo);
            std::uint64_t matched = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                DPermutation perm = *stream.next();
                if (predicate(perm)) {
                    ++matched;
                }
            }
            return matched;
        });
    BigInt sum = 0;
    for (std::uint64_t c : counts) {
        sum += c;
    }
    return sum;
}

BigInt count_avoiders(int d, int n, const EnumerationOptions& opts) {
    return count_matching(
        d, n, [](const DPermutation& perm) { return !has_p1(perm) && !has_231(perm); }, opts);
}

bool CountTable::all_match() const {
    return avoiders == expected;
}

std::string CountTable::to_csv() const {
    std::ostringstream out;
    out << "d,n,avoiders,fuss_catalan,match\n";
    for (std::size_t i = 0; i < avoiders.size(); ++i) {
        bool match = avoiders[i] == expected[i];
        out << d << ',' << (n_min + static_cast<int>(i)) << ',' << avoiders[i] << ','
            << expected[i] << ',' << (match ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string CountTable::to_bfile() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < avoiders.size(); ++i) {
        out << (n_min + static_cast<int>(i)) << ' ' << avoiders[i] << '\n';
    }
    return out.str();
}

CountTable count_avoiders_table(int d, int n_min, int n_max, const EnumerationOptions& opts) {
    if (n_min < 0 || n_max < n_min) {
        throw std::invalid_argument("invalid n range");
    }
    CountTable table;
    table.d = d;
    table.n_min = n_min;
    for (int n = n_min; n <= n_max; ++n) {
        table.avoiders.push_back(count_avoiders(d, n, opts));
        table.expected.push_back(fuss_catalan(d, n));
    }
    return table;
}

VerifyReport verify_equivalence(int d, int n, const EnumerationOptions& opts) {
    std::uint64_t total = checked_space_size(d, n, opts.budget);
    OrderSet orders = staircase_orders(d);
    auto mismatches = run_partitioned<std::vector<std::string>>(
        total, opts.jobs, [d, n, &orders](std::uint64_t lo, std::uint64_t hi) {
            DPermStream stream(d, n, lo);
            std::vector<std::string> bad;
            for (std::uint64_t i = lo; i < hi; ++i) {
                DPermutation perm = *stream.next();
                bool avoids = !has_p1(perm) && !has_231(perm);
                if (avoids != is_admissible(perm, orders)) {
                    if (bad.size() < kMaxCounterexamples) {
                        bad.push_back(perm.to_string());
                    }
                }
            }
            return bad;
        });
    VerifyReport report;
    report.d = d;
    report.n = n;
    report.checked = total;
    for (const auto& part : mismatches) {
        for (const auto& text : part) {
            if (report.counterexamples.size() < kMaxCounterexamples) {
                report.counterexamples.push_back(text);
            }
        }
    }
    return report;
}

BijectionReport verify_bijection(int d, int n, const EnumerationOptions& opts) {
    std::uint64_t total = checked_space_size(d, n, opts.budget);
    OrderSet orders = staircase_orders(d);
    DirectionSubset family(d, staircase_family(d));
    const std::vector<Direction> child_order = staircase_family(d);

    BijectionReport report;
    report.d = d;
    report.n = n;
    report.checked = total;
    report.avoiders = count_avoiders(d, n, opts);

    // Admissible permutations with their max-tree serializations, in stream
    // order regardless of the job count.
    using PermTree = std::vector<std::pair<std::string, std::string>>;
    auto parts = run_partitioned<PermTree>(
        total, opts.jobs, [d, n, &orders](std::uint64_t lo, std::uint64_t hi) {
            DPermStream stream(d, n, lo);
            PermTree found;
            for (std::uint64_t i = lo; i < hi; ++i) {
                DPermutation perm = *stream.next();
                if (is_admissible(perm, orders)) {
                    found.emplace_back(perm.to_string(), max_tree(perm).format());
                }
            }
            return found;
        });

    auto fail = [&report](const std::string& what) {
        if (report.failures.size() < kMaxCounterexamples) {
            report.failures.push_back(what);
        }
    };

    std::set<std::string> image;
    std::set<std::string> restricted_image;
    for (const auto& part : parts) {
        for (const auto& [perm_text, tree_text] : part) {
            ++report.admissible;
            if (!image.insert(tree_text).second) {
                fail("max-tree not injective on admissible permutations: duplicate tree " +
                     tree_text);
            }
            DPermutation perm = DPermutation::parse(perm_text);
            HyperTree tree = max_tree(perm);
            if (tree_to_perm(tree, orders) != perm) {
                fail("tree_to_perm(max_tree(p)) != p for p = " + perm_text);
            }
            restricted_image.insert(restrict_to_kary(tree, family, child_order).format());
        }
    }

    std::vector<KaryTree> kary = all_kary_trees(d, n);
    report.trees = kary.size();
    std::set<std::string> kary_texts;
    for (const KaryTree& ktree : kary) {
        kary_texts.insert(ktree.format());
        HyperTree padded = pad_from_kary(ktree, family, d, child_order);
        if (!(max_tree(tree_to_perm(padded, orders)) == padded)) {
            fail("max_tree(tree_to_perm(T)) != T for T = " + padded.format());
        }
        if (image.find(padded.format()) == image.end()) {
            fail("tree outside the admissible image: " + padded.format());
        }
    }
    if (image.size() != kary.size()) {
        fail("admissible image has " + std::to_string(image.size()) + " trees, expected " +
             std::to_string(kary.size()));
    }
    if (restricted_image != kary_texts) {
        fail("restricted trees do not match the d-ary tree set");
    }
    if (report.avoiders != BigInt(report.trees)) {
        fail("avoider count " + report.avoiders.str() + " != tree count " +
             std::to_string(report.trees));
    }
    return report;
}

}  // namespace hyperperm
