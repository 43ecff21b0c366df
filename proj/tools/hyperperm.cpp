// Command-line front end: pattern checks, tree conversions, projection,
// exhaustive counting and verification over d-permutations.
//
// Exit codes: 0 success, 1 verification counterexample, 2 parse/usage error,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperperm/bijection.hpp"
#include "hyperperm/dperm.hpp"
#include "hyperperm/enumeration.hpp"
#include "hyperperm/hypertree.hpp"
#include "hyperperm/orders.hpp"
#include "hyperperm/patterns.hpp"

namespace {

using namespace hyperperm;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw std::invalid_argument("cannot open input file: " + path);
        }
        buffer << file.rdbuf();
    }
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

Pattern named_pattern(const std::string& name) {
    if (name == "P1" || name == "p1") {
        return pattern_p1();
    }
    if (name == "231") {
        return pattern_231();
    }
    return DPermutation::parse(name);
}

void print_witness(std::ostream& out, const Pattern& pattern, const Witness& witness,
                   const std::string& indent) {
    out << indent << "witness: " << pattern.to_string() << '\n';
    out << indent << "projection:";
    for (int axis : witness.projection) {
        out << ' ' << axis;
    }
    out << '\n' << indent << "points:";
    for (int point : witness.points) {
        out << ' ' << point;
    }
    out << '\n';
}

int run_check(const std::string& input, const std::string& pattern_name) {
    DPermutation perm = DPermutation::parse(read_input(input));
    if (!pattern_name.empty()) {
        Pattern pattern = named_pattern(pattern_name);
        auto witness = contains(perm, pattern);
        std::cout << (witness ? "contains" : "avoids") << '\n';
        if (witness) {
            print_witness(std::cout, pattern, *witness, "");
        }
        return 0;
    }
    for (const auto& [name, pattern] :
         {std::pair<std::string, Pattern>{"P1", pattern_p1()},
          std::pair<std::string, Pattern>{"231", pattern_231()}}) {
        auto witness = contains(perm, pattern);
        std::cout << name << ": " << (witness ? "contains" : "avoids") << '\n';
        if (witness) {
            print_witness(std::cout, pattern, *witness, "  ");
        }
    }
    return 0;
}

HyperTree build_tree(const DPermutation& perm, int axis, bool minimal) {
    int effective = axis < 0 ? perm.dimension() - 1 : axis;
    return minimal ? min_tree(perm, effective) : max_tree(perm, effective);
}

int run_to_tree(const std::string& input, int axis, bool minimal, const std::string& format) {
    DPermutation perm = DPermutation::parse(read_input(input));
    HyperTree tree = build_tree(perm, axis, minimal);
    if (format == "json") {
        std::cout << tree.to_json() << '\n';
    } else {
        std::cout << tree.format() << '\n';
    }
    return 0;
}

OrderSet load_orders(const std::string& spec, std::optional<int> dimension) {
    if (spec == "staircase") {
        if (!dimension) {
            throw std::invalid_argument("--d is required with the staircase order set");
        }
        return staircase_orders(*dimension);
    }
    OrderSet orders = OrderSet::parse(read_input(spec));
    if (dimension && orders.dimension() != *dimension) {
        throw std::invalid_argument("order set dimension " + std::to_string(orders.dimension()) +
                                    " does not match --d " + std::to_string(*dimension));
    }
    return orders;
}

int run_from_tree(const std::string& input, std::optional<int> dimension,
                  const std::string& orders_spec) {
    OrderSet orders = load_orders(orders_spec, dimension);
    HyperTree tree = HyperTree::parse(read_input(input), orders.dimension());
    std::cout << tree_to_perm(tree, orders).to_string() << '\n';
    return 0;
}

int run_project(const std::string& input, const std::string& indices_text) {
    DPermutation perm = DPermutation::parse(read_input(input));
    std::vector<int> indices;
    std::istringstream in(indices_text);
    std::string token;
    while (std::getline(in, token, ',')) {
        indices.push_back(std::stoi(token));
    }
    std::cout << project(perm, indices).to_string() << '\n';
    return 0;
}

int run_count(int d, int n_min, int n_max, std::uint64_t budget, int jobs,
              const std::string& format, const std::string& second_pattern) {
    EnumerationOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    CountTable table;
    if (second_pattern == "231") {
        table = count_avoiders_table(d, n_min, n_max, opts);
    } else {
        // experimental: the {up-down-up, 312} class, observed equinumerous
        Pattern p312 = DPermutation::parse("3 1 2");
        table.d = d;
        table.n_min = n_min;
        for (int n = n_min; n <= n_max; ++n) {
            table.avoiders.push_back(count_matching(
                d, n,
                [&p312](const DPermutation& perm) {
                    return !has_p1(perm) && !contains(perm, p312).has_value();
                },
                opts));
            table.expected.push_back(fuss_catalan(d, n));
        }
    }
    std::cout << (format == "bfile" ? table.to_bfile() : table.to_csv());
    return 0;
}

int run_verify(int d, int n_min, int n_max, std::uint64_t budget, int jobs) {
    EnumerationOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    bool failed = false;
    for (int n = n_min; n <= n_max; ++n) {
        VerifyReport eq = verify_equivalence(d, n, opts);
        std::cout << "d=" << d << " n=" << n << " equivalence "
                  << (eq.ok() ? "ok" : "FAILED") << " checked=" << eq.checked << '\n';
        for (const auto& bad : eq.counterexamples) {
            std::cout << "  counterexample: " << bad << '\n';
        }
        BijectionReport bij = verify_bijection(d, n, opts);
        std::cout << "d=" << d << " n=" << n << " bijection " << (bij.ok() ? "ok" : "FAILED")
                  << " admissible=" << bij.admissible << " trees=" << bij.trees
                  << " avoiders=" << bij.avoiders << '\n';
        for (const auto& bad : bij.failures) {
            std::cout << "  counterexample: " << bad << '\n';
        }
        failed = failed || !eq.ok() || !bij.ok();
    }
    return failed ? 1 : 0;
}

int run_export_dot(const std::string& input, bool as_tree, std::optional<int> dimension, int axis,
                   bool minimal, const std::string& output) {
    std::string dot;
    if (as_tree) {
        if (!dimension) {
            throw std::invalid_argument("--d is required with --tree");
        }
        dot = to_dot(HyperTree::parse(read_input(input), *dimension));
    } else {
        DPermutation perm = DPermutation::parse(read_input(input));
        dot = to_dot(build_tree(perm, axis, minimal));
    }
    if (output.empty() || output == "-") {
        std::cout << dot;
    } else {
        std::ofstream file(output);
        if (!file) {
            throw std::invalid_argument("cannot open output file: " + output);
        }
        file << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-permutation max-trees, pattern avoidance and tree bijections"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string pattern_name;
    auto* check = app.add_subcommand("check", "pattern containment verdicts for a permutation");
    check->add_option("input", input, "permutation file, or - for stdin");
    check->add_option("--pattern", pattern_name, "P1, 231, or a permutation in text format");

    std::string tree_input = "-";
    int axis = -1;
    bool minimal = false;
    std::string tree_format = "sexp";
    auto* to_tree = app.add_subcommand("to-tree", "max-tree (or min-tree) of a permutation");
    to_tree->add_option("input", tree_input, "permutation file, or - for stdin");
    to_tree->add_option("--axis", axis, "decomposition axis, default d-1");
    to_tree->add_flag("--min", minimal, "build the min-tree instead");
    to_tree->add_option("--format", tree_format, "sexp (default) or json")
        ->check(CLI::IsMember({"sexp", "json"}));

    std::string from_input = "-";
    std::optional<int> from_d;
    std::string orders_spec = "staircase";
    auto* from_tree =
        app.add_subcommand("from-tree", "admissible permutation of a tree for an order set");
    from_tree->add_option("input", from_input, "tree file, or - for stdin");
    from_tree->add_option("--d", from_d, "tree dimension");
    from_tree->add_option("--orders", orders_spec, "staircase (default) or an order-set file");

    std::string project_input = "-";
    std::string indices_text;
    auto* project_cmd = app.add_subcommand("project", "direct projection onto coordinate axes");
    project_cmd->add_option("input", project_input, "permutation file, or - for stdin");
    project_cmd->add_option("--indices", indices_text, "comma-separated ascending axes, e.g. 1,2")
        ->required();

    int count_d = 0;
    int count_n_min = 1;
    int count_n_max = 0;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
    std::string count_format = "csv";
    std::string second_pattern = "231";
    auto* count = app.add_subcommand("count", "avoider counts against the exact formula");
    count->add_option("--d", count_d, "dimension")->required();
    count->add_option("--n-max", count_n_max, "largest size")->required();
    count->add_option("--n-min", count_n_min, "smallest size, default 1");
    count->add_option("--budget", budget, "max permutations per (d,n) cell")
        ->envname("HYPERPERM_BUDGET");
    count->add_option("--jobs", jobs, "worker threads");
    count->add_option("--format", count_format, "csv (default) or bfile")
        ->check(CLI::IsMember({"csv", "bfile"}));
    count
        ->add_option("--second-pattern", second_pattern,
                     "231 (default) or 312 (experimental, no formula claim)")
        ->check(CLI::IsMember({"231", "312"}));

    int verify_d = 0;
    int verify_n_min = 0;
    int verify_n_max = 0;
    std::uint64_t verify_budget = 10'000'000;
    int verify_jobs = 1;
    auto* verify = app.add_subcommand("verify", "equivalence and bijection suites, exhaustive");
    verify->add_option("--d", verify_d, "dimension")->required();
    verify->add_option("--n-max", verify_n_max, "largest size")->required();
    verify->add_option("--n-min", verify_n_min, "smallest size, default 0");
    verify->add_option("--budget", verify_budget, "max permutations per (d,n) cell")
        ->envname("HYPERPERM_BUDGET");
    verify->add_option("--jobs", verify_jobs, "worker threads");

    std::string dot_input = "-";
    bool dot_is_tree = false;
    std::optional<int> dot_d;
    int dot_axis = -1;
    bool dot_minimal = false;
    std::string dot_output;
    auto* export_dot = app.add_subcommand("export-dot", "Graphviz DOT for a permutation's tree");
    export_dot->add_option("input", dot_input, "permutation (or tree) file, or - for stdin");
    export_dot->add_flag("--tree", dot_is_tree, "input is a serialized tree, not a permutation");
    export_dot->add_option("--d", dot_d, "tree dimension (with --tree)");
    export_dot->add_option("--axis", dot_axis, "decomposition axis, default d-1");
    export_dot->add_flag("--min", dot_minimal, "build the min-tree instead");
    export_dot->add_option("-o,--output", dot_output, "output file, default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            return run_check(input, pattern_name);
        }
        if (to_tree->parsed()) {
            return run_to_tree(tree_input, axis, minimal, tree_format);
        }
        if (from_tree->parsed()) {
            return run_from_tree(from_input, from_d, orders_spec);
        }
        if (project_cmd->parsed()) {
            return run_project(project_input, indices_text);
        }
        if (count->parsed()) {
            return run_count(count_d, count_n_min, count_n_max, budget, jobs, count_format,
                             second_pattern);
        }
        if (verify->parsed()) {
            return run_verify(verify_d, verify_n_min, verify_n_max, verify_budget, verify_jobs);
        }
        if (export_dot->parsed()) {
            return run_export_dot(dot_input, dot_is_tree, dot_d, dot_axis, dot_minimal,
                                  dot_output);
        }
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
