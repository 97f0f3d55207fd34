// mmt: exact tools for rank-one decompositions of matrix multiplication
// tensors. Exit codes: 0 success / positive result, 1 negative
// mathematical result, 2 malformed input or out-of-domain request.
#include "mmt/bounds.hpp"
#include "mmt/errors.hpp"
#include "mmt/fixtures.hpp"
#include "mmt/io.hpp"
#include "mmt/isotropy.hpp"
#include "mmt/symmetrize.hpp"
#include "mmt/tensor.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitValid = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mmt::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mmt::ParseError("cannot write '" + path + "'");
    out << text;
}

unsigned default_order() {
    if (const char* env = std::getenv("MMT_CYCLOTOMIC_ORDER")) {
        int v = std::atoi(env);
        if (v <= 0) throw mmt::ParseError("MMT_CYCLOTOMIC_ORDER must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return 12;
}

std::string coord_text(const mmt::Shape& s, std::size_t r, std::size_t t2, std::size_t t3) {
    std::ostringstream out;
    out << "((" << r / s.n + 1 << "," << r % s.n + 1 << "),(" << t2 / s.p + 1 << ","
        << t2 % s.p + 1 << "),(" << t3 / s.m + 1 << "," << t3 % s.m + 1 << "))";
    return out.str();
}

unsigned matrix_order(const mmt::ExactMatrix& a, unsigned cap) {
    mmt::ExactMatrix power = a;
    for (unsigned k = 1; k <= cap; ++k) {
        if (power.is_identity()) return k;
        power = power * a;
    }
    throw mmt::OrderError("matrix order exceeds cap " + std::to_string(cap) +
                          " (infinite-order generator?)");
}

int cmd_verify(const std::string& path, unsigned order) {
    mmt::Decomposition d = mmt::parse_decomposition(read_file(path), order);
    auto result = mmt::verify(d);
    if (result.valid) {
        std::cout << "valid, length " << d.size() << "\n";
        return kExitValid;
    }
    auto coords = result.residual->nonzero_coords();
    std::cout << "invalid, residual has " << coords.size() << " nonzero coordinates\n";
    for (const auto& c : coords)
        std::cout << "  " << coord_text(d.shape(), c.r, c.s, c.t) << " = "
                  << c.value.to_string() << "\n";
    return kExitNegative;
}

int cmd_expand(const std::string& path, unsigned order) {
    mmt::Decomposition d = mmt::parse_decomposition(read_file(path), order);
    mmt::DenseTensor t = mmt::expand(d);
    auto coords = t.nonzero_coords();
    std::cout << "shape " << d.shape().to_string() << ", " << coords.size()
              << " nonzero coordinates\n";
    for (const auto& c : coords)
        std::cout << "  " << coord_text(d.shape(), c.r, c.s, c.t) << " = "
                  << c.value.to_string() << "\n";
    return kExitValid;
}

int cmd_act(const std::string& decomp_path, const std::string& gen_path, bool check_auto,
            const std::string& out_path, unsigned order) {
    mmt::Decomposition d = mmt::parse_decomposition(read_file(decomp_path), order);
    mmt::IsotropyElement g = mmt::parse_generator(read_file(gen_path), d.field()->order());
    if (check_auto) {
        auto report = mmt::is_automorphism(g, d);
        if (!report) {
            std::cout << "not an automorphism\n";
            return kExitNegative;
        }
        std::cout << "automorphism: beta=" << mmt::factor_permutation_cycles(report->beta)
                  << ", alpha cycle type " << report->alpha_cycle_type() << "\n";
        if (!report->alpha_unique)
            std::cout << "note: duplicate terms present, alpha chosen by lowest index\n";
        return kExitValid;
    }
    mmt::Decomposition image = mmt::act_on_decomposition(g, d);
    std::string text = mmt::serialize_decomposition(image);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << " (length " << image.size() << ")\n";
    }
    return kExitValid;
}

void print_case_table(bool rows_mode) {
    auto rows = mmt::partition_case_table();
    if (rows_mode) {
        for (const auto& row : rows) {
            std::cout << row.dbar.to_string() << "\t" << row.fbar.to_string() << "\t";
            for (std::size_t i = 0; i < row.summands.size(); ++i)
                std::cout << (i ? "+" : "") << row.summands[i];
            std::cout << "\t" << row.bound << "\n";
        }
        return;
    }
    std::cout << std::left << std::setw(10) << "dbar" << std::setw(10) << "fbar"
              << std::setw(24) << "summands" << "bound\n";
    for (const auto& row : rows) {
        std::ostringstream sum;
        for (std::size_t i = 0; i < row.summands.size(); ++i)
            sum << (i ? "+" : "") << row.summands[i];
        std::cout << std::left << std::setw(10) << row.dbar.to_string() << std::setw(10)
                  << row.fbar.to_string() << std::setw(24) << sum.str() << row.bound
                  << "\n";
    }
    std::cout << "minimum over the table: " << mmt::case_table_minimum() << "\n";
}

int cmd_bound(const std::vector<std::string>& partitions, const std::string& gen_path,
              bool rows_mode, unsigned order) {
    if (!partitions.empty()) {
        mmt::Partition3 dbar = mmt::Partition3::parse(partitions[0]);
        mmt::Partition3 fbar = mmt::Partition3::parse(partitions[1]);
        unsigned total = 0;
        std::ostringstream terms;
        bool first = true;
        for (std::size_t di : dbar.parts())
            for (std::size_t fi : fbar.parts()) {
                unsigned r = mmt::rank_lower(di, fi, 3);
                terms << (first ? "" : " + ") << r;
                first = false;
                total += r;
            }
        std::cout << terms.str() << " = " << total << "\n";
        return kExitValid;
    }
    if (!gen_path.empty()) {
        mmt::IsotropyElement g = mmt::parse_generator(read_file(gen_path), order);
        if (!g.is_sandwich())
            throw mmt::ParseError("bound expects a sandwich generator (q = id)");
        if (g.a().rows() != 3 || g.b().rows() != 3)
            throw mmt::ParseError("bound needs 3x3 sandwich matrices");
        unsigned cap = mmt::symmetrize_order_cap(g.field());
        unsigned oa = matrix_order(g.a(), cap);
        unsigned ob = matrix_order(g.b(), cap);
        unsigned total = mmt::invariant_length_bound(g.a(), g.b(), oa, ob);
        std::cout << "orders: a has order " << oa << ", b has order " << ob << "\n";
        std::cout << "invariant length bound: " << total << "\n";
        return kExitValid;
    }
    print_case_table(rows_mode);
    return kExitValid;
}

int cmd_split(const std::string& gen_path, unsigned order) {
    mmt::IsotropyElement g = mmt::parse_generator(read_file(gen_path), order);
    if (!g.is_sandwich())
        throw mmt::ParseError("split expects a sandwich generator (q = id)");
    unsigned cap = mmt::symmetrize_order_cap(g.field());
    unsigned oa = matrix_order(g.a(), cap);
    unsigned ob = matrix_order(g.b(), cap);
    mmt::EigenSplitPlan plan = mmt::split_by_eigenvalues(g.a(), g.b(), oa, ob);

    auto print_structure = [](const char* name, const mmt::EigenStructure& s) {
        std::cout << name << ": order " << s.order << ", eigenvalues";
        for (std::size_t i = 0; i < s.count(); ++i)
            std::cout << " " << s.eigenvalues[i].to_string() << " (x"
                      << s.multiplicities[i] << ")";
        std::cout << "\n";
    };
    print_structure("a", plan.a_structure);
    print_structure("b", plan.b_structure);

    const std::size_t p = g.c().rows();
    std::cout << plan.classes.size() << " sigma classes:\n";
    unsigned total = 0;
    mmt::DenseTensor sum(g.field(), mmt::Shape(g.a().rows(), g.b().rows(), p));
    for (std::size_t c = 0; c < plan.classes.size(); ++c) {
        const auto& cls = plan.classes[c];
        unsigned rank = mmt::class_rank_lower(plan, c, p);
        total += rank;
        std::cout << "  sigma = " << cls.sigma.to_string() << ": pairs";
        for (const auto& [i, j] : cls.pairs)
            std::cout << " (" << plan.a_structure.multiplicities[i] << ","
                      << plan.b_structure.multiplicities[j] << ")";
        std::cout << ", component rank >= " << rank << "\n";
        sum = sum + mmt::tensor_component(plan, c, p);
    }
    std::cout << "total bound: " << total << "\n";
    bool complete =
        sum == mmt::matmul_tensor(g.field(), mmt::Shape(g.a().rows(), g.b().rows(), p));
    std::cout << "component sum equals the matmul tensor: " << (complete ? "yes" : "NO")
              << "\n";
    return complete ? kExitValid : kExitNegative;
}

int cmd_symmetrize(const std::string& decomp_path, const std::string& gen_path,
                   const std::string& out_path, unsigned order) {
    mmt::Decomposition d = mmt::parse_decomposition(read_file(decomp_path), order);
    mmt::IsotropyElement g = mmt::parse_generator(read_file(gen_path), d.field()->order());
    if (!g.is_sandwich() || !g.b().is_scalar() || !g.c().is_scalar())
        throw mmt::ParseError("unsupported generator shape: symmetrize expects T(a,E,E)");
    mmt::Decomposition reduced = mmt::symmetrize_decomposition(g, d);
    std::cout << "length " << d.size() << " -> " << reduced.size() << "\n";
    std::string text = mmt::serialize_decomposition(reduced);
    if (out_path.empty()) std::cout << text;
    else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitValid;
}

int cmd_closure(const std::string& gens_path, std::size_t cap, const std::string& out_path,
                unsigned order) {
    auto gens = mmt::parse_generators(read_file(gens_path), order);
    auto closure = mmt::group_closure(gens, cap);
    std::cout << "closure size: " << closure.size() << "\n";
    for (const auto& g : closure) std::cout << "  q=" << mmt::symmetry_tag(g.q()) << "\n";
    if (!out_path.empty()) {
        std::ostringstream all;
        all << "[\n";
        for (std::size_t i = 0; i < closure.size(); ++i) {
            std::string one = mmt::serialize_generator(closure[i]);
            if (!one.empty() && one.back() == '\n') one.pop_back();
            all << one << (i + 1 < closure.size() ? ",\n" : "\n");
        }
        all << "]\n";
        write_file(out_path, all.str());
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitValid;
}

int cmd_tau(std::size_t m, std::size_t n, std::size_t p, std::size_t l) {
    double tau = mmt::tau_exponent(mmt::Shape(m, n, p), l);
    std::cout << std::fixed << std::setprecision(4) << tau << "\n";
    return kExitValid;
}

int cmd_fixtures(const std::string& dir, unsigned order) {
    auto field = mmt::CyclotomicField::get(order);
    std::filesystem::create_directories(dir);
    for (const auto& fx : mmt::bundled_fixtures(field)) {
        if (!mmt::verify(fx.decomposition).valid)
            throw mmt::Error("fixture " + fx.name + " failed verification");
        std::string path = dir + "/" + fx.name + ".json";
        write_file(path, mmt::serialize_decomposition(fx.decomposition));
        std::cout << fx.name << ": length " << fx.decomposition.size() << " -> " << path
                  << "\n";
    }
    return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for matrix multiplication tensor decompositions"};
    app.require_subcommand(1);

    unsigned order = 0; // 0: resolve from environment later
    app.add_option("--cyclotomic-order", order,
                   "Cyclotomic order N for files that do not specify one "
                   "(default 12, or MMT_CYCLOTOMIC_ORDER)")
        ->check(CLI::PositiveNumber);

    std::string path, gen_path, out_path;
    bool check_auto = false, rows_mode = false;
    std::vector<std::string> partitions;
    std::size_t cap = 10000;
    std::vector<std::size_t> tau_args;
    std::string fixtures_dir = "fixtures";

    auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition file exactly");
    verify_cmd->add_option("file", path)->required();

    auto* expand_cmd = app.add_subcommand("expand", "Expand a decomposition to coordinates");
    expand_cmd->add_option("file", path)->required();

    auto* act_cmd = app.add_subcommand("act", "Apply an isotropy element to a decomposition");
    act_cmd->add_option("file", path)->required();
    act_cmd->add_option("-g,--generator", gen_path)->required();
    act_cmd->add_flag("--check-auto", check_auto, "Report the automorphism data instead");
    act_cmd->add_option("-o,--output", out_path);

    auto* bound_cmd = app.add_subcommand(
        "bound", "Length bounds for termwise-invariant decompositions");
    bound_cmd->add_option("--partitions", partitions,
                          "Two eigenvalue multiplicity partitions, e.g. 2,1 3")
        ->expected(2);
    bound_cmd->add_option("-g,--generator", gen_path);
    bound_cmd->add_flag("--rows", rows_mode, "Machine-readable rows");

    auto* split_cmd = app.add_subcommand("split", "Eigenvalue splitting report");
    split_cmd->add_option("-g,--generator", gen_path)->required();

    auto* symm_cmd = app.add_subcommand("symmetrize",
                                        "Replace orbits by invariant terms (T(a,E,E))");
    symm_cmd->add_option("file", path)->required();
    symm_cmd->add_option("-g,--generator", gen_path)->required();
    symm_cmd->add_option("-o,--output", out_path);

    auto* closure_cmd = app.add_subcommand("closure", "Group closure of generators");
    closure_cmd->add_option("file", path)->required();
    closure_cmd->add_option("--cap", cap);
    closure_cmd->add_option("-o,--output", out_path);

    auto* tau_cmd = app.add_subcommand("tau", "Recursion exponent of a length-l scheme");
    tau_cmd->add_option("mnpl", tau_args, "m n p l")->expected(4);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the bundled fixtures");
    fixtures_cmd->add_option("--dir", fixtures_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitValid : kExitInput; // --help and --version are fine
    }

    try {
        if (order == 0) order = default_order();
        if (verify_cmd->parsed()) return cmd_verify(path, order);
        if (expand_cmd->parsed()) return cmd_expand(path, order);
        if (act_cmd->parsed()) return cmd_act(path, gen_path, check_auto, out_path, order);
        if (bound_cmd->parsed()) return cmd_bound(partitions, gen_path, rows_mode, order);
        if (split_cmd->parsed()) return cmd_split(gen_path, order);
        if (symm_cmd->parsed()) return cmd_symmetrize(path, gen_path, out_path, order);
        if (closure_cmd->parsed()) return cmd_closure(path, cap, out_path, order);
        if (tau_cmd->parsed())
            return cmd_tau(tau_args[0], tau_args[1], tau_args[2], tau_args[3]);
        if (fixtures_cmd->parsed()) return cmd_fixtures(fixtures_dir, order);
    } catch (const mmt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
