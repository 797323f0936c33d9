// Command-line front end: perversity tables, Brauer trees, algorithm runs
// and the verification suites.

#include <iostream>

#include <CLI11.hpp>

#include "pervlab/verify.hpp"

using namespace pervlab;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct PiRow {
    std::string family;
    long long n;
    std::string d;
    std::string block;
    std::string label;
    std::string degree;
    long long pi;
};

void emit_rows(const std::vector<PiRow>& rows, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "family,n,d,block,label,degree,pi\n";
        for (auto& r : rows)  // labels contain commas, so the string fields are quoted
            os << r.family << ',' << r.n << ',' << r.d << ",\"" << r.block << "\",\"" << r.label << "\",\""
               << r.degree << "\"," << r.pi << '\n';
    } else {
        for (auto& r : rows)
            os << r.family << "_" << r.n << " d=" << r.d << " block=" << r.block << "  " << r.label
               << "  " << r.degree << "  pi=" << r.pi << '\n';
    }
}

int cmd_pi_table(const std::string& fixture, const std::string& family_str, long long n, const std::string& dtag,
                 const std::string& format) {
    if (!fixture.empty()) {
        FixtureFile fx;
        try {
            fx = load_fixture(fixture, dtag);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        // collect pi labels from the explicit table and from tree vertices
        std::map<std::string, long long> table = fx.pi_table;
        for (auto& ft : fx.trees)
            for (auto& v : ft.tree.vertices)
                if (!v.exceptional && v.pi) table.emplace(v.name, *v.pi);
        std::vector<PiRow> rows;
        for (auto& [name, p] : table) {
            auto it = fx.degrees.find(name);
            rows.push_back({fixture, 0, dtag, "fixture", name, it == fx.degrees.end() ? "-" : it->second, p});
        }
        if (format == "json") {
            std::cout << "{\"fixture\":\"" << fixture << "\",\"d\":\"" << dtag << "\",\"pi\":{";
            bool first = true;
            for (auto& r : rows) {
                if (!first) std::cout << ',';
                std::cout << "\"" << r.label << "\":" << r.pi;
                first = false;
            }
            std::cout << "}}\n";
        } else {
            emit_rows(rows, format, std::cout);
        }
        return 0;
    }

    Family fam;
    int d;
    try {
        fam = family_parse(family_str);
        d = std::stoi(dtag);
        if (d < 1 || n < 1) throw std::invalid_argument("need positive n and d");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    auto blocks = block_characters(fam, n, d);
    if (format == "json") {
        std::cout << "{\"family\":\"" << family_name(fam) << "\",\"n\":" << n << ",\"d\":" << d << ",\"blocks\":[";
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b) std::cout << ',';
            std::cout << "{\"core\":\"" << label_to_string(blocks[b].core) << "\",\"chars\":[";
            for (size_t i = 0; i < blocks[b].characters.size(); ++i) {
                const CharLabel& chi = blocks[b].characters[i];
                if (i) std::cout << ',';
                std::cout << "{\"label\":\"" << label_to_string(chi) << "\",\"degree\":\""
                          << degree_of(fam, chi).to_string() << "\",\"pi\":" << pi(blocks[b], chi).value << "}";
            }
            std::cout << "]}";
        }
        std::cout << "]}\n";
        return 0;
    }
    std::vector<PiRow> rows;
    for (auto& blk : blocks)
        for (auto& chi : blk.characters)
            rows.push_back({family_name(fam), n, dtag, label_to_string(blk.core), label_to_string(chi),
                            degree_of(fam, chi).to_string(), pi(blk, chi).value});
    emit_rows(rows, format, std::cout);
    return 0;
}

int cmd_tree(const std::string& fixture, const std::string& family_str, long long n, const std::string& dtag,
             const std::string& core_filter) {
    try {
        if (!fixture.empty()) {
            FixtureFile fx = load_fixture(fixture, dtag);
            if (fx.trees.empty()) {
                std::cerr << "error: fixture " << fixture << " d=" << dtag << " carries no tree\n";
                return kExitUsage;
            }
            for (auto& ft : fx.trees) std::cout << dot_emit(ft.tree);
            return 0;
        }
        Family fam = family_parse(family_str);
        int d = std::stoi(dtag);
        bool any = false;
        for (auto& blk : block_characters(fam, n, d)) {
            if (blk.weight != 1) continue;
            if (!core_filter.empty() && label_to_string(blk.core) != core_filter) continue;
            std::cout << dot_emit(build_tree(blk));
            any = true;
        }
        if (!any) {
            std::cerr << "error: no weight-1 block matches\n";
            return kExitUsage;
        }
        return 0;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_algo(long long ell, int d, const std::string& pi_csv, const std::string& format) {
    std::vector<long long> pv;
    try {
        std::istringstream is(pi_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) pv.push_back(std::stoll(tok));
        StarAlgebra alg(d, ell);
        if (static_cast<int>(pv.size()) != d) throw std::invalid_argument("--pi needs exactly d values");

        auto xs = run_algorithm(alg, pv);
        std::vector<VirtualCharacter> totals;
        for (auto& x : xs) totals.push_back(alternating_sum(alg, pv, x));
        auto matrix = decomposition_matrix(totals, pv);

        if (format == "json") {
            std::cout << "{\"l\":" << ell << ",\"d\":" << d << ",\"complexes\":[";
            for (size_t i = 0; i < xs.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << "{\"i\":" << xs[i].index << ",\"pi\":" << xs[i].pi << ",\"projectives\":[";
                for (size_t p = 0; p < xs[i].projective_terms.size(); ++p)
                    std::cout << (p ? "," : "") << xs[i].projective_terms[p];
                std::cout << "],\"degree0\":{\"socle\":" << xs[i].degree0.socle
                          << ",\"length\":" << xs[i].degree0.length << "},\"cohomology\":[";
                bool first = true;
                for (auto& [j, h] : xs[i].cohomology) {
                    if (!first) std::cout << ',';
                    std::cout << "{\"degree\":" << -j << ",\"socle\":" << h.socle << ",\"length\":" << h.length << "}";
                    first = false;
                }
                std::cout << "],\"total\":\"" << totals[i].to_string() << "\"}";
            }
            std::cout << "],\"decomposition_matrix\":[";
            for (size_t r = 0; r < matrix.size(); ++r) {
                if (r) std::cout << ',';
                std::cout << '[';
                for (size_t c = 0; c < matrix[r].size(); ++c) std::cout << (c ? "," : "") << matrix[r][c];
                std::cout << ']';
            }
            std::cout << "]}\n";
            return 0;
        }

        std::cout << "Complexes (l=" << ell << ", d=" << d << "):\n";
        for (auto& x : xs) {
            std::cout << "  X_" << x.index << ":  ";
            for (int p : x.projective_terms) std::cout << "P" << p << " -> ";
            std::cout << "C_" << x.index << "   (dim " << x.degree0.length;
            if (!x.degree0.is_zero())
                std::cout << ", " << top(alg, x.degree0) << "/.../" << x.degree0.socle;
            std::cout << ")\n";
        }
        std::cout << "\nCohomology:\n";
        long long maxpi = *std::max_element(pv.begin(), pv.end());
        std::cout << "  X_i ";
        for (long long j = maxpi; j >= 1; --j) std::cout << "| H^-" << j << " ";
        std::cout << "| Total\n";
        for (auto& x : xs) {
            std::cout << "  " << x.index << "   ";
            for (long long j = maxpi; j >= 1; --j) {
                auto it = x.cohomology.find(j);
                std::string cell;
                if (it != x.cohomology.end()) {
                    auto ls = layers(alg, it->second);
                    for (size_t k = 0; k < ls.size(); ++k) cell += (k ? "/" : "") + std::to_string(ls[k]);
                }
                std::cout << "| " << (cell.empty() ? "." : cell) << " ";
            }
            std::cout << "| " << alternating_sum(alg, pv, x).to_string() << '\n';
        }
        std::cout << "\nDecomposition matrix (rows in input order):\n";
        for (auto& row : matrix) {
            std::cout << "  ";
            for (long long v : row) std::cout << v << ' ';
            std::cout << '\n';
        }
        return 0;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const std::string& suite, const std::string& family_str, long long max_n, unsigned seed) {
    SweepSpec spec;
    if (!family_str.empty()) {
        // restrict the sweep to one family by zeroing the other bounds
        Family fam;
        try {
            fam = family_parse(family_str);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        SweepSpec zero;
        zero.gl_max_n = zero.gu_max_n = zero.symbol_max_n = 0;
        spec = zero;
        if (fam == Family::GL) spec.gl_max_n = 20;
        if (fam == Family::GU) spec.gu_max_n = 16;
        if (fam == Family::BC || fam == Family::Dplus || fam == Family::Dminus) spec.symbol_max_n = 12;
    }
    if (max_n > 0) {
        spec.gl_max_n = std::min(spec.gl_max_n, max_n);
        spec.gu_max_n = std::min(spec.gu_max_n, max_n);
        spec.symbol_max_n = std::min(spec.symbol_max_n, max_n);
    }

    std::vector<std::string> names;
    if (suite == "all")
        names = verify_suite_names();
    else
        names.push_back(suite);
    bool all_pass = true;
    try {
        for (auto& name : names) {
            SuiteResult r = run_verify_suite(name, spec, seed);
            std::cout << r.summary() << '\n';
            for (auto& f : r.failures) std::cout << "    " << f << '\n';
            all_pass = all_pass && r.pass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return all_pass ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    validate_twisted_data();
    CLI::App app{"exact perversity functions, Brauer trees and perverse equivalences for unipotent blocks"};
    app.require_subcommand(1);

    std::string family, dtag = "1", format = "text", fixture, core_filter, pi_csv, suite = "all";
    long long n = 1, ell = 0, max_n = 0;
    unsigned seed = 20260809;

    auto* tab = app.add_subcommand("pi-table", "perversity table for a block decomposition or a bundled fixture");
    tab->add_option("--family", family, "GL, GU, BC, D+ or D-");
    tab->add_option("--n", n, "rank");
    tab->add_option("--d", dtag, "order of q mod l (twisted groups: 8a/8b/12a/12b/24a/24b)");
    tab->add_option("--fixture", fixture, "exceptional-group fixture tag (G2, 3D4, F4, E6, 2E6, 2B2, 2G2, 2F4)");
    tab->add_option("--format", format, "text, csv or json");

    auto* tr = app.add_subcommand("tree", "Brauer trees as DOT, labelled by character | pi | pi0");
    tr->add_option("--family", family, "GL, GU, BC, D+ or D-");
    tr->add_option("--n", n, "rank");
    tr->add_option("--d", dtag, "order of q mod l");
    tr->add_option("--fixture", fixture, "exceptional-group fixture tag");
    tr->add_option("--core", core_filter, "restrict to the block with this core, e.g. \"[1,1]\"");

    auto* al = app.add_subcommand("algo", "run the perverse-equivalence algorithm over the star algebra");
    al->add_option("--l", ell, "order of the cyclic normal subgroup (d | l-1)")->required();
    al->add_option("--d", dtag, "number of simple modules")->required();
    al->add_option("--pi", pi_csv, "comma-separated perversity values, one per simple")->required();
    al->add_option("--format", format, "text or json");

    auto* ve = app.add_subcommand("verify", "run named verification suites (exit 1 on any violation)");
    ve->add_option("--suite", suite, "suite name or 'all'");
    ve->add_option("--family", family, "restrict sweep suites to one family");
    ve->add_option("--max-n", max_n, "cap the sweep rank");
    ve->add_option("--seed", seed, "seed for the randomized suites");

    CLI11_PARSE(app, argc, argv);

    if (tab->parsed()) return cmd_pi_table(fixture, family, n, dtag, format);
    if (tr->parsed()) return cmd_tree(fixture, family, n, dtag, core_filter);
    if (al->parsed()) return cmd_algo(ell, std::stoi(dtag), pi_csv, format);
    if (ve->parsed()) return cmd_verify(suite, family, max_n, seed);
    return kExitUsage;
}
