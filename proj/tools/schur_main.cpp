#include "schur/invariants.hpp"
#include "schur/render.hpp"
#include "schur/rigidity.hpp"
#include "schur/space.hpp"
#include "schur/translate.hpp"
#include "schur/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace schur;

struct SpaceOptions {
    std::string family;
    int rank = 0;
    int node = 0;
};

void add_space_options(CLI::App* cmd, SpaceOptions& opt) {
    cmd->add_option("--family", opt.family, "A, B, C, D, E6 or E7")->required();
    cmd->add_option("--rank", opt.rank, "rank of the root system (implied for E6/E7)");
    cmd->add_option("--node", opt.node,
                    "cominuscule node (defaults: B->1, C->n, E6->6, E7->7)");
}

CominusculeSpace resolve_space(const SpaceOptions& opt) {
    Family fam = family_from_string(opt.family);
    int rank = opt.rank;
    if (rank == 0) {
        if (fam == Family::E6) rank = 6;
        else if (fam == Family::E7) rank = 7;
        else throw std::invalid_argument("--rank is required for family " + opt.family);
    }
    int node = opt.node;
    if (node == 0) {
        switch (fam) {
            case Family::B: node = 1; break;
            case Family::C: node = rank; break;
            case Family::E6: node = 6; break;
            case Family::E7: node = 7; break;
            default:
                throw std::invalid_argument("--node is required for family " + opt.family);
        }
    }
    return build_space(fam, rank, node);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

int cmd_list(const SpaceOptions& opt, const std::string& format, const std::string& convention,
             const std::string& output) {
    CominusculeSpace X = resolve_space(opt);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    PartitionConvention conv = convention == "decreasing" ? PartitionConvention::decreasing
                                                          : PartitionConvention::increasing;
    emit(render_list(X, poset, list_format_from_string(format), conv), output);
    return 0;
}

int cmd_hasse(const SpaceOptions& opt, const std::string& output) {
    CominusculeSpace X = resolve_space(opt);
    HassePoset poset = enumerate_classes(X);
    classify(X, poset);
    emit(render_dot(X, poset), output);
    return 0;
}

int cmd_verify(const std::string& suite) {
    return verify_suite(suite, std::cout) ? 0 : 2;
}

void print_certificate(const CominusculeSpace& X, const SchubertClass& w) {
    FlexCertificate cert = flex_certificate(X, w);
    std::cout << "certificate: "
              << (cert.kind == FlexCertificate::Kind::H1 ? "H1 fails" : "H2 fails") << " for "
              << (cert.kind == FlexCertificate::Kind::H1 ? "β = " : "ε = ")
              << to_string(cert.partner) << ", γ = " << to_string(cert.gamma) << "\n";
    std::cout << "  divisor ideal size: " << cert.divisor.dim() << "\n";
    for (const auto& [name, okay] : cert.proof_checks)
        std::cout << "  check " << name << ": " << (okay ? "ok" : "FAILED") << "\n";
}

int cmd_translate(const SpaceOptions& opt, const std::string& partition_arg,
                  const std::string& aj_arg, const std::string& convention) {
    CominusculeSpace X = resolve_space(opt);
    auto fam = partition_family_of(X);
    if (!fam)
        throw std::invalid_argument("translate needs a classical space with a partition model");
    int length = *fam == PartitionFamily::Gr ? X.node() : X.sys().rank();
    int bound = *fam == PartitionFamily::Gr ? X.sys().rank() + 1 : 2 * X.sys().rank();

    PartitionIndex p{*fam, length, bound, {}};
    if (!partition_arg.empty()) {
        std::vector<int> parts = parse_int_list(partition_arg);
        if (convention == "decreasing")
            p = from_decreasing_convention(*fam, length, bound, parts);
        else {
            p.parts = parts;
            validate(p);
        }
    } else if (!aj_arg.empty()) {
        auto colon = aj_arg.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--aj expects the form a:j1,j2,...");
        AJInvariant aj;
        aj.a = std::stoi(aj_arg.substr(0, colon));
        aj.J = parse_int_list(aj_arg.substr(colon + 1));
        p = aj_to_partition(*fam, length, bound, aj);
    } else {
        throw std::invalid_argument("translate needs --partition or --aj");
    }

    std::cout << X.label() << " class λ = (";
    for (std::size_t k = 0; k < p.parts.size(); ++k)
        std::cout << (k ? "," : "") << p.parts[static_cast<std::size_t>(k)];
    std::cout << ")";
    {
        auto young = to_decreasing_convention(p);
        std::cout << "  [decreasing: (";
        for (std::size_t k = 0; k < young.size(); ++k) std::cout << (k ? "," : "") << young[k];
        std::cout << ")]\n";
    }

    SchubertClass w = class_of_partition(X, p);
    std::cout << "dimension: " << w.dim() << "\n";

    if (is_bottom(p) || is_top(p)) {
        std::cout << (is_bottom(p) ? "bottom class [o]" : "top class [X]") << "; rigid\n";
        return 0;
    }

    AJInvariant aj = compute_aj(X, w);
    std::cout << "a:J = " << aj.a << ":";
    for (std::size_t k = 0; k < aj.J.size(); ++k) std::cout << (k ? "," : "") << aj.J[k];
    std::cout << "\n";
    if (*fam == PartitionFamily::Spinor)
        std::cout << "r = " << spinor_r(X.sys().rank(), aj) << "\n";

    bool by_partition = rigid_by_partition(p);
    auto h1 = h1_witnesses(X, w, aj);
    auto h2 = h2_witnesses(X, w, aj);
    bool by_roots = h1.empty() && h2.empty();
    if (by_partition != by_roots)
        throw std::logic_error("partition criterion and root computation disagree");
    std::cout << "rigid (partition criterion): " << (by_partition ? "yes" : "no") << "\n";
    std::cout << "rigid (root-level H check): " << (by_roots ? "yes" : "no") << "\n";

    IncidenceDescription inc = incidence_description(X, w);
    std::cout << "incidence: " << inc.text << "\n";

    if (!by_roots) {
        for (const auto& [beta, gamma] : h1)
            std::cout << "H1 witness: β = " << to_string(beta)
                      << ", γ = " << to_string(gamma) << "\n";
        for (const auto& [eps, gamma] : h2)
            std::cout << "H2 witness: ε = " << to_string(eps)
                      << ", γ = " << to_string(gamma) << "\n";
        print_certificate(X, w);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur rigidity of Schubert classes in cominuscule spaces"};
    app.require_subcommand(1);

    SpaceOptions list_opt;
    std::string list_format = "text", list_conv = "increasing", list_out;
    CLI::App* list_cmd = app.add_subcommand("list", "list every Schubert class of a space");
    add_space_options(list_cmd, list_opt);
    list_cmd->add_option("--format", list_format, "json, csv, md or text");
    list_cmd->add_option("--convention", list_conv, "partition convention: increasing or decreasing");
    list_cmd->add_option("-o,--output", list_out, "write to a file instead of stdout");

    SpaceOptions hasse_opt;
    std::string hasse_out;
    bool hasse_dot = false;
    CLI::App* hasse_cmd = app.add_subcommand("hasse", "emit the Hasse poset as a DOT digraph");
    add_space_options(hasse_cmd, hasse_opt);
    hasse_cmd->add_flag("--dot", hasse_dot, "DOT output (the only supported format)");
    hasse_cmd->add_option("-o,--output", hasse_out, "write to a file instead of stdout");

    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the exhaustive cross-check suites");
    verify_cmd->add_option("suite", suite, "dictionaries, criteria, duality, figures or all");

    SpaceOptions tr_opt;
    std::string tr_partition, tr_aj, tr_conv = "increasing";
    CLI::App* tr_cmd = app.add_subcommand("translate",
                                          "translate between partition and (a, J) descriptions");
    add_space_options(tr_cmd, tr_opt);
    tr_cmd->add_option("--partition", tr_partition, "comma-separated parts");
    tr_cmd->add_option("--aj", tr_aj, "a:j1,j2,... as in the tables");
    tr_cmd->add_option("--convention", tr_conv, "partition convention: increasing or decreasing");

    try {
        app.parse(argc, argv);
        if (list_cmd->parsed()) return cmd_list(list_opt, list_format, list_conv, list_out);
        if (hasse_cmd->parsed()) return cmd_hasse(hasse_opt, hasse_out);
        if (verify_cmd->parsed()) return cmd_verify(suite);
        if (tr_cmd->parsed()) return cmd_translate(tr_opt, tr_partition, tr_aj, tr_conv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
