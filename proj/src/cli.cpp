#include "ordspeed/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ordspeed/gen.hpp"
#include "ordspeed/io.hpp"
#include "ordspeed/reports.hpp"

namespace ordspeed {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("bad integer '" + item + "' in list '" + s + "'");
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot open '" + path + "' for writing");
    f << text;
}

struct CommonIo {
    std::string format = "json";
    bool allow_partial = false;
    int threads = 1;
    uint64_t budget_nodes = 100'000'000;
    uint64_t budget_keys = 10'000'000;
    bool exact_dedup = false;

    CountOptions count_options() const {
        CountOptions opts;
        opts.budget.max_nodes = budget_nodes;
        opts.budget.max_set_keys = budget_keys;
        opts.threads = threads;
        opts.exact_dedup = exact_dedup;
        return opts;
    }
};

void add_budget_flags(CLI::App* cmd, CommonIo& io) {
    cmd->add_option("--threads", io.threads, "worker threads (0 = hardware)")->capture_default_str();
    cmd->add_option("--budget-nodes", io.budget_nodes, "enumeration node cap")->capture_default_str();
    cmd->add_option("--budget-keys", io.budget_keys, "dedup set size cap")->capture_default_str();
    cmd->add_flag("--exact-dedup", io.exact_dedup, "store full canonical keys instead of hashes");
    cmd->add_flag("--allow-partial", io.allow_partial, "exit 0 even when budgets truncated the result");
}

std::string render_json(const Json& doc) {
    Json wrapped = doc;
    if (wrapped.is_object()) wrapped["schema"] = 1;
    return wrapped.dump(2) + "\n";
}

std::string speeds_csv(const SpeedSequence& seq) {
    std::ostringstream out;
    out << "n,count,exact\n";
    for (size_t i = 0; i < seq.counts.size(); ++i)
        out << (i + 1) << "," << seq.counts[i].str() << "," << (seq.exact[i] ? "true" : "false")
            << "\n";
    return out.str();
}

std::string speeds_table(const SpeedSequence& seq) {
    std::ostringstream out;
    for (size_t i = 0; i < seq.counts.size(); ++i)
        out << (i + 1) << "\t" << seq.counts[i].str() << (seq.exact[i] ? "" : "\t(partial)") << "\n";
    return out.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ordered-graph speed toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit a named graph in the text format");
    struct {
        std::string kind;
        int n = 4;
        int m = 2;
        std::string bits = "0000";
        std::string orient = "<";
        std::string perm;
        std::string coeffs;
        int prefix = 0;
        std::string out_path;
    } gen_opts;
    gen->add_option("--kind", gen_opts.kind,
                    "K|E|J1|J2|J3|J4|L|Q1|Q2|H1|H2|M|perm|somebases")
        ->required();
    gen->add_option("-n,--order", gen_opts.n, "order for scalable kinds");
    gen->add_option("--m", gen_opts.m, "pair count for kind M");
    gen->add_option("--bits", gen_opts.bits, "four I-bits for kind M, e.g. 0110");
    gen->add_option("--orient", gen_opts.orient, "< or > for kind M");
    gen->add_option("--perm", gen_opts.perm, "comma-separated permutation values for kind perm");
    gen->add_option("--coeffs", gen_opts.coeffs, "nondecreasing a(0..k) for kind somebases");
    gen->add_option("--prefix", gen_opts.prefix, "prefix length for kind somebases");
    gen->add_option("--out", gen_opts.out_path, "output file (default stdout)");
    gen->callback([&] {
        OrderedGraph g;
        if (gen_opts.kind == "M") {
            if (gen_opts.bits.size() != 4) throw InputError("--bits must have exactly four 0/1 characters");
            std::array<bool, 4> I{};
            for (int i = 0; i < 4; ++i) {
                char c = gen_opts.bits[static_cast<size_t>(i)];
                if (c != '0' && c != '1') throw InputError("--bits must have exactly four 0/1 characters");
                I[static_cast<size_t>(i)] = c == '1';
            }
            Orientation o = gen_opts.orient == ">" ? Orientation::Greater : Orientation::Less;
            if (gen_opts.orient != "<" && gen_opts.orient != ">")
                throw InputError("--orient must be '<' or '>'");
            g = gen_m(I, gen_opts.m, o);
        } else if (gen_opts.kind == "perm") {
            if (gen_opts.perm.empty()) throw InputError("kind perm requires --perm");
            g = gen_permutation_graph(Permutation(parse_int_list(gen_opts.perm)));
        } else if (gen_opts.kind == "somebases") {
            if (gen_opts.coeffs.empty()) throw InputError("kind somebases requires --coeffs");
            if (gen_opts.prefix <= 0) throw InputError("kind somebases requires --prefix");
            g = gen_somebases_prefix(parse_int_list(gen_opts.coeffs), gen_opts.prefix);
        } else {
            g = gen_basic(parse_basic_kind(gen_opts.kind), gen_opts.n);
        }
        emit(out, gen_opts.out_path, format_graph(g));
    });

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "block partitions and quotients");
    struct {
        std::string graph;
        std::string mode = "homogeneous";
        int ell = 1;
        int k = 1;
    } dec_opts;
    dec->add_option("--graph", dec_opts.graph, "graph file")->required();
    dec->add_option("--mode", dec_opts.mode, "homogeneous|min-ell|irreducible|ktype")
        ->capture_default_str();
    dec->add_option("--ell", dec_opts.ell, "ell for mode min-ell");
    dec->add_option("-k", dec_opts.k, "k for mode ktype");
    dec->callback([&] {
        OrderedGraph g = parse_graph(read_input(dec_opts.graph));
        Json doc;
        doc["mode"] = dec_opts.mode;
        if (dec_opts.mode == "homogeneous") {
            BlockPartition p = homogeneous_blocks(g);
            doc["partition"] = to_json(p);
            doc["quotient"] = to_json(quotient(g, p));
        } else if (dec_opts.mode == "min-ell") {
            doc["partition"] = to_json(min_l_homogeneous_partition(g, dec_opts.ell));
        } else if (dec_opts.mode == "irreducible") {
            doc["decomposition"] = to_json(irreducible_decomposition(g));
            doc["irreducible"] = is_irreducible(g);
        } else if (dec_opts.mode == "ktype") {
            auto [h, p] = k_type_graph(g, dec_opts.k);
            doc["partition"] = to_json(p);
            doc["quotient"] = to_json(h);
        } else {
            throw InputError("unknown decompose mode '" + dec_opts.mode + "'");
        }
        out << render_json(doc);
    });

    // ---- detect ----
    auto* det = app.add_subcommand("detect", "largest Type 1/2/3 structures");
    struct {
        std::string graph;
        int ell = 1;
        bool use_complement = false;
    } det_opts;
    det->add_option("--graph", det_opts.graph, "graph file")->required();
    det->add_option("--ell", det_opts.ell, "gap parameter for Type 3")->capture_default_str();
    det->add_flag("--complement", det_opts.use_complement, "detect on the complement");
    det->callback([&] {
        OrderedGraph g = parse_graph(read_input(det_opts.graph));
        if (det_opts.use_complement) g = complement(g);
        Json doc;
        auto pack = [](const DetectorResult& r) {
            Json j = {{"k", r.k}};
            if (r.witness) j["witness"] = to_json(*r.witness);
            return j;
        };
        doc["type1"] = pack(max_type1_k(g));
        doc["type2"] = pack(max_type2_k(g));
        doc["type3"] = pack(max_type3_k(g, det_opts.ell));
        doc["type3"]["ell"] = det_opts.ell;
        out << render_json(doc);
    });

    // ---- certify ----
    auto* cert = app.add_subcommand("certify", "Lemma-style partition-or-witness certificate");
    struct {
        std::string graph;
        int k = 1;
        int ell = 1;
        bool use_complement = false;
        bool no_greedy = false;
    } cert_opts;
    cert->add_option("--graph", cert_opts.graph, "graph file")->required();
    cert->add_option("-k", cert_opts.k, "structure size")->required();
    cert->add_option("--ell", cert_opts.ell, "homogeneity radius")->required();
    cert->add_flag("--complement", cert_opts.use_complement, "certify the complement");
    cert->add_flag("--no-greedy", cert_opts.no_greedy, "skip the greedy-partition shortcut");
    cert->callback([&] {
        OrderedGraph g = parse_graph(read_input(cert_opts.graph));
        if (cert_opts.use_complement) g = complement(g);
        CertifyOptions copts;
        copts.greedy_first = !cert_opts.no_greedy;
        Certificate c = certify_partition(g, cert_opts.k, cert_opts.ell, copts);
        Json doc = to_json(c);
        doc["k"] = cert_opts.k;
        doc["ell"] = cert_opts.ell;
        out << render_json(doc);
    });

    // ---- count-speed ----
    auto* cs = app.add_subcommand("count-speed", "exact speeds |P_1..N|");
    struct {
        std::vector<std::string> forbid;
        std::vector<std::string> blocks;
        std::string closure;
        int max_n = 8;
    } cs_opts;
    CommonIo cs_io;
    cs->add_option("--forbid", cs_opts.forbid, "forbidden graph file (repeatable)");
    cs->add_option("--blocks", cs_opts.blocks, "allowed irreducible block file (repeatable)");
    cs->add_option("--closure", cs_opts.closure, "host graph file (subgraph closure)");
    cs->add_option("--max-n", cs_opts.max_n, "largest order")->required();
    cs->add_option("--format", cs_io.format, "json|csv|table")->capture_default_str();
    add_budget_flags(cs, cs_io);
    cs->callback([&] {
        int modes = (!cs_opts.blocks.empty() ? 1 : 0) + (!cs_opts.closure.empty() ? 1 : 0) +
                    (!cs_opts.forbid.empty() ? 1 : 0);
        if (modes > 1)
            throw InputError("--forbid, --blocks and --closure are mutually exclusive");
        PropertySpec spec = ForbiddenSet{};
        if (!cs_opts.blocks.empty()) {
            std::vector<OrderedGraph> allowed;
            for (const auto& path : cs_opts.blocks) allowed.push_back(parse_graph(read_input(path)));
            spec = BlockProfile{std::move(allowed)};
        } else if (!cs_opts.closure.empty()) {
            spec = SubgraphClosure{parse_graph(read_input(cs_opts.closure))};
        } else {
            ForbiddenSet fs;
            for (const auto& path : cs_opts.forbid) fs.graphs.push_back(parse_graph(read_input(path)));
            spec = std::move(fs);
        }
        SpeedSequence seq = count_speed(spec, cs_opts.max_n, cs_io.count_options());
        if (cs_io.format == "csv")
            out << speeds_csv(seq);
        else if (cs_io.format == "table")
            out << speeds_table(seq);
        else
            out << render_json(Json{{"speeds", to_json(seq)}});
        if (!seq.all_exact() && !cs_io.allow_partial) exit_code = 3;
    });

    // ---- count-subgraphs ----
    auto* csg = app.add_subcommand("count-subgraphs", "distinct induced subgraph count S_n(G)");
    struct {
        std::string graph;
        int n = 1;
    } csg_opts;
    CommonIo csg_io;
    csg->add_option("--graph", csg_opts.graph, "graph file")->required();
    csg->add_option("-n,--order", csg_opts.n, "subgraph order")->required();
    csg->add_option("--format", csg_io.format, "json|csv")->capture_default_str();
    add_budget_flags(csg, csg_io);
    csg->callback([&] {
        OrderedGraph g = parse_graph(read_input(csg_opts.graph));
        SubgraphCount c = count_subgraphs(g, csg_opts.n, csg_io.count_options());
        if (csg_io.format == "csv")
            out << "n,count,exact\n"
                << csg_opts.n << "," << c.count.str() << "," << (c.exact ? "true" : "false") << "\n";
        else
            out << render_json(Json{{"n", csg_opts.n}, {"count", c.count.str()}, {"exact", c.exact}});
        if (!c.exact && !csg_io.allow_partial) exit_code = 3;
    });

    // ---- classify ----
    auto* cl = app.add_subcommand("classify", "speed-regime classification");
    struct {
        std::string input;
        int max_k = 8;
        int max_ratio_degree = 6;
    } cl_opts;
    cl->add_option("--input", cl_opts.input, "speed sequence file (JSON or CSV), - for stdin")
        ->required();
    cl->add_option("--max-k", cl_opts.max_k, "case-(c) Fibonacci order cap")->capture_default_str();
    cl->add_option("--max-ratio-degree", cl_opts.max_ratio_degree, "case-(c) ratio degree cap")
        ->capture_default_str();
    cl->callback([&] {
        SpeedSequence seq = parse_speed_sequence(read_input(cl_opts.input));
        ClassifyOptions copts;
        copts.max_fib_order = cl_opts.max_k;
        copts.max_ratio_degree = cl_opts.max_ratio_degree;
        out << render_json(to_json(classify_regime(seq, copts)));
    });

    // ---- growth-root ----
    auto* gr = app.add_subcommand("growth-root", "positive root of x^{k+1} = sum a(i) x^i");
    struct {
        std::string coeffs;
        double tol = 1e-12;
    } gr_opts;
    gr->add_option("--coeffs", gr_opts.coeffs, "comma-separated a(0..k)")->required();
    gr->add_option("--tol", gr_opts.tol, "bisection tolerance")->capture_default_str();
    gr->callback([&] {
        std::vector<BigInt> coeffs;
        for (int c : parse_int_list(gr_opts.coeffs)) coeffs.emplace_back(c);
        double root = growth_root(coeffs, gr_opts.tol);
        Json doc = {{"coeffs", Json::parse("[" + gr_opts.coeffs + "]")}, {"root", root}};
        out << render_json(doc);
    });

    // ---- jfamily ----
    auto* jf = app.add_subcommand("jfamily", "J-family identification and witness sets");
    struct {
        std::string graph;
        std::string mode = "identify";
        int ell = 4;
    } jf_opts;
    jf->add_option("--graph", jf_opts.graph, "graph file")->required();
    jf->add_option("--mode", jf_opts.mode, "identify|classify|witness")->capture_default_str();
    jf->add_option("--ell", jf_opts.ell, "ell for mode witness")->capture_default_str();
    jf->callback([&] {
        OrderedGraph g = parse_graph(read_input(jf_opts.graph));
        Json doc;
        doc["mode"] = jf_opts.mode;
        if (jf_opts.mode == "identify") {
            auto cls = j_identify(g);
            doc["member"] = cls.has_value();
            if (cls) doc["class"] = to_json(*cls);
        } else if (jf_opts.mode == "classify") {
            P3P4Result r = p3p4_classify(g);
            if (const auto* cls = std::get_if<JClass>(&r)) {
                doc["class"] = to_json(*cls);
            } else {
                const auto& pair = std::get<std::pair<OrderedGraph, OrderedGraph>>(r);
                doc["witness_pair"] = {to_json(pair.first), to_json(pair.second)};
            }
        } else if (jf_opts.mode == "witness") {
            doc["report"] = to_json(min_witness_k(g, jf_opts.ell));
            doc["ell"] = jf_opts.ell;
        } else {
            throw InputError("unknown jfamily mode '" + jf_opts.mode + "'");
        }
        out << render_json(doc);
    });

    std::vector<const char*> argv;
    argv.push_back("ordspeed");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "ordspeed: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "ordspeed: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        err << "ordspeed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "ordspeed: internal error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}

}  // namespace ordspeed
