// dcl: verify the distinct-cycle-length construction, experiment with
// gadgets, enumerate cycles of edge-list graphs, and tabulate bounds.
//
// Exit codes: 0 verified / distinct, 2 honest negative verdict, 1 error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "dcl/certificate.hpp"
#include "dcl/dcl.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dcl::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dcl::Error("cannot write " + path);
    out << text;
    if (!out) throw dcl::Error("write failed for " + path);
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

struct ParamFlags {
    std::optional<dcl::Int> r;
    std::optional<dcl::Int> t;
    std::optional<dcl::Int> n;
    bool exploratory = false;
    unsigned threads = 1;

    void attach(CLI::App* cmd) {
        auto* ro = cmd->add_option("--r", r, "period index, t = 27720r + 169");
        auto* to = cmd->add_option("--t", t, "construction parameter t");
        ro->excludes(to);
        cmd->add_option("--n", n, "vertex count (default n_t)");
        cmd->add_flag("--exploratory", exploratory, "allow t outside 27720r+169, r>=1; report without asserting");
        cmd->add_option("--threads", threads, "worker threads, 0 = all cores; 1 is the reference mode")
            ->capture_default_str();
    }

    dcl::ConstructionParams resolve() const {
        if (!r && !t) throw dcl::Error("one of --r or --t is required");
        dcl::Int tv = t ? *t : dcl::t_for(*r);
        if (r && *r < 1 && !exploratory) throw dcl::InvalidT("r must be >= 1");
        return dcl::validate_params(tv, n, exploratory);
    }
};

int cmd_verify(const ParamFlags& flags, const std::string& cert_path, const std::vector<std::string>& extra_plain) {
    dcl::ConstructionParams p = flags.resolve();
    dcl::Plan plan = dcl::build_plan();
    if (!extra_plain.empty() && !p.exploratory) throw dcl::Error("--extra-plain requires --exploratory");
    for (const std::string& f : extra_plain) {
        dcl::AffineForm len = dcl::parse_form(f);
        if (len.depends_on_i()) throw dcl::Error("--extra-plain takes a form in t only");
        plan.ranges.push_back({dcl::SubgraphKind::PlainCycle, len, len, dcl::parse_form("i")});
    }
    // Summary goes to stderr when the certificate itself is on stdout.
    std::ostream& log = (cert_path.empty() || cert_path == "-") ? std::cerr : std::cout;

    log << "t=" << p.t << " r=" << (p.r >= 0 ? std::to_string(p.r) : "n/a") << " n=" << p.n << " n_t=" << p.n_t
        << (p.exploratory ? " (exploratory)" : "") << "\n";
    for (const std::string& f : extra_plain) log << "extra plain cycle B_{" << f << "}\n";

    dcl::TableReport tables = dcl::check_published_tables();
    for (const auto* m : {&tables.family_a, &tables.family_b}) {
        log << "table " << m->family << ": " << m->matched << "/" << m->published << " published lengths matched"
            << (m->ok() ? "" : "  MISMATCH") << "\n";
    }

    dcl::Certificate cert = dcl::verify_distinct(p, plan, resolve_threads(flags.threads));
    write_output(cert_path, dcl::render_certificate(cert));

    log << "subgraphs: plain=" << cert.counts.plain << " family_a=" << cert.counts.family_a
        << " family_b=" << cert.counts.family_b << " (B_1 is a loop at x, B_2 a digon)\n";
    log << "vertices: direct=" << cert.vertices.direct << " closed_form=" << cert.vertices.closed_form
        << " n=" << cert.vertices.simplified << (cert.vertices.holds() ? " OK" : " MISMATCH") << "\n";
    log << "edges: direct=" << cert.edges.direct << " closed_form=" << cert.edges.closed_form
        << " n+32t-1=" << cert.edges.simplified << (cert.edges.holds() ? " OK" : " MISMATCH") << "\n";
    log << "cycles: " << cert.total_cycles << ", lengths " << (cert.distinct ? "pairwise distinct" : "COLLIDE")
        << "\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(cert.collisions.size(), 10); ++k) {
        const auto& c = cert.collisions[k];
        log << "  collision at length " << c.length << ":";
        for (const auto& pr : c.provenances) log << " " << pr.to_string();
        log << "\n";
    }
    if (cert.collisions.size() > 10) log << "  ... " << cert.collisions.size() - 10 << " more\n";

    bool ok = tables.ok() && cert.vertices.holds() && cert.edges.holds() && cert.distinct;
    log << "verdict: " << (ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
    return ok ? kOk : kNegative;
}

int cmd_spectrum(const ParamFlags& flags, bool verbose, const std::string& out_path) {
    dcl::ConstructionParams p = flags.resolve();
    auto items = dcl::assemble_spectrum(p, dcl::build_plan(), resolve_threads(flags.threads));
    std::string text;
    text.reserve(items.size() * (verbose ? 48 : 9));
    for (const auto& it : items) {
        text += std::to_string(it.length);
        if (verbose) {
            text += '\t';
            text += it.provenance.to_string();
        }
        text += '\n';
    }
    write_output(out_path, text);
    return kOk;
}

int cmd_tables() {
    dcl::TableReport rep = dcl::check_published_tables();
    for (const auto* m : {&rep.family_a, &rep.family_b}) {
        std::cout << m->family << ": " << m->matched << "/" << m->published << " matched, " << m->derived
                  << " derived\n";
        for (const auto& f : m->only_published) std::cout << "  published only: " << f << "\n";
        for (const auto& f : m->only_derived) std::cout << "  derived only: " << f << "\n";
    }
    return rep.ok() ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

struct GadgetFlags {
    std::string family;
    std::string spec;
    std::optional<dcl::Int> t;
    std::optional<dcl::Int> i;

    void attach(CLI::App* cmd) {
        auto* fo = cmd->add_option("--family", family, "built-in family: a or b")->check(CLI::IsMember({"a", "b"}));
        auto* so = cmd->add_option("--spec", spec, "gadget file ('cycle <form>' / 'spoke <len> @ <attach>')");
        fo->excludes(so);
        cmd->add_option("--t", t, "value of t");
        cmd->add_option("--i", i, "value of i");
    }

    dcl::GadgetTemplate load() const {
        if (!family.empty()) return family == "a" ? dcl::family_a() : dcl::family_b();
        if (spec.empty()) throw dcl::Error("one of --family or --spec is required");
        return dcl::parse_gadget(read_file(spec));
    }

    bool has_point() const { return t.has_value() || i.has_value(); }
    dcl::Int tv() const { return t.value_or(0); }
    dcl::Int iv() const { return i.value_or(0); }
};

int report_invalid(const dcl::ValidityReport& rep) {
    for (const auto& v : rep.violations) std::cerr << "invalid: " << v.to_string() << "\n";
    return kNegative;
}

int cmd_gadget_derive(const GadgetFlags& flags) {
    dcl::GadgetTemplate g = flags.load();
    if (flags.has_point()) {
        auto rep = dcl::validate_instance(g, flags.tv(), flags.iv());
        if (!rep.ok()) return report_invalid(rep);
    }
    for (const auto& e : dcl::derive_spectrum(g)) {
        std::cout << e.form << '\t' << e.route.to_string();
        if (flags.has_point()) std::cout << '\t' << e.form.eval(flags.tv(), flags.iv());
        std::cout << '\n';
    }
    return kOk;
}

int cmd_gadget_validate(const GadgetFlags& flags) {
    auto rep = dcl::validate_instance(flags.load(), flags.tv(), flags.iv());
    if (!rep.ok()) return report_invalid(rep);
    std::cout << "OK\n";
    return kOk;
}

int cmd_gadget_instantiate(const GadgetFlags& flags, const std::string& out, std::size_t cap) {
    dcl::GadgetTemplate g = flags.load();
    auto rep = dcl::validate_instance(g, flags.tv(), flags.iv());
    if (!rep.ok()) return report_invalid(rep);
    dcl::Multigraph m = dcl::instantiate(g, flags.tv(), flags.iv(), cap);
    write_output(out, dcl::write_edge_list(m));
    if (!out.empty() && out != "-") {
        std::cout << "wrote " << out << ": " << m.vertex_count() << " vertices, " << m.edge_count() << " edges\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------

std::string render_cycle(const dcl::CycleRecord& c) {
    std::string s = "cycle length " + std::to_string(c.length) + ":";
    for (dcl::Vertex v : c.vertices) s += " " + std::to_string(v);
    return s;
}

int cmd_enumerate(const std::string& path, std::uint64_t max_cycles) {
    dcl::Multigraph g = dcl::read_edge_list(read_file(path));
    auto lengths = dcl::cycle_lengths(g, max_cycles);
    std::string text;
    for (auto l : lengths) text += std::to_string(l) + "\n";
    std::cout << text;
    bool distinct = std::adjacent_find(lengths.begin(), lengths.end()) == lengths.end();
    std::cerr << lengths.size() << " cycles, " << (distinct ? "DISTINCT" : "COLLISION") << "\n";
    return distinct ? kOk : kNegative;
}

int cmd_distinct(const std::string& path, std::uint64_t max_cycles) {
    dcl::Multigraph g = dcl::read_edge_list(read_file(path));
    dcl::DistinctVerdict v = dcl::distinct_lengths(g, max_cycles);
    if (v.distinct) {
        std::cout << "DISTINCT\n";
        return kOk;
    }
    std::cout << "COLLISION " << v.witness->first.length << "\n";
    std::cout << render_cycle(v.witness->first) << "\n" << render_cycle(v.witness->second) << "\n";
    return kNegative;
}

// ---------------------------------------------------------------------------

struct BoundRow {
    dcl::Int n;
    std::optional<dcl::Int> shi;
    std::optional<dcl::LowerBound> lai;
    std::optional<dcl::UpperBound> upper;
};

std::string fixed(long double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

int cmd_bound(const std::vector<dcl::Int>& ns, const std::string& csv_path) {
    std::vector<BoundRow> rows;
    for (dcl::Int n : ns) {
        BoundRow r{n, std::nullopt, dcl::lai_lower(n), dcl::lai_upper(n)};
        if (n >= 3) r.shi = dcl::shi_lower(n);
        rows.push_back(r);
    }
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };

    std::vector<std::vector<std::string>> table = {
        {"n", "shi_lower", "lai_lower_t", "lai_lower", "lai_upper_m", "lai_upper"}};
    for (const auto& r : rows) {
        table.push_back({std::to_string(r.n), opt(r.shi), r.lai ? std::to_string(r.lai->t) : "-",
                         r.lai ? std::to_string(r.lai->bound) : "-", r.upper ? std::to_string(r.upper->m) : "-",
                         r.upper ? fixed(r.upper->value, 3) : "-"});
    }
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : table) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        std::cout << line << "\n";
    }

    dcl::LiminfConstant lc = dcl::liminf_constant();
    std::cout << "liminf (f(n)-n)/sqrt(n) >= sqrt(" << lc.radicand << ") = " << fixed(lc.value, 6) << "\n";
    std::cout << "limsup (f(n)-n)/sqrt(n) <= " << fixed(dcl::kLimsupCoefficient, 2) << "\n";

    if (!csv_path.empty()) {
        std::string csv = "n,shi_lower,lai_lower_t,lai_lower,lai_upper_m,lai_upper\n";
        for (const auto& r : rows) {
            csv += std::to_string(r.n) + "," + (r.shi ? std::to_string(*r.shi) : "") + "," +
                   (r.lai ? std::to_string(r.lai->t) : "") + "," + (r.lai ? std::to_string(r.lai->bound) : "") +
                   "," + (r.upper ? std::to_string(r.upper->m) : "") + "," +
                   (r.upper ? fixed(r.upper->value, 6) : "") + "\n";
        }
        write_output(csv_path, csv);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinct cycle length construction verifier"};
    app.require_subcommand(1);

    ParamFlags verify_flags;
    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "verify counts and cycle-length distinctness of the construction");
    verify_flags.attach(verify);
    verify->add_option("--cert", cert_path, "certificate output path ('-' or omitted: stdout)");
    std::vector<std::string> extra_plain;
    verify->add_option("--extra-plain", extra_plain, "exploratory: add a plain cycle of this length (form in t)");

    ParamFlags spectrum_flags;
    bool spectrum_verbose = false;
    std::string spectrum_out;
    auto* spectrum = app.add_subcommand("spectrum", "dump every cycle length of the construction, ascending");
    spectrum_flags.attach(spectrum);
    spectrum->add_flag("--verbose", spectrum_verbose, "append a tab and the provenance to each line");
    spectrum->add_option("--out", spectrum_out, "output path (default stdout)");

    auto* tables = app.add_subcommand("tables", "compare derived gadget spectra with the published tables");

    auto* gadget = app.add_subcommand("gadget", "derive or instantiate hub-and-spoke gadgets");
    gadget->require_subcommand(1);
    GadgetFlags derive_flags;
    auto* derive = gadget->add_subcommand("derive", "print the symbolic cycle spectrum");
    derive_flags.attach(derive);
    GadgetFlags validate_flags;
    auto* validate = gadget->add_subcommand("validate", "check a gadget at (t, i)");
    validate_flags.attach(validate);
    GadgetFlags inst_flags;
    std::string inst_out;
    std::size_t size_cap = dcl::kDefaultSizeCap;
    auto* inst = gadget->add_subcommand("instantiate", "write the gadget at (t, i) as an edge list");
    inst_flags.attach(inst);
    inst->add_option("--out", inst_out, "edge-list output path (default stdout)");
    inst->add_option("--size-cap", size_cap, "maximum vertex count")->capture_default_str();

    std::string graph_path;
    std::uint64_t max_cycles = dcl::kDefaultMaxCycles;
    auto* enumerate = app.add_subcommand("enumerate", "print the cycle-length multiset of an edge-list graph");
    enumerate->add_option("graph", graph_path, "edge-list file")->required();
    enumerate->add_option("--max-cycles", max_cycles, "abort beyond this many cycles")->capture_default_str();
    auto* distinct = app.add_subcommand("distinct", "check whether all cycle lengths of a graph differ");
    distinct->add_option("graph", graph_path, "edge-list file")->required();
    distinct->add_option("--max-cycles", max_cycles, "abort beyond this many cycles")->capture_default_str();

    std::vector<dcl::Int> bound_ns;
    std::string csv_path;
    auto* bound = app.add_subcommand("bound", "tabulate lower and upper bounds on f(n)");
    bound->add_option("--n", bound_ns, "vertex counts")->required();
    bound->add_option("--csv", csv_path, "also write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*verify) return cmd_verify(verify_flags, cert_path, extra_plain);
        if (*spectrum) return cmd_spectrum(spectrum_flags, spectrum_verbose, spectrum_out);
        if (*tables) return cmd_tables();
        if (*derive) return cmd_gadget_derive(derive_flags);
        if (*validate) return cmd_gadget_validate(validate_flags);
        if (*inst) return cmd_gadget_instantiate(inst_flags, inst_out, size_cap);
        if (*enumerate) return cmd_enumerate(graph_path, max_cycles);
        if (*distinct) return cmd_distinct(graph_path, max_cycles);
        if (*bound) return cmd_bound(bound_ns, csv_path);
    } catch (const dcl::InvalidInstance& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return kNegative;
    } catch (const dcl::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << " (reached " << e.reached() << ")\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
