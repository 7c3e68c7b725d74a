#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domino/correspondence.hpp"
#include "domino/isotypic.hpp"
#include "domino/kl.hpp"
#include "domino/orbit.hpp"
#include "domino/reps.hpp"

using namespace domino;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string kind = "C";
    int threads = 1;
    double timeout_secs = 0;
    bool allow_large = false;
    bool no_cache = false;
    std::string json_report;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// A file path, "-" for stdin, or inline JSON.
json read_json(const std::string& arg) {
    std::string text = !arg.empty() && (arg[0] == '{' || arg[0] == '[') ? arg : read_input(arg);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

TableauPair read_pair(const std::string& arg) {
    auto j = read_json(arg);
    if (j.contains("pair")) j = j["pair"];
    return TableauPair::from_json(j);
}

void write_report(const Common& c, json report) {
    if (c.json_report.empty()) return;
    std::ofstream out(c.json_report);
    if (!out) throw UsageError("cannot write " + c.json_report);
    out << report.dump(2) << '\n';
}

json with_schema(const std::string& name, json body) {
    json j = {{"schema", "domino/" + name + "/1"}};
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
}

KLOptions kl_options(const Common& c) {
    KLOptions o;
    o.threads = c.threads;
    o.allow_large = c.allow_large;
    o.use_cache = !c.no_cache;
    return o;
}

std::vector<int> tableaux_ranks(int rank, int max_rank) {
    if (rank > 0) return {rank};
    std::vector<int> r;
    for (int k = 1; k <= max_rank; ++k) r.push_back(k);
    return r;
}

// ------------------------------------------------------------------ commands

int cmd_tableaux(const Common& c, const std::string& shape_text, int rank, int max_rank, bool show) {
    const Kind kind = parse_kind(c.kind);
    std::vector<Shape> shapes;
    if (!shape_text.empty()) {
        shapes.push_back(Shape::parse(shape_text));
        if (!is_tilable(shapes[0], kind)) throw UsageError("shape " + shapes[0].str() + " is not tilable");
    } else {
        if (rank <= 0 && max_rank <= 0) throw UsageError("give --shape, --rank or --max-rank");
        for (int r : tableaux_ranks(rank, max_rank))
            for (auto& s : tilable_shapes(r, kind)) shapes.push_back(s);
    }
    json out = json::array();
    for (auto& s : shapes) {
        auto ts = enumerate_tableaux(s, kind);
        auto q = two_core_quotient(s).quotient;
        std::cout << s.str() << ": " << ts.size() << " tableaux (2-quotient " << q.str() << ", "
                  << count_standard_bitableaux(q) << " bitableaux)\n";
        json entry = {{"shape", s.str()}, {"count", ts.size()}, {"quotient", q.str()},
                      {"bitableaux", count_standard_bitableaux(q)}};
        if (show) {
            entry["tableaux"] = json::array();
            for (auto& t : ts) {
                std::cout << t.render() << '\n';
                entry["tableaux"].push_back(t.to_json());
            }
        }
        out.push_back(entry);
    }
    write_report(c, with_schema("tableaux", {{"kind", c.kind}, {"shapes", out}}));
    return kOk;
}

int cmd_rs_insert(const Common& c, const std::string& word) {
    auto w = SignedPermutation::parse(word);
    auto p = insert(w, parse_kind(c.kind));
    auto j = with_schema("rs-insert", {{"word", w.str()}, {"pair", p.to_json()}});
    std::cout << j.dump(2) << '\n';
    write_report(c, j);
    return kOk;
}

int cmd_rs_extract(const Common& c, const std::string& pair_arg) {
    auto p = read_pair(pair_arg);
    SignedPermutation w;
    try {
        w = extract(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << w.str() << '\n';
    write_report(c, with_schema("rs-extract", {{"pair", p.to_json()}, {"word", w.str()}}));
    return kOk;
}

int cmd_op_apply(const Common& c, const std::string& ops, const std::string& pair_arg, const std::string& ul_mode,
                 const std::string& s_mode) {
    OperatorOptions opt;
    opt.ul_mode = ul_mode == "recipe" ? UlMode::Recipe : UlMode::Closure;
    opt.s_mode = s_mode == "strict" ? SMode::Strict : SMode::Positional;
    OperatorSequence seq;
    try {
        seq = parse_sequence(ops);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    auto p = read_pair(pair_arg);
    if (!p.valid()) throw UsageError("invalid tableau pair: " + p.diagnostics().front());
    auto images = apply_sequence(seq, p, opt);
    json arr = json::array();
    for (auto& q : images) arr.push_back(q.to_json());
    auto j = with_schema("op-apply", {{"operators", to_string(seq)}, {"pair", p.to_json()}, {"images", arr}});
    std::cout << j.dump(2) << '\n';
    write_report(c, j);
    return kOk;
}

unsigned parse_families(const std::vector<std::string>& exclude, bool enlarged) {
    unsigned f = kTransitiveFamily | (enlarged ? kFamilyEnlarged : 0u);
    for (auto& e : exclude) {
        if (e == "s-family")
            f &= ~static_cast<unsigned>(kFamilyS);
        else if (e == "u-family")
            f &= ~static_cast<unsigned>(kFamilyU);
        else if (e == "t-family")
            f &= ~static_cast<unsigned>(kFamilyT);
        else if (e == "enlarged")
            f &= ~static_cast<unsigned>(kFamilyEnlarged);
        else
            throw UsageError("unknown family " + e + " (s-family, u-family, t-family, enlarged)");
    }
    return f;
}

int cmd_orbit_check(const Common& c, int max_rank, const std::vector<std::string>& shape_texts,
                    const std::vector<std::string>& exclude, bool enlarged, bool shared, bool verbose) {
    const Kind kind = parse_kind(c.kind);
    const unsigned families = parse_families(exclude, enlarged);
    TransitivityOptions opt;
    opt.threads = c.threads;
    opt.shared_left_graph = shared;
    if (c.timeout_secs > 0)
        opt.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(c.timeout_secs));
    CampaignReport rep;
    if (!shape_texts.empty()) {
        std::vector<Shape> shapes;
        for (auto& t : shape_texts) {
            auto s = Shape::parse(t);
            if (!is_tilable(s, kind)) throw UsageError("shape " + s.str() + " is not tilable");
            if (s.total() / 2 > 6 && !c.allow_large) throw UsageError("shapes above rank 6 need --allow-large");
            shapes.push_back(s);
        }
        rep = check_campaign(kind, shapes, families, opt);
    } else {
        if (max_rank < 1) throw UsageError("--max-rank must be >= 1");
        if (max_rank > 6 && !c.allow_large) throw UsageError("--max-rank above 6 needs --allow-large");
        rep = check_campaign(kind, max_rank, families, opt);
    }
    for (auto& s : rep.shapes)
        if (verbose || !s.pass())
            std::cout << s.shape.str() << ": " << s.tableaux << " tableaux, max orbits per right tableau "
                      << s.max_orbits() << (s.pass() ? "  ok" : "  FAIL") << '\n';
    std::cout << "orbit check kind " << c.kind << " families " << family_names(families) << ": " << rep.shapes.size()
              << " shapes, " << (rep.timed_out ? "TIMEOUT" : rep.pass() ? "PASS" : "FAIL") << '\n';
    write_report(c, with_schema("orbit-check", rep.to_json()));
    return rep.pass() ? kOk : kFail;
}

int cmd_cells(const Common& c, int rank) {
    const Kind kind = parse_kind(c.kind);
    KLTable kl(rank, kl_options(c));
    CellStructure cs(kl, kind);
    const auto& cells = cs.cells();
    auto predicted = predicted_left_cells(cs);
    bool prediction_ok = true;
    for (int w = 0; w < kl.size(); ++w)
        for (int v = 0; v < kl.size(); ++v)
            if ((predicted[w] == predicted[v]) != (cells.left_of[w] == cells.left_of[v])) prediction_ok = false;
    bool multiplicity_free = true;
    json left = json::array();
    for (std::size_t i = 0; i < cells.left.size(); ++i) {
        json elems = json::array();
        for (int w : cells.left[i].elements) elems.push_back(kl.element(w).str());
        json constituents = json::array();
        for (auto& [bp, m] : decompose(cs.character(static_cast<int>(i)), rank)) {
            constituents.push_back({{"bipartition", bp.str()}, {"multiplicity", m}});
            multiplicity_free &= m == 1;
        }
        left.push_back({{"elements", elems},
                        {"two_sided", cells.two_sided_of[cells.left[i].elements.front()]},
                        {"right_tableau_shape", cs.pair(cells.left[i].elements.front()).right.shape().str()},
                        {"constituents", constituents}});
    }
    json two = json::array();
    for (auto& t : cells.two_sided) two.push_back(t.elements.size());
    const long long inversion = inversion_identity_failures(kl);
    std::cout << "W(B" << rank << "): " << kl.size() << " elements, " << kl.distinct_polynomials()
              << " distinct KL polynomials" << (kl.loaded_from_cache() ? " (cached)" : "") << '\n'
              << cells.left.size() << " left cells, " << cells.two_sided.size() << " two-sided cells\n"
              << "inversion identity failures: " << inversion << '\n'
              << "tableau prediction (kind " << c.kind << "): " << (prediction_ok ? "matches" : "DIFFERS") << '\n'
              << "left cell modules multiplicity-free: " << (multiplicity_free ? "yes" : "NO") << '\n';
    const bool pass = prediction_ok && multiplicity_free && inversion == 0;
    write_report(c, with_schema("cells", {{"rank", rank},
                                           {"kind", c.kind},
                                           {"elements", kl.size()},
                                           {"left_cells", left},
                                           {"two_sided_sizes", two},
                                           {"inversion_identity_failures", inversion},
                                           {"prediction_matches", prediction_ok},
                                           {"multiplicity_free", multiplicity_free},
                                           {"pass", pass}}));
    return pass ? kOk : kFail;
}

int cmd_isotypic_verify(const Common& c, int rank, bool transfer, bool c6) {
    json body = {{"rank", rank}, {"kind", c.kind}};
    bool pass = true;
    if (c6) {
        auto r = c6_combinatorial_check();
        std::cout << "rank-6 quasi-staircase intersection: " << (r.pass() ? "PASS" : "FAIL") << "\n  columns:";
        for (auto& s : r.shapes) std::cout << ' ' << s.str();
        std::cout << '\n';
        for (auto& [s, row] : r.signs) {
            std::cout << "  R_" << s << ":";
            for (int x : row) std::cout << (x > 0 ? " +" : " -");
            std::cout << '\n';
        }
        for (auto& f : r.findings) std::cout << "  finding: " << f << '\n';
        body["c6"] = r.to_json();
        pass &= r.pass();
    }
    if (rank > 0) {
        const Kind kind = parse_kind(c.kind);
        KLTable kl(rank, kl_options(c));
        CellStructure cs(kl, kind);
        auto t2 = verify_isotypic(cs, c.threads);
        std::cout << "R_sigma check, rank " << rank << " kind " << c.kind << ": " << t2.intersections
                  << " intersections, " << t2.vectors << " vectors, " << (t2.pass() ? "PASS" : "FAIL") << '\n';
        for (auto& f : t2.findings) std::cout << "  finding: " << f << '\n';
        body["isotypic"] = t2.to_json();
        pass &= t2.pass();
        if (transfer) {
            auto tr = verify_transfer(cs);
            std::cout << "transfer check: " << tr.step_maps << " step maps, " << tr.transfers << " transfers, "
                      << (tr.pass() ? "PASS" : "FAIL") << '\n';
            for (auto& f : tr.findings) std::cout << "  finding: " << f << '\n';
            body["transfer"] = tr.to_json();
            pass &= tr.pass();
        }
    }
    body["pass"] = pass;
    write_report(c, with_schema("isotypic-verify", body));
    return pass ? kOk : kFail;
}

int cmd_isotypic_rsigma(const Common& c, const std::string& element, const std::string& sigma_text) {
    const Kind kind = parse_kind(c.kind);
    auto w = SignedPermutation::parse(element);
    auto sigma = Shape::parse(sigma_text);
    KLTable kl(w.rank(), kl_options(c));
    CellStructure cs(kl, kind);
    const int idx = kl.index(w);
    auto i = intersection(cs, cs.cells().left_of[idx], cs.cells().right_of[idx]);
    IsotypicVector v;
    try {
        v = r_sigma(cs, i, sigma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto& m = cs.module(i.left_cell);
    auto sub = generated_submodule(m, {v.in_module(m)});
    auto chi = module_character(m, sub);
    const bool irreducible = inner_product(kl.rank(), chi, chi) == 1;
    const auto want = two_core_quotient(sigma).quotient;
    const bool matches = irreducible && identify(chi, kl.rank()) == want;
    for (auto [e, s] : v.coefficients)
        std::cout << (s > 0 ? "+ " : "- ") << kl.element(e).str() << "  (" << cs.pair(e).left.shape().str() << ")\n";
    std::cout << "submodule dimension " << sub.dim() << ", " << (irreducible ? "irreducible" : "REDUCIBLE")
              << ", expected " << want.str() << (matches ? "  ok" : "  MISMATCH") << '\n';
    auto j = v.to_json(cs);
    j["submodule_dimension"] = sub.dim();
    j["irreducible"] = irreducible;
    j["expected"] = want.str();
    j["matches"] = matches;
    write_report(c, with_schema("isotypic-rsigma", j));
    return matches ? kOk : kFail;
}

int cmd_render(const Common& c, const std::string& pair_arg, const std::string& word) {
    TableauPair p;
    if (!word.empty())
        p = insert(SignedPermutation::parse(word), parse_kind(c.kind));
    else if (!pair_arg.empty())
        p = read_pair(pair_arg);
    else
        throw UsageError("give --pair or --word");
    std::cout << "left (" << p.left.shape().str() << "):\n" << p.left.render() << "\nright (" << p.right.shape().str()
              << "):\n" << p.right.render() << '\n';
    write_report(c, with_schema("render", {{"pair", p.to_json()}, {"left", p.left.render()}, {"right", p.right.render()}}));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domino tableaux, operator orbits and Kazhdan-Lusztig cells of type B/C"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* a) {
        a->add_option("--kind", common.kind, "B or C")->check(CLI::IsMember({"B", "C", "b", "c"}));
        a->add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1, 256));
        a->add_option("--json-report", common.json_report, "write a JSON report to this path");
        a->add_flag("--allow-large", common.allow_large, "permit work beyond the default size bounds");
        a->add_flag("--no-cache", common.no_cache, "ignore DOMINO_CACHE_DIR");
    };

    int result = kOk;
    std::function<int()> run;

    auto* tab = app.add_subcommand("tableaux", "domino tableaux")->require_subcommand(1);
    auto* tab_enum = tab->add_subcommand("enumerate", "list the tableaux of a shape or rank");
    std::string shape_text;
    int rank = 0, max_rank = 0;
    bool show = false;
    add_common(tab_enum);
    tab_enum->add_option("--shape", shape_text, "partition, e.g. 5,3,3,1");
    tab_enum->add_option("--rank", rank, "all tilable shapes of this rank");
    tab_enum->add_option("--max-rank", max_rank, "all tilable shapes of rank 1..N");
    tab_enum->add_flag("--show", show, "render every tableau");
    tab_enum->callback([&] { run = [&] { return cmd_tableaux(common, shape_text, rank, max_rank, show); }; });

    auto* rs = app.add_subcommand("rs", "domino insertion")->require_subcommand(1);
    std::string word, pair_arg;
    auto* rs_ins = rs->add_subcommand("insert", "signed permutation -> tableau pair");
    add_common(rs_ins);
    rs_ins->add_option("--word", word, "one-line notation, e.g. 3,-1,2")->required();
    rs_ins->callback([&] { run = [&] { return cmd_rs_insert(common, word); }; });
    auto* rs_ext = rs->add_subcommand("extract", "tableau pair -> signed permutation");
    add_common(rs_ext);
    rs_ext->add_option("--pair", pair_arg, "JSON file, '-' for stdin, or inline JSON")->required();
    rs_ext->callback([&] { run = [&] { return cmd_rs_extract(common, pair_arg); }; });

    auto* op = app.add_subcommand("op", "tableau operators")->require_subcommand(1);
    auto* op_apply = op->add_subcommand("apply", "apply an operator sequence to a pair");
    std::string ops, ul_mode = "closure", s_mode = "positional";
    add_common(op_apply);
    op_apply->add_option("--op", ops, "e.g. \"T:2,3\", \"UL:fwd\", \"S:2\", \"T:2,3,UL:rev\"")->required();
    op_apply->add_option("--pair", pair_arg, "JSON file, '-' for stdin, or inline JSON")->required();
    op_apply->add_option("--ul-mode", ul_mode)->check(CLI::IsMember({"closure", "recipe"}));
    op_apply->add_option("--s-mode", s_mode)->check(CLI::IsMember({"positional", "strict"}));
    op_apply->callback([&] { run = [&] { return cmd_op_apply(common, ops, pair_arg, ul_mode, s_mode); }; });

    auto* orb = app.add_subcommand("orbit", "operator orbits")->require_subcommand(1);
    auto* orb_check = orb->add_subcommand("check", "transitivity on pairs with a fixed right tableau");
    std::vector<std::string> shapes, exclude;
    bool enlarged = false, shared = false, verbose = false;
    int orbit_max_rank = 6;
    add_common(orb_check);
    orb_check->add_option("--max-rank", orbit_max_rank, "check every tilable shape of rank 1..N");
    orb_check->add_option("--shape", shapes, "check only these shapes")->take_all();
    orb_check->add_option("--exclude", exclude, "drop s-family, u-family or t-family");
    orb_check->add_option("--timeout-secs", common.timeout_secs, "give up (exit 1) after this many seconds");
    orb_check->add_flag("--enlarged", enlarged, "add the enlarged operators");
    orb_check->add_flag("--shared-left-graph", shared, "build the left-tableau graph once per shape");
    orb_check->add_flag("--verbose", verbose, "one line per shape");
    orb_check->callback([&] {
        run = [&] { return cmd_orbit_check(common, orbit_max_rank, shapes, exclude, enlarged, shared, verbose); };
    });

    auto* cells = app.add_subcommand("cells", "Kazhdan-Lusztig cells")->require_subcommand(1);
    auto* cells_compute = cells->add_subcommand("compute", "KL polynomials, cells and cell modules");
    int cells_rank = 3;
    add_common(cells_compute);
    cells_compute->add_option("--rank", cells_rank)->check(CLI::Range(1, 16));
    cells_compute->add_option("--max-rank", cells_rank, "alias of --rank")->check(CLI::Range(1, 16));
    cells_compute->callback([&] { run = [&] { return cmd_cells(common, cells_rank); }; });

    auto* iso = app.add_subcommand("isotypic", "isotypic generators of cell modules")->require_subcommand(1);
    auto* iso_verify = iso->add_subcommand("verify", "check every R_sigma of every cell intersection");
    int iso_rank = 0;
    bool transfer = false, c6 = false;
    add_common(iso_verify);
    iso_verify->add_option("--rank", iso_rank)->check(CLI::Range(1, 16));
    iso_verify->add_option("--max-rank", iso_rank, "alias of --rank")->check(CLI::Range(1, 16));
    iso_verify->add_flag("--transfer", transfer, "also check operator-induced maps between cells");
    iso_verify->add_flag("--c6", c6, "rank-6 quasi-staircase intersection, combinatorial part");
    iso_verify->callback([&] {
        run = [&] {
            if (iso_rank == 0 && !c6) throw UsageError("give --rank and/or --c6");
            return cmd_isotypic_verify(common, iso_rank, transfer, c6);
        };
    });
    auto* iso_rs = iso->add_subcommand("rsigma", "R_sigma of the intersection containing an element");
    std::string element, sigma;
    add_common(iso_rs);
    iso_rs->add_option("--element", element, "one-line notation, e.g. 2,-1")->required();
    iso_rs->add_option("--sigma", sigma, "shape, e.g. 3,1,1")->required();
    iso_rs->callback([&] { run = [&] { return cmd_isotypic_rsigma(common, element, sigma); }; });

    auto* render = app.add_subcommand("render", "draw a tableau pair");
    add_common(render);
    render->add_option("--pair", pair_arg, "JSON file, '-' for stdin, or inline JSON");
    render->add_option("--word", word, "insert this signed permutation first");
    render->callback([&] { run = [&] { return cmd_render(common, pair_arg, word); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    for (auto& ch : common.kind) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    try {
        result = run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
    return result;
}
