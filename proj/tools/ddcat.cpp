#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ddcat/core.hpp"
#include "ddcat/dictionary.hpp"
#include "ddcat/hammocks.hpp"
#include "ddcat/report.hpp"
#include "ddcat/silting.hpp"

#ifndef DDCAT_GOLDEN_TABLE231
#define DDCAT_GOLDEN_TABLE231 "tests/golden/table231.json"
#endif

using nlohmann::json;
using namespace ddcat;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Box {
    Int lo = 0;
    Int hi = 0;
};

Box parse_box(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("box must look like lo..hi: " + s);
    std::size_t p1 = 0, p2 = dots + 2;
    Box b;
    try {
        b.lo = detail::parse_int(s.substr(0, dots), p1);
        std::string rest = s.substr(p2);
        std::size_t q = 0;
        b.hi = detail::parse_int(rest, q);
        if (p1 != dots || q != rest.size()) throw UsageError("trailing characters in box " + s);
    } catch (const ParseError& e) {
        throw UsageError("bad box " + s + ": " + e.what());
    }
    if (b.lo > b.hi) throw UsageError("empty box " + s);
    return b;
}

void emit(const json& j, const std::string& format) {
    if (format == "text" && j.is_primitive()) std::cout << j.dump() << "\n";
    else std::cout << j.dump(2) << "\n";
}

int cmd_hom(const Params& P, const std::string& from, const std::string& to, bool graded, std::optional<Int> degree,
            const std::string& format) {
    Obj A = parse_obj(from, &P), B = parse_obj(to, &P);
    if (graded) {
        json g = json::object();
        for (const auto& [d, v] : graded_hom(P, A, B).entries) g[std::to_string(d)] = v;
        if (format == "json")
            emit({{"schema", 1}, {"params", params_string(P)}, {"from", to_string(A)}, {"to", to_string(B)}, {"graded", g}},
                 format);
        else std::cout << g.dump() << "\n";
        return exit_ok;
    }
    const Int d = degree.value_or(0);
    const int v = hom_dim(P, A, sigma(P, B, d));
    if (format == "json")
        emit({{"schema", 1}, {"params", params_string(P)}, {"from", to_string(A)}, {"to", to_string(B)}, {"degree", d}, {"dim", v}},
             format);
    else std::cout << v << "\n";
    return exit_ok;
}

int cmd_silting(const Params& P, const std::string& z, const Box& box, const std::string& format) {
    Obj Zb = parse_obj(z, &P);
    require_Z(Zb);
    auto en = enumerate_silting(P, Zb, box.lo, box.hi);
    bool all_ok = true;
    json inst = json::array();
    for (const auto& M : en.instances) {
        bool ok = M.size() == std::size_t(P.rank()) && is_partial_silting(P, M);
        all_ok = all_ok && ok;
        inst.push_back(coords(M));
    }
    json out{{"schema", 1},
             {"params", params_string(P)},
             {"z", to_string(Zb)},
             {"box", std::to_string(box.lo) + ".." + std::to_string(box.hi)},
             {"families", families_json(en.families)},
             {"instances", inst},
             {"self_check", all_ok}};
    if (format == "text") {
        std::cout << "families " << en.families.size() << "\ninstances " << en.instances.size() << "\nself_check "
                  << (all_ok ? "pass" : "fail") << "\n";
        for (const auto& M : en.instances) std::cout << coords(M).dump() << "\n";
    } else {
        emit(out, format);
    }
    return all_ok ? exit_ok : exit_mismatch;
}

int cmd_tilting(const Params& P, const std::string& z, Int window, const std::string& format) {
    Obj Zb = parse_obj(z, &P);
    require_Z(Zb);
    json t = tilting_json(P, Zb, window);
    if (format == "text") {
        std::cout << "tilting " << t.size() << "\n";
        for (const auto& T : t) std::cout << T.dump() << "\n";
    } else {
        emit({{"schema", 1}, {"params", params_string(P)}, {"z", to_string(Zb)}, {"window", window}, {"tilting", t}}, format);
    }
    return exit_ok;
}

int cmd_table231(const std::string& golden_path) {
    const std::string text = table231_json().dump(2) + "\n";
    std::cout << text;
    std::ifstream in(golden_path, std::ios::binary);
    if (!in) throw UsageError("cannot read golden file " + golden_path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string golden = ss.str();
    if (golden == text) return exit_ok;
    // report differing lines
    std::istringstream a(text), b(golden);
    std::string la, lb;
    int line = 0;
    for (;;) {
        bool ga = bool(std::getline(a, la)), gb = bool(std::getline(b, lb));
        ++line;
        if (!ga && !gb) break;
        if (!ga) la = "<eof>";
        if (!gb) lb = "<eof>";
        if (la != lb) std::cerr << "line " << line << ": computed " << la << " | golden " << lb << "\n";
        if (!ga || !gb) break;
    }
    std::cerr << "table231: output differs from " << golden_path << "\n";
    return exit_mismatch;
}

json report_json(const oracle::OracleReport& r) {
    json mm = json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"from", to_string(m.from)},
                      {"to", to_string(m.to)},
                      {"degree", m.degree},
                      {"engine", m.engine},
                      {"oracle", m.oracle},
                      {"check", m.what}});
    return {{"samples", r.samples},
            {"stable_agree", r.stable_agree},
            {"count_agree", r.count_agree},
            {"engine_nonzero", r.nonzero},
            {"degree1_checked", r.degree1_checked},
            {"degree1_agree", r.degree1_agree},
            {"dictionary_size", r.dictionary_size},
            {"mismatches", mm}};
}

int cmd_oracle(const Params& P, Int window, int samples, unsigned seed, bool perturb, const std::string& format) {
    json runs = json::object();
    bool ok = true;
    for (gf::Elem p : gf::working_primes()) {
        gf::PrimeScope scope(p);
        auto r = oracle::oracle_check(P, window, samples, seed, perturb);
        ok = ok && r.ok();
        runs[std::to_string(p)] = report_json(r);
        if (format == "text") {
            std::cout << "prime " << p << ": stable hom " << r.stable_agree << "/" << r.samples << " agree, admissible pairs "
                      << r.count_agree << "/" << r.samples << " agree, degree 1 " << r.degree1_agree << "/"
                      << r.degree1_checked << " agree, " << r.mismatches.size() << " mismatches\n";
            for (const auto& m : r.mismatches)
                std::cout << "  " << m.what << " " << to_string(m.from) << " -> " << to_string(m.to) << " degree "
                          << m.degree << ": " << m.engine << " vs " << m.oracle << "\n";
        }
    }
    if (format != "text")
        emit({{"schema", 1},
              {"params", params_string(P)},
              {"window", window},
              {"seed", seed},
              {"primes", runs},
              {"ok", ok}},
             format);
    return ok ? exit_ok : exit_mismatch;
}

int cmd_export_ar(const Params& P, Int window, const std::string& format, const std::string& shade) {
    std::optional<Obj> src;
    if (!shade.empty()) src = parse_obj(shade, &P);
    // objects with |i|, |j| < window; window 0 is the empty graph
    std::vector<Obj> objs = window > 0 ? window_objects(P, window - 1) : std::vector<Obj>{};
    std::set<Obj> present(objs.begin(), objs.end());
    std::vector<std::pair<Obj, Obj>> edges;
    for (const auto& A : objs)
        for (Direction d : {Direction::coray_step, Direction::ray_step})
            if (auto B = mesh_move(A, d, 1); B && present.count(*B)) edges.push_back({A, *B});
    auto shaded = [&](const Obj& B) { return src && hom_dim(P, *src, B) > 0; };
    auto comp_name = [](Kind kind, int k) { return std::string(1, kind_char(kind)) + std::to_string(k); };
    if (format == "dot") {
        std::cout << "digraph AR {\n  rankdir=LR;\n  node [shape=plaintext];\n";
        for (Kind kind : {Kind::X, Kind::Y, Kind::Z})
            for (int k = 0; k < P.r; ++k) {
                std::vector<Obj> members;
                for (const auto& A : objs)
                    if (A.kind == kind && A.k == k) members.push_back(A);
                if (members.empty()) continue;
                std::cout << "  subgraph cluster_" << comp_name(kind, k) << " {\n    label=\"" << kind_char(kind) << "^" << k
                          << "\";\n";
                for (const auto& A : members) {
                    std::cout << "    \"" << to_string(A) << "\" [label=\"" << kind_char(kind) << "(" << A.i << "," << A.j
                              << ")\"";
                    if (shaded(A)) std::cout << ", style=filled, fillcolor=gray80";
                    std::cout << "];\n";
                }
                std::cout << "  }\n";
            }
        for (const auto& [A, B] : edges) std::cout << "  \"" << to_string(A) << "\" -> \"" << to_string(B) << "\";\n";
        std::cout << "}\n";
    } else if (format == "text") {
        for (const auto& A : objs) std::cout << to_string(A) << (shaded(A) ? " *" : "") << "\n";
        for (const auto& [A, B] : edges) std::cout << to_string(A) << " -> " << to_string(B) << "\n";
    } else {
        json nodes = json::array(), es = json::array();
        for (const auto& A : objs) nodes.push_back({{"id", to_string(A)}, {"shaded", shaded(A)}});
        for (const auto& [A, B] : edges) es.push_back({to_string(A), to_string(B)});
        emit({{"schema", 1}, {"params", params_string(P)}, {"window", window}, {"nodes", nodes}, {"edges", es}}, format);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in the discrete derived categories D^b(Lambda(r,n,m))"};
    app.require_subcommand(1);

    std::string params_s = "2,3,1", from, to, z = "Z:0:0:0", box_s = "-1..1", format, shade;
    std::string golden = DDCAT_GOLDEN_TABLE231;
    bool graded = false, perturb = false;
    std::optional<Int> degree;
    Int window = 3;
    int samples = 200;
    unsigned seed = 42;
    const std::vector<std::string> formats{"json", "text", "dot"};

    auto add_params = [&](CLI::App* c) { c->add_option("--params", params_s, "r,n,m"); };
    auto add_format = [&](CLI::App* c, const std::string& def) {
        c->add_option("--format", format, "output format")->check(CLI::IsMember(formats))->default_str(def);
    };

    auto* hom = app.add_subcommand("hom", "dimension of Hom(A, Sigma^d B)");
    add_params(hom);
    hom->add_option("--from", from, "KIND:k:i:j")->required();
    hom->add_option("--to", to, "KIND:k:i:j")->required();
    auto* g_opt = hom->add_flag("--graded", graded, "all degrees");
    hom->add_option("--degree", degree, "degree d")->excludes(g_opt);
    add_format(hom, "text");

    auto* sil = app.add_subcommand("silting", "silting families and instances containing Z");
    add_params(sil);
    sil->add_option("--z", z, "Z object");
    sil->add_option("--box", box_s, "shift range lo..hi");
    add_format(sil, "json");

    auto* tab = app.add_subcommand("table231", "Silting families and tilting objects for (2,3,1), compared with the golden file");
    tab->add_option("--golden", golden, "golden file");

    auto* til = app.add_subcommand("tilting", "tilting objects containing Z");
    add_params(til);
    til->add_option("--z", z, "Z object");
    til->add_option("--window", window, "shift window")->check(CLI::NonNegativeNumber);
    add_format(til, "json");

    auto* orc = app.add_subcommand("oracle-check", "cross-check against the string-module oracle");
    add_params(orc);
    orc->add_option("--window", window, "level window")->check(CLI::Range(2, 64));
    orc->add_option("--samples", samples, "sampled pairs")->check(CLI::PositiveNumber);
    orc->add_option("--seed", seed, "sampler seed");
    orc->add_flag("--perturb", perturb, "inject one fault (test only)");
    add_format(orc, "json");

    auto* exp = app.add_subcommand("export-ar", "AR quiver window as DOT, text or JSON");
    add_params(exp);
    exp->add_option("--window", window, "objects with |i|,|j| < window")->check(CLI::NonNegativeNumber);
    exp->add_option("--shade", shade, "shade the hammock of this object");
    add_format(exp, "dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    auto fmt = [&](const std::string& def) { return format.empty() ? def : format; };
    try {
        if (*tab) return cmd_table231(golden);
        const Params P = parse_params(params_s);
        if (*hom) return cmd_hom(P, from, to, graded, degree, fmt("text"));
        if (*sil) return cmd_silting(P, z, parse_box(box_s), fmt("json"));
        if (*til) return cmd_tilting(P, z, window, fmt("json"));
        if (*orc) return cmd_oracle(P, window, samples, seed, perturb, fmt("json"));
        if (*exp) return cmd_export_ar(P, window, fmt("dot"), shade);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return exit_usage;
    } catch (const oracle::CalibrationFailure& e) {
        std::cerr << "calibration failure: " << e.what() << "\n";
        return exit_mismatch;
    }
    return exit_usage;
}
