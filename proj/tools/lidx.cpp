// lidx: command-line front end for the lattice-index library.
//
// Computations read instances in the library text formats; an input argument
// is "-" for stdin, "@path" for a file, or the literal text itself.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lidx/diagram.hpp"
#include "lidx/gen.hpp"
#include "lidx/schain.hpp"
#include "lidx/simplicial.hpp"
#include "lidx/suites.hpp"

using namespace lidx;

namespace {

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open file: " + arg.substr(1));
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto t = trimmed(line);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        auto t = trimmed(tok);
        if (!t.empty()) out.push_back(std::stol(t));
    }
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

/// One matrix per non-empty line.
std::vector<MatrixF> parse_matrix_list(const RingConfig& rc, const std::string& text) {
    std::vector<MatrixF> out;
    for (const auto& line : nonempty_lines(text)) out.push_back(parse_matrix(rc, line));
    if (out.empty()) throw ParseError("expected at least one matrix line");
    return out;
}

/// Diagram text format (round-tripped by `generate diagram`):
///   torsion | lattice
///   <poset cover list "n; a<b, c<d">
///   base: 0, 1                 (optional)
///   <x>: [e1,e2] | pres <matrix> | <matrix>
///       (one line per element: divisor exponents, an explicit presentation
///        matrix, or a lattice basis, depending on the flavor)
///   arrow a<b: <matrix>        (torsion flavor: one line per cover)
struct ParsedDiagram {
    AdmissibleDiagram diagram;
    std::vector<int> base;  // empty when no base line
};

ParsedDiagram parse_diagram(const RingConfig& rc, const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.size() < 2) throw ParseError("diagram: expected flavor and poset lines");
    bool torsion = lines[0] == "torsion";
    if (!torsion && lines[0] != "lattice")
        throw ParseError("diagram: flavor must be 'torsion' or 'lattice'");
    Poset shape = parse_poset(lines[1]);
    std::vector<int> base;
    std::map<int, std::string> element_lines;
    std::map<std::pair<int, int>, MatrixF> arrow_lines;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.rfind("base:", 0) == 0) {
            for (long b : parse_longs(l.substr(5))) base.push_back(static_cast<int>(b));
        } else if (l.rfind("arrow ", 0) == 0) {
            auto colon = l.find(':');
            auto lt = l.find('<');
            if (colon == std::string::npos || lt == std::string::npos || lt > colon)
                throw ParseError("diagram: malformed arrow line: " + l);
            int a = std::stoi(trimmed(l.substr(6, lt - 6)));
            int b = std::stoi(trimmed(l.substr(lt + 1, colon - lt - 1)));
            arrow_lines.insert({{a, b}, parse_matrix(rc, l.substr(colon + 1))});
        } else {
            auto colon = l.find(':');
            if (colon == std::string::npos) throw ParseError("diagram: malformed line: " + l);
            element_lines[std::stoi(trimmed(l.substr(0, colon)))] = trimmed(l.substr(colon + 1));
        }
    }
    if (static_cast<int>(element_lines.size()) != shape.size())
        throw ParseError("diagram: expected one value line per element");
    if (torsion) {
        std::vector<TorsionModule> values;
        for (int x = 0; x < shape.size(); ++x) {
            auto body = element_lines.at(x);
            if (body.rfind("pres ", 0) == 0) {
                values.push_back(TorsionModule::from_presentation(parse_matrix(rc, body.substr(5))));
            } else if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
                values.push_back(TorsionModule::from_exponents(
                    rc, parse_longs(body.substr(1, body.size() - 2))));
            } else {
                throw ParseError(
                    "diagram: torsion values are exponent lists [a,b] or 'pres <matrix>'");
            }
        }
        std::vector<MatrixF> arrows;
        for (auto c : shape.covers()) {
            auto it = arrow_lines.find(c);
            if (it == arrow_lines.end())
                throw ParseError("diagram: missing arrow for cover " + std::to_string(c.first) +
                                 "<" + std::to_string(c.second));
            arrows.push_back(it->second);
        }
        return {AdmissibleDiagram::torsion_valued(shape, std::move(values), std::move(arrows)),
                base};
    }
    std::vector<Lattice> values;
    for (int x = 0; x < shape.size(); ++x)
        values.push_back(Lattice::from_basis(parse_matrix(rc, element_lines.at(x))));
    return {AdmissibleDiagram::lattice_valued(shape, std::move(values)), base};
}

std::string diagram_text(const AdmissibleDiagram& F, const std::vector<int>& base) {
    std::ostringstream os;
    os << (F.flavor() == DiagramFlavor::Torsion ? "torsion" : "lattice") << "\n";
    os << F.shape().str() << "\n";
    if (!base.empty()) {
        os << "base:";
        for (std::size_t i = 0; i < base.size(); ++i) os << (i ? "," : " ") << base[i];
        os << "\n";
    }
    for (int x = 0; x < F.shape().size(); ++x) {
        os << x << ": ";
        if (F.flavor() == DiagramFlavor::Torsion) {
            // print the presentation the arrow matrices refer to
            if (F.module_at(x).has_presentation())
                os << "pres " << F.module_at(x).presentation().str();
            else
                os << F.module_at(x).str();
        } else {
            os << F.lattice_at(x).str();
        }
        os << "\n";
    }
    if (F.flavor() == DiagramFlavor::Torsion)
        for (std::size_t i = 0; i < F.covers().size(); ++i)
            os << "arrow " << F.covers()[i].first << "<" << F.covers()[i].second << ": "
               << F.arrow(static_cast<int>(i)).str() << "\n";
    return os.str();
}

BasedPoset based_from(const ParsedDiagram& pd) {
    if (pd.base.empty()) throw ParseError("diagram: this operation needs a 'base:' line");
    return BasedPoset::relaxed(pd.diagram.shape(), pd.base);
}

/// Runs `body` with automatic precision-doubling retries (up to four) when a
/// decision runs out of digits. Returns the exit code, 3 when unresolved.
int with_retries(const RunConfig& cfg, const std::function<int(const RingConfig&)>& body) {
    RingConfig rc = cfg.ring();
    for (int attempt = 0;; ++attempt) {
        try {
            return body(rc);
        } catch (const PrecisionExhausted& e) {
            if (attempt == 4) {
                std::cerr << "unresolved after 4 precision retries: " << e.what() << "\n";
                return 3;
            }
            rc = rc.with_prec(rc.prec * 2);
        }
    }
}

void add_ring_flags(CLI::App* sub, RunConfig& cfg, std::string& ring_name) {
    sub->add_option("--p", cfg.p, "residue characteristic (prime)");
    sub->add_option("--ring", ring_name, "base ring: series | padic")
        ->check(CLI::IsMember({"series", "padic"}));
    sub->add_option("--prec", cfg.prec, "working precision (uniformizer digits)");
}

void add_gen_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "ambient rank");
    sub->add_option("--bound", cfg.bound, "exponent bound for generated instances");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
}

void finish_config(RunConfig& cfg, const std::string& ring_name) {
    cfg.kind = ring_name == "padic" ? RingKind::PAdic : RingKind::PowerSeries;
    if (cfg.p < 2 || !is_prime(cfg.p)) throw Error("--p must be a prime");
    if (cfg.prec < 1 || cfg.n < 1 || cfg.bound < 0 || cfg.cases < 0 || cfg.degree < 0)
        throw Error("bounds must be positive");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lidx: exact lattice indices over a discrete valuation ring"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string ring_name = "series";
    std::string json_path;
    int exit_code = 0;

    // --- lattice -----------------------------------------------------------
    auto* lat = app.add_subcommand("lattice", "binary lattice operations");
    lat->require_subcommand(1);
    static const std::vector<std::string> lat_ops{"leq", "sup", "inf", "quotient", "relindex"};
    for (const auto& opname : lat_ops) {
        auto* sub = lat->add_subcommand(opname);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        sub->add_option("A", *a, "first basis matrix")->required();
        sub->add_option("B", *b, "second basis matrix")->required();
        add_ring_flags(sub, cfg, ring_name);
        sub->add_option("--json", json_path, "write a JSON result file");
        sub->callback([&, opname, a, b] {
            finish_config(cfg, ring_name);
            exit_code = with_retries(cfg, [&](const RingConfig& rc) {
                auto L0 = Lattice::from_basis(parse_matrix(rc, read_input(*a)));
                auto L1 = Lattice::from_basis(parse_matrix(rc, read_input(*b)));
                nlohmann::json j{{"op", opname}};
                if (opname == "leq") {
                    bool r = leq(L0, L1);
                    std::cout << (r ? "true" : "false") << "\n";
                    j["result"] = r;
                } else if (opname == "sup" || opname == "inf") {
                    auto L = opname == "sup" ? sup(L0, L1) : inf(L0, L1);
                    std::cout << L.str() << "\n";
                    j["basis"] = L.str();
                } else if (opname == "quotient") {
                    auto e = quotient_exponents(L0, L1);
                    std::cout << "[" << join_longs(e) << "]\n";
                    j["exponents"] = e;
                } else {
                    long r = rel_index(L0, L1);
                    std::cout << r << "\n";
                    j["index"] = r;
                }
                write_json(json_path, j);
                return 0;
            });
        });
    }

    // --- poset -------------------------------------------------------------
    auto* pos = app.add_subcommand("poset", "based-poset generators");
    auto* pgen = pos->add_subcommand("gen", "print a generator family member: B k | A n | T n");
    auto pfam = std::make_shared<std::string>();
    auto parg = std::make_shared<int>(1);
    pgen->add_option("family", *pfam, "B, A, or T")->required()->check(CLI::IsMember({"B", "A", "T"}));
    pgen->add_option("k", *parg, "size parameter")->required();
    pgen->callback([&, pfam, parg] {
        if (*pfam == "B")
            std::cout << b_poset(*parg).str() << "\n";
        else if (*pfam == "A")
            std::cout << a_based(*parg).str() << "\n";
        else
            std::cout << t_poset(*parg).str() << "\n";
    });

    // --- diagram -----------------------------------------------------------
    auto* dia = app.add_subcommand("diagram", "diagram computations");
    dia->require_subcommand(1);
    for (const char* opname : {"preindex", "split", "rigidity"}) {
        auto* sub = dia->add_subcommand(opname);
        auto in = std::make_shared<std::string>();
        sub->add_option("diagram", *in, "diagram text, @file, or -")->required();
        add_ring_flags(sub, cfg, ring_name);
        sub->add_option("--json", json_path, "write a JSON result file");
        std::string op = opname;
        sub->callback([&, op, in] {
            finish_config(cfg, ring_name);
            exit_code = with_retries(cfg, [&](const RingConfig& rc) {
                auto pd = parse_diagram(rc, read_input(*in));
                auto based = based_from(pd);
                nlohmann::json j{{"op", op}};
                int code = 0;
                if (op == "preindex") {
                    auto v = pre_index(pd.diagram, based);
                    std::cout << "[" << join_longs(v) << "]\n";
                    j["index"] = v;
                } else if (op == "split") {
                    auto framed = star_tree(based);
                    auto cls = phi_t(pd.diagram, framed);
                    auto v = idx_via_splitting(pd.diagram, framed);
                    std::cout << "base class: " << cls.base << "\n";
                    std::cout << "edge classes: [" << join_longs(cls.edges) << "]\n";
                    std::cout << "index: [" << join_longs(v) << "]\n";
                    j["base_class"] = cls.base;
                    j["edge_classes"] = cls.edges;
                    j["index"] = v;
                } else {  // rigidity: the index must not depend on presentation choices
                    auto v = pre_index(pd.diagram, based);
                    bool ok = true;
                    if (pd.diagram.flavor() == DiagramFlavor::Torsion)
                        ok = ok && pre_index_objectwise(pd.diagram, based) == v;
                    for (const auto& tree :
                         enumerate_admissible_trees(pd.diagram.shape())) {
                        try {
                            ok = ok &&
                                 idx_via_splitting(pd.diagram, FramedPoset(based, tree)) == v;
                        } catch (const TreeNotCollapsible&) {
                        }
                    }
                    std::cout << "index: [" << join_longs(v) << "]\n";
                    std::cout << "rigid: " << (ok ? "true" : "false") << "\n";
                    j["index"] = v;
                    j["rigid"] = ok;
                    code = ok ? 0 : 1;
                }
                write_json(json_path, j);
                return code;
            });
        });
    }
    {
        auto* sub = dia->add_subcommand(
            "lemma327", "section/contraction audit of a basepoint contraction");
        auto s_in = std::make_shared<std::string>();
        auto sp_in = std::make_shared<std::string>();
        auto phi_in = std::make_shared<std::string>();
        sub->add_option("--s", *s_in, "source based poset (text, @file, or -)")->required();
        sub->add_option("--sp", *sp_in, "target based poset")->required();
        sub->add_option("--phi", *phi_in, "element map, comma-separated")->required();
        add_ring_flags(sub, cfg, ring_name);
        add_gen_flags(sub, cfg);
        sub->add_option("--cases", cfg.cases, "sampled diagrams per side");
        sub->add_option("--json", json_path, "write a JSON result file");
        sub->callback([&, s_in, sp_in, phi_in] {
            finish_config(cfg, ring_name);
            exit_code = with_retries(cfg, [&](const RingConfig& rc) {
                auto parse_relaxed = [](const std::string& text) {
                    auto lines = nonempty_lines(text);
                    Poset p = parse_poset(lines[0]);
                    std::vector<int> base;
                    for (std::size_t i = 1; i < lines.size(); ++i)
                        if (lines[i].rfind("base:", 0) == 0)
                            for (long b : parse_longs(lines[i].substr(5)))
                                base.push_back(static_cast<int>(b));
                    if (base.empty()) throw ParseError("poset: missing base line");
                    return BasedPoset::relaxed(std::move(p), std::move(base));
                };
                auto S = parse_relaxed(read_input(*s_in));
                auto Sp = parse_relaxed(read_input(*sp_in));
                std::vector<int> phi;
                for (long v : parse_longs(*phi_in)) phi.push_back(static_cast<int>(v));
                try {
                    check_contraction_conditions(S, Sp, phi);
                } catch (const ConditionViolated& v) {
                    std::cout << "conditions: " << v.what() << "\n";
                    write_json(json_path, {{"op", "lemma327"}, {"violation", v.what()}});
                    return 1;
                }
                long count = std::max(1L, std::min(cfg.cases, 50L));
                Rng rng(cfg.seed);
                std::vector<AdmissibleDiagram> over_s, over_sp;
                for (long c = 0; c < count; ++c) {
                    over_s.push_back(
                        random_torsion_diagram(rng, rc, S.poset(), cfg.n, cfg.bound));
                    over_sp.push_back(
                        random_torsion_diagram(rng, rc, Sp.poset(), cfg.n, cfg.bound));
                }
                auto srep = section_contraction_check(S, Sp, phi, over_s, over_sp);
                std::cout << "conditions: ok\n";
                std::cout << "cases: " << srep.cases << "\n";
                std::cout << "monic: " << (srep.monic_ok ? "true" : "false") << "\n";
                std::cout << "roundtrip: " << (srep.roundtrip_ok ? "true" : "false") << "\n";
                write_json(json_path, {{"op", "lemma327"},
                                       {"cases", srep.cases},
                                       {"monic", srep.monic_ok},
                                       {"roundtrip", srep.roundtrip_ok}});
                return srep.monic_ok && srep.roundtrip_ok ? 0 : 1;
            });
        });
    }

    // --- index -------------------------------------------------------------
    auto* idx = app.add_subcommand("index", "index computations");
    idx->require_subcommand(1);
    for (const char* opname : {"chain", "tuple", "group"}) {
        auto* sub = idx->add_subcommand(opname);
        auto in = std::make_shared<std::string>();
        sub->add_option("input", *in, "one matrix per line (text, @file, or -)")->required();
        add_ring_flags(sub, cfg, ring_name);
        sub->add_option("--json", json_path, "write a JSON result file");
        std::string op = opname;
        sub->callback([&, op, in] {
            finish_config(cfg, ring_name);
            exit_code = with_retries(cfg, [&](const RingConfig& rc) {
                auto mats = parse_matrix_list(rc, read_input(*in));
                nlohmann::json j{{"op", op}};
                if (op == "group") {
                    std::vector<long> per;
                    auto prod = MatrixF::identity(rc, mats[0].rows());
                    for (const auto& g : mats) {
                        per.push_back(index_of_automorphism(g));
                        prod = g.mul(prod);
                    }
                    std::cout << "indices: [" << join_longs(per) << "]\n";
                    std::cout << "product index: " << index_of_automorphism(prod) << "\n";
                    j["indices"] = per;
                    j["product_index"] = index_of_automorphism(prod);
                } else {
                    std::vector<Lattice> ls;
                    for (const auto& m : mats) ls.push_back(Lattice::from_basis(m));
                    if (op == "chain") {
                        auto v = index_of_chain(LatticeChain(ls)).classes();
                        std::cout << "classes: [" << join_longs(v) << "]\n";
                        j["classes"] = v;
                    } else {
                        auto v = index_of_tuple(LatticeTuple(ls));
                        std::cout << "index: [" << join_longs(v) << "]\n";
                        j["index"] = v;
                    }
                }
                write_json(json_path, j);
                return 0;
            });
        });
    }

    // --- check -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("check", "run a property suite");
        auto name = std::make_shared<std::string>("all");
        auto names = suite_names();
        names.push_back("all");
        sub->add_option("suite", *name, "suite name")->check(CLI::IsMember(names));
        add_ring_flags(sub, cfg, ring_name);
        add_gen_flags(sub, cfg);
        sub->add_option("--cases", cfg.cases, "case budget per suite");
        sub->add_option("--degree", cfg.degree, "simplicial truncation degree");
        sub->add_option("--json", json_path, "write the JSON report here");
        sub->callback([&, name] {
            finish_config(cfg, ring_name);
            auto rep = run_suite(*name, cfg);
            for (const auto& f : rep.failures)
                std::cout << "FAIL case " << f.case_index << " [" << f.check
                          << "]: " << f.payload << "\n";
            std::cout << "suite " << rep.suite << ": " << rep.cases << " cases, "
                      << rep.failures.size() << " failures, " << rep.precision_retries
                      << " precision retries, " << rep.precision_unresolved
                      << " unresolved, " << rep.elapsed_ms << " ms\n";
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw Error("cannot write file: " + json_path);
                out << report_json(rep) << "\n";
            }
            exit_code = rep.ok() ? 0 : 1;
        });
    }

    // --- appendix ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("appendix", "simplicial comparisons for preset categories");
        auto mode = std::make_shared<std::string>();
        auto cat = std::make_shared<std::string>("c2");
        sub->add_option("mode", *mode, "lemma-pre | segal | coskeletal")
            ->required()
            ->check(CLI::IsMember({"lemma-pre", "segal", "coskeletal"}));
        sub->add_option("--cat", *cat,
                        "preset category: [0]..[3], c2, c3, walking-iso, discrete2");
        sub->add_option("--degree", cfg.degree, "truncation degree");
        sub->add_option("--json", json_path, "write a JSON result file");
        sub->callback([&, mode, cat] {
            int D = std::clamp(cfg.degree, 1, 4);
            auto c = preset_category(*cat);
            nlohmann::json j{{"mode", *mode}, {"cat", *cat}, {"degree", D}};
            if (*mode == "lemma-pre") {
                auto r = lemma_pre_check(c, D);
                std::cout << "ok: " << (r.ok ? "true" : "false") << "\n";
                std::cout << "level counts: [" << join_longs(r.level_counts) << "]\n";
                if (!r.ok) std::cout << "detail: " << r.detail << "\n";
                j["ok"] = r.ok;
                j["level_counts"] = r.level_counts;
                exit_code = r.ok ? 0 : 1;
            } else if (*mode == "segal") {
                auto r = segal_check(nerve(c, D), D);
                std::cout << "ok: " << (r.ok ? "true" : "false") << "\n";
                for (std::size_t i = 0; i < r.levels.size(); ++i)
                    std::cout << "level " << r.levels[i] << ": "
                              << (r.verdict[i] ? "pass" : "fail") << "\n";
                j["ok"] = r.ok;
                exit_code = r.ok ? 0 : 1;
            } else {
                auto x = nerve(c, D);
                int smallest = -1;
                for (int k = 0; k <= 2 && smallest < 0; ++k)
                    if (coskeletal_check(x, k)) smallest = k;
                std::cout << "smallest coskeletal degree (of 0..2): " << smallest << "\n";
                j["coskeletal_degree"] = smallest;
                exit_code = smallest >= 0 ? 0 : 1;
            }
            write_json(json_path, j);
        });
    }

    // --- generate ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("generate", "print a reproducible random instance");
        auto kind = std::make_shared<std::string>();
        sub->add_option("kind", *kind, "lattice | chain | group-tuple | poset | diagram")
            ->required()
            ->check(CLI::IsMember({"lattice", "chain", "group-tuple", "poset", "diagram"}));
        add_ring_flags(sub, cfg, ring_name);
        add_gen_flags(sub, cfg);
        sub->callback([&, kind] {
            finish_config(cfg, ring_name);
            RingConfig rc = cfg.ring();
            Rng rng(cfg.seed);
            if (*kind == "lattice") {
                std::cout << random_lattice(rng, rc, cfg.n, cfg.bound).str() << "\n";
            } else if (*kind == "chain") {
                for (const auto& L : random_chain(rng, rc, cfg.n, 2, cfg.bound))
                    std::cout << L.str() << "\n";
            } else if (*kind == "group-tuple") {
                for (const auto& g : random_group_tuple(rng, rc, cfg.n, 3, cfg.bound))
                    std::cout << g.str() << "\n";
            } else if (*kind == "poset") {
                // random relations on 0..k-2 plus a final element on top
                int k = static_cast<int>(rng.uniform(3, 6));
                std::vector<std::pair<int, int>> rel;
                for (int a = 0; a < k - 1; ++a)
                    for (int b = a + 1; b < k - 1; ++b)
                        if (rng.uniform(0, 2) == 0) rel.push_back({a, b});
                for (int a = 0; a < k - 1; ++a) rel.push_back({a, k - 1});
                Poset p(k, rel);
                std::vector<int> base;
                for (int x = 0; x < k; ++x)
                    if (p.is_minimal(x)) base.push_back(x);
                std::cout << BasedPoset(std::move(p), std::move(base)).str() << "\n";
            } else {
                auto B2 = b_poset(2);
                auto F = random_torsion_diagram(rng, rc, B2.poset(), cfg.n, cfg.bound);
                std::cout << diagram_text(F, B2.basepoints());
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
