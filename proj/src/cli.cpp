#include "coheyt/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "coheyt/ambient.hpp"
#include "coheyt/enumeration.hpp"
#include "coheyt/json_io.hpp"
#include "coheyt/term.hpp"

namespace coheyt {

namespace {

algebra load_algebra(const std::string& path) { return algebra(poset_from_json(load_json_file(path))); }

std::vector<downset> load_carrier(const algebra& L, const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_array()) raise(errc::parse_error, "carrier file holds an array of elements");
    std::vector<downset> out;
    for (const auto& e : j) out.push_back(element_from_json(L.pos(), e));
    return out;
}

// binding values: an element name (principal downset) or {a,b} member list
downset parse_element(const algebra& L, const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') raise(errc::parse_error, "unterminated element literal " + text);
        mask_t m = 0;
        std::string body = text.substr(1, text.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            int i = L.pos()->index_of(tok);
            if (i < 0) raise(errc::unknown_name, tok);
            m |= mask_bit(static_cast<unsigned>(i));
        }
        return make_downset(L.pos(), m);
    }
    if (text == "0") return L.bot();
    if (text == "1") return L.top();
    int i = L.pos()->index_of(text);
    if (i < 0) raise(errc::unknown_name, text);
    return principal(L.pos(), static_cast<unsigned>(i));
}

subalgebra carrier_or_full(const algebra& L, const std::string& path) {
    if (path.empty()) return full_subalgebra(L);
    std::vector<downset> carrier = load_carrier(L, path);
    closure_report rep = is_subalgebra(L, carrier);
    if (!rep.ok) raise(errc::not_in_carrier, "carrier is not closed: " + rep.violation);
    return subalgebra(L, carrier);
}

void print_lattice_dot(const algebra& L, std::ostream& out) {
    std::vector<downset> elems = L.elements();
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (const auto& d : elems) out << "  \"" << to_text(d) << "\";\n";
    for (const auto& a : elems)
        for (const auto& b : elems) {
            if (!(leq(a, b)) || a == b) continue;
            bool covers = true;
            for (const auto& c : elems)
                if (c != a && c != b && leq(a, c) && leq(c, b)) covers = false;
            if (covers) out << "  \"" << to_text(a) << "\" -> \"" << to_text(b) << "\";\n";
        }
    out << "}\n";
}

void print_poset_dot(const poset& p, std::ostream& out) {
    out << "digraph poset {\n  rankdir=BT;\n";
    for (unsigned i = 0; i < p.size(); ++i) out << "  \"" << p.name(i) << "\";\n";
    for (auto [lo, hi] : p.covers())
        out << "  \"" << p.name(lo) << "\" -> \"" << p.name(hi) << "\";\n";
    out << "}\n";
}

json witness_record(const json& input, const embedding& emb, const algebra& ext,
                    const std::vector<std::pair<std::string, downset>>& wit, int variant) {
    json rec;
    rec["input"] = input;
    rec["plan"] = emb.provenance();
    rec["extension"] = poset_to_json(*ext.pos());
    rec["embedding"] = embedding_to_json(emb);
    json w;
    for (const auto& [k, d] : wit) w[k] = element_to_json(d);
    rec["witnesses"] = w;
    json checks;
    checks["variety"] = variety_holds(ext, static_cast<variety_tag>(variant));
    checks["embedding"] = check_embedding(emb).ok;
    rec["checks"] = checks;
    return rec;
}

}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("COHEYT_MAX_POSET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(cap, &end, 10);
        if (end && *end == '\0' && v > 0) set_poset_size_cap(static_cast<unsigned>(v));
    }

    CLI::App app{"exact computation with finite co-Heyting algebras"};
    app.require_subcommand(1);
    std::string scan_opt;
    app.add_option("--scan", scan_opt, "scan kernels: serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));

    // validate
    auto* c_validate = app.add_subcommand("validate", "validate a poset or table file");
    std::string v_poset, v_table;
    c_validate->add_option("--poset", v_poset, "poset json file");
    c_validate->add_option("--table", v_table, "lattice table json file");

    // eval
    auto* c_eval = app.add_subcommand("eval", "evaluate a term over an algebra");
    std::string e_algebra, e_term;
    std::vector<std::string> e_binds;
    c_eval->add_option("--algebra", e_algebra)->required();
    c_eval->add_option("--term", e_term)->required();
    c_eval->add_option("--bind", e_binds, "name=element, repeatable");

    // irr
    auto* c_irr = app.add_subcommand("irr", "list join irreducibles");
    std::string i_algebra;
    c_irr->add_option("--algebra", i_algebra)->required();

    // variety
    auto* c_variety = app.add_subcommand("variety", "check membership in V1..V8");
    std::string vr_algebra, vr_tag;
    c_variety->add_option("--algebra", vr_algebra)->required();
    c_variety->add_option("--tag", vr_tag)->required();

    // signatures
    auto* c_sign = app.add_subcommand("signatures", "enumerate signatures of a subalgebra");
    std::string s_algebra, s_carrier;
    c_sign->add_option("--algebra", s_algebra)->required();
    c_sign->add_option("--carrier", s_carrier, "carrier file; defaults to the full algebra");

    // extend
    auto* c_extend = app.add_subcommand("extend", "build the minimal extension of a signature");
    std::string x_algebra, x_carrier, x_sig;
    c_extend->add_option("--algebra", x_algebra)->required();
    c_extend->add_option("--carrier", x_carrier);
    c_extend->add_option("--signature", x_sig, "signature json (inline or @file)")->required();

    // tower
    auto* c_tower = app.add_subcommand("tower", "primitive tower from a subalgebra");
    std::string t_algebra, t_carrier;
    c_tower->add_option("--algebra", t_algebra)->required();
    c_tower->add_option("--carrier", t_carrier)->required();

    // iso-over
    auto* c_iso = app.add_subcommand("iso-over", "isomorphism over a common subalgebra");
    std::string o_left, o_right, o_lcar, o_rcar;
    c_iso->add_option("--left", o_left)->required();
    c_iso->add_option("--right", o_right)->required();
    c_iso->add_option("--left-carrier", o_lcar, "fixed elements, aligned with --right-carrier");
    c_iso->add_option("--right-carrier", o_rcar);

    // axiom
    auto* c_axiom = app.add_subcommand("axiom", "check a density or splitting axiom");
    std::string a_algebra, a_axiom;
    bool a_all = false;
    c_axiom->add_option("--algebra", a_algebra)->required();
    c_axiom->add_option("--axiom", a_axiom, "D1..D6 or S1..S6")->required();
    c_axiom->add_flag("--all", a_all, "print every scanned instance");

    // witness
    auto* c_wit = app.add_subcommand("witness", "build a witness extension");
    std::string w_algebra, w_kind, w_a, w_c, w_b1, w_b2;
    int w_variant = 1;
    c_wit->add_option("--algebra", w_algebra)->required();
    c_wit->add_option("--kind", w_kind)->required()->check(CLI::IsMember({"density", "splitting"}));
    c_wit->add_option("--variant", w_variant)->required();
    c_wit->add_option("--a", w_a)->required();
    c_wit->add_option("--c", w_c);
    c_wit->add_option("--b1", w_b1);
    c_wit->add_option("--b2", w_b2);

    // embed
    auto* c_embed = app.add_subcommand("embed", "embed an algebra over a common subalgebra");
    std::string m_algebra, m_variety, m_carrier;
    c_embed->add_option("--algebra", m_algebra)->required();
    c_embed->add_option("--variety", m_variety)->required();
    c_embed->add_option("--carrier", m_carrier,
                        "subalgebra of --algebra to fix; defaults to {0,1}");

    // enumerate
    auto* c_enum = app.add_subcommand("enumerate", "posets of a given size, one per class");
    unsigned n_size = 0;
    c_enum->add_option("--max-size", n_size)->required();

    // export-dot
    auto* c_dot = app.add_subcommand("export-dot", "Hasse diagram in dot syntax");
    std::string d_poset, d_algebra, d_out;
    c_dot->add_option("--poset", d_poset);
    c_dot->add_option("--algebra", d_algebra);
    c_dot->add_option("--out", d_out, "output file; stdout by default");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (scan_opt == "serial") set_default_scan_mode(scan_mode::serial);
    if (scan_opt == "parallel") set_default_scan_mode(scan_mode::parallel);

    try {
        if (*c_validate) {
            if (!v_poset.empty()) {
                poset_ptr p = poset_from_json(load_json_file(v_poset));
                out << "poset ok: " << p->size() << " elements, " << p->covers().size()
                    << " covers\n";
            }
            if (!v_table.empty()) {
                lattice_table t = table_from_json(load_json_file(v_table));
                table_dual d = algebra_from_table(t);
                out << "table ok: " << t.size << " elements, " << d.pos->size()
                    << " join irreducibles\n";
            }
            if (v_poset.empty() && v_table.empty()) {
                err << "nothing to validate\n";
                return 2;
            }
            return 0;
        }

        if (*c_eval) {
            algebra L = load_algebra(e_algebra);
            term_env env;
            for (const auto& b : e_binds) {
                auto pos = b.find('=');
                if (pos == std::string::npos)
                    raise(errc::parse_error, "bindings look like name=element");
                env.emplace(b.substr(0, pos), parse_element(L, b.substr(pos + 1)));
            }
            out << to_text(eval_term(L, e_term, env)) << "\n";
            return 0;
        }

        if (*c_irr) {
            algebra L = load_algebra(i_algebra);
            for (const auto& d : L.jir()) out << to_text(d) << "\n";
            return 0;
        }

        if (*c_variety) {
            algebra L = load_algebra(vr_algebra);
            auto tag = variety_from_name(vr_tag);
            if (!tag) raise(errc::parse_error, "unknown variety tag " + vr_tag);
            variety_report eq = check_equational(L, *tag);
            variety_report st = check_structural(L, *tag);
            out << "equational: " << (eq.member ? "member" : "non-member") << "\n";
            if (!eq.member && eq.counterexample)
                out << "counterexample: x = " << to_text(eq.counterexample->first)
                    << ", y = " << to_text(eq.counterexample->second) << "\n";
            out << "structural: " << (st.member ? "member" : "non-member") << "\n";
            out << "agreement: " << (eq.member == st.member ? "yes" : "NO") << "\n";
            if (eq.member != st.member) {
                err << "equational and structural checks disagree\n";
                return 2;
            }
            return eq.member ? 0 : 1;
        }

        if (*c_sign) {
            algebra L = load_algebra(s_algebra);
            subalgebra S = carrier_or_full(L, s_carrier);
            for (const auto& sg : enumerate_signatures(S)) out << signature_to_json(sg) << "\n";
            return 0;
        }

        if (*c_extend) {
            algebra L = load_algebra(x_algebra);
            subalgebra S = carrier_or_full(L, x_carrier);
            json sj = x_sig.size() > 1 && x_sig.front() == '@'
                          ? load_json_file(x_sig.substr(1))
                          : json::parse(x_sig);
            signature sg = signature_from_json(L.pos(), sj);
            minimal_ext ext = minimal_extension(S, sg);
            json rec;
            rec["poset"] = poset_to_json(*ext.ext.pos());
            rec["embedding"] = embedding_to_json(ext.emb);
            rec["tuple"] = json::array({element_to_json(ext.x1), element_to_json(ext.x2)});
            out << rec.dump(2) << "\n";
            return 0;
        }

        if (*c_tower) {
            algebra L = load_algebra(t_algebra);
            subalgebra S = carrier_or_full(L, t_carrier);
            auto steps = primitive_tower(L, S);
            for (std::size_t k = 0; k < steps.size(); ++k) {
                json rec;
                rec["step"] = k;
                rec["carrier-size"] = steps[k].first.size();
                rec["tuple"] = json::array({element_to_json(steps[k].second.x1),
                                            element_to_json(steps[k].second.x2)});
                rec["signature"] = signature_to_json(steps[k].second.sig);
                out << rec << "\n";
            }
            return 0;
        }

        if (*c_iso) {
            algebra A = load_algebra(o_left);
            algebra B = load_algebra(o_right);
            std::vector<downset> fa{A.bot(), A.top()}, fb{B.bot(), B.top()};
            if (!o_lcar.empty()) fa = load_carrier(A, o_lcar);
            if (!o_rcar.empty()) fb = load_carrier(B, o_rcar);
            auto iso = iso_over(A, fa, B, fb);
            if (!iso) {
                out << "absent\n";
                return 1;
            }
            for (unsigned i = 0; i < A.points(); ++i)
                out << A.pos()->name(i) << " -> " << to_text(iso->jir_images()[i]) << "\n";
            return 0;
        }

        if (*c_axiom) {
            algebra L = load_algebra(a_algebra);
            if (a_axiom.size() != 2 || (a_axiom[0] != 'D' && a_axiom[0] != 'S'))
                raise(errc::parse_error, "axioms are D1..D6 and S1..S6");
            int variant = a_axiom[1] - '0';
            axiom_report rep = a_axiom[0] == 'D' ? check_density(L, variant)
                                                 : check_splitting(L, variant);
            std::size_t failures = 0;
            for (const auto& inst : rep.instances)
                if (!inst.witness) ++failures;
            out << a_axiom << " on " << rep.instances.size() << " instances: "
                << (rep.holds ? "holds" : "fails") << "\n";
            if (!rep.holds) {
                const axiom_instance* f = rep.first_failure();
                out << "first failure at (";
                for (std::size_t i = 0; i < f->input.size(); ++i)
                    out << (i ? "," : "") << to_text(f->input[i]);
                out << "), " << failures << " failing instances\n";
            }
            if (a_all)
                for (const auto& inst : rep.instances) {
                    out << "(";
                    for (std::size_t i = 0; i < inst.input.size(); ++i)
                        out << (i ? "," : "") << to_text(inst.input[i]);
                    out << ") -> ";
                    if (!inst.witness) {
                        out << "FAIL\n";
                        continue;
                    }
                    for (std::size_t i = 0; i < inst.witness->size(); ++i)
                        out << (i ? "," : "") << to_text((*inst.witness)[i]);
                    out << "\n";
                }
            return rep.holds ? 0 : 1;
        }

        if (*c_wit) {
            algebra L = load_algebra(w_algebra);
            json input;
            input["kind"] = w_kind;
            input["variant"] = w_variant;
            if (w_kind == "density") {
                downset a = parse_element(L, w_a);
                downset c = w_c.empty() ? L.bot() : parse_element(L, w_c);
                input["a"] = element_to_json(a);
                input["c"] = element_to_json(c);
                density_result r = density_extension(L, a, c, w_variant);
                out << witness_record(input, r.emb, r.ext, {{"b", r.b}}, w_variant).dump(2)
                    << "\n";
            } else {
                downset a = parse_element(L, w_a);
                downset b1 = w_b1.empty() ? L.bot() : parse_element(L, w_b1);
                downset b2 = w_b2.empty() ? L.bot() : parse_element(L, w_b2);
                input["a"] = element_to_json(a);
                input["b1"] = element_to_json(b1);
                input["b2"] = element_to_json(b2);
                splitting_result r = splitting_extension(L, a, b1, b2, w_variant);
                out << witness_record(input, r.emb, r.ext, {{"a1", r.a1}, {"a2", r.a2}},
                                      w_variant)
                           .dump(2)
                    << "\n";
            }
            return 0;
        }

        if (*c_embed) {
            algebra L1 = load_algebra(m_algebra);
            auto tag = variety_from_name(m_variety);
            if (!tag || static_cast<int>(*tag) > 6)
                raise(errc::parse_error, "embedding targets V1..V6");
            auto print_result = [&](const ambient& A, const embedding& emb) {
                out << "embedding into " << emb.dst().points() << "-point downset algebra:\n";
                for (const auto& d : emb.domain())
                    out << "  " << to_text(d) << " -> " << to_text(emb.apply(d)) << "\n";
                out << "growth history:\n";
                for (const auto& [step_tag, step] : A.history())
                    out << "  " << step_tag << ": " << step.src().points() << " -> "
                        << step.dst().points() << " points\n";
            };
            if (m_carrier.empty()) {
                finite_embedding fe = embed_finite(L1, *tag);
                print_result(fe.grown, fe.emb);
                return 0;
            }
            std::vector<downset> carrier = load_carrier(L1, m_carrier);
            closure_report rep = is_subalgebra(L1, carrier);
            if (!rep.ok) raise(errc::not_in_carrier, "carrier is not closed: " + rep.violation);
            subalgebra S(L1, carrier);
            dualization d = dualize(S);
            ambient A(full_subalgebra(d.dual), *tag);
            std::vector<downset> imgs;
            for (const auto& s : S.carrier()) imgs.push_back(d.iota(S, s));
            embedding e = embed_over(A, std::move(imgs), S, L1);
            print_result(A, e);
            return 0;
        }

        if (*c_enum) {
            for (const auto& p : enumerate_posets(n_size)) out << poset_to_json(*p) << "\n";
            return 0;
        }

        if (*c_dot) {
            std::ofstream file;
            std::ostream* sink = &out;
            if (!d_out.empty()) {
                file.open(d_out);
                if (!file) raise(errc::parse_error, "cannot write " + d_out);
                sink = &file;
            }
            if (!d_algebra.empty()) {
                algebra L = load_algebra(d_algebra);
                if (L.count_elements(20) <= 20)
                    print_lattice_dot(L, *sink);
                else
                    print_poset_dot(*L.pos(), *sink);
            } else if (!d_poset.empty()) {
                print_poset_dot(*poset_from_json(load_json_file(d_poset)), *sink);
            } else {
                err << "nothing to export\n";
                return 2;
            }
            return 0;
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return e.code() == errc::variety_mismatch ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}
