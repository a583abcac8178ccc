#include "a1deg/cli.hpp"

#include "a1deg/degrees.hpp"
#include "a1deg/error.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/witt.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace a1deg::cli {

using nlohmann::json;

namespace {

struct FieldOpts {
    std::string field = "QQ";
    std::string modulus;
};

FieldDesc resolve_field(const FieldOpts& o) {
    FieldDesc F = parse_field(o.field);
    if (o.modulus.empty()) return F;
    if (!F.is_finite()) throw DomainError("--modulus only applies to finite fields");
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : parse_scalar_list(o.modulus, FieldDesc::rationals())) {
        const Rational& r = c.rational();
        if (r.get_den() != 1 || r < 0) throw ParseError("modulus coefficients must be nonnegative integers", 1);
        coeffs.push_back(r.get_num().get_ui());
    }
    FieldDesc G = FieldDesc::finite_with_modulus(F.galois()->characteristic(), coeffs);
    if (G.galois()->order() != F.galois()->order()) {
        throw DomainError("modulus of degree " + std::to_string(coeffs.size() - 1) + " does not define " + F.name());
    }
    return G;
}

// A FILE argument: "-" is stdin, an existing path is read, anything else is
// taken as the literal text.
std::string read_source(const std::string& arg, std::istream& in) {
    auto slurp = [](std::istream& s) {
        std::ostringstream buf;
        buf << s.rdbuf();
        return buf.str();
    };
    if (arg == "-") return slurp(in);
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        if (!file) throw DomainError("cannot read " + arg);
        return slurp(file);
    }
    return arg;
}

// "[[..]]" is a Gram matrix, anything else a list of diagonal entries.
GWClass form_literal(const std::string& text, const FieldDesc& F) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text.compare(first, 2, "[[") == 0) return make_gw_class(parse_matrix(text, F), F);
    return make_diagonal_form(F, parse_scalar_list(text, F));
}

std::string join_entries(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
    return out;
}

json gram_json(const GWClass& beta) {
    json rows = json::array();
    for (std::size_t i = 0; i < beta.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < beta.rank(); ++j) row.push_back(beta.gram()(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string pretty_form(const GWClass& beta) {
    if (beta.rank() == 0) return "0";
    std::vector<std::string> diag;
    for (std::size_t i = 0; i < beta.rank(); ++i) {
        for (std::size_t j = 0; j < beta.rank(); ++j)
            if (i != j && !beta.gram()(i, j).is_zero()) return beta.to_string();
        diag.push_back(beta.gram()(i, i).to_string());
    }
    return "<" + join_entries(diag) + ">";
}

json field_to_json(const FieldDesc& F) {
    json j;
    j["name"] = F.name();
    if (F.is_finite()) {
        const auto& gf = F.galois();
        j["characteristic"] = gf->characteristic();
        j["degree"] = gf->degree();
        j["modulus"] = gf->modulus();
    } else {
        j["characteristic"] = 0;
    }
    return j;
}

FieldDesc field_from_json(const json& j) {
    FieldDesc F = parse_field(j.at("name").get<std::string>());
    if (F.is_finite() && j.contains("modulus")) {
        return FieldDesc::finite_with_modulus(F.galois()->characteristic(), j.at("modulus").get<std::vector<std::uint64_t>>());
    }
    return F;
}

json form_to_json(const GWClass& beta) {
    const FieldDesc& F = beta.field();
    json j;
    j["field"] = field_to_json(F);
    j["gram"] = gram_json(beta);
    j["rank"] = beta.rank();
    if (beta.rank() == 0) {
        j["witt_index"] = 0;
        j["decomposition"] = "0";
        return j;
    }
    InvariantBundle inv = invariants(beta);
    if (inv.signature) j["signature"] = *inv.signature;
    j["discriminant"] = inv.discriminant.to_string();
    if (F.kind() == FieldKind::QQ) {
        json hw = json::object();
        for (const auto& [p, e] : inv.hasse_witt) hw[to_string(p)] = e;
        j["hasse_witt"] = hw;
    }
    DecompositionReport report = sum_decomposition(beta);
    j["witt_index"] = report.witt_index;
    j["decomposition"] = report.display;
    return j;
}

GWClass form_from_json(const json& j) {
    FieldDesc F = field_from_json(j.at("field"));
    const json& rows = j.at("gram");
    if (rows.empty()) return GWClass::empty(F);
    Matrix<Scalar> m(rows.size(), rows.size(), Scalar::zero(F));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ParseError("gram must be a square array", 1);
        for (std::size_t j2 = 0; j2 < rows.size(); ++j2) m(i, j2) = parse_scalar(rows[i][j2].get<std::string>(), F);
    }
    return GWClass(F, std::move(m));
}

namespace {

struct FormInput {
    FieldOpts field;
    std::string matrix;
    std::string diag;
    bool json = false;
};

struct SystemInput {
    FieldOpts field;
    std::string vars;
    std::string polys;
    std::string ideal;
    std::string base_change;
    bool json = false;
};

void add_field_options(CLI::App* cmd, FieldOpts& o) {
    cmd->add_option("--field", o.field, "QQ, RR, CC or GF(q)")->capture_default_str();
    cmd->add_option("--modulus", o.modulus, "GF(p^k) modulus coefficients, constant term first, e.g. 1,2,0,1");
}

CLI::App* add_form_command(CLI::App* parent, const std::string& name, const std::string& help, FormInput& o) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_field_options(cmd, o.field);
    auto* matrix = cmd->add_option("--matrix", o.matrix, "Gram matrix, e.g. [[1,3],[3,7]]");
    auto* diag = cmd->add_option("--diag", o.diag, "diagonal entries, e.g. 3,-3,2");
    matrix->excludes(diag);
    diag->excludes(matrix);
    cmd->add_flag("--json", o.json, "machine-readable output");
    return cmd;
}

CLI::App* add_system_command(CLI::App* parent, const std::string& name, const std::string& help, SystemInput& o,
                             bool needs_ideal) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_field_options(cmd, o.field);
    cmd->add_option("--vars", o.vars, "variables in monomial-order priority, e.g. x1,x2")->required();
    cmd->add_option("--polys", o.polys, "polynomials: a file, - for stdin, or inline text")->required();
    if (needs_ideal) cmd->add_option("--ideal", o.ideal, "point ideal generators: a file, - or inline text")->required();
    cmd->add_flag("--json", o.json, "machine-readable output");
    return cmd;
}

GWClass read_form(const FormInput& o) {
    FieldDesc F = resolve_field(o.field);
    if (!o.matrix.empty()) return make_gw_class(parse_matrix(o.matrix, F), F);
    if (!o.diag.empty()) return make_diagonal_form(F, parse_scalar_list(o.diag, F));
    throw CLI::RequiredError("--matrix or --diag");
}

struct System {
    EndoSystem f;
    std::optional<Ideal> point;
};

System read_system(const SystemInput& o, std::istream& in) {
    FieldDesc F = resolve_field(o.field);
    RingPtr R = PolyRing::make(F, parse_variable_list(o.vars));
    EndoSystem f(R, parse_polynomial_list(read_source(o.polys, in), R));
    std::optional<Ideal> point;
    if (!o.ideal.empty()) point.emplace(R, parse_polynomial_list(read_source(o.ideal, in), R));
    return {std::move(f), std::move(point)};
}

void emit_form(std::ostream& out, const GWClass& beta, bool as_json) {
    if (as_json) {
        out << form_to_json(beta).dump(2) << "\n";
    } else {
        out << pretty_form(beta) << "\n";
    }
}

void print_invariants(std::ostream& out, const GWClass& beta) {
    InvariantBundle inv = invariants(beta);
    out << "field: " << beta.field().name() << "\n";
    out << "rank: " << inv.rank << "\n";
    if (inv.signature) out << "signature: " << *inv.signature << "\n";
    out << "discriminant: " << inv.discriminant.to_string() << "\n";
    if (beta.field().kind() == FieldKind::QQ) {
        out << "hasse_witt:";
        for (const auto& [p, e] : inv.hasse_witt) out << " " << to_string(p) << ":" << e;
        out << "\n";
    }
    out << "witt_index: " << witt_index(beta) << "\n";
}

Integer prime_argument(const std::string& text) {
    Scalar s = parse_scalar(text, FieldDesc::rationals());
    if (s.rational().get_den() != 1) throw ParseError("the prime must be an integer", 1);
    return s.rational().get_num();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact A1-Brouwer degrees and symmetric bilinear forms", "a1deg"};
    app.require_subcommand(1);

    CLI::App* form = app.add_subcommand("form", "symmetric bilinear forms");
    form->require_subcommand(1);
    FormInput fin;
    auto* diagonalize_cmd = add_form_command(form, "diagonalize", "diagonal representative by congruence", fin);
    auto* invariants_cmd = add_form_command(form, "invariants", "rank, signature, discriminant, Hasse-Witt", fin);
    auto* decompose_cmd = add_form_command(form, "decompose", "Witt decomposition nH + anisotropic part", fin);
    auto* aniso_cmd = add_form_command(form, "anisotropic-part", "anisotropic part", fin);

    FieldOpts iso_field;
    std::string iso_a, iso_b;
    bool iso_json = false;
    auto* iso_cmd = form->add_subcommand("isomorphic", "compare two forms; each a Gram matrix or an entry list");
    add_field_options(iso_cmd, iso_field);
    iso_cmd->add_option("A", iso_a, "first form")->required();
    iso_cmd->add_option("B", iso_b, "second form")->required();
    iso_cmd->add_flag("--json", iso_json, "machine-readable output");

    auto* make_cmd = form->add_subcommand("make", "build a standard form");
    make_cmd->require_subcommand(1);
    FieldOpts make_field;
    std::string make_entries;
    std::size_t make_rank = 2;
    bool make_json = false;
    auto* make_diag = make_cmd->add_subcommand("diagonal", "<a_1,...,a_n>");
    auto* make_hyp = make_cmd->add_subcommand("hyperbolic", "rank/2 copies of H");
    auto* make_pf = make_cmd->add_subcommand("pfister", "<<a_1,...,a_n>> = tensor product of <1,-a_i>");
    for (auto* c : {make_diag, make_hyp, make_pf}) {
        add_field_options(c, make_field);
        c->add_flag("--json", make_json, "machine-readable output");
    }
    make_diag->add_option("--entries", make_entries, "comma-separated entries")->required();
    make_pf->add_option("--entries", make_entries, "comma-separated entries")->required();
    make_hyp->add_option("--rank", make_rank, "even rank")->capture_default_str();

    CLI::App* symbol = app.add_subcommand("symbol", "local symbols");
    symbol->require_subcommand(1);
    std::string h_a, h_b, h_p;
    bool h_json = false;
    auto* hilbert_cmd = symbol->add_subcommand("hilbert", "Hilbert symbol (a,b)_p; p = inf for the real place");
    hilbert_cmd->add_option("a", h_a)->required();
    hilbert_cmd->add_option("b", h_b)->required();
    hilbert_cmd->add_option("p", h_p)->required();
    hilbert_cmd->add_flag("--json", h_json, "machine-readable output");

    CLI::App* degree = app.add_subcommand("degree", "A1-Brouwer degrees");
    degree->require_subcommand(1);
    SystemInput sin;
    auto* global_cmd = add_system_command(degree, "global", "global degree", sin, false);
    auto* local_cmd = add_system_command(degree, "local", "local degree at a point ideal", sin, true);
    for (auto* c : {global_cmd, local_cmd}) {
        c->add_option("--base-change", sin.base_change, "re-tag a QQ result as RR or CC")
            ->check(CLI::IsMember({"RR", "CC"}));
    }

    CLI::App* basis = app.add_subcommand("basis", "quotient algebra bases");
    basis->require_subcommand(1);
    auto* basis_local_cmd = add_system_command(basis, "local", "standard-monomial basis of the local algebra", sin, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (diagonalize_cmd->parsed()) {
            Diagonalization d = diagonalize(read_form(fin));
            if (fin.json) {
                json j = form_to_json(d.diagonal);
                json p = json::array();
                for (std::size_t i = 0; i < d.change_of_basis.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t k = 0; k < d.change_of_basis.cols(); ++k)
                        row.push_back(d.change_of_basis(i, k).to_string());
                    p.push_back(row);
                }
                j["change_of_basis"] = p;
                out << j.dump(2) << "\n";
            } else {
                out << pretty_form(d.diagonal) << "\n";
            }
        } else if (invariants_cmd->parsed()) {
            GWClass beta = read_form(fin);
            if (fin.json) {
                out << form_to_json(beta).dump(2) << "\n";
            } else {
                print_invariants(out, beta);
            }
        } else if (decompose_cmd->parsed()) {
            GWClass beta = read_form(fin);
            DecompositionReport r = sum_decomposition(beta);
            if (fin.json) {
                json j = form_to_json(beta);
                j["anisotropic_part"] = form_to_json(r.anisotropic_part);
                out << j.dump(2) << "\n";
            } else {
                out << r.display << "\n";
            }
        } else if (aniso_cmd->parsed()) {
            emit_form(out, anisotropic_part(read_form(fin)), fin.json);
        } else if (iso_cmd->parsed()) {
            FieldDesc F = resolve_field(iso_field);
            bool iso = is_isomorphic_form(form_literal(iso_a, F), form_literal(iso_b, F));
            if (iso_json) {
                out << json{{"isomorphic", iso}}.dump(2) << "\n";
            } else {
                out << (iso ? "true" : "false") << "\n";
            }
        } else if (make_cmd->parsed()) {
            FieldDesc F = resolve_field(make_field);
            GWClass beta = make_diag->parsed()  ? make_diagonal_form(F, parse_scalar_list(make_entries, F))
                           : make_pf->parsed() ? make_pfister_form(F, parse_scalar_list(make_entries, F))
                                               : make_hyperbolic_form(F, make_rank);
            emit_form(out, beta, make_json);
        } else if (hilbert_cmd->parsed()) {
            const FieldDesc Q = FieldDesc::rationals();
            Rational a = parse_scalar(h_a, Q).rational(), b = parse_scalar(h_b, Q).rational();
            int symbol_value;
            if (h_p == "inf" || h_p == "oo") {
                symbol_value = real_hilbert_symbol(a, b);
            } else {
                symbol_value = hilbert_symbol(a, b, prime_argument(h_p));
            }
            if (h_json) {
                out << json{{"a", to_string(a)}, {"b", to_string(b)}, {"p", h_p}, {"symbol", symbol_value}}.dump(2) << "\n";
            } else {
                out << symbol_value << "\n";
            }
        } else if (global_cmd->parsed() || local_cmd->parsed()) {
            System s = read_system(sin, in);
            GWClass beta = s.point ? local_a1_degree(s.f, *s.point) : global_a1_degree(s.f);
            if (!sin.base_change.empty()) {
                if (beta.rank() == 0) {
                    beta = GWClass::empty(parse_field(sin.base_change));
                } else {
                    beta = base_change(beta, parse_field(sin.base_change));
                }
            }
            emit_form(out, beta, sin.json);
        } else if (basis_local_cmd->parsed()) {
            System s = read_system(sin, in);
            LocalAlgebraBasis L = local_algebra_basis(s.f, *s.point);
            std::vector<std::string> names;
            for (const auto& m : L.basis) names.push_back(s.f.ring()->format(m));
            if (sin.json) {
                out << json{{"dimension", names.size()}, {"basis", names}, {"local_ideal", L.local_ideal.to_string()}}.dump(2)
                    << "\n";
            } else {
                for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
                out << "\n";
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace a1deg::cli
