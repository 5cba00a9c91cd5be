#include "app.hpp"

#include "format.hpp"
#include "literal.hpp"

#include <cl2/element.hpp>
#include <cl2/equivalence.hpp>
#include <cl2/errors.hpp>
#include <cl2/matrix_rep.hpp>
#include <cl2/mp_inverse.hpp>
#include <cl2/solvers.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>

namespace cl2cli {

namespace {

using nlohmann::ordered_json;

// Emits one result document: flat "key: value" lines in text mode, one JSON
// object in --json mode.  Exact values stay strings; --float adds *_float
// companions with 12 significant digits.
class Out {
public:
    Out(bool json, bool with_float, std::ostream& os)
        : json_(json), float_(with_float), os_(os) {}

    void element(const std::string& key, const cl2::Element& e) {
        if (json_) {
            j_[key] = element_json(e);
        } else {
            line(key, cl2::to_string(e));
        }
        if (float_) float_element(key + "_float", e);
    }

    // Coefficients may carry radical parts: JSON spells each out as a
    // {p, q, radicand} triple.
    void witness_element(const std::string& key, const cl2::Element& e) {
        if (json_) {
            ordered_json arr = ordered_json::array();
            for (int i = 0; i < 4; ++i) arr.push_back(scalar_json(e.coeff(i)));
            j_[key] = arr;
        } else {
            line(key, cl2::to_string(e));
        }
        if (float_) float_element(key + "_float", e);
    }

    void element_list(const std::string& key, const std::vector<cl2::Element>& es) {
        if (json_) {
            ordered_json arr = ordered_json::array();
            for (const auto& e : es) arr.push_back(element_json(e));
            j_[key] = arr;
        } else {
            for (size_t i = 0; i < es.size(); ++i) {
                line(key + "[" + std::to_string(i) + "]", cl2::to_string(es[i]));
            }
        }
        if (float_) {
            ordered_json arr = ordered_json::array();
            for (const auto& e : es) arr.push_back(float_coeffs(e));
            if (json_) {
                j_[key + "_float"] = arr;
            } else {
                for (size_t i = 0; i < es.size(); ++i) {
                    line(key + "_float[" + std::to_string(i) + "]",
                         bracket_list(float_coeffs(es[static_cast<size_t>(i)])));
                }
            }
        }
    }

    void scalar(const std::string& key, const cl2::Scalar& s) {
        if (json_) {
            j_[key] = scalar_json(s);
        } else {
            line(key, cl2::to_string(s));
        }
        if (float_) {
            std::string v = render_double(s.to_double());
            if (json_) {
                j_[key + "_float"] = v;
            } else {
                line(key + "_float", v);
            }
        }
    }

    void rational(const std::string& key, const cl2::Rational& q) {
        if (json_) {
            j_[key] = cl2::to_string(q);
        } else {
            line(key, cl2::to_string(q));
        }
    }

    void boolean(const std::string& key, bool v) {
        if (json_) {
            j_[key] = v;
        } else {
            line(key, v ? "true" : "false");
        }
    }

    void integer(const std::string& key, long v) {
        if (json_) {
            j_[key] = v;
        } else {
            line(key, std::to_string(v));
        }
    }

    void text(const std::string& key, const std::string& v) {
        if (json_) {
            j_[key] = v;
        } else {
            line(key, v);
        }
    }

    void eigen(const std::string& key, const std::vector<RadicalSum>& vs) {
        if (json_) {
            ordered_json arr = ordered_json::array();
            for (const auto& v : vs) arr.push_back(v.text());
            j_[key] = arr;
        } else {
            for (size_t i = 0; i < vs.size(); ++i) {
                line(key + "[" + std::to_string(i) + "]", vs[i].text());
            }
        }
        if (float_) {
            ordered_json arr = ordered_json::array();
            for (const auto& v : vs) arr.push_back(render_complex(v.value()));
            if (json_) {
                j_[key + "_float"] = arr;
            } else {
                for (size_t i = 0; i < vs.size(); ++i) {
                    line(key + "_float[" + std::to_string(i) + "]",
                         render_complex(vs[i].value()));
                }
            }
        }
    }

    void matrix(const std::string& key, const cl2::RatMatrix& m) {
        if (json_) {
            ordered_json rows = ordered_json::array();
            for (int r = 0; r < m.rows(); ++r) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < m.cols(); ++c) {
                    row.push_back(cl2::to_string(m.at(r, c)));
                }
                rows.push_back(row);
            }
            j_[key] = rows;
        } else {
            for (int r = 0; r < m.rows(); ++r) {
                std::string row;
                for (int c = 0; c < m.cols(); ++c) {
                    if (c > 0) row += " ";
                    row += cl2::to_string(m.at(r, c));
                }
                line(key + "[" + std::to_string(r) + "]", row);
            }
        }
    }

    void finish() {
        if (json_) {
            os_ << j_.dump(2) << "\n";
        }
    }

private:
    static ordered_json element_json(const cl2::Element& e) {
        ordered_json arr = ordered_json::array();
        for (const auto& q : e.rational_coefficients()) {
            arr.push_back(cl2::to_string(q));
        }
        return arr;
    }

    static ordered_json scalar_json(const cl2::Scalar& s) {
        return ordered_json{{"p", cl2::to_string(s.rational_part())},
                            {"q", cl2::to_string(s.radical_coefficient())},
                            {"radicand", cl2::to_string(s.radicand())}};
    }

    static std::vector<std::string> float_coeffs(const cl2::Element& e) {
        std::vector<std::string> out;
        for (int i = 0; i < 4; ++i) {
            out.push_back(render_double(e.coeff(i).to_double()));
        }
        return out;
    }

    static std::string bracket_list(const std::vector<std::string>& vs) {
        std::string out = "[";
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i > 0) out += ", ";
            out += vs[i];
        }
        return out + "]";
    }

    void float_element(const std::string& key, const cl2::Element& e) {
        if (json_) {
            j_[key] = float_coeffs(e);
        } else {
            line(key, bracket_list(float_coeffs(e)));
        }
    }

    void line(const std::string& key, const std::string& value) {
        os_ << key << ": " << value << "\n";
    }

    bool json_;
    bool float_;
    std::ostream& os_;
    ordered_json j_;
};

void cmd_mpinv(const cl2::Element& a, Out& o) {
    cl2::Scalar h = cl2::h_map(a);
    cl2::Element x = cl2::mp(a);
    const char* kase =
        a.is_zero() ? "zero" : (h.is_zero() ? "zero-divisor" : "invertible");
    o.element("a", a);
    o.rational("H", h.as_rational());
    o.text("case", kase);
    o.element("mp", x);
}

void cmd_inv(const cl2::Element& a, Out& o) {
    cl2::Scalar h = cl2::h_map(a);
    cl2::Element x = cl2::inverse(a);
    o.element("a", a);
    o.rational("H", h.as_rational());
    o.element("inverse", x);
}

void emit_solution(const cl2::SolutionSet& s, Out& o) {
    o.boolean("solvable", s.solvable);
    if (s.solvable) {
        o.element("particular", s.particular);
    }
    o.integer("dim", s.dimension());
    o.element_list("basis", s.homogeneous_basis);
}

void cmd_sylvester(const cl2::Element& a, const cl2::Element& b, Out& o) {
    cl2::SolutionSet s = cl2::solve_sylvester(a, b);
    int rank = cl2::f_rank(a, b);
    std::vector<RadicalSum> eig = resolve_eigen(cl2::f_eigen(a, b));
    o.element("a", a);
    o.element("b", b);
    o.integer("rank", rank);
    o.eigen("eig", eig);
    o.integer("dim", s.dimension());
    o.element_list("basis", s.homogeneous_basis);
}

void cmd_consylvester(const cl2::Element& a, const cl2::Element& b, Out& o) {
    cl2::SolutionSet s = cl2::solve_consylvester(a, b);
    cl2::Rational det = cl2::w_det(a, b);
    std::vector<RadicalSum> eig = resolve_eigen(cl2::w_eigen(a, b));
    std::optional<cl2::WRankCase> rc;
    int rank;
    if (!a.is_zero() && !b.is_zero()) {
        rc = cl2::w_rank_case(a, b);
        rank = rc->rank;
    } else {
        rank = cl2::w_matrix(a, b).rank();
    }
    o.element("a", a);
    o.element("b", b);
    o.rational("det", det);
    o.integer("rank", rank);
    if (rc) {
        o.text("rank_case", cl2::to_string(rc->kind));
        o.integer("expected_rank", rc->expected_rank);
    }
    o.eigen("eig", eig);
    o.integer("dim", s.dimension());
    o.element_list("basis", s.homogeneous_basis);
}

void cmd_similar(const cl2::Element& a, const cl2::Element& b, Out& o) {
    bool verdict = cl2::is_similar(a, b);
    std::optional<cl2::Witness> w;
    if (verdict) {
        w = cl2::similarity_witness(a, b);
    }
    o.element("a", a);
    o.element("b", b);
    o.boolean("similar", verdict);
    if (w) {
        o.witness_element("witness", w->u);
        o.scalar("witness_H", w->h);
    }
}

void cmd_pseudosimilar(const cl2::Element& a, const cl2::Element& b, Out& o) {
    bool verdict = cl2::is_pseudosimilar(a, b);
    std::optional<cl2::Witness> w;
    if (verdict) {
        w = cl2::pseudosimilarity_witness(a, b);
    }
    o.element("a", a);
    o.element("b", b);
    o.boolean("pseudosimilar", verdict);
    if (w) {
        o.witness_element("witness", w->u);
        o.scalar("witness_H", w->h);
    }
}

void cmd_canonical(const cl2::Element& a, Out& o) {
    auto [form, w] = cl2::canonical(a);
    o.element("a", a);
    o.rational("G", form.g);
    o.text("kind", cl2::to_string(form.kind));
    o.witness_element("canonical", form.element());
    o.witness_element("witness", w.u);
    o.scalar("witness_H", w.h);
}

void cmd_matrep(const cl2::Element& a, Out& o) {
    cl2::RatMatrix l = cl2::left_matrix(a);
    cl2::RatMatrix r = cl2::right_matrix(a);
    cl2::RatMatrix phi = cl2::phi_matrix(a);
    o.element("a", a);
    o.matrix("L", l);
    o.matrix("R", r);
    o.matrix("phi", phi);
    o.rational("det_L", l.determinant());
    o.rational("det_R", r.determinant());
    o.rational("det_phi", phi.determinant());
    o.rational("H", cl2::h_map(a).as_rational());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact arithmetic and solvers for the real Clifford algebra "
                 "with two anticommuting square roots of 1"};
    app.name("cl2");
    app.fallthrough(true);
    bool json = false;
    bool with_float = false;
    app.add_flag("--json", json, "emit one JSON object (exact values as strings)");
    app.add_flag("--float", with_float,
                 "append decimal approximations (12 significant digits)");
    app.require_subcommand(1);

    std::string sa, sb, sd;
    auto one = [&](const char* name, const char* desc, std::string& slot1,
                   const char* arg1) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option(arg1, slot1, "element literal")->required();
        return c;
    };
    auto two = [&](const char* name, const char* desc, std::string& slot1,
                   const char* arg1, std::string& slot2, const char* arg2) {
        CLI::App* c = one(name, desc, slot1, arg1);
        c->add_option(arg2, slot2, "element literal")->required();
        return c;
    };

    CLI::App* c_mpinv = one("mpinv", "Moore-Penrose inverse", sa, "a");
    CLI::App* c_inv = one("inv", "two-sided inverse (H(a) != 0)", sa, "a");
    CLI::App* c_axb = two("solve-axb", "general solution of a x b = d", sa, "a",
                          sb, "b");
    c_axb->add_option("d", sd, "element literal")->required();
    CLI::App* c_ax = two("solve-ax", "general solution of a x = d", sa, "a",
                         sd, "d");
    CLI::App* c_xb = two("solve-xb", "general solution of x b = d", sb, "b",
                         sd, "d");
    CLI::App* c_syl = two("sylvester", "general solution of a x = x b", sa,
                          "a", sb, "b");
    CLI::App* c_csyl = two("consylvester",
                           "general solution of a x = conj(x) b", sa, "a", sb,
                           "b");
    CLI::App* c_sim = two("similar", "conjugacy test with witness", sa, "a",
                          sb, "b");
    CLI::App* c_psim = two("pseudosimilar",
                           "pseudosimilarity test with witness", sa, "a", sb,
                           "b");
    CLI::App* c_canon = one("canonical", "canonical form under conjugation",
                            sa, "a");
    CLI::App* c_matrep = one("matrep", "regular and 2x2 matrix representations",
                             sa, "a");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Out o(json, with_float, out);
        if (c_mpinv->parsed()) {
            cmd_mpinv(parse_element(sa), o);
        } else if (c_inv->parsed()) {
            cmd_inv(parse_element(sa), o);
        } else if (c_axb->parsed()) {
            cl2::Element a = parse_element(sa);
            cl2::Element b = parse_element(sb);
            cl2::Element d = parse_element(sd);
            cl2::SolutionSet s = cl2::solve_axb(a, b, d);
            o.element("a", a);
            o.element("b", b);
            o.element("d", d);
            emit_solution(s, o);
        } else if (c_ax->parsed()) {
            cl2::Element a = parse_element(sa);
            cl2::Element d = parse_element(sd);
            cl2::SolutionSet s = cl2::solve_ax(a, d);
            o.element("a", a);
            o.element("d", d);
            emit_solution(s, o);
        } else if (c_xb->parsed()) {
            cl2::Element b = parse_element(sb);
            cl2::Element d = parse_element(sd);
            cl2::SolutionSet s = cl2::solve_xb(b, d);
            o.element("b", b);
            o.element("d", d);
            emit_solution(s, o);
        } else if (c_syl->parsed()) {
            cmd_sylvester(parse_element(sa), parse_element(sb), o);
        } else if (c_csyl->parsed()) {
            cmd_consylvester(parse_element(sa), parse_element(sb), o);
        } else if (c_sim->parsed()) {
            cmd_similar(parse_element(sa), parse_element(sb), o);
        } else if (c_psim->parsed()) {
            cmd_pseudosimilar(parse_element(sa), parse_element(sb), o);
        } else if (c_canon->parsed()) {
            cmd_canonical(parse_element(sa), o);
        } else if (c_matrep->parsed()) {
            cmd_matrep(parse_element(sa), o);
        }
        o.finish();
        return 0;
    } catch (const cl2::ParseError& e) {
        err << "parse error at offset " << e.position() << ": " << e.what()
            << "\n";
        return 2;
    } catch (const cl2::DomainError& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cl2cli
