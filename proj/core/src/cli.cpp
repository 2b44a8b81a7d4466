#include "vexil/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "vexil/brill_noether.hpp"
#include "vexil/json_io.hpp"
#include "vexil/motivic.hpp"
#include "vexil/schubert.hpp"
#include "vexil/shapes.hpp"

namespace vexil::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

std::vector<int> parse_csv(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": bad integer '" + item + "'");
        }
    }
    return out;
}

struct Output {
    std::string format = "text";
    std::optional<Rational> at;

    void poly(std::ostream& os, const YPolynomial& p) const {
        YPolynomial v = at ? p.eval_poly(*at) : p;
        if (format == "json")
            os << ypoly_to_json(v) << "\n";
        else
            os << v.str() << "\n";
    }
    void cls(std::ostream& os, const GradedClass& c) const {
        GradedClass v = at ? c.eval_y(*at) : c;
        if (format == "json")
            os << class_to_json(v) << "\n";
        else
            os << v.str() << "\n";
    }
};

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact motivic Hirzebruch, CSM, and chi_y computations for "
                 "vexillary degeneracy loci"};
    app.require_subcommand(1);

    std::string format = "text", at_str;
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--at", at_str)->description("evaluate results at a rational y");

    // degeneracy
    auto* deg = app.add_subcommand("degeneracy", "classes of a vexillary degeneracy locus");
    deg->fallthrough();
    std::string deg_mode, deg_triple, deg_geom;
    deg->add_option("mode", deg_mode)->required()->check(
        CLI::IsMember({"ty", "csm", "resolution", "fundamental"}));
    deg->add_option("--triple", deg_triple)->required();
    deg->add_option("--geometry", deg_geom)->required();

    // bn
    auto* bn = app.add_subcommand("bn", "one-pointed Brill-Noether varieties");
    bn->fallthrough();
    std::string bn_mode, bn_a, bn_problem_json;
    int bn_g = 0, bn_d = 0;
    int bn_n = -1;
    bn->add_option("mode", bn_mode)->required()->check(CLI::IsMember({"class", "chi", "gchi"}));
    auto* bn_g_opt = bn->add_option("--g", bn_g);
    bn->add_option("--d", bn_d)->needs(bn_g_opt);
    bn->add_option("--a", bn_a)->needs(bn_g_opt);
    bn->add_option("--n", bn_n);
    bn->add_option("--problem", bn_problem_json)->excludes(bn_g_opt);

    // schubert
    auto* sch = app.add_subcommand("schubert", "Schubert varieties in a Grassmannian");
    sch->fallthrough();
    std::string sch_mode, sch_shape;
    int sch_k = 0, sch_n = 0;
    sch->add_option("mode", sch_mode)->required()->check(CLI::IsMember({"class", "csm", "chi"}));
    sch->add_option("--k", sch_k)->required();
    sch->add_option("--n", sch_n)->required();
    sch->add_option("--shape", sch_shape)->required();

    // omega
    auto* om = app.add_subcommand("omega", "shape combinatorics of the Grassmannian-bundle locus");
    om->fallthrough();
    std::string om_mode, om_lambda, om_kappa;
    om->add_option("mode", om_mode)->required()->check(CLI::IsMember({"dk", "kred", "pshapes"}));
    om->add_option("--lambda", om_lambda);
    om->add_option("--kappa", om_kappa)->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "closed-form Brill-Noether values");
    orc->fallthrough();
    std::string orc_mode, orc_a;
    int orc_g = 0, orc_d = 0, orc_r = 0;
    orc->add_option("mode", orc_mode)->required()->check(
        CLI::IsMember({"surface", "pencil", "curve"}));
    orc->add_option("--g", orc_g)->required();
    orc->add_option("--d", orc_d)->required();
    orc->add_option("--r", orc_r);
    orc->add_option("--a", orc_a);

    std::vector<const char*> argv;
    argv.push_back("vexil");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    Output o;
    o.format = format;
    if (!at_str.empty()) o.at = Rational::parse(at_str);

    if (deg->parsed()) {
        Triple t = triple_from_json(deg_triple);
        auto geom = geometry_from_json(deg_geom, t);
        if (deg_mode == "fundamental") {
            o.cls(out, determinant_class(t, *geom));
            return kExitOk;
        }
        GradedClass result(geom->ring());
        if (deg_mode == "ty")
            result = motivic_class(t, *geom);
        else if (deg_mode == "csm")
            result = csm_class(t, *geom);
        else
            result = resolution_class(t, *geom);
        o.cls(out, result);
        if (partition_weight(lambda_of(t)) > geom->dimension()) {
            err << "note: expected codimension exceeds the ambient dimension; the locus is empty\n";
            return kExitInfeasible;
        }
        return kExitOk;
    }

    if (bn->parsed()) {
        BNProblem prob;
        std::optional<int> n;
        if (!bn_problem_json.empty()) {
            std::tie(prob, n) = bn_problem_from_json(bn_problem_json);
        } else if (bn_g_opt->count() > 0) {
            prob = bn_problem(bn_g, bn_d, parse_csv(bn_a, "--a"));
        } else {
            throw std::invalid_argument("bn: pass either --problem or --g/--d/--a");
        }
        if (bn_n >= 0) n = bn_n;
        if (bn_mode == "class")
            o.cls(out, ty_class_W(prob, n));
        else if (bn_mode == "chi")
            o.poly(out, chi_y_W(prob, n));
        else
            o.poly(out, chi_y_G(prob, n));
        if (!bn_nonempty(prob)) {
            err << "note: the Brill-Noether locus is empty (g < sum of positive lambda_i)\n";
            return kExitInfeasible;
        }
        return kExitOk;
    }

    if (sch->parsed()) {
        Partition mu = normalize_partition(parse_csv(sch_shape, "--shape"));
        if (sch_mode == "class")
            o.cls(out, schubert_ty_class(mu, sch_k, sch_n));
        else if (sch_mode == "csm")
            o.cls(out, schubert_csm_class(mu, sch_k, sch_n));
        else
            o.poly(out, schubert_chi(mu, sch_k, sch_n));
        return kExitOk;
    }

    if (om->parsed()) {
        Shape kappa = parse_csv(om_kappa, "--kappa");
        if (om_mode == "pshapes") {
            out << p_shapes(kappa) << "\n";
            return kExitOk;
        }
        std::vector<int> lambda = parse_csv(om_lambda, "--lambda");
        if (om_mode == "kred") {
            Shape red = kappa_red(lambda, kappa);
            if (format == "json") {
                out << nlohmann::json(red).dump() << "\n";
            } else {
                for (size_t i = 0; i < red.size(); ++i) out << (i ? "," : "") << red[i];
                out << "\n";
            }
            return kExitOk;
        }
        o.poly(out, d_kappa(lambda, kappa));
        return kExitOk;
    }

    if (orc->parsed()) {
        if (orc_mode == "surface") {
            auto res = oracle_surface_classical(orc_g, orc_r, orc_d);
            out << "T_y: ";
            o.cls(out, res.cls);
            out << "chi_y: ";
            o.poly(out, res.chi);
            out << "sigma: " << oracle_surface_signature(orc_g, orc_r, orc_d).str() << "\n";
            return kExitOk;
        }
        std::vector<int> a = parse_csv(orc_a, "--a");
        if (orc_mode == "pencil") {
            auto res = oracle_surface_pencil(orc_g, orc_d, a);
            out << "T_y: ";
            o.cls(out, res.cls);
            out << "chi_y: ";
            o.poly(out, res.chi);
            return kExitOk;
        }
        out << "chi_y: ";
        o.poly(out, oracle_curve(orc_g, orc_d, a));
        return kExitOk;
    }

    err << "error: no subcommand\n";
    return kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace vexil::cli
