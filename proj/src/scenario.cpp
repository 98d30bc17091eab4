#include "vdw/scenario.hpp"

#include "vdw/error.hpp"
#include "vdw/parser.hpp"

#include <json.hpp>

#include <fstream>

namespace vdw {

using nlohmann::json;

const RationalCurve& Scenario::curve_f() const {
    if (!f) throw ValidationError("scenario '" + id + "' has no curve f");
    return *f;
}

const RationalCurve& Scenario::curve_g() const {
    if (!g) throw ValidationError("scenario '" + id + "' declares no curve g");
    return *g;
}

namespace {

RationalCurve parse_curve(const json& arr, const std::string& name) {
    static const std::vector<std::string> z_name{"z"};
    std::vector<Poly> components;
    for (const auto& entry : arr) {
        if (!entry.is_string())
            throw ValidationError("curve " + name + ": components must be strings");
        components.push_back(parse_poly(entry.get<std::string>(), z_name));
    }
    return reduce_representation(std::move(components));
}

void require_on_variety(const RationalCurve& curve, const Variety& v, const std::string& name) {
    for (const Poly& gen : v.generators()) {
        const Poly pulled = gen.substitute(curve.components());
        if (!pulled.is_zero())
            throw ValidationError("curve " + name + " does not lie on the variety: generator " +
                                  gen.str() + " pulls back to " + pulled.str());
    }
}

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("scenario parse error in " + path.string() + ": " + e.what());
    }

    Scenario sc;
    try {
        sc.id = doc.at("id").get<std::string>();

        const json& var = doc.at("variety");
        const std::size_t ambient_n = var.at("ambient_n").get<std::size_t>();
        const int dim_k = var.at("dim_k").get<int>();
        std::vector<std::string> names;
        for (std::size_t i = 0; i <= ambient_n; ++i) names.push_back("x" + std::to_string(i));

        std::vector<Poly> generators;
        if (var.contains("generators")) {
            for (const auto& s : var.at("generators")) {
                sc.generator_strings.push_back(s.get<std::string>());
                generators.push_back(parse_poly(sc.generator_strings.back(), names));
            }
        }
        sc.variety = std::make_shared<Variety>(ambient_n, dim_k, std::move(generators));
        sc.variety->validate_dimension();

        for (const auto& h : doc.at("hypersurfaces")) {
            Hypersurface hs;
            hs.poly = parse_poly(h.at("poly").get<std::string>(), names);
            hs.degree = h.at("degree").get<int>();
            if (hs.poly.degree() != hs.degree || !hs.poly.is_homogeneous())
                throw ValidationError("hypersurface '" + h.at("poly").get<std::string>() +
                                      "' is not homogeneous of the declared degree " +
                                      std::to_string(hs.degree));
            sc.hypersurfaces.push_back(std::move(hs));
        }
        sc.N = doc.at("N").get<int>();
        sc.family = std::make_shared<Family>(sc.hypersurfaces, sc.N, *sc.variety);

        const json& curves = doc.at("curves");
        sc.f = parse_curve(curves.at("f"), "f");
        require_on_variety(*sc.f, *sc.variety, "f");
        if (curves.contains("g")) {
            sc.g = parse_curve(curves.at("g"), "g");
            require_on_variety(*sc.g, *sc.variety, "g");
        }

        const json& grid = doc.at("r_grid");
        sc.r_grid.r_min = grid.at("r_min").get<double>();
        sc.r_grid.r_max = grid.at("r_max").get<double>();
        sc.r_grid.points = grid.at("points").get<int>();
        const std::string spacing = grid.value("spacing", std::string("log"));
        if (spacing != "log" && spacing != "linear")
            throw ValidationError("r_grid.spacing must be 'log' or 'linear'");
        sc.r_grid.log_spacing = spacing == "log";
        if (sc.r_grid.r_min <= 1.0) throw ValidationError("r_grid.r_min must exceed 1");

        for (const auto& c : doc.at("checks")) sc.checks.push_back(c.get<std::string>());

        if (doc.contains("seeds")) {
            const json& seeds = doc.at("seeds");
            sc.seeds.subspace = seeds.value("subspace", sc.seeds.subspace);
            sc.seeds.completion = seeds.value("completion", sc.seeds.completion);
            sc.seeds.audit = seeds.value("audit", sc.seeds.audit);
        }
        if (doc.contains("tolerances")) {
            const json& tol = doc.at("tolerances");
            sc.tolerances.margin_r0 = tol.value("margin_r0", sc.tolerances.margin_r0);
            sc.tolerances.require_margin_trend =
                tol.value("require_margin_trend", sc.tolerances.require_margin_trend);
            sc.tolerances.jensen_residual =
                tol.value("jensen_residual", sc.tolerances.jensen_residual);
            sc.tolerances.quadrature_rel_tol =
                tol.value("quadrature_rel_tol", sc.tolerances.quadrature_rel_tol);
        }
    } catch (const json::exception& e) {
        throw ValidationError("scenario '" + path.string() + "': " + e.what());
    }
    return sc;
}

}  // namespace vdw
