#include "polyplan/cli.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "polyplan/json_io.hpp"

namespace polyplan {

namespace {

using nlohmann::json;

struct Problem {
    SimplicialComplex K;
    std::vector<GroupModel> models;
};

Problem load_problem(const std::string& complex_path, const std::string& groups_path,
                     std::ostream& err) {
    Problem p;
    p.K = SimplicialComplex::validate(complex_from_json(load_json_file(complex_path)));
    for (const auto& warning : p.K.warnings()) {
        err << complex_path << ": warning: " << warning << "\n";
    }
    p.models = groups_from_json(load_json_file(groups_path));
    if (static_cast<int>(p.models.size()) != p.K.vertex_count()) {
        throw ValidationError(groups_path + ": " + std::to_string(p.models.size()) +
                              " factors for a complex with " +
                              std::to_string(p.K.vertex_count()) + " vertices");
    }
    return p;
}

json faces_to_json(Face f) { return json(face_vertices(f)); }

void csv_header_for(const GroupModel& g, const std::string& prefix, std::string& header) {
    switch (g.kind()) {
        case GroupModel::Kind::Circle:
            header += "," + prefix + "_x," + prefix + "_y";
            break;
        case GroupModel::Kind::Sphere3:
            header += "," + prefix + "_w," + prefix + "_x," + prefix + "_y," + prefix + "_z";
            break;
        case GroupModel::Kind::Product:
            for (std::size_t i = 0; i < g.factors().size(); ++i) {
                csv_header_for(g.factors()[i], prefix + "_f" + std::to_string(i + 1), header);
            }
            break;
    }
}

void append_number(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), ",%.17g", v);
    line += buf;
}

}  // namespace

std::string sidecar_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

int run_tc(const TcArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const Problem p = load_problem(args.complex_path, args.groups_path, err);
        const Weights w = model_weights(p.models);

        json result;
        result["cat"] = max_face_weight(p.K, w);
        result["tc"] = max_face_pair_weight(p.K, w);
        result["cat_face"] = faces_to_json(max_face_witness(p.K, w));
        const auto [s1, s2] = max_face_pair_witness(p.K, w);
        result["tc_pair"] = json::array({faces_to_json(s1), faces_to_json(s2)});
        result["weights"] = w;
        out << result.dump(2) << "\n";
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.samples < 2) throw ValidationError("--samples must be >= 2");
        const Problem p = load_problem(args.complex_path, args.groups_path, err);
        const Configuration from = configuration_from_json(load_json_file(args.from_path),
                                                           p.models, p.K.vertex_count());
        const Configuration to = configuration_from_json(load_json_file(args.to_path), p.models,
                                                         p.K.vertex_count());
        const PlannedPath path = plan(from, to, p.models, p.K);

        std::ofstream csv(args.out_path);
        if (!csv) throw ValidationError("cannot write file: " + args.out_path);
        std::string header = "t";
        for (std::size_t i = 0; i < p.models.size(); ++i) {
            csv_header_for(p.models[i], "g" + std::to_string(i + 1), header);
        }
        csv << header << "\n";
        for (long s = 0; s < args.samples; ++s) {
            const double t =
                static_cast<double>(s) / static_cast<double>(args.samples - 1);
            const Configuration cfg = path.at(t);
            std::string line;
            char tbuf[40];
            std::snprintf(tbuf, sizeof(tbuf), "%.17g", t);
            line += tbuf;
            for (const auto& elem : cfg.elements) {
                for (double c : elem.coords) append_number(line, c);
            }
            csv << line << "\n";
        }
        csv.close();

        json sidecar{{"j", path.cell().total()}, {"cell", path.cell().rows}};
        const std::string side = sidecar_path(args.out_path);
        std::ofstream sidefile(side);
        if (!sidefile) throw ValidationError("cannot write file: " + side);
        sidefile << sidecar.dump(2) << "\n";

        out << "wrote " << args.out_path << " (" << args.samples << " samples) and " << side
            << "\n";
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.trials < 1) throw ValidationError("--trials must be >= 1");
        const Problem p = load_problem(args.complex_path, args.groups_path, err);
        const CoverReport report = verify_fh_cover(p.K, p.models, args.trials, args.seed);
        const json rj = report_to_json(report, p.models);

        std::ofstream file(args.out_path);
        if (!file) throw ValidationError("cannot write file: " + args.out_path);
        file << rj.dump(2) << "\n";

        auto line = [&out](const char* name, const CheckCounter& c) {
            out << name << ": " << (c.failed == 0 ? "pass" : "FAIL") << " (" << c.checked
                << " checked, " << c.failed << " failed)\n";
        };
        out << "formula bound " << report.formula_bound << ", max observed j "
            << report.max_j_observed << ", witness j " << report.witness_j
            << (report.witness_attains ? " (attains bound)" : " (DOES NOT attain bound)") << "\n";
        line("diagonal_in_w0", report.diagonal_in_w0);
        line("stasis", report.stasis);
        line("endpoints", report.endpoints);
        line("containment", report.containment);
        line("continuity", report.continuity);
        line("separation", report.separation);
        line("offdiagonal_wj", report.offdiagonal_wj);
        out << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
        return report.all_pass() ? 0 : 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polyplan
