// quermass: evaluate catalog identities, compute support-body quantities,
// run verification checks/suites, and dump Grassmann frames.
//
// Exit codes: 0 ok, 1 unexpected check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quermass/quermass.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace quermass;

void echo_invocation(int argc, char** argv) {
    std::string line = "# quermass ";
    line += kVersion;
    for (int i = 1; i < argc; ++i) {
        line += ' ';
        line += argv[i];
    }
    std::cerr << line << "\n";
}

// Output files appear once, complete: write to a temp path, then rename.
void write_file_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " to " + path);
}

nlohmann::json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body spec '" + path + "'");
    return nlohmann::json::parse(in);
}

std::string compact_config(const std::map<std::string, std::string>& config) {
    std::string out;
    for (const auto& [k, v] : config) {
        if (!out.empty()) out += ' ';
        if (k == "body") {
            auto fam = nlohmann::json::parse(v).value("family", "?");
            out += "body=" + fam;
        } else {
            out += k + "=" + v;
        }
    }
    return out;
}

void print_value(const std::string& format, const std::string& key, const std::string& value,
                 bool quote_in_json) {
    if (format == "json") {
        if (quote_in_json)
            std::cout << "{\"" << key << "\":\"" << json_escape(value) << "\"}\n";
        else
            std::cout << "{\"" << key << "\":" << value << "}\n";
    } else if (format == "csv") {
        std::cout << key << "," << value << "\n";
    } else {
        std::cout << value << "\n";
    }
}

struct IntFlags {
    std::map<std::string, int> values;
    std::map<std::string, CLI::Option*> opts;

    void attach(CLI::App* cmd, const std::vector<std::string>& names) {
        for (const auto& n : names)
            opts[n] = cmd->add_option("--" + n, values[n], "parameter " + n);
    }
    std::map<std::string, int> provided() const {
        std::map<std::string, int> out;
        for (const auto& [n, opt] : opts)
            if (opt->count()) out.emplace(n, values.at(n));
        return out;
    }
};

int cmd_eval(const std::string& formula_id, const IntFlags& flags, const std::string& body_path,
             double rho, const std::string& format) {
    const auto params = flags.provided();
    FormulaPoly poly = formulas::build_formula(formula_id, params);
    if (body_path.empty()) {
        print_value(format, "poly", poly.str(), true);
        return 0;
    }
    int n = params.count("n") ? params.at("n") : 0;
    SupportBody body = SupportBody::from_json(load_spec(body_path), n);
    if (n && body.dim() != n)
        throw std::invalid_argument("body dimension " + std::to_string(body.dim()) +
                                    " does not match --n " + std::to_string(n));
    verify::BindContext ctx{&body, rho, std::nullopt,
                            params.count("r") ? params.at("r") : 0};
    double value = poly.eval(verify::bind_atoms(poly, ctx));
    print_value(format, "value", format_g17(value), false);
    return 0;
}

int cmd_body(const CLI::App* sub, const std::string& quantity, const std::string& spec_path,
             int i, int dim, double rho, int rank, const std::string& axes, uint64_t seed,
             bool all_widths, const std::string& dir, const std::string& out_path,
             const std::string& format) {
    SupportBody body = SupportBody::from_json(load_spec(spec_path), dim);
    const int n = body.dim();
    if (n >= 2 && n <= 3)
        std::cerr << "# quadrature resolution: "
                  << QuadratureGrid::standard(n).resolution << "\n";

    if (quantity == "mci") {
        if (!sub->count("--i")) throw CLI::RequiredError("--i");
        print_value(format, "value", format_g17(mean_curvature_integral(body, i)), false);
        return 0;
    }
    if (quantity == "volume") {
        print_value(format, "value", format_g17(volume(body)), false);
        return 0;
    }
    if (quantity == "width") {
        if (all_widths || dir.empty()) {
            double mn = std::numeric_limits<double>::infinity(), mx = -mn;
            auto probe = [&](const Vec& u) {
                double w = body.width(u);
                mn = std::min(mn, w);
                mx = std::max(mx, w);
            };
            if (n == 1) {
                Vec u(1);
                u << 1.0;
                probe(u);
            } else if (n == 2) {
                for (int k = 0; k < 512; ++k) {
                    double th = std::numbers::pi * k / 512;
                    Vec u(2);
                    u << std::cos(th), std::sin(th);
                    probe(u);
                }
            } else {
                for (int a = 0; a < 48; ++a)
                    for (int b = 0; b < 96; ++b) {
                        double ct = -1.0 + 2.0 * (a + 0.5) / 48;
                        double st = std::sqrt(1 - ct * ct);
                        double ps = 2 * std::numbers::pi * (b + 0.5) / 96;
                        Vec u(3);
                        u << st * std::cos(ps), st * std::sin(ps), ct;
                        probe(u);
                    }
            }
            if (format == "json")
                std::cout << "{\"max\":" << format_g17(mx) << ",\"min\":" << format_g17(mn)
                          << "}\n";
            else if (format == "csv")
                std::cout << "max," << format_g17(mx) << "\nmin," << format_g17(mn) << "\n";
            else
                std::cout << "max " << format_g17(mx) << " min " << format_g17(mn) << "\n";
            return 0;
        }
        Vec u(n);
        std::stringstream ss(dir);
        std::string tok;
        int k = 0;
        while (std::getline(ss, tok, ',') && k < n) u[k++] = std::stod(tok);
        if (k != n) throw std::invalid_argument("--dir needs " + std::to_string(n) + " components");
        u /= u.norm();
        print_value(format, "value", format_g17(body.width(u)), false);
        return 0;
    }
    if (quantity == "parallel") {
        if (!sub->count("--rho")) throw CLI::RequiredError("--rho");
        SupportBody derived = SupportBody::parallel(body, rho);
        std::string spec = derived.to_json().dump(2) + "\n";
        if (out_path.empty())
            std::cout << spec;
        else
            write_file_atomically(out_path, spec);
        return 0;
    }
    if (quantity == "project") {
        if (rank < 1) throw CLI::RequiredError("--r");
        SubspaceFrame frame = SubspaceFrame::coordinate(n, rank);
        if (!axes.empty()) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, rank);
            std::stringstream ss(axes);
            std::string tok;
            int c = 0;
            while (std::getline(ss, tok, ',') && c < rank) m(std::stoi(tok), c++) = 1.0;
            if (c != rank) throw std::invalid_argument("--axes needs " + std::to_string(rank) +
                                                       " entries");
            frame = SubspaceFrame::checked(std::move(m));
        } else if (sub->count("--seed")) {
            frame = sample_subspace(n, rank, seed, 0);
        }
        SupportBody derived = project(body, frame);
        std::string spec = derived.to_json().dump(2) + "\n";
        if (out_path.empty())
            std::cout << spec;
        else
            write_file_atomically(out_path, spec);
        return 0;
    }
    throw CLI::ValidationError("quantity must be one of mci, volume, width, project, parallel");
}

int cmd_verify(const std::string& id, const IntFlags& flags, const std::string& body_path,
               double rho, double radius, bool rho_given, bool radius_given, uint64_t samples,
               uint64_t seed, int workers, int n_max, const std::string& out_path,
               const std::string& csv_path) {
    std::vector<CheckReport> reports;
    std::cerr << "# effective: samples=" << samples << " seed=" << seed
              << " workers=" << workers << " n-max=" << n_max << "\n";

    const bool is_suite = id == "exact-identities" || id == "oracle-numeric" ||
                          id == "statistical" || id == "full";
    if (is_suite) {
        reports = verify::run_suite(id, workers, samples, seed);
    } else {
        const auto& def = verify::check_def(id);  // validates the id
        verify::Config cfg;
        for (const auto& [k, v] : flags.provided()) cfg.set(k, v);
        if (!body_path.empty()) {
            int n = cfg.has("n") ? cfg.get_int("n") : 0;
            cfg.set("body", SupportBody::from_json(load_spec(body_path), n).spec_string());
        }
        if (rho_given) cfg.set("rho", rho);
        if (radius_given) cfg.set("radius", radius);
        bool needs_samples = false, needs_seed = false;
        for (const auto& k : def.required) {
            needs_samples |= k == "samples";
            needs_seed |= k == "seed";
        }
        if (needs_samples) cfg.set("samples", samples);
        if (needs_seed) cfg.set("seed", seed);

        if ((id == "thm1-internal" || id == "thm2-internal") && !cfg.has("n")) {
            // sweep the whole exact range up to --n-max
            for (int n = 2; n <= n_max; ++n)
                for (int r = 1; r <= n - 1; ++r)
                    for (int l = 0; l <= n - 1; ++l)
                        reports.push_back(verify::run_check(
                            id, verify::Config{}.set("n", n).set("r", r).set("l", l)));
        } else {
            reports.push_back(verify::run_check(id, cfg));
        }
    }

    for (const auto& r : reports)
        std::cout << "[" << r.verdict << "] " << r.check_id << " " << compact_config(r.config)
                  << " abs_error=" << format_g17(r.abs_error)
                  << " rel_error=" << format_g17(r.rel_error) << "\n";

    if (!out_path.empty()) write_file_atomically(out_path, verify::reports_to_jsonl(reports));
    if (!csv_path.empty()) write_file_atomically(csv_path, verify::reports_to_csv(reports));

    size_t passes = 0, documented = 0, failures = 0;
    for (const auto& r : reports) {
        passes += r.verdict == "pass";
        documented += r.verdict == "discrepancy-documented";
        failures += r.verdict == "fail";
    }
    std::cerr << "# " << reports.size() << " checks: " << passes << " pass, " << documented
              << " discrepancy-documented, " << failures << " fail\n";
    return failures == 0 ? 0 : 1;
}

int cmd_sample(int n, int r, int count, uint64_t seed) {
    for (int i = 0; i < count; ++i) {
        SubspaceFrame f = sample_subspace(n, r, seed, static_cast<uint64_t>(i));
        std::cout << "{\"index\":" << i << ",\"seed\":" << seed << ",\"frame\":[";
        for (int c = 0; c < f.rank(); ++c) {
            if (c) std::cout << ",";
            std::cout << "[";
            for (int k = 0; k < f.ambient_dim(); ++k) {
                if (k) std::cout << ",";
                std::cout << format_g17(f.basis()(k, c));
            }
            std::cout << "]";
        }
        std::cout << "]}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for quermassintegral and mean curvature"
                 " integral identities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a catalog identity by id");
    std::string formula_id, eval_body;
    double eval_rho = 0.0;
    IntFlags eval_flags;
    eval->add_option("formula-id", formula_id, "catalog id, e.g. thm-1.1 or eq-2.5")->required();
    eval_flags.attach(eval, {"n", "r", "l", "i", "q", "s", "t"});
    eval->add_option("--body", eval_body, "body spec file enabling numeric evaluation");
    eval->add_option("--rho", eval_rho, "parallel distance for numeric evaluation");

    // body
    auto* bodyc = app.add_subcommand("body", "compute quantities of a support body");
    std::string quantity, spec_path, dir, axes, body_out;
    int body_i = 0, body_dim = 0, body_rank = 0;
    double body_rho = 0.0;
    uint64_t body_seed = 0;
    bool all_widths = false;
    bodyc->add_option("quantity", quantity, "mci | volume | width | project | parallel")
        ->required();
    bodyc->add_option("spec", spec_path, "body spec file")->required();
    bodyc->add_option("--i", body_i, "mean curvature integral index");
    bodyc->add_option("--dim", body_dim, "ambient dimension for dimension-free specs");
    bodyc->add_option("--rho", body_rho, "parallel distance");
    bodyc->add_option("--r", body_rank, "projection rank");
    bodyc->add_option("--axes", axes, "comma-separated coordinate axes for the frame");
    bodyc->add_option("--seed", body_seed, "random frame seed");
    bodyc->add_option("--dir", dir, "direction for width");
    bodyc->add_flag("--all", all_widths, "scan widths over the validation grid");
    bodyc->add_option("--out", body_out, "write derived body specs here");

    // verify
    auto* verifyc = app.add_subcommand("verify", "run a check or a suite");
    std::string check_id, verify_body, out_path, csv_path;
    IntFlags verify_flags;
    double verify_rho = 0.0, verify_radius = 1.0;
    uint64_t samples = 20000, seed = 20240817;
    int workers = default_workers(), n_max = 8;
    verifyc->add_option("id", check_id, "check id or suite id")->required();
    verify_flags.attach(verifyc, {"n", "r", "l", "i", "q", "s", "t"});
    verifyc->add_option("--body", verify_body, "body spec file");
    auto* rho_opt = verifyc->add_option("--rho", verify_rho, "parallel distance");
    auto* radius_opt = verifyc->add_option("--radius", verify_radius, "fixture radius");
    verifyc->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();
    verifyc->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    verifyc->add_option("--workers", workers, "worker threads");
    verifyc->add_option("--n-max", n_max, "sweep bound for the exact checks")
        ->capture_default_str();
    verifyc->add_option("--out", out_path, "JSONL report path");
    verifyc->add_option("--csv", csv_path, "CSV summary path");

    // sample
    auto* samplec = app.add_subcommand("sample", "dump random subspace frames");
    int sn = 3, sr = 2, scount = 10;
    uint64_t sseed = 0;
    samplec->add_option("--n", sn, "ambient dimension")->required();
    samplec->add_option("--r", sr, "rank")->required();
    samplec->add_option("--count", scount, "number of frames")->capture_default_str();
    samplec->add_option("--seed", sseed, "seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    echo_invocation(argc, argv);
    try {
        if (eval->parsed()) return cmd_eval(formula_id, eval_flags, eval_body, eval_rho, format);
        if (bodyc->parsed())
            return cmd_body(bodyc, quantity, spec_path, body_i, body_dim, body_rho, body_rank,
                            axes, body_seed, all_widths, dir, body_out, format);
        if (verifyc->parsed())
            return cmd_verify(check_id, verify_flags, verify_body, verify_rho, verify_radius,
                              rho_opt->count() > 0, radius_opt->count() > 0, samples, seed,
                              workers, n_max, out_path, csv_path);
        if (samplec->parsed()) return cmd_sample(sn, sr, scount, sseed);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
