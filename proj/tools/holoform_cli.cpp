// Command-line front end: construct, verify, compute, and certify.
// Every 0/1 exit emits a deterministic certificate on standard output;
// exit 2 means a usage or input error (message on standard error).

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "holoform/cohomology.hpp"
#include "holoform/curvature.hpp"
#include "holoform/sectionio.hpp"
#include "holoform/structures.hpp"

using namespace holoform;

namespace {

constexpr const char* kToolchainVersion = "holoform 1.0.0";

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string chart_str(const ChartId& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out;
}

Certificate base_cert(const std::string& command) {
    Certificate c;
    c.add("command", command);
    return c;
}

void finish_cert(Certificate& c, const std::string& verdict, unsigned long long seed) {
    c.add("verdict", verdict);
    c.add("seed", std::to_string(seed));
    c.add("toolchain_version", kToolchainVersion);
    std::cout << write_certificate(c);
}

Section load_section(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open section file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_section(buf.str());
}

void save_section(const Section& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << write_section(s);
}

void report_body(Certificate& c, const StructureReport& r) {
    c.add("degree", std::to_string(r.degree));
    c.add("model_dim", std::to_string(r.model_dim));
    c.add("parity_ok", r.parity_ok ? "yes" : "no");
    c.add("bundle_root_check", r.bundle_root_check ? "yes" : "no");
    if (!r.reason.empty()) {
        c.add("reason", r.reason);
        if (!r.witness.empty()) c.add("witness", r.witness);
        if (!r.fail_chart.empty()) c.add("fail_chart", chart_str(r.fail_chart));
    }
    for (const auto& [cid, v] : r.top_form_constants)
        c.body.push_back("chart " + chart_str(cid) + " constant " + v.str());
}

int structure_verify(const std::string& command, const std::string& file, bool symplectic) {
    Section s = load_section(file);
    Certificate c = base_cert(command);
    c.add("file", file);
    c.add("model", model_to_string(s.model));
    StructureReport r = symplectic ? is_s_symplectic(s) : is_p_contact(s);
    report_body(c, r);
    finish_cert(c, r.ok() ? (symplectic ? "s-symplectic" : "p-contact") : "fails", 0);
    return r.ok() ? 0 : 1;
}

int emit_constructed(const std::string& command, Section& s, const std::string& out,
                     Certificate& c) {
    GluingCertificate g = glue_check(s);
    c.add("model", model_to_string(s.model));
    c.add("degree", std::to_string(s.degree));
    c.add("pairs_checked", std::to_string(g.pairs_checked));
    if (!out.empty()) {
        save_section(s, out);
        c.add("out", out);
    }
    finish_cert(c, g.verified ? "glue-verified" : "glue-failed", 0);
    return g.verified ? 0 : 1;
}

std::vector<double> load_numbers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open numeric file: " + path);
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw std::invalid_argument("malformed numeric file: " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for line-bundle-valued holomorphic contact and "
                 "symplectic structures on chart atlases"};
    app.require_subcommand(1);

    int exit_code = 0;

    // construct-pn
    {
        auto* cmd = app.add_subcommand("construct-pn",
                                       "Build the explicit p-contact section on P^n");
        auto n = std::make_shared<int>(3);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "projective dimension (n = 3 mod 4)")->required();
        cmd->add_option("--out", *out, "section output file");
        cmd->callback([n, out, &exit_code] {
            Section s = construct_pn(*n);
            Certificate c = base_cert("construct-pn");
            c.add("n", std::to_string(*n));
            exit_code = emit_constructed("construct-pn", s, *out, c);
        });
    }

    // verify / symplectic-verify
    for (bool symplectic : {false, true}) {
        std::string name = symplectic ? "symplectic-verify" : "verify";
        auto* cmd = app.add_subcommand(
            name, symplectic ? "Check the s-symplectic property of a section file"
                             : "Check the p-contact property of a section file");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file, "section file")->required();
        cmd->callback([name, file, symplectic, &exit_code] {
            exit_code = structure_verify(name, *file, symplectic);
        });
    }

    // product
    {
        auto* cmd = app.add_subcommand("product",
                                       "External product of a symplectic and a contact section");
        auto f1 = std::make_shared<std::string>(), f2 = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("left", *f1, "symplectic factor section file")->required();
        cmd->add_option("right", *f2, "contact factor section file")->required();
        cmd->add_option("--out", *out, "section output file");
        cmd->callback([f1, f2, out, &exit_code] {
            Section a = load_section(*f1), b = load_section(*f2);
            Section s = product_structure(a, b);
            Certificate c = base_cert("product");
            c.add("left", *f1);
            c.add("right", *f2);
            exit_code = emit_constructed("product", s, *out, c);
        });
    }

    // contact-power
    {
        auto* cmd = app.add_subcommand("contact-power",
                                       "Gamma := eta ^ (del eta)^l from a 1-contact section");
        auto file = std::make_shared<std::string>(), out = std::make_shared<std::string>();
        auto l = std::make_shared<int>(1);
        cmd->add_option("file", *file, "section file")->required();
        cmd->add_option("--l", *l, "power l >= 0")->required();
        cmd->add_option("--out", *out, "section output file");
        cmd->callback([file, l, out, &exit_code] {
            Section eta = load_section(*file);
            Section s = contact_power(eta, *l);
            Certificate c = base_cert("contact-power");
            c.add("file", *file);
            c.add("l", std::to_string(*l));
            exit_code = emit_constructed("contact-power", s, *out, c);
        });
    }

    // cohom-dim
    {
        auto* cmd = app.add_subcommand("cohom-dim",
                                       "dim H^{p,0}(P^n, O(k)) via the Euler contraction kernel");
        auto n = std::make_shared<int>(), p = std::make_shared<int>(), k = std::make_shared<int>();
        cmd->add_option("--n", *n, "projective dimension")->required();
        cmd->add_option("--p", *p, "form degree")->required();
        cmd->add_option("--k", *k, "bundle twist")->required();
        cmd->callback([n, p, k] {
            ZSpaceBasis b = zspace_basis(*n, *p, *k);
            Certificate c = base_cert("cohom-dim");
            c.add("n", std::to_string(*n));
            c.add("p", std::to_string(*p));
            c.add("k", std::to_string(*k));
            c.add("dimension", std::to_string(b.dimension()));
            finish_cert(c, "dimension " + std::to_string(b.dimension()), 0);
        });
    }

    // bott
    {
        auto* cmd = app.add_subcommand("bott",
                                       "Bott-type vanishing case for H^{p,q}(P^N, O(k))");
        auto p = std::make_shared<int>(), q = std::make_shared<int>();
        auto k = std::make_shared<int>(), N = std::make_shared<int>();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--N", *N, "ambient projective dimension")->required();
        cmd->callback([p, q, k, N, &exit_code] {
            VanishingStep s = bott_vanishing(*p, *q, *k, *N);
            Certificate c = base_cert("bott");
            c.add("p", std::to_string(*p));
            c.add("q", std::to_string(*q));
            c.add("k", std::to_string(*k));
            c.add("N", std::to_string(*N));
            c.body.push_back(s.space + " H^{" + std::to_string(s.p) + "," + std::to_string(s.q) +
                             "} O(" + std::to_string(s.twist) + ") " + s.justification + " | " +
                             s.detail);
            finish_cert(c, s.vanishes ? "vanishes" : "not_covered", 0);
            exit_code = s.vanishes ? 0 : 1;
        });
    }

    // hypersurface-cert
    {
        auto* cmd = app.add_subcommand(
            "hypersurface-cert",
            "Vanishing certificate for H^{p,0}(X, O_X(k)) on an odd-degree hypersurface");
        auto n = std::make_shared<int>(), d = std::make_shared<int>();
        cmd->add_option("--n", *n, "hypersurface dimension (n = 3 mod 4)")->required();
        cmd->add_option("--d", *d, "hypersurface degree (odd, 3 <= d <= n)")->required();
        cmd->callback([n, d, &exit_code] {
            VanishingCertificate v = hypersurface_certificate(*n, *d);
            Certificate c = base_cert("hypersurface-cert");
            c.add("n", std::to_string(*n));
            c.add("d", std::to_string(*d));
            c.add("target", v.target);
            if (v.verdict == VanishingCertificate::Rejected) c.add("reject_reason", v.reject_reason);
            for (const auto& s : v.steps)
                c.body.push_back(s.space + " H^{" + std::to_string(s.p) + "," +
                                 std::to_string(s.q) + "} O(" + std::to_string(s.twist) + ") " +
                                 s.justification + " | " + s.detail);
            const char* verdict = v.verdict == VanishingCertificate::Vanishes ? "vanishes"
                                  : v.verdict == VanishingCertificate::Rejected ? "rejected"
                                                                                : "not_covered";
            finish_cert(c, verdict, 0);
            exit_code = v.verdict == VanishingCertificate::Vanishes ? 0 : 1;
        });
    }

    // curvature
    {
        auto* cmd = app.add_subcommand(
            "curvature", "m-positivity of a curvature spectrum from a numeric file");
        auto file = std::make_shared<std::string>();
        auto m = std::make_shared<int>();
        cmd->add_option("--spectrum", *file, "whitespace-separated eigenvalues")->required();
        cmd->add_option("--m", *m, "number of eigenvalues to sum")->required();
        cmd->callback([file, m, &exit_code] {
            Spectrum spec{load_numbers(*file)};
            std::sort(spec.values.begin(), spec.values.end());
            bool pos = m_positive(spec, *m);
            Certificate c = base_cert("curvature");
            c.add("spectrum", *file);
            c.add("m", std::to_string(*m));
            for (double v : spec.values) c.body.push_back("eigenvalue " + fmt(v));
            finish_cert(c, pos ? "m-positive" : "not m-positive", 0);
            exit_code = pos ? 0 : 1;
        });
    }

    // rank
    {
        auto* cmd = app.add_subcommand(
            "rank", "Pointwise kernel rank of the contraction against a section");
        auto file = std::make_shared<std::string>();
        auto points = std::make_shared<int>(100);
        auto seed = std::make_shared<unsigned long long>(0);
        cmd->add_option("file", *file, "section file")->required();
        cmd->add_option("--points", *points, "sample point count");
        cmd->add_option("--seed", *seed, "sample seed");
        cmd->callback([file, points, seed] {
            Section s = load_section(*file);
            ChartId chart = base_chart(s.model);
            Certificate c = base_cert("rank");
            c.add("file", *file);
            c.add("model", model_to_string(s.model));
            c.add("points", std::to_string(*points));
            int rmin = s.model.dimension(), rmax = 0;
            auto pts = seeded_points(s.model.dimension(), *points, *seed);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                int r = kernel_rank_at(s, chart, pts[i]);
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
                c.body.push_back("point " + std::to_string(i) + " rank " + std::to_string(r));
            }
            finish_cert(c, "rank " + std::to_string(rmin) +
                               (rmin == rmax ? "" : ".." + std::to_string(rmax)),
                        *seed);
        });
    }

    // volume
    {
        auto* cmd = app.add_subcommand(
            "volume", "Volume-form density positivity at seeded sample points");
        auto file = std::make_shared<std::string>();
        auto weight = std::make_shared<std::string>("fubini-study");
        auto points = std::make_shared<int>(100);
        auto seed = std::make_shared<unsigned long long>(0);
        cmd->add_option("file", *file, "section file")->required();
        cmd->add_option("--weight", *weight, "flat or fubini-study")
            ->check(CLI::IsMember({"flat", "fubini-study"}));
        cmd->add_option("--points", *points, "sample point count");
        cmd->add_option("--seed", *seed, "sample seed");
        cmd->callback([file, weight, points, seed, &exit_code] {
            Section s = load_section(*file);
            WeightModel w = *weight == "flat" ? WeightModel::flat()
                                              : WeightModel::fubini_study(s.bundle.twists.at(0));
            Certificate c = base_cert("volume");
            c.add("file", *file);
            c.add("model", model_to_string(s.model));
            c.add("weight", w.str());
            c.add("points", std::to_string(*points));
            bool all_positive = true;
            auto pts = seeded_points(s.model.dimension(), *points, *seed);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                double d = volume_form_at(s, w, pts[i]);
                if (!(d > 0)) all_positive = false;
                c.body.push_back("point " + std::to_string(i) + " density " + fmt(d));
            }
            finish_cert(c, all_positive ? "positive" : "not positive", *seed);
            exit_code = all_positive ? 0 : 1;
        });
    }

    // spin-root
    {
        auto* cmd = app.add_subcommand(
            "spin-root", "Twist of the holomorphic square root of -K on P^n");
        auto n = std::make_shared<int>();
        cmd->add_option("--n", *n, "projective dimension")->required();
        cmd->callback([n, &exit_code] {
            auto k = spin_root_k(*n);
            Certificate c = base_cert("spin-root");
            c.add("n", std::to_string(*n));
            if (k) c.add("k", std::to_string(*k));
            finish_cert(c, k ? "square root exists" : "no holomorphic square root", 0);
            exit_code = k ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
