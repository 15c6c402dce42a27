// Command-line harness: identity catalog, quantization pipelines, reports.
// Exit codes: 0 all checks pass, 1 check failure, 2 input/config error.
#include <CLI11.hpp>

#include "phasekit/catalog.hpp"
#include "phasekit/io.hpp"
#include "phasekit/numerics.hpp"
#include "phasekit/suite.hpp"

#include <cstdlib>
#include <iostream>

using namespace pk;
using cd = std::complex<double>;

namespace {

struct CliState {
	SuiteConfig cfg;
	std::string out_dir;
	std::string filter;
	std::vector<std::string> inputs;
	double tol_plancherel = -1; // <0: pick by fixture kind
};

std::string out_path(const CliState &st, const std::string &name) {
	return st.out_dir + "/" + name;
}

ordered_json config_json(const CliState &st) {
	return ordered_json{{"grid_n", st.cfg.grid_n}, {"extent", st.cfg.extent},
	                    {"hbar", st.cfg.hbar},     {"nu", st.cfg.nu},
	                    {"seed", st.cfg.seed}};
}

int emit_report(const CliState &st, const std::string &cmd,
                const std::vector<CheckRecord> &recs,
                ordered_json extra = ordered_json::object()) {
	ordered_json reports = ordered_json::array();
	for (const auto &r : recs) reports.push_back(to_json(r));
	ordered_json doc{{"command", cmd}, {"config", config_json(st)}, {"reports", reports}};
	for (auto &[k, v] : extra.items()) doc[k] = v;
	const std::string text = doc.dump(2) + "\n";
	write_file(out_path(st, cmd + "_report.json"), text);
	std::cout << text;
	return all_pass(recs) ? 0 : 1;
}

double tolerance(const CliState &st, const std::string &name) {
	auto tol = default_tolerances(st.cfg.grid_n);
	auto it = st.cfg.tol.find(name);
	return it != st.cfg.tol.end() ? it->second : tol.at(name);
}

CheckRecord make_check(const CliState &st, const std::string &name, double value) {
	const double t = tolerance(st, name);
	return {name, value, t, value <= t};
}

double rel_l2(const GridFunction2D &a, const GridFunction2D &b) {
	GridFunction2D d{a.grid, a.values - b.values};
	return d.l2() / b.l2();
}

int cmd_axioms(const CliState &st) {
	ordered_json identities = ordered_json::array();
	std::string first_bad;
	for (const auto &id : catalog_ids()) {
		if (!st.filter.empty() && id != st.filter) continue;
		IdentityReport r = verify_identity(id);
		identities.push_back(ordered_json{{"id", r.id},
		                                  {"statement", r.statement},
		                                  {"holds", r.holds},
		                                  {"expected_holds", r.expected_holds},
		                                  {"witness", r.witness}});
		if (r.holds != r.expected_holds && first_bad.empty()) first_bad = r.id;
	}
	if (!st.filter.empty() && identities.empty())
		throw std::runtime_error("no catalog identity named " + st.filter);
	ordered_json doc{{"command", "axioms"}, {"identities", identities}};
	const std::string text = doc.dump(2) + "\n";
	write_file(out_path(st, "axioms_report.json"), text);
	std::cout << text;
	if (!first_bad.empty()) {
		std::cerr << "identity mismatch: " << first_bad << "\n";
		return 1;
	}
	return 0;
}

GridFunction2D load_or_fixture(const CliState &st) {
	if (!st.inputs.empty()) return grid_from_csv(read_file(st.inputs[0]));
	return gauss2({st.cfg.grid_n, st.cfg.extent});
}

int cmd_quantize(const CliState &st) {
	GridFunction2D f = load_or_fixture(st);
	OperatorKernel K = weyl_quantize(f, st.cfg.nu);
	write_file(out_path(st, "kernel.csv"), to_csv(K));
	std::vector<CheckRecord> recs{
	    make_check(st, "weyl_round_trip", rel_l2(wigner_recover(K), f))};
	return emit_report(st, "quantize", recs,
	                   {{"trace", {std::real(operator_trace(K)), std::imag(operator_trace(K))}}});
}

int cmd_recover(const CliState &st) {
	std::vector<CheckRecord> recs;
	GridFunction2D f = GridFunction2D::zero({st.cfg.grid_n, st.cfg.extent});
	if (!st.inputs.empty()) {
		OperatorKernel K = kernel_from_csv(read_file(st.inputs[0]));
		f = wigner_recover(K);
	} else {
		GridFunction2D fix = gauss2({st.cfg.grid_n, st.cfg.extent});
		f = wigner_recover(weyl_quantize(fix, st.cfg.nu));
		recs.push_back(make_check(st, "weyl_round_trip", rel_l2(f, fix)));
	}
	write_file(out_path(st, "recovered.csv"), to_csv(f));
	return emit_report(st, "recover", recs);
}

int cmd_wigner(const CliState &st) {
	const int n = st.cfg.grid_n;
	const double hbar = st.cfg.hbar;
	// the hermite states have width sqrt(hbar); scale the window with it
	const double L = st.cfg.extent * std::sqrt(hbar);
	WaveFunction1D xi0 = hermite0(n, L, hbar), xi1 = hermite1(n, L, hbar);
	GridFunction2D W0 = wigner_distribution(xi0, xi0, hbar);
	GridFunction2D W1 = wigner_distribution(xi1, xi1, hbar);
	write_file(out_path(st, "wigner_ground.csv"), to_csv(W0));
	write_file(out_path(st, "wigner_excited.csv"), to_csv(W1));
	Grid2D zg = Grid2D{n, L}.conjugate(hbar);
	GridFunction2D W0x = GridFunction2D::zero(zg);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			const double r2 = zg.x(i) * zg.x(i) + zg.x(j) * zg.x(j);
			W0x.values(i, j) = 2.0 * std::exp(-r2 / hbar);
		}
	std::vector<CheckRecord> recs{
	    make_check(st, "wigner_ground", rel_l2(W0, W0x)),
	    make_check(st, "wigner_reality", W0.values.imag().cwiseAbs().maxCoeff()),
	    make_check(st, "wigner_excited_min", W1.values.real().minCoeff())};
	return emit_report(st, "wigner", recs);
}

int cmd_star(const CliState &st) {
	const Grid2D g0{st.cfg.grid_n, st.cfg.extent};
	GridFunction2D F = st.inputs.size() > 0 ? grid_from_csv(read_file(st.inputs[0]))
	                                        : gauss2(g0);
	GridFunction2D G = st.inputs.size() > 1 ? grid_from_csv(read_file(st.inputs[1]))
	                                        : gauss2(g0, 0.8, 0.7, -0.4);
	const double hbar = st.cfg.hbar;
	GridFunction2D S = moyal_star(F, G, hbar);
	write_file(out_path(st, "star.csv"), to_csv(S));
	// duality: the transform intertwines twisted convolution and the star
	GridFunction2D lhs = fourier2d(twisted_convolution(F, G, 1.0 / hbar), hbar, -1);
	GridFunction2D rhs =
	    moyal_star(fourier2d(F, hbar, -1), fourier2d(G, hbar, -1), hbar);
	std::vector<CheckRecord> recs{make_check(st, "moyal_duality", rel_l2(lhs, rhs))};
	GridFunction2D unit{g0, Eigen::MatrixXcd::Constant(g0.n, g0.n,
	                                                   1.0 / (2.0 * M_PI * hbar))};
	recs.push_back(make_check(st, "moyal_unit", rel_l2(moyal_star(unit, F, hbar), F)));
	return emit_report(st, "star", recs);
}

int cmd_plancherel(const CliState &st) {
	const bool fixture = st.inputs.empty();
	GridFunction2D f = load_or_fixture(st);
	PlancherelReport p = plancherel_residual(f, st.cfg.nu);
	double t = st.tol_plancherel >= 0 ? st.tol_plancherel : (fixture ? 1e-8 : 1e-6);
	CheckRecord r{"plancherel", p.value, t, p.value <= t};
	return emit_report(st, "plancherel", {r},
	                   {{"relative", p.relative}});
}

int cmd_suite(const CliState &st) {
	return emit_report(st, "suite", run_suite(st.cfg));
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"projective phase-space toolkit"};
	app.require_subcommand(1);
	CliState st;
	const char *env = std::getenv("PK_OUT_DIR");
	st.out_dir = env && *env ? env : ".";

	auto add_common = [&](CLI::App *sub, bool with_inputs) {
		sub->add_option("--grid-n", st.cfg.grid_n, "grid points per axis (power of two)");
		sub->add_option("--extent", st.cfg.extent, "domain extent per axis");
		sub->add_option("--hbar", st.cfg.hbar, "Planck parameter");
		sub->add_option("--nu", st.cfg.nu, "representation parameter");
		sub->add_option("--seed", st.cfg.seed, "random fixture seed");
		sub->add_option("--out", st.out_dir, "output directory (default $PK_OUT_DIR)");
		for (const auto &[name, unused] : default_tolerances(64))
			sub->add_option_function<double>(
			    "--tol." + name, [&st, name = name](double v) { st.cfg.tol[name] = v; },
			    "tolerance override");
		sub->add_option_function<double>(
		    "--tol.plancherel", [&st](double v) { st.tol_plancherel = v; },
		    "tolerance override");
		if (with_inputs) sub->add_option("inputs", st.inputs, "input CSV files");
	};

	CLI::App *axioms = app.add_subcommand("axioms", "verify the identity catalog");
	axioms->add_option("--filter", st.filter, "run a single identity by name");
	axioms->add_option("--out", st.out_dir, "output directory");
	CLI::App *quantize = app.add_subcommand("quantize", "Weyl-quantize a grid function");
	CLI::App *recover = app.add_subcommand("recover", "recover a symbol from a kernel");
	CLI::App *wigner = app.add_subcommand("wigner", "Wigner distributions of the fixtures");
	CLI::App *star = app.add_subcommand("star", "Moyal star product");
	CLI::App *plancherel = app.add_subcommand("plancherel", "Plancherel residual");
	CLI::App *suite = app.add_subcommand("suite", "full verification suite");
	add_common(quantize, true);
	add_common(recover, true);
	add_common(wigner, false);
	add_common(star, true);
	add_common(plancherel, true);
	add_common(suite, false);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		if (e.get_exit_code() == 0) return app.exit(e); // --help
		app.exit(e);
		return 2;
	}
	try {
		st.cfg.validate();
		if (axioms->parsed()) return cmd_axioms(st);
		if (quantize->parsed()) return cmd_quantize(st);
		if (recover->parsed()) return cmd_recover(st);
		if (wigner->parsed()) return cmd_wigner(st);
		if (star->parsed()) return cmd_star(st);
		if (plancherel->parsed()) return cmd_plancherel(st);
		if (suite->parsed()) return cmd_suite(st);
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
