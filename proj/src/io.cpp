#include "phasekit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pk {

namespace {

std::string num(double v) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

void append_rows(std::string &out, const std::complex<double> *data, long count) {
	for (long i = 0; i < count; ++i) {
		out += std::to_string(i);
		out += ',';
		out += num(data[i].real());
		out += ',';
		out += num(data[i].imag());
		out += '\n';
	}
}

struct CsvBody {
	std::vector<double> header;
	std::vector<std::complex<double>> data;
};

CsvBody parse_csv(const std::string &text, const std::string &header_names,
                  size_t nfields) {
	std::istringstream in(text);
	std::string line;
	if (!std::getline(in, line) || line != header_names)
		throw std::runtime_error("bad csv header, expected '" + header_names + "'");
	if (!std::getline(in, line)) throw std::runtime_error("missing csv metadata row");
	CsvBody b;
	std::istringstream meta(line);
	std::string cell;
	while (std::getline(meta, cell, ',')) b.header.push_back(std::stod(cell));
	if (b.header.size() != nfields) throw std::runtime_error("bad csv metadata row");
	long expect = 0;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		std::istringstream row(line);
		std::string si, sr, sm;
		if (!std::getline(row, si, ',') || !std::getline(row, sr, ',') ||
		    !std::getline(row, sm, ','))
			throw std::runtime_error("bad csv row: " + line);
		if (std::stol(si) != expect++) throw std::runtime_error("csv rows out of order");
		b.data.emplace_back(std::stod(sr), std::stod(sm));
	}
	return b;
}

} // namespace

ordered_json to_json(const CheckRecord &r) {
	return ordered_json{
	    {"check", r.check}, {"value", r.value}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

std::string to_csv(const WaveFunction1D &w) {
	std::string out = "n,extent\n";
	out += std::to_string(w.n) + ',' + num(w.extent) + '\n';
	append_rows(out, w.values.data(), w.n);
	return out;
}

std::string to_csv(const GridFunction2D &f) {
	std::string out = "n,extent\n";
	out += std::to_string(f.grid.n) + ',' + num(f.grid.extent) + '\n';
	// row-major flat index i*n+j; Eigen stores column-major, emit explicitly
	std::vector<std::complex<double>> flat(size_t(f.grid.n) * f.grid.n);
	for (int i = 0; i < f.grid.n; ++i)
		for (int j = 0; j < f.grid.n; ++j) flat[size_t(i) * f.grid.n + j] = f.values(i, j);
	append_rows(out, flat.data(), long(flat.size()));
	return out;
}

std::string to_csv(const OperatorKernel &k) {
	std::string out = "n,extent,nu\n";
	out += std::to_string(k.n) + ',' + num(k.extent) + ',' + num(k.nu) + '\n';
	std::vector<std::complex<double>> flat(size_t(k.n) * k.n);
	for (int i = 0; i < k.n; ++i)
		for (int j = 0; j < k.n; ++j) flat[size_t(i) * k.n + j] = k.values(i, j);
	append_rows(out, flat.data(), long(flat.size()));
	return out;
}

WaveFunction1D wave_from_csv(const std::string &text) {
	CsvBody b = parse_csv(text, "n,extent", 2);
	const int n = int(b.header[0]);
	if (long(b.data.size()) != n) throw std::runtime_error("csv row count != n");
	WaveFunction1D w{n, b.header[1], Eigen::VectorXcd(n)};
	for (int j = 0; j < n; ++j) w.values[j] = b.data[j];
	return w;
}

GridFunction2D grid_from_csv(const std::string &text) {
	CsvBody b = parse_csv(text, "n,extent", 2);
	const int n = int(b.header[0]);
	if (long(b.data.size()) != long(n) * n) throw std::runtime_error("csv row count != n*n");
	GridFunction2D f = GridFunction2D::zero({n, b.header[1]});
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) f.values(i, j) = b.data[size_t(i) * n + j];
	return f;
}

OperatorKernel kernel_from_csv(const std::string &text) {
	CsvBody b = parse_csv(text, "n,extent,nu", 3);
	const int n = int(b.header[0]);
	if (long(b.data.size()) != long(n) * n) throw std::runtime_error("csv row count != n*n");
	OperatorKernel k{n, b.header[1], b.header[2], Eigen::MatrixXcd(n, n)};
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) k.values(i, j) = b.data[size_t(i) * n + j];
	return k;
}

ordered_json to_json(const WaveFunction1D &w) {
	ordered_json rows = ordered_json::array();
	for (int j = 0; j < w.n; ++j)
		rows.push_back({w.values[j].real(), w.values[j].imag()});
	return ordered_json{{"n", w.n}, {"extent", w.extent}, {"values", rows}};
}

ordered_json to_json(const GridFunction2D &f) {
	ordered_json rows = ordered_json::array();
	for (int i = 0; i < f.grid.n; ++i)
		for (int j = 0; j < f.grid.n; ++j)
			rows.push_back({f.values(i, j).real(), f.values(i, j).imag()});
	return ordered_json{{"n", f.grid.n}, {"extent", f.grid.extent}, {"values", rows}};
}

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::runtime_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot write " + path);
	out << text;
}

} // namespace pk
