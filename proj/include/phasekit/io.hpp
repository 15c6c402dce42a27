#pragma once
// CSV / JSON serialization.  All numbers are written with enough digits to
// round-trip; output is deterministic byte-for-byte for fixed inputs.

#include "phasekit/grid.hpp"

#include <json.hpp>

#include <string>

namespace pk {

using ordered_json = nlohmann::ordered_json;

struct CheckRecord {
	std::string check;
	double value = 0;
	double tolerance = 0;
	bool pass = false;
};

ordered_json to_json(const CheckRecord &r);

// wave/grid CSV: header line "n,extent", one line of values, then rows
// "index,re,im" (grid functions use the row-major flat index i*n+j)
std::string to_csv(const WaveFunction1D &w);
std::string to_csv(const GridFunction2D &f);
// kernel CSV: metadata line "n,extent,nu" + values, then rows "index,re,im"
std::string to_csv(const OperatorKernel &k);

WaveFunction1D wave_from_csv(const std::string &text);
GridFunction2D grid_from_csv(const std::string &text);
OperatorKernel kernel_from_csv(const std::string &text);

ordered_json to_json(const WaveFunction1D &w);
ordered_json to_json(const GridFunction2D &f);

std::string read_file(const std::string &path);    // throws std::runtime_error
void write_file(const std::string &path, const std::string &text);

} // namespace pk
