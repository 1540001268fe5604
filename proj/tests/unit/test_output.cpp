/// @file test_output.cpp
/// @brief CSV/JSON writers and trajectory import

#include "ctpmirror/errors.hpp"
#include "ctpmirror/output.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ctpm;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
	const auto dir = fs::temp_directory_path() / "ctpm_output_test";
	fs::create_directories(dir);
	return dir / name;
}

std::string slurp(const fs::path& p)
{
	std::ifstream in(p);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

} // namespace

TEST_CASE("numbers round-trip")
{
	for (double x : {0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, 0.0})
	{
		CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
	}
}

TEST_CASE("csv layout")
{
	CsvTable t({"t", "x"});
	t.comment("units: natural");
	t.row({0.0, 0.5});
	t.row({0.25, -1.0});
	CHECK(t.str() == "# units: natural\nt,x\n0,0.5\n0.25,-1\n");
	CHECK_THROWS(t.row({1.0}));
}

TEST_CASE("atomic writes create directories and leave no temporaries")
{
	const auto path = scratch("nested/deeper/table.csv");
	fs::remove_all(path.parent_path());
	write_atomic(path, "a,b\n");
	CHECK(slurp(path) == "a,b\n");
	write_atomic(path, "c,d\n");
	CHECK(slurp(path) == "c,d\n");
	std::size_t entries = 0;
	for ([[maybe_unused]] const auto& e : fs::directory_iterator(path.parent_path()))
	{
		++entries;
	}
	CHECK(entries == 1);
	CHECK_THROWS_AS(write_atomic("/proc/ctpm_forbidden/x.csv", "x"), IoError);
}

TEST_CASE("trajectory import")
{
	const auto path = scratch("traj.csv");
	write_atomic(path, "# comment\nt,x,v\n0,0,1\n0.5,0.5,1\n1,1,1\n");
	const auto traj = read_trajectory_csv(path);
	CHECK(traj.size() == 3);
	CHECK(traj.dt == doctest::Approx(0.5));
	CHECK(traj.x[2] == 1.0);
	CHECK(traj.v.size() == 3);

	write_atomic(path, "0,0\n0.5,1\n1.5,2\n");
	CHECK_THROWS_AS(read_trajectory_csv(path), DomainError);
	write_atomic(path, "0,0\n0.5,abc\n");
	CHECK_THROWS_AS(read_trajectory_csv(path), DomainError);
	CHECK_THROWS_AS(read_trajectory_csv(scratch("missing.csv")), IoError);
}
