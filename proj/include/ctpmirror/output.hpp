/// @file output.hpp
/// @brief Atomic CSV and JSON writers

#pragma once

#include "ctpmirror/trajectory.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace ctpm {

/// Shortest round-trip decimal representation.
std::string format_number(double x);

/// Writes to a sibling temporary file and renames it over `path`. Parent
/// directories are created. Failures raise IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Table with a header row; optional leading '#' comment lines carry units and the
/// effective configuration.
class CsvTable
{
public:
	explicit CsvTable(std::vector<std::string> header);

	void comment(const std::string& line);
	void row(const std::vector<double>& values);
	std::string str() const;
	void write(const std::filesystem::path& path) const;

private:
	std::vector<std::string> header_;
	std::vector<std::string> comments_;
	std::string body_;
};

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

/// Reads a uniformly sampled trajectory from CSV with columns t, x and optionally v.
/// Lines starting with '#' and a non-numeric header row are skipped. A missing file
/// raises IoError; malformed rows or a non-uniform grid raise DomainError.
Trajectory<double> read_trajectory_csv(const std::filesystem::path& path);

} // namespace ctpm
