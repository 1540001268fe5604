/// @file output.cpp
/// @brief CSV/JSON writers and trajectory import

#include "ctpmirror/output.hpp"

#include "ctpmirror/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ctpm {

std::string format_number(double x)
{
	if (std::isnan(x))
	{
		return "nan";
	}
	if (std::isinf(x))
	{
		return x > 0 ? "inf" : "-inf";
	}
	char buf[64];
	const auto res = std::to_chars(buf, buf + sizeof(buf), x);
	return std::string(buf, res.ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& content)
{
	std::error_code ec;
	if (path.has_parent_path())
	{
		std::filesystem::create_directories(path.parent_path(), ec);
		if (ec)
		{
			throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
		}
	}
	auto tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
		if (!out)
		{
			throw IoError("cannot open '" + tmp.string() + "' for writing");
		}
		out << content;
		out.flush();
		if (!out)
		{
			throw IoError("write to '" + tmp.string() + "' failed");
		}
	}
	std::filesystem::rename(tmp, path, ec);
	if (ec)
	{
		std::filesystem::remove(tmp, ec);
		throw IoError("cannot move output into place at '" + path.string() + "'");
	}
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::comment(const std::string& line)
{
	comments_.push_back(line);
}

void CsvTable::row(const std::vector<double>& values)
{
	if (values.size() != header_.size())
	{
		throw IoError("CSV row width does not match the header");
	}
	for (std::size_t i = 0; i < values.size(); ++i)
	{
		if (i > 0)
		{
			body_ += ',';
		}
		body_ += format_number(values[i]);
	}
	body_ += '\n';
}

std::string CsvTable::str() const
{
	std::string out;
	for (const auto& c : comments_)
	{
		out += "# " + c + '\n';
	}
	for (std::size_t i = 0; i < header_.size(); ++i)
	{
		if (i > 0)
		{
			out += ',';
		}
		out += header_[i];
	}
	out += '\n';
	return out + body_;
}

void CsvTable::write(const std::filesystem::path& path) const
{
	write_atomic(path, str());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc)
{
	write_atomic(path, doc.dump(2) + '\n');
}

Trajectory<double> read_trajectory_csv(const std::filesystem::path& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw IoError("cannot open trajectory file '" + path.string() + "'");
	}
	std::vector<double> t, x, v;
	std::string line;
	std::size_t line_no = 0;
	bool header_seen = false;
	while (std::getline(in, line))
	{
		++line_no;
		if (line.empty() || line[0] == '#')
		{
			continue;
		}
		std::vector<double> fields;
		std::stringstream row(line);
		std::string cell;
		bool numeric = true;
		while (std::getline(row, cell, ','))
		{
			double value = 0;
			const char* first = cell.data();
			const char* last = cell.data() + cell.size();
			while (first < last && *first == ' ')
			{
				++first;
			}
			const auto res = std::from_chars(first, last, value);
			if (res.ec != std::errc() || res.ptr != last)
			{
				numeric = false;
				break;
			}
			fields.push_back(value);
		}
		if (!numeric)
		{
			if (t.empty() && !header_seen)
			{
				header_seen = true;
				continue;
			}
			throw DomainError("non-numeric entry on line " + std::to_string(line_no) + " of '" + path.string() + "'");
		}
		if (fields.size() != 2 && fields.size() != 3)
		{
			throw DomainError("line " + std::to_string(line_no) + " of '" + path.string() + "' needs columns t,x[,v]");
		}
		if (!t.empty() && (fields.size() == 3) != !v.empty())
		{
			throw DomainError("inconsistent column count on line " + std::to_string(line_no));
		}
		t.push_back(fields[0]);
		x.push_back(fields[1]);
		if (fields.size() == 3)
		{
			v.push_back(fields[2]);
		}
	}
	if (t.size() < 2)
	{
		throw DomainError("trajectory file '" + path.string() + "' holds fewer than two samples");
	}
	const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
	for (std::size_t i = 1; i < t.size(); ++i)
	{
		if (std::abs(t[i] - t[i - 1] - dt) > 1e-9 * std::max(dt, 1e-300) + 1e-12 * std::abs(t[i]))
		{
			throw DomainError("trajectory file '" + path.string() + "' is not on a uniform grid");
		}
	}
	Trajectory<double> traj;
	traj.t0 = t.front();
	traj.dt = dt;
	traj.x = std::move(x);
	traj.v = std::move(v);
	traj.validate();
	return traj;
}

} // namespace ctpm
