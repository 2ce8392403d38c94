#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fpsp/functions.hpp"
#include "fpsp/incidence.hpp"

namespace fpsp {

// All formats: first content line `p=<modulus>`, then one record per line.
// Blank lines and `#` comments are ignored. Errors carry the line number.

/// One element per line, strictly increasing.
FSet read_set(std::istream& in);
FSet read_set_file(const std::filesystem::path& path);
void write_set(std::ostream& out, const FSet& s);
void write_set_file(const std::filesystem::path& path, const FSet& s);

/// p-1 lines `x value`, each x in 1..p-1 exactly once.
FnTable read_fn(std::istream& in);
FnTable read_fn_file(const std::filesystem::path& path);
void write_fn(std::ostream& out, const FnTable& f);

/// `x y z` per line.
std::pair<PrimeField, std::vector<Point3>> read_points(std::istream& in);
std::pair<PrimeField, std::vector<Point3>> read_points_file(const std::filesystem::path& path);
void write_points(std::ostream& out, const PrimeField& F, const std::vector<Point3>& pts);

/// `a b c d` per line, plane aX + bY + cZ + d = 0.
std::pair<PrimeField, std::vector<Plane3>> read_planes(std::istream& in);
std::pair<PrimeField, std::vector<Plane3>> read_planes_file(const std::filesystem::path& path);
void write_planes(std::ostream& out, const PrimeField& F, const std::vector<Plane3>& planes);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fpsp
