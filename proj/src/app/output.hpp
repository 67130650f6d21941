#pragma once

#include "vortexfield/geom.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/optimize.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace vortexfield::app {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal, `inf` / `-inf` for infinities. Throws on NaN.
std::string format_number(double v);

/// JSON number, or the string "inf" / "-inf". Throws on NaN.
nlohmann::ordered_json json_number(double v);

/// Creates `dir` if needed and checks that it accepts files.
void prepare_output_dir(const std::filesystem::path& dir);

/// Writes `text` to `path` in one go; throws OutputError on failure.
void write_file(const std::filesystem::path& path, const std::string& text);

std::string landscape_csv(const LandscapeGrid& g);
std::string field_csv(const std::vector<VectorFieldSample>& samples);
std::string dump(const nlohmann::ordered_json& j);

struct Marker {
    double x = 0.0;
    double y = 0.0;
};

/// Heatmap of W over (s1, s2); infinite cells in a sentinel colour.
std::string landscape_svg(const LandscapeGrid& g);

/// Arrows for m at every sample over a disc shaded by the angle of m, the
/// domain outline, and the vortex markers.
std::string field_svg(const ConformalDomain& domain, const std::vector<VectorFieldSample>& samples,
                      const std::vector<Marker>& vortices);

}  // namespace vortexfield::app
