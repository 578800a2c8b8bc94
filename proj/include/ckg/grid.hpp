#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ckg/errors.hpp"

namespace ckg {

// One rectilinear grid axis.  max() is derived from (min, step, count).
struct Axis {
    std::string name;
    double min = 0.0;
    double step = 0.0;
    std::size_t count = 0;

    double max() const { return min + step * static_cast<double>(count - 1); }
    double coord(std::size_t i) const {
        return min + step * static_cast<double>(i);
    }
    static Axis from_range(std::string name, double min, double max,
                           double step);
};

// Scalar field samples on a rectilinear grid, row-major with the last axis
// fastest.  Boundary layers of residual fields are marked NaN.
class GridField {
public:
    explicit GridField(std::vector<Axis> axes);

    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t dim() const { return axes_.size(); }
    std::size_t size() const { return values_.size(); }

    double& operator[](std::size_t linear) { return values_[linear]; }
    double operator[](std::size_t linear) const { return values_[linear]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    std::size_t linear_index(const std::vector<std::size_t>& idx) const;
    void unravel(std::size_t linear, std::vector<std::size_t>& idx) const;
    void coords_at(std::size_t linear, std::vector<double>& out) const;

    // True when every index is at least `margin` away from both ends.
    bool is_interior(const std::vector<std::size_t>& idx,
                     std::size_t margin = 1) const;

    // Fill from a function of the grid coordinates.
    void fill(const std::function<double(const std::vector<double>&)>& f);

private:
    std::vector<Axis> axes_;
    std::vector<std::size_t> strides_;
    std::vector<double> values_;
};

struct ResidualNorms {
    double max_abs = 0.0;
    double rms = 0.0;
};

// Max-abs and RMS over the marked interior (non-NaN samples).
ResidualNorms fd_residual_norm(const GridField& residual);

// CSV: header row with axis names then "value", one row per grid point.
void write_csv(const GridField& field, std::ostream& os);
GridField read_csv(std::istream& is);

// JSON header describing the axes (schema_version "1").
std::string axes_json(const GridField& field);

} // namespace ckg
