#include "ckg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ckg {

Axis Axis::from_range(std::string name, double min, double max, double step) {
    if (!(step > 0.0)) throw ShapeError("Axis: step must be > 0");
    if (!(max >= min)) throw ShapeError("Axis: max must be >= min");
    Axis a;
    a.name = std::move(name);
    a.min = min;
    a.step = step;
    a.count = static_cast<std::size_t>(std::llround((max - min) / step)) + 1;
    return a;
}

GridField::GridField(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw ShapeError("GridField: need at least one axis");
    std::size_t total = 1;
    for (const Axis& a : axes_) {
        if (a.count < 1) throw ShapeError("GridField: axis count must be >= 1");
        if (!(a.step > 0.0)) throw ShapeError("GridField: axis step must be > 0");
        total *= a.count;
    }
    strides_.assign(axes_.size(), 1);
    for (std::size_t k = axes_.size(); k-- > 1;) {
        strides_[k - 1] = strides_[k] * axes_[k].count;
    }
    values_.assign(total, 0.0);
}

std::size_t GridField::linear_index(const std::vector<std::size_t>& idx) const {
    std::size_t lin = 0;
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        lin += idx[k] * strides_[k];
    }
    return lin;
}

void GridField::unravel(std::size_t linear, std::vector<std::size_t>& idx) const {
    idx.resize(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        idx[k] = linear / strides_[k];
        linear %= strides_[k];
    }
}

void GridField::coords_at(std::size_t linear, std::vector<double>& out) const {
    out.resize(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        const std::size_t i = linear / strides_[k];
        linear %= strides_[k];
        out[k] = axes_[k].coord(i);
    }
}

bool GridField::is_interior(const std::vector<std::size_t>& idx,
                            std::size_t margin) const {
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        if (idx[k] < margin || idx[k] + margin >= axes_[k].count) return false;
    }
    return true;
}

void GridField::fill(const std::function<double(const std::vector<double>&)>& f) {
    std::vector<double> coords;
    for (std::size_t lin = 0; lin < values_.size(); ++lin) {
        coords_at(lin, coords);
        values_[lin] = f(coords);
    }
}

ResidualNorms fd_residual_norm(const GridField& residual) {
    double max_abs = 0.0;
    double sumsq = 0.0;
    std::size_t count = 0;
    for (double v : residual.values()) {
        if (std::isnan(v)) continue;
        max_abs = std::max(max_abs, std::fabs(v));
        sumsq += v * v;
        ++count;
    }
    if (count == 0) throw ShapeError("fd_residual_norm: empty interior");
    return {max_abs, std::sqrt(sumsq / static_cast<double>(count))};
}

void write_csv(const GridField& field, std::ostream& os) {
    for (const Axis& a : field.axes()) os << a.name << ',';
    os << "value\n";
    char buf[32];
    std::vector<double> coords;
    for (std::size_t lin = 0; lin < field.size(); ++lin) {
        field.coords_at(lin, coords);
        for (double c : coords) {
            std::snprintf(buf, sizeof buf, "%.17g", c);
            os << buf << ',';
        }
        std::snprintf(buf, sizeof buf, "%.17g", field[lin]);
        os << buf << '\n';
    }
}

GridField read_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw ShapeError("read_csv: empty input");
    std::vector<std::string> names;
    {
        std::stringstream ss(header);
        std::string tok;
        while (std::getline(ss, tok, ',')) names.push_back(tok);
    }
    if (names.size() < 2 || names.back() != "value") {
        throw ShapeError("read_csv: expected axis names then 'value'");
    }
    names.pop_back();
    const std::size_t dim = names.size();

    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(std::strtod(tok.c_str(), nullptr));
        if (row.size() != dim + 1) throw ShapeError("read_csv: ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ShapeError("read_csv: no data rows");

    // Recover each axis from the sorted unique coordinates.
    std::vector<Axis> axes(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<double> vals;
        for (const auto& r : rows) vals.push_back(r[k]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        axes[k].name = names[k];
        axes[k].min = vals.front();
        axes[k].count = vals.size();
        axes[k].step = vals.size() > 1 ? (vals.back() - vals.front()) /
                                             static_cast<double>(vals.size() - 1)
                                       : 1.0;
    }
    GridField field(axes);
    if (field.size() != rows.size()) {
        throw ShapeError("read_csv: row count does not match axes");
    }
    std::vector<std::size_t> idx(dim);
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < dim; ++k) {
            idx[k] = static_cast<std::size_t>(
                std::llround((r[k] - axes[k].min) / axes[k].step));
        }
        field[field.linear_index(idx)] = r[dim];
    }
    return field;
}

std::string axes_json(const GridField& field) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["axes"] = nlohmann::ordered_json::array();
    for (const Axis& a : field.axes()) {
        j["axes"].push_back({{"name", a.name},
                             {"min", a.min},
                             {"max", a.max()},
                             {"step", a.step},
                             {"count", a.count}});
    }
    return j.dump(2);
}

} // namespace ckg
