#ifndef RECURV_CHART_HPP
#define RECURV_CHART_HPP

#include <memory>
#include <string>
#include <vector>

#include "recurv/errors.hpp"

namespace recurv {

// Coordinate system: dimension, coordinate names, positivity assumptions.
// The geometric structures handled here are defined for n >= 3.
struct Chart {
    int dimension = 0;
    std::vector<std::string> coordinates;
    std::vector<bool> positive; // per coordinate, declared-positive assumption

    Chart(int n, std::vector<std::string> names, std::vector<bool> pos = {})
        : dimension(n), coordinates(std::move(names)), positive(std::move(pos)) {
        if (dimension < 3)
            throw TensorShapeError("chart dimension must be at least 3");
        if (static_cast<int>(coordinates.size()) != dimension)
            throw TensorShapeError("coordinate count does not match dimension");
        for (std::size_t i = 0; i < coordinates.size(); ++i)
            for (std::size_t j = i + 1; j < coordinates.size(); ++j)
                if (coordinates[i] == coordinates[j])
                    throw TensorShapeError("duplicate coordinate name '" + coordinates[i] + "'");
        if (positive.empty()) positive.assign(coordinates.size(), false);
    }

    // Standard chart x1..xn.
    static std::shared_ptr<const Chart> standard(int n, bool all_positive = false) {
        std::vector<std::string> names;
        names.reserve(n);
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return std::make_shared<const Chart>(
            n, std::move(names), std::vector<bool>(n, all_positive));
    }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < coordinates.size(); ++i)
            if (coordinates[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Chart& o) const {
        return dimension == o.dimension && coordinates == o.coordinates &&
               positive == o.positive;
    }
};

using ChartPtr = std::shared_ptr<const Chart>;

} // namespace recurv

#endif
