#ifndef KGNG_SVG_HPP
#define KGNG_SVG_HPP

#include <string>

#include "kgng/dataset.hpp"
#include "kgng/network.hpp"

namespace kgng {

// Network drawn over its data: gray dots for data points, black line
// segments for edges, black dots for unit weights. The viewport covers
// the data bounding box plus a 5% margin (the units' box when the
// dataset is empty). Inputs with more than two coordinates are projected
// onto the first two.
std::string render_svg(const GngNetwork& net, const Dataset& data);

void write_svg(const GngNetwork& net, const Dataset& data,
               const std::string& path);

}  // namespace kgng

#endif  // KGNG_SVG_HPP
