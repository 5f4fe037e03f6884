#pragma once

#include <string>

#include "numrange/bounds.hpp"
#include "numrange/oracle.hpp"
#include "numrange/polygon.hpp"

namespace numrange::plot {

// Renders the sampled numerical range (shaded), the polygon enclosure and
// the three radius-bound circles into a standalone SVG document.  The
// classical and mean circles are solid, the power-inequality circle is
// dashed.  Output is a pure function of the inputs.
std::string render_svg(const EnclosureRegion<double>& region,
                       const FovSample<double>& sample,
                       const BoundReport<double>& report);

}  // namespace numrange::plot
