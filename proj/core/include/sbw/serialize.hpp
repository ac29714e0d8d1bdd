#pragma once

#include <string>

#include "sbw/census.hpp"
#include "sbw/complex.hpp"
#include "sbw/diagram.hpp"
#include "sbw/spec.hpp"
#include "sbw/surface.hpp"

namespace sbw {

// One-line criterion summary, e.g. "orbits=5 n=3 verdict=yes chi_M=2 genus=0";
// disconnected reports list the genus per component and append connected=no.
std::string check_line(const CriterionReport& report);

std::string to_json(const CriterionReport& report);

// Versioned complex description with per-dimension cell lists, attachment
// words, counts and Euler characteristic. Optional sections: the boundary
// surfaces of a cubed complex and the first homology of the spine.
std::string complex_json(const QuotientComplex& complex,
                         const std::vector<SurfaceModel>* boundary,
                         const HomologyResult* homology);

std::string to_json(const SurfaceModel& surface);

// Surface plus crossing/arc incidence lists for diagrams on higher-genus
// surfaces.
std::string surface_diagram_json(const ReconstructedDiagram& rec);

std::string census_table(const CensusRow& row);
std::string to_json(const CensusRow& row);

}  // namespace sbw
