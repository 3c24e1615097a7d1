#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsurf/bounds.hpp"
#include "nsurf/search.hpp"
#include "nsurf/slicing.hpp"

namespace nsurf {

// Facet list document: '#' starts a comment, blank lines are ignored, every
// other line is one facet as whitespace-separated positive integers.  All
// lines must have the same arity.  Parse errors carry the line number;
// duplicate facets are dropped with a warning.
SimplicialComplex parse_complex(std::string_view text,
                                std::vector<std::string>* warnings = nullptr);

SimplicialComplex read_complex_file(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);

std::string render_complex(const SimplicialComplex& k, std::string_view comment = {});

// OFF export of a slicing as a polygonal mesh (quadrilaterals stay 4-gons).
// Coordinates come from a deterministic spectral layout of the ambient
// 1-skeleton; slicing vertices sit at the midpoints of their cut edges.
std::string off_string(const Slicing& s);
void write_off(const Slicing& s, const std::string& path);

std::string render_stats(const SlicingStats& st);
std::string render_report(const BoundReport& report);

// One row per slicing; byte-identical across runs and job counts.
std::string render_rows_tsv(const SearchResult& result);
std::string render_rows_table(const SearchResult& result);

// Computed family table next to the published reference values, flagging
// disagreements; reference values are never overwritten by computation.
std::string render_extremal_table(const std::vector<ExtremalRow>& rows,
                                  const ReferenceFamily* reference);

}  // namespace nsurf
