/**
 * Combinatorial summaries of geometric realizations: CW cell census,
 * Delta-realization cell counts and the face incidence graph.
 */
#ifndef SSET_REALIZATION_HPP
#define SSET_REALIZATION_HPP

#include <string>
#include <vector>

#include "sset/presentation.hpp"
#include "sset/standard.hpp"

namespace sset {

struct AttachmentFace
{
    int index;               // i in d_i
    std::string notation;    // canonical notation of d_i g
    bool collapsed;          // degenerate face, collapsed in the realization
};

struct AttachmentRow
{
    GeneratorId generator;
    std::string name;
    std::vector<AttachmentFace> faces;
};

/** One n-cell per nondegenerate n-simplex. */
struct CWReport
{
    std::vector<std::size_t> cells_per_dim;
    long long euler = 0;
    std::vector<AttachmentRow> attachments;
};

CWReport cw_report(const Presentation& p);

/** Cells of the Delta realization of a Delta set: its generators, dims 0..N. */
std::vector<std::size_t> delta_realization_report(const DeltaSet& d, int max_dim);

/**
 * A simplicial presentation realized as a Delta set: every simplex,
 * degenerate or not, is a cell. Throws TruncationError past a truncation.
 */
std::vector<std::size_t> delta_realization_report(const Presentation& p, int max_dim);

struct IncidenceArc
{
    GeneratorId from;
    GeneratorId to;
    int face;
};

struct IncidenceGraph
{
    std::vector<GeneratorId> nodes;
    std::vector<IncidenceArc> arcs;
};

/** An arc g -> h labelled i for every face d_i g with nondegenerate base h. */
IncidenceGraph incidence_graph(const Presentation& p);

/** The incidence graph in DOT; nodes are "name:dim". */
std::string incidence_export(const Presentation& p);

}   // namespace sset

#endif
