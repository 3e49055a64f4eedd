/**
 * JSON documents for presentations, maps and group tables.
 *
 * Presentation document:
 *   { "name": ..., "top_dim": D, ["truncated": true,] ["kind": "delta",]
 *     "generators": { "0": [names], ..., "D": [names] },
 *     "faces": { name: ["s1 s0 v", ...] } }
 * Face lists have dim+1 entries, entry i being d_i; vertices have none.
 * Generator names are unique across dimensions.
 */
#ifndef SSET_IO_HPP
#define SSET_IO_HPP

#include <string>
#include <vector>

#include "sset/group.hpp"
#include "sset/morphism.hpp"
#include "sset/presentation.hpp"

namespace sset {

struct LoadedPresentation
{
    Presentation presentation;
    bool delta_kind = false;            // "kind": "delta"
    std::vector<std::string> warnings;  // normalizations applied on load
};

/**
 * Throws ParseError (with line and column) on malformed JSON and
 * PresentationError on semantic problems, naming the generator.
 */
LoadedPresentation parse_presentation(const std::string& text);
LoadedPresentation load_presentation(const std::string& path);

/** Canonical document: sorted names, normalized words, two-space indent. */
std::string serialize_presentation(const Presentation& p, bool delta_kind = false);
void save_presentation(const std::string& path, const Presentation& p, bool delta_kind = false);

/**
 * Map document: { "source": file, "target": file, "assignment": { name: expr } }.
 * File references are resolved against the map file's directory.
 */
struct LoadedMap
{
    PresentationPtr source;
    PresentationPtr target;
    SimplicialMap map;
};

LoadedMap load_map(const std::string& path);

/**
 * Group document: { "elements": [names], "identity": name,
 * "table": [[name of a*b for b in elements] for a in elements] }.
 */
GroupTable parse_group_table(const std::string& text);
GroupTable load_group_table(const std::string& path);

/** Whole file as a string; throws Error when it cannot be read. */
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}   // namespace sset

#endif
