#pragma once

#include <stdexcept>
#include <string>

#include "kneser/graph.hpp"

namespace kneser {

/// Malformed or inconsistent graph document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical graph document: keys in the order family, n, k, p, seed, rng_id,
/// parent_family, vertices, edges; compact, newline-terminated.
std::string to_json(const Graph& g);

/// Parses and validates a graph document; throws FormatError.
Graph graph_from_json(const std::string& text);

void write_graph(const Graph& g, const std::string& path);
Graph read_graph(const std::string& path);

}  // namespace kneser
