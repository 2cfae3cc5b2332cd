#pragma once

#include "norden/norden.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace norden {

/// The JSON manifold interchange document, schema version 1. Bracket
/// entries are sparse with i < j; the antisymmetric completion is implied.
/// All scalar values use the l1..l12 text grammar.
struct ManifoldDocument {
  struct BracketEntry {
    int i = 0;
    int j = 0;
    int k = 0;
    std::string value;
  };

  int schema = 1;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> structure_constants;
  std::vector<std::vector<std::string>> metric;
  std::vector<std::vector<std::string>> J;
};

/// Parses and validates a document. Throws std::runtime_error with the
/// offending field (and entry coordinates for scalar errors).
ManifoldDocument parse_manifold_document(const std::string& json_text);

/// Canonical JSON rendering: scalars re-printed in canonical form, two-space
/// indentation, stable key order. parse -> render is a fixed point on
/// rendered documents.
std::string render_manifold_document(const ManifoldDocument& doc);

struct LoadedManifold {
  NordenManifold manifold;
  std::vector<std::string> basis;
  NordenCheckReport norden_check;  // run automatically on load
};

/// Builds the manifold from a document; throws on inconsistent fields.
LoadedManifold manifold_from_document(const ManifoldDocument& doc);

LoadedManifold load_manifold(const std::filesystem::path& path);

/// Re-serializes a loaded manifold with the given basis names.
ManifoldDocument document_from_manifold(const NordenManifold& m,
                                        std::vector<std::string> basis);

}  // namespace norden
