#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittknot/seifert.hpp"
#include "wittknot/unknotting.hpp"

namespace wittknot {

// One knot's worth of input data. `matrix` is a Seifert matrix V by
// default, or an already symmetrized matrix Q when `symmetric` is set.
// Records without a matrix must carry det and sigma.
struct KnotRecord {
  std::string name;
  std::optional<IntMatrix> matrix;
  bool symmetric = false;
  std::optional<Int> det;
  std::optional<int> sigma;
  std::optional<bool> u1_known;
  std::optional<std::pair<Int, Int>> lens;
};

enum class IngestFormat { Json, Csv };
// Default interpretation of matrices for records that do not say;
// Scalars ignores matrix data entirely.
enum class IngestMode { Seifert, Symmetric, Scalars };

// Throws std::runtime_error with file/line context on parse errors.
std::vector<KnotRecord> ingest(const std::string& path, IngestFormat format,
                               IngestMode mode = IngestMode::Seifert);
std::vector<KnotRecord> ingest_json_text(const std::string& text,
                                         IngestMode mode);
std::vector<KnotRecord> ingest_csv_text(const std::string& text,
                                        IngestMode mode);

// Canonical JSON emission; ingest(emit(records)) is lossless.
std::string emit_json(const std::vector<KnotRecord>& records);

// A record resolved against the engine: class, signature, determinant.
struct ResolvedKnot {
  KnotRecord record;
  std::optional<DiagonalForm> phi;  // absent when no matrix was given
  Int det;
  int sigma = 0;
  std::vector<std::string> warnings;   // validation notes, non-fatal
  bool validation_failed = false;      // stored det/sigma contradict matrix
};

// Computes phi/det/sigma from the matrix when present (strict toggles the
// det(V - V^T) = 1 check), else takes the stored scalars; cross-checks
// stored scalars against computed values.
ResolvedKnot resolve(const KnotRecord& rec, bool strict_seifert);

}  // namespace wittknot
