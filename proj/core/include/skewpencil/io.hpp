#pragma once

#include <string>
#include <vector>

#include "skewpencil/decompose.hpp"

namespace skewpencil {

// On-disk pencil document:
//   {"field": "Q" | {"Fp": p}, "n": n,
//    "A": [["0","1"],["-1","0"]], "B": [[...], [...]]}
// with every scalar written as an exact string.
struct PencilFile {
    FieldDescriptor field;
    Mat A;
    Mat B;
};

PencilFile parse_pencil_file(const std::string& text);
std::string serialize_pencil_file(const PencilFile& pf,
                                  const std::vector<Block>* expected_blocks = nullptr);

// Result document: {"field", "n", "ordering", "blocks", "ranges", "basis",
// "verified", ["trace"]}; basis is the list of T columns. d must be in Split
// ordering (what decompose() returns); the writer permutes it into the
// requested ordering on the way out.
std::string serialize_result(const Decomposition& d, bool verified,
                             BasisOrdering ordering,
                             const std::vector<ExtractionTrace>* traces = nullptr);

// The decomposition comes back in the file's own ordering, reported alongside
// it; there is no conversion back to Split.
struct ParsedResult {
    Decomposition decomposition;
    BasisOrdering ordering;
    bool verified;
};
ParsedResult parse_result_file(const std::string& text);

// {"error": {"kind": "SplitFailure", "remainder", "remainder_coeffs",
//  "degree_hints", [partial and residual data]}}
std::string serialize_split_failure(const SplitFailureError& e);

// Block list mini-language: comma-separated items "kron:K", "jinf:K",
// "jordan:LAMBDA:K" (LAMBDA may contain '/'). K >= 1 for jinf and jordan
// (InvalidK otherwise); kron:0 is the 1x1 zero block.
std::vector<Block> parse_block_specs(const FieldDescriptor& f, const std::string& text);
std::string format_block_specs(const std::vector<Block>& blocks);

// "Q" or "Fp:P".
FieldDescriptor parse_field_text(const std::string& text);

}  // namespace skewpencil
