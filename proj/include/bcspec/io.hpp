#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bcspec/matrix.hpp"

namespace bcspec {

using json = nlohmann::json;

// Wire formats:
//   BiComplex   {"z1": [re, im], "z2": [re, im]}
//   Hyperbolic  {"h1": r, "h2": r}
//   BCMatrix    {"rows": r, "cols": c, "entries": [[[re,im],[re,im]], ...]}
//               row-major, one BiComplex per entry
//   tuple file  {"matrices": [BCMatrix, ...]}
//   pair file   {"T1": BCMatrix, "T2": BCMatrix,
//                "queries": [{"z1": BiComplex, "z2": BiComplex}, ...]}

json to_json(const BiComplex& z);
json to_json(const Hyperbolic& h);
json to_json(const BCMatrix& m);

BiComplex bicomplex_from_json(const json& j);
Hyperbolic hyperbolic_from_json(const json& j);
BCMatrix matrix_from_json(const json& j);
std::vector<BCMatrix> tuple_from_json(const json& j);

struct PairQueryFile {
    BCMatrix t1;
    BCMatrix t2;
    std::vector<std::pair<BiComplex, BiComplex>> queries;
};

PairQueryFile pair_query_from_json(const json& j);

/// Parses the file at path; throws ParseError when unreadable or malformed.
json load_json_file(const std::string& path);

/// "a+bi + (c+di)j"
std::string format_rect(const BiComplex& z);
/// "(a+bi)·e1 + (c+di)·e2"
std::string format_idem(const BiComplex& z);

}  // namespace bcspec
