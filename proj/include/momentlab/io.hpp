#ifndef MOMENTLAB_IO_HPP
#define MOMENTLAB_IO_HPP

// JSON documents for algebras, representations and states.
//
// Algebra:         {"dim": n, "labels": [...], "structure": [[i, j, k, value], ...]}
//                  0-based indices, only nonzero constants with i < j.
// Representation:  {"algebra": <algebra>, "dim": d,
//                   "generators": [[[re, im], ... d*d row-major], ... n],
//                   "validity_subspace": [mode indices]}   (optional)
// State:           [[re, im], ...]

#include "momentlab/lie_algebra.hpp"
#include "momentlab/representation.hpp"

#include <json.hpp>

#include <string>

namespace momentlab::io {

using nlohmann::json;

LieAlgebra<double> algebra_from_json(const json& doc);
json to_json(const LieAlgebra<double>& alg);

Representation<double> representation_from_json(const json& doc);
json to_json(const Representation<double>& rep);

StateVector<double> state_from_json(const json& doc);
json state_to_json(const StateVector<double>& x);

/// Reads and parses a JSON file; InputError names the path on failure.
json read_json_file(const std::string& path);

Representation<double> load_representation(const std::string& path);

}  // namespace momentlab::io

#endif  // MOMENTLAB_IO_HPP
