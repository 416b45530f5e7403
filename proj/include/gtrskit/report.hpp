#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtrskit/codes.hpp"
#include "gtrskit/constructions.hpp"
#include "gtrskit/gf.hpp"
#include "gtrskit/poly.hpp"

namespace gtrskit {

// All report serialization uses ordered JSON so that key order is part of
// the output contract (identical runs produce identical bytes).
using ojson = nlohmann::ordered_json;

// JSON shapes: field {p, m, modulus}; polynomial {exponent: coeff index};
// matrix = row lists of element indices; code {q, p, m, n, k, generator}.
ojson field_to_json(const FieldCtx& F);
ojson poly_to_json(const Poly& f);
ojson matrix_to_json(const Matrix& M);
ojson code_to_json(const LinearCode& C);
ojson distance_to_json(const DistanceReport& r);
ojson class_to_json(const CodeClass& c);
ojson witness_to_json(const SelfOrthWitness& w);

// FNV-1a over the row-major element indices (dimensions mixed in), as a
// compact certificate for all-zero Gram matrices and canonical RREF forms.
std::string matrix_hash(const Matrix& M);

// Everything needed to reproduce a run: the subcommand, its parameter block
// (already in canonical key order), the seed and the output controls.
struct RunConfig {
    std::string command;  // "construct", "verify" or "search"
    ojson params = ojson::object();
    uint64_t seed = 0;
    bool timing = false;
    uint32_t workers = 1;          // from GTRSKIT_WORKERS, default 1
    std::string format = "json";   // "json" or "csv"
    std::string out_path;          // empty: write to stdout

    ojson to_json() const;  // command + params + seed (output controls excluded)
};

// One grid cell / instance outcome.  `ok` feeds the process exit code;
// `certificate` carries whatever makes the verdict recomputable or provably
// wrong (witness polynomial, distinguishing row, hashes, found instances).
struct ResultEntry {
    ojson params = ojson::object();
    std::string verdict;
    bool ok = true;
    ojson certificate = ojson::object();
    double timing_ms = 0.0;
};

struct Report {
    std::string command;
    ojson config = ojson::object();
    std::vector<ResultEntry> results;

    bool all_ok() const;
    size_t failures() const;

    // timing_ms keys appear only when `with_timing`, keeping default output
    // byte-stable across runs.
    ojson to_json(bool with_timing) const;
    std::string to_json_text(bool with_timing) const;
    // One row per result: flattened params columns + verdict + ok.
    std::string to_csv(bool with_timing) const;
    static Report from_json(const ojson& j);

    // Value equality modulo timing (round-trip and determinism checks).
    bool operator==(const Report& o) const;
};

// Runs fn(0..count-1) on `workers` threads (workers <= 1: inline); outputs
// keyed by index stay deterministic regardless of completion order.
void run_indexed(size_t count, uint32_t workers,
                 const std::function<void(size_t)>& fn);

uint32_t workers_from_env();

}  // namespace gtrskit
