#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "gbent/tables.hpp"

namespace gbent {

// Maiorana-McFarland bent function on n = 2m variables:
// f(x, y) = <x, perm(y)> ^ h(y), x the low m coordinates.
BoolTable mm_bent(int m, std::span<const std::uint32_t> perm, const BoolTable& h);

// f = a1 + 2^{k-1} ak (all middle planes zero). With strict set, requires
// ak and a1 ^ ak bent (the k = 4, even-n gbent guarantee).
GbfTable sparse_gbent(const BoolTable& a1, const BoolTable& ak, int k, bool strict = false);

// Seed-deterministic uniform table; identical (n, k, seed) reproduces the
// identical table on any platform.
GbfTable random_gbf(int n, int k, std::uint64_t seed);

enum class SearchMode { exhaustive, random, construct };
enum class SearchPredicate { gbent, gsemibent, plateaued, theorem_discrepancy };

struct SearchSpec {
    int n = 2;
    int k = 2;
    SearchMode mode = SearchMode::exhaustive;
    SearchPredicate predicate = SearchPredicate::gbent;
    int plateau_s = 0;            // for SearchPredicate::plateaued
    std::uint64_t count = 0;      // random mode: number of samples
    std::uint64_t seed = 0;       // random/construct modes
    std::string family;           // construct mode: "sparse" | "mm"
    std::string out_path;         // empty: no JSONL sink
    // Optional index range [begin, end) for restartable exhaustive chunks.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
    unsigned threads = 0;         // 0: GBENT_THREADS or hardware default
};

struct SearchSummary {
    std::uint64_t tested = 0;
    std::uint64_t matched = 0;
    std::uint64_t written = 0;
};

// Streams every candidate through the predicate; matches are appended to the
// sink as JSONL records in deterministic candidate order (exhaustive mode is
// lexicographic by value vector). Exhaustive spans are guarded by
// k * 2^n <= 20.
SearchSummary run_search(const SearchSpec& spec);

// Number of candidates of an exhaustive span, (2^k)^(2^n).
std::uint64_t exhaustive_span(int n, int k);

// Candidate of an exhaustive enumeration: index decoded base 2^k with the
// value at x = 0 as the most significant digit (lexicographic order).
GbfTable exhaustive_candidate(int n, int k, std::uint64_t index);

unsigned effective_thread_count(unsigned requested);

}  // namespace gbent
