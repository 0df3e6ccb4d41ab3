#pragma once

#include <json.hpp>

#include "transvect/normal_forms.hpp"
#include "transvect/orbit.hpp"

namespace transvect {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
    std::string name;
    bool ok = false;
    ordered_json detail = ordered_json::object();
};

struct RunReport {
    std::string command;
    ordered_json parameters = ordered_json::object();
    double elapsed = 0.0;  // seconds, set by the caller
    std::vector<Outcome> results;

    bool ok() const;
    std::string input_hash() const;  // of command and parameters
    // Field order is fixed; without timing the text depends only on the inputs.
    ordered_json to_json(bool timing = true) const;
};

// One test case of the orbit experiments: ring descriptor, matrix size, optional ideal text.
struct OrbitCase {
    std::string ring;
    int size = 4;
    std::optional<std::string> ideal;
    static OrbitCase parse(const std::string& text);  // "zmod:9,4,3" or "zmod:3,4"
    std::string to_string() const;
};

struct RelationsParams {
    std::vector<std::string> rings = {"dyadic"};
    std::vector<int> halves = {2, 3};
    bool symbolic = true;
    int samples = 10;
    std::uint64_t seed = 1;
    int threads = 1;
    bool instances = false;  // list every tuple in the report
};
RunReport run_verify_relations(const RelationsParams& p);

struct DecomposeParams {
    std::vector<std::string> rings = {"zmod:9", "zmod:15"};
    std::vector<int> halves = {1, 2};
    bool symbolic = true;
    bool bass = false;  // Bass correspondence instead of rho/mu decompositions
    int samples = 1000;
    std::uint64_t seed = 1;
};
RunReport run_decompose(const DecomposeParams& p);

struct ReduceFormParams {
    std::vector<std::string> rings = {"gf:3", "gf:5", "zmod:9", "zmod:27"};
    std::vector<int> halves = {2, 3};
    int samples = 100;
    std::uint64_t seed = 1;
    bool absolute = true;
    bool relative = true;  // relative to the maximal ideal
};
RunReport run_reduce_form(const ReduceFormParams& p);

struct OrbitsParams {
    std::string family = "esp";
    OrbitCase where{"zmod:3", 4, std::nullopt};
    int threads = 1;
    Budget budget;
    bool partition = false;  // list every row's orbit label
};
RunReport run_orbits(const OrbitsParams& p);

struct OrbitSuiteParams {
    std::vector<OrbitCase> cases;
    int threads = 1;
};
RunReport run_orbit_equality(const OrbitSuiteParams& p);
RunReport run_transitivity(const OrbitSuiteParams& p);

struct MembershipParams {
    OrbitCase where{"zmod:9", 4, "3"};
    int samples = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t cap = 1'000'000;
    bool symbolic = true;  // square-ideal test: also certify the factorization symbolically
};
RunReport run_kernel_test(const MembershipParams& p);
RunReport run_square_ideal_test(const MembershipParams& p);

struct DilateParams {
    std::vector<int> sizes = {4, 6};
    int y_budget = 0;                   // 0: default per size
    std::optional<std::string> word;     // inline conjugator word over the case ring
    int target_column = 3;              // target se_1,j for --word
    bool entries = false;               // list every table entry
};
RunReport run_dilate(const DilateParams& p);
// Resolved case table of one size, for the data files and their regression test.
ordered_json case_table_json(int size, int y_budget = 0);

struct SpliceParams {
    std::vector<std::string> rings = {"poly:zmod:5:X", "poly:zmod:9:X"};
    std::vector<int> parts = {1, 2, 3};
    int seeds = 50;
    std::uint64_t seed = 1;
};
RunReport run_splice_demo(const SpliceParams& p);

// Helpers shared with the tests.
GeneratorWord random_linear_word(const Ring& r, int size, int length, std::mt19937_64& rng);
GeneratorWord random_relative_word(const Ring& r, int size, int length, const Ideal& I, std::mt19937_64& rng);
// (1 ⊥ ε)^t ψ (1 ⊥ ε).
AlternatingForm form_from_word(const GeneratorWord& eps, int n);

}  // namespace transvect
