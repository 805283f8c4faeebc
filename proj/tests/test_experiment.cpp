#include <catch2/catch_amalgamated.hpp>

#include "qcl/experiment.hpp"

using namespace qcl;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Minimal XML well-formedness check: tags balance and nest properly.
bool xml_well_formed(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t close = doc.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        if (tag.back() == '/') continue;  // self-closing
        const std::size_t space = tag.find_first_of(" \t\n");
        stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
    }
    return stack.empty();
}

ExperimentConfig tiny_config(const std::string& out_dir) {
    ExperimentConfig c = default_config("fit1d");
    c.num_qubits = 2;
    c.depth = 1;
    c.train_samples = 5;
    c.max_iterations = 3;
    c.gtol = 1e-8;
    c.out_dir = out_dir;
    return c;
}

}  // namespace

TEST_CASE("config JSON round trip is the identity") {
    ExperimentConfig c = default_config("classify2d");
    c.seeds.theta = 987;
    c.noise.enabled = true;
    c.noise.shots = 500;
    const Json j = to_json(c);
    const ExperimentConfig back = config_from_json(j);
    REQUIRE(to_json(back) == j);
}

TEST_CASE("config validation names the offending field") {
    Json j;
    j["task"] = "fit1d";
    j["bogus_field"] = 1;
    try {
        config_from_json(j);
        FAIL("expected validation error");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()).find("bogus_field") != std::string::npos);
    }

    Json bad_task;
    bad_task["task"] = "interpretive_dance";
    REQUIRE_THROWS_AS(config_from_json(bad_task), std::invalid_argument);

    Json bad_target;
    bad_target["task"] = "fit1d";
    bad_target["target"] = "tan";
    REQUIRE_THROWS_AS(config_from_json(bad_target), std::invalid_argument);
}

TEST_CASE("identical resolved configs produce byte-identical CSV artifacts") {
    const auto dir_a = std::filesystem::path("test_runs/det_a");
    const auto dir_b = std::filesystem::path("test_runs/det_b");
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    run(tiny_config(dir_a.string()));
    run(tiny_config(dir_b.string()));
    for (const char* name : {"trace.csv", "predictions.csv"})
        REQUIRE(slurp(dir_a / name) == slurp(dir_b / name));
}

TEST_CASE("a run re-executed from its resolved config reproduces itself") {
    const auto dir_a = std::filesystem::path("test_runs/rerun_a");
    const auto dir_b = std::filesystem::path("test_runs/rerun_b");
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    run(tiny_config(dir_a.string()));
    ExperimentConfig resolved = load_config(dir_a / "config.json");
    resolved.out_dir = dir_b.string();
    run(resolved);
    REQUIRE(slurp(dir_a / "predictions.csv") == slurp(dir_b / "predictions.csv"));
}

TEST_CASE("emit_plots writes well-formed SVG with the three series") {
    const auto dir = std::filesystem::path("test_runs/plots");
    std::filesystem::remove_all(dir);
    run(tiny_config(dir.string()));
    const auto written = emit_plots(dir);
    REQUIRE(written.size() == 1);
    const std::string svg = slurp(written.front());
    REQUIRE(xml_well_formed(svg));
    for (const char* label : {"teacher", "initial", "final"})
        REQUIRE(svg.find(label) != std::string::npos);
}

TEST_CASE("emit_plots refuses a run directory without predictions") {
    const auto dir = std::filesystem::path("test_runs/empty");
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    REQUIRE_THROWS(emit_plots(dir));  // no config.json at all

    // config present but predictions empty
    std::filesystem::copy_file("test_runs/plots/config.json", dir / "config.json");
    {
        std::ofstream pred(dir / "predictions.csv");
        pred << "x,teacher,initial,final\n";
    }
    REQUIRE_THROWS(emit_plots(dir));
    REQUIRE(!std::filesystem::exists(dir / "fit1d.svg"));
}

TEST_CASE("dynamics config rejects colliding seeds") {
    ExperimentConfig c = default_config("dynamics");
    c.seeds.teacher_hamiltonian = c.seeds.hamiltonian;
    c.out_dir = "test_runs/collide";
    REQUIRE_THROWS_AS(run(c), std::invalid_argument);
}
