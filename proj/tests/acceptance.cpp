// One line per acceptance criterion, with timings. Exit status 1 if any fails.

#include <duval/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace duval;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string samples;
    std::optional<std::size_t> budget;
    app.add_option("--samples", samples, "directory of generator files for the reflection-group rows");
    app.add_option("--budget", budget, "group order budget; admits symmetric groups past n = 5");
    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<int, std::function<verify::CheckResult()>>> criteria = {
        {1, [] { return verify::knitting_tables(); }},
        {2, [] { return verify::symmetry_and_bound(9); }},
        {3, [] { return verify::type_a_oracle(10); }},
        {4, [] { return verify::viehweg_formulas(); }},
        {5, [] { return verify::preprojective(); }},
        {6, [] { return verify::table_sl3(); }},
        {7, [&] { return verify::table_symmetric(budget); }},
        {8,
         [&] {
             auto r = verify::reflection_group_files(samples.empty() ? std::vector<std::string>{}
                                                                     : std::vector<std::string>{samples});
             if (samples.empty()) r.notes.push_back("no --samples directory given");
             return r;
         }},
        {9, [] { return verify::character_properties(); }},
    };

    int failed = 0;
    for (auto& [number, run] : criteria) {
        auto r = run();
        std::cout << "criterion " << number << ": " << verify::format_result(r) << std::endl;
        if (!r.passed()) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
