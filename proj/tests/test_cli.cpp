#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(TAMEARITH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string corpus() {
    if (const char* env = std::getenv("TAMEARITH_CORPUS")) return env;
    return TAMEARITH_SOURCE_CORPUS;
}

} // namespace

TEST_CASE("cli exit codes") {
    std::string root = corpus();
    CHECK(run("chars " + root + "/groups/c2.json") == 0);
    CHECK(run("field-report " + root + "/fields/qzeta5.json --corpus " + root) == 0);
    CHECK(run("class-complex " + root + "/complexes/acyclic_c4.json --corpus " + root) == 0);
    CHECK(run("verify --suite cyclo --seed 7 --corpus " + root) == 0);
    // input errors exit with 2
    CHECK(run("chars /definitely/missing.json") == 2);
    CHECK(run("verify --suite nosuchsuite --corpus " + root) == 2);
}
