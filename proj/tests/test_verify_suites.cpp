#include <doctest.h>

#include "tamearith/verify.hpp"

using namespace tamearith;

TEST_CASE("property suites pass on the bundled corpus") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.corpus = TAMEARITH_SOURCE_CORPUS;
    for (const auto& name : suite_names()) {
        auto result = run_suite(name, opt);
        for (const auto& check : result.checks) {
            INFO(result.suite, ": ", check.name, ": ", check.detail);
            CHECK(check.pass);
        }
    }
}
