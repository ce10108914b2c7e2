#include "trispec/validation.hpp"

#include <doctest.h>

TEST_CASE("property suite") {
    for (const auto& check : trispec::run_property_suite()) {
        CAPTURE(check.detail);
        INFO(check.id << " " << check.title);
        CHECK(check.passed);
    }
}
