#pragma once

#include <string>

#include "plansep/congest.hpp"
#include "plansep/planar_graph.hpp"

#ifndef PLANSEP_FIXTURES
#define PLANSEP_FIXTURES "tests/fixtures"
#endif

inline std::string fixture(const std::string& name) { return std::string(PLANSEP_FIXTURES) + "/" + name; }

inline plansep::SimConfig literal_cfg() {
    plansep::SimConfig c;
    c.mode = plansep::Mode::Literal;
    return c;
}

inline plansep::SimConfig charged_cfg() {
    plansep::SimConfig c;
    c.mode = plansep::Mode::Charged;
    return c;
}
