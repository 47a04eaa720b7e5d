#pragma once
#include <fstream>
#include <sstream>
#include <nlohmann/json.hpp>
#include "cluloop/surface.hpp"

inline nlohmann::json load_json(const std::string& rel) {
    std::ifstream in(std::string(CLULOOP_FIXTURES) + "/" + rel);
    if (!in) throw std::runtime_error("missing fixture " + rel);
    nlohmann::json j;
    in >> j;
    return j;
}

inline cluloop::Triangulation load_surface(const std::string& rel) {
    return cluloop::Triangulation::from_json(load_json(rel));
}

inline cluloop::TaggedArc load_arc(const std::string& rel, const cluloop::Triangulation& t) {
    return cluloop::arc_from_json(load_json(rel), t);
}
