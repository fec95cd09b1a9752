#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcspace/presentation.hpp"

namespace arcspace {

// Named objects parsed from a sectioned plain-text description.
struct Scene {
    Field field;
    std::map<std::string, AffineVariety> varieties;
    std::map<std::string, MorphismPres> morphisms;
    std::map<std::string, SubschemeIdeal> subschemes;

    struct NamedArc {
        std::string on;  // variety name
        ArcGen arc;
    };
    std::map<std::string, NamedArc> arcs;

    const AffineVariety& variety(const std::string& name) const;
    const MorphismPres& morphism(const std::string& name) const;
    const SubschemeIdeal& subscheme(const std::string& name) const;
    const NamedArc& arc(const std::string& name) const;
};

// Polynomial expression over the named variables: integer literals, variable
// names, + - * ^ and parentheses.
MultiPoly parse_poly(const std::string& expr, Field f,
                     const std::vector<std::string>& vars);

Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

}  // namespace arcspace
