#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schur/partition.hpp"
#include "schur/tilings.hpp"

namespace schur {

enum class RenderModel : std::uint8_t { lozenge, domino, maya_particles };

std::string_view to_string(RenderModel m);
RenderModel parse_render_model(std::string_view text);

struct RenderStyle {
    RenderModel model = RenderModel::domino;
    // lozenge: top, left wall, right wall; domino: +horizontal, −horizontal, +vertical, −vertical;
    // maya: particle, hole. Empty means the defaults.
    std::vector<std::string> palette;
    double scale = 12.0;      // pixels per unit
    double rotation = 0.0;    // degrees, about the drawing centre
    bool outline = true;
};

// Throws std::invalid_argument when scale ≤ 0.
std::string render_svg(const HeightMatrix& h, const RenderStyle& style);
std::string render_svg(const DominoTiling& t, const RenderStyle& style);
// Column k shows the Maya diagram of lambdas[k] at charge 0.
std::string render_maya_svg(const std::vector<Partition>& lambdas, const RenderStyle& style);

}  // namespace schur
