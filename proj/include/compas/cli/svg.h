// SVG figures: clock polygons, chronotonic boxes and segmentation overlays.
//
// Coordinates are in user units. A clock is drawn with radius 100 around its
// own centre, beat 0 at 12 o'clock and beats advancing clockwise; a rhythm
// polygon is a <polygon class="rhythm-polygon"> and each accent a
// <circle class="vertex">.

#pragma once

#include <string>
#include <vector>

#include "compas/notation.h"
#include "compas/segmentation.h"

namespace compas::cli {

std::string render_polygons_svg(const std::vector<RhythmPattern>& patterns);

std::string render_chronotonic_svg(const std::vector<RhythmPattern>& patterns);

/// Contour polyline, the +/- alpha bars of every point, and the steps.
std::string render_segmentation_svg(const TimedPitchSequence& melody,
                                    const StepApproximation& steps);

}  // namespace compas::cli
