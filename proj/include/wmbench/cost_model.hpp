#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wmbench {

/// Keystroke-level model parameters, in seconds.
struct CostParams {
    double fitts_a = 0.0;  // intercept
    double fitts_b = 0.15; // per bit of index of difficulty
    double keystroke = 0.28;
    double homing = 0.40; // one hand transfer between keyboard and pointer

    bool operator==(CostParams const&) const = default;
};

inline constexpr double kClickSeconds = 0.10;

/// Shannon form of Fitts's law: a + b * log2(D / W + 1). Throws
/// NonpositiveWidth for W <= 0 (and for a negative distance).
double fitts_mt(double distance, double width, CostParams const& params);

enum class Mode { Floating, Dynamic };

std::string_view mode_name(Mode mode);

enum class PrimitiveKind { Point, Click, Key, Home };

struct Primitive {
    PrimitiveKind kind = PrimitiveKind::Key;
    double distance = 0.0; // Point only
    double width = 0.0;    // Point only

    bool operator==(Primitive const&) const = default;
};

/// One action of the nine-step protocol with its primitive sequence under
/// each window-management mode.
struct WorkflowStep {
    int number = 0;
    std::string name;
    std::vector<Primitive> floating;
    std::vector<Primitive> dynamic;

    std::vector<Primitive> const& primitives(Mode mode) const { return mode == Mode::Floating ? floating : dynamic; }
};

/// Names of the nine protocol actions, in order.
std::vector<std::string> const& protocol_step_names();

/// Parses `step,<n>,<mode>,<point|click|key|home>,<D>,<W>` lines (`#`
/// comments allowed). Every step that appears must have rows for both
/// modes. Throws StatsError(BadRow) with the line number.
std::vector<WorkflowStep> parse_step_table(std::string_view text);

/// Table text shipped in data/protocol_steps.csv.
std::string_view default_step_table();
std::vector<WorkflowStep> default_workflow();

struct ModelResult {
    double total = 0.0;
    int pointer_ops = 0; // pointing moves and clicks
    int keystrokes = 0;
    int homing = 0;

    ModelResult& operator+=(ModelResult const& other);
};

ModelResult model_workflow(std::vector<WorkflowStep> const& steps, Mode mode, CostParams const& params);

/// `key = value` lines for fitts_a, fitts_b, keystroke, homing; unnamed
/// keys keep their defaults. Throws StatsError(BadRow).
CostParams parse_cost_params(std::string_view text);

} // namespace wmbench
