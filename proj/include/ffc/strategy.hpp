/**
 * Greedy simplification driver and replayable traces.
 */
#ifndef FFC_STRATEGY_HPP
#define FFC_STRATEGY_HPP

#include <string>
#include <vector>

#include "ffc/model.hpp"
#include "ffc/moves.hpp"

namespace ffc {

struct TraceStep
{
    MoveDescriptor move;
    std::string digest;    // digest of the category after the move
};

struct Trace
{
    std::string initial;
    std::vector<TraceStep> steps;
    std::vector<std::string> result;    // summand strings of the final category
};

/** "sha256:" followed by the hex SHA-256 of the canonical encoding. */
std::string digest(const FlowCategory& category);

struct SimplifyResult
{
    FlowCategory category;
    Trace trace;
};

/**
 * Apply the first listed move of the highest-priority kind
 * (whitney, cancel, circle removal) until none remain or maxSteps moves
 * have been applied. Split candidates do not change the category and
 * end the run. A negative maxSteps means no limit.
 */
SimplifyResult simplify(const FlowCategory& category, long maxSteps = -1);

/** Record a single step; used by the service to grow its trace. */
TraceStep makeStep(const MoveDescriptor& move, const FlowCategory& after);

/**
 * Replay the trace from the initial category. Throws MoveError if a digest
 * differs or a move fails. Returns the final category.
 */
FlowCategory replay(const FlowCategory& initial, const Trace& trace);

}   // namespace ffc

#endif
