/**
 * Morse moves on truncated framed flow categories: the Whitney trick,
 * handle cancellation and removal of trivial circles.
 */
#ifndef FFC_MOVES_HPP
#define FFC_MOVES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ffc/model.hpp"

namespace ffc {

enum class MoveKind { Whitney, Cancel, RemoveCircleFr1, RemoveCircleFr0Pair, SplitSummand };

const char* moveKindName(MoveKind kind);

struct MoveDescriptor
{
    MoveKind kind = MoveKind::Whitney;
    std::string x, y;                      // whitney, cancel; (a,b) for circle removal
    std::string P, M;                      // whitney
    std::string point;                     // cancel
    std::vector<std::string> components;   // circle removal
    std::vector<std::string> objects;      // split

    /**
     * Text form used on the command line:
     *   whitney:x,y:P,M   cancel:x,y   rmcircle:a,b:id[,id]   split:o1,o2,...
     */
    std::string text() const;

    bool operator==(const MoveDescriptor&) const = default;
};

class MoveError : public std::runtime_error
{
    public:
        explicit MoveError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Parse the text form. For cancel and rmcircle the category is consulted to
 * fill in the point id and the circle-removal kind.
 */
MoveDescriptor parseMove(const std::string& text, const FlowCategory& category);

/** Deterministically ordered list of applicable moves. */
std::vector<MoveDescriptor> list_moves(const FlowCategory& category);

FlowCategory whitney(const FlowCategory& category, const std::string& x, const std::string& y,
                     const std::string& P, const std::string& M);

FlowCategory cancel(const FlowCategory& category, const std::string& x, const std::string& y);

FlowCategory remove_circles(const FlowCategory& category, const std::string& a,
                            const std::string& b, const std::vector<std::string>& componentIds);

/** Apply a whitney, cancel or circle-removal descriptor. Split is not a category move. */
FlowCategory apply(const FlowCategory& category, const MoveDescriptor& move);

}   // namespace ffc

#endif
