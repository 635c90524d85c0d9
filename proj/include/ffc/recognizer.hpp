/**
 * Identification of fully reduced flow categories with wedges of suspended
 * standard spaces.
 */
#ifndef FFC_RECOGNIZER_HPP
#define FFC_RECOGNIZER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/model.hpp"

namespace ffc {

enum class Model { Sphere, Moore, CP2, RP4modRP1, RP5modRP2, RP2smashRP2 };

struct Summand
{
    Model model = Model::Sphere;
    int bottom = 0;    // degree of the bottom cell
    int order = 0;     // k for Moore(Z/k, n)

    /** Canonical string, e.g. "S^3", "Moore(Z/2,2)", "RP5/RP2@2". */
    std::string text() const;
    /** Suspension form relative to the standard model, e.g. "Susp(-1) RP5/RP2". */
    std::string suspensionText() const;

    bool operator==(const Summand&) const = default;
};

struct SummandExpression
{
    std::vector<Summand> summands;            // sorted
    std::optional<FlowCategory> residue;      // unmatched components
    std::map<int, CohomologyGroup> residueCohomology;

    std::vector<std::string> strings() const;
    std::string text() const;                 // joined by " v "
    std::string suspensionText() const;
};

SummandExpression recognize(const FlowCategory& category);

/** Integral cohomology of a summand, computed from its cellular model. */
std::map<int, CohomologyGroup> summandCohomology(const Summand& s);

}   // namespace ffc

#endif
