/**
 * Truncated framed flow categories: graded objects, signed 0-dimensional
 * moduli spaces and framed 1-dimensional moduli spaces (intervals and
 * circles), together with the structural checks they must satisfy.
 */
#ifndef FFC_MODEL_HPP
#define FFC_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffc {

struct ObjectEntry
{
    std::string id;
    int degree = 0;
    std::optional<int> quantum;
    std::optional<std::string> label;
};

/** One point of a 0-dimensional moduli space. sign = 0 means positive. */
struct SignedPoint
{
    std::string id;
    int sign = 0;
    // (B, A) when minted by handle cancellation
    std::optional<std::pair<std::string, std::string>> provenance;
};

/**
 * Boundary point of a 1-dimensional moduli space M(a,b): the composite
 * lower·upper with lower in M(mid,b) and upper in M(a,mid).
 */
struct EndpointRef
{
    std::string mid;
    std::string lower;
    std::string upper;

    auto operator<=>(const EndpointRef&) const = default;
};

enum class ComponentKind { Interval, Circle };

struct OneDimComponent
{
    std::string id;
    ComponentKind kind = ComponentKind::Interval;
    int framing = 0;
    EndpointRef start;    // intervals only
    EndpointRef end;      // intervals only

    bool isCircle() const { return kind == ComponentKind::Circle; }
};

using Key = std::pair<std::string, std::string>;    // (from, to)

class FlowCategory
{
    public:
        std::string name;
        std::vector<ObjectEntry> objects;
        std::map<Key, std::vector<SignedPoint> > moduli0;
        std::map<Key, std::vector<OneDimComponent> > moduli1;

        const ObjectEntry* findObject(const std::string& id) const;
        bool hasObject(const std::string& id) const { return findObject(id) != nullptr; }
        int degree(const std::string& id) const;

        /** Empty vector when the space is absent. */
        const std::vector<SignedPoint>& points(const std::string& a, const std::string& b) const;
        const std::vector<OneDimComponent>& components(const std::string& a, const std::string& b) const;
        const SignedPoint* findPoint(const std::string& a, const std::string& b,
                                     const std::string& id) const;

        /** Object ids of the given degree, in id order. */
        std::vector<std::string> objectsOfDegree(int deg) const;

        /** True if no nonempty moduli space (of any dimension) ends at a. */
        bool isTerminal(const std::string& a) const;

        /**
         * Sort objects, points and components by id, orient intervals
         * canonically and drop empty moduli spaces.
         */
        void normalize();
};

struct Violation
{
    std::string rule;      // "V1" .. "V4", or "REF" for dangling references
    Key key;
    std::string item;      // point or component id, may be empty
    std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const FlowCategory& category);

/** Throws InvalidCategory listing the first few violations. */
void requireValid(const FlowCategory& category);

/** Connected components of the graph with an edge per nonempty moduli space. */
std::vector<FlowCategory> component_split(const FlowCategory& category);

/** Connected components as sorted object-id sets, in order of smallest id. */
std::vector<std::vector<std::string> > componentObjectSets(const FlowCategory& category);

/** Full subcategory on the given objects. */
FlowCategory subcategory(const FlowCategory& category, const std::set<std::string>& ids);

class InvalidCategory : public std::runtime_error
{
    public:
        explicit InvalidCategory(const std::string& what) : std::runtime_error(what) {}
};

std::string formatViolation(const Violation& v);

}   // namespace ffc

#endif
