// Small helpers shared by the test programs.
#ifndef FFC_TESTS_SUPPORT_HPP
#define FFC_TESTS_SUPPORT_HPP

#include <optional>
#include <string>

#include "ffc/io.hpp"
#include "ffc/model.hpp"

namespace ffc::testing {

inline FlowCategory load(const std::string& name)
{
    return decodeValid(readFile(std::string(FFC_DATA_DIR) + "/" + name));
}

// Hand-built categories; signs are 0 (+) or 1 (-).
struct Builder
{
    FlowCategory c;
    int next = 0;

    Builder& obj(const std::string& id, int deg)
    {
        c.objects.push_back({id, deg, std::nullopt, std::nullopt});
        return *this;
    }
    Builder& pt(const std::string& a, const std::string& b, const std::string& id, int sign)
    {
        c.moduli0[{a, b}].push_back({id, ((sign % 2) + 2) % 2, std::nullopt});
        return *this;
    }
    Builder& iv(const std::string& a, const std::string& b, EndpointRef s, EndpointRef e, int fr)
    {
        OneDimComponent k;
        k.id = "k" + std::to_string(next++);
        k.framing = fr % 2;
        k.start = s;
        k.end = e;
        c.moduli1[{a, b}].push_back(k);
        return *this;
    }
    Builder& circle(const std::string& a, const std::string& b, int fr)
    {
        OneDimComponent k;
        k.id = "k" + std::to_string(next++);
        k.kind = ComponentKind::Circle;
        k.framing = fr % 2;
        c.moduli1[{a, b}].push_back(k);
        return *this;
    }
    FlowCategory done()
    {
        c.normalize();
        return c;
    }
};

}   // namespace ffc::testing

#endif
