#include "ffc/strategy.hpp"

#include <cstdio>

#include <openssl/sha.h>

#include "ffc/io.hpp"
#include "ffc/recognizer.hpp"

namespace ffc {

std::string digest(const FlowCategory& category)
{
    const std::string text = encode(category);
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
    std::string out = "sha256:";
    char buf[3];
    for (unsigned char c : md)
    {
        std::snprintf(buf, sizeof buf, "%02x", c);
        out += buf;
    }
    return out;
}

TraceStep makeStep(const MoveDescriptor& move, const FlowCategory& after)
{
    return TraceStep{move, digest(after)};
}

SimplifyResult simplify(const FlowCategory& category, long maxSteps)
{
    requireValid(category);
    SimplifyResult r{category, {}};
    r.trace.initial = digest(category);
    long steps = 0;
    while (maxSteps < 0 || steps < maxSteps)
    {
        auto moves = list_moves(r.category);
        const MoveDescriptor* pick = nullptr;
        for (const auto& m : moves)
        {
            if (m.kind != MoveKind::SplitSummand)
            {
                pick = &m;    // list order already follows priority
                break;
            }
        }
        if (!pick)
            break;
        r.category = apply(r.category, *pick);
        r.trace.steps.push_back(makeStep(*pick, r.category));
        ++steps;
    }
    r.trace.result = recognize(r.category).strings();
    return r;
}

FlowCategory replay(const FlowCategory& initial, const Trace& trace)
{
    if (digest(initial) != trace.initial)
        throw MoveError("initial digest mismatch");
    FlowCategory cur = initial;
    for (size_t i = 0; i < trace.steps.size(); ++i)
    {
        cur = apply(cur, trace.steps[i].move);
        if (digest(cur) != trace.steps[i].digest)
            throw MoveError("digest mismatch after step " + std::to_string(i + 1) + " (" +
                            trace.steps[i].move.text() + ")");
    }
    return cur;
}

}   // namespace ffc
