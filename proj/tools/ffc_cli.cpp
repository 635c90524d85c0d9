// ffc: command-line front end for framed flow categories.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ffc/algebra.hpp"
#include "ffc/io.hpp"
#include "ffc/moves.hpp"
#include "ffc/recognizer.hpp"
#include "ffc/service.hpp"
#include "ffc/strategy.hpp"

namespace {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

bool color()
{
    const char* v = std::getenv("FFC_COLOR");
    return v && std::string(v) == "1";
}

int error(const std::string& msg, int code = kFailure)
{
    if (color())
        std::cerr << "\033[31merror:\033[0m " << msg << "\n";
    else
        std::cerr << "error: " << msg << "\n";
    return code;
}

ffc::FlowCategory load(const std::string& path)
{
    return ffc::decodeValid(ffc::readFile(path));
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        ffc::writeFile(out, text);
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Framed flow categories: validate, apply Morse moves, simplify, recognize"};
    app.require_subcommand(1);

    std::string file, out, moveText, tracePath, coeff = "Z";
    long maxSteps = -1;
    bool suspension = false;
    int port = 7814;

    auto* validateCmd = app.add_subcommand("validate", "check the category invariants");
    validateCmd->add_option("FILE", file)->required();

    auto* movesCmd = app.add_subcommand("moves", "list applicable moves, one per line");
    movesCmd->add_option("FILE", file)->required();

    auto* applyCmd = app.add_subcommand("apply", "apply one move and write the new category");
    applyCmd->add_option("FILE", file)->required();
    applyCmd->add_option("--move", moveText, "whitney:x,y:P,M | cancel:x,y | rmcircle:a,b:ids")
        ->required();
    applyCmd->add_option("-o,--output", out);

    auto* simplifyCmd = app.add_subcommand("simplify", "greedy simplification");
    simplifyCmd->add_option("FILE", file)->required();
    simplifyCmd->add_option("--trace", tracePath, "write a .ffctrace file");
    simplifyCmd->add_option("--max-steps", maxSteps)->check(CLI::NonNegativeNumber);
    simplifyCmd->add_option("-o,--output", out);

    auto* replayCmd = app.add_subcommand("replay", "replay a trace and check every digest");
    replayCmd->add_option("FILE", file)->required();
    replayCmd->add_option("--trace", tracePath)->required();
    replayCmd->add_option("-o,--output", out);

    auto* homologyCmd = app.add_subcommand("homology", "cohomology of the cochain complex");
    homologyCmd->add_option("FILE", file)->required();
    homologyCmd->add_option("--coeff", coeff)->check(CLI::IsMember({"Z", "Z2"}));

    auto* recognizeCmd = app.add_subcommand("recognize", "identify the stable homotopy type");
    recognizeCmd->add_option("FILE", file)->required();
    recognizeCmd->add_flag("--suspension", suspension, "print Susp(k) Model instead of Model@n");

    auto* splitCmd = app.add_subcommand("split", "list connected components");
    splitCmd->add_option("FILE", file)->required();
    std::string outDir;
    splitCmd->add_option("--out-dir", outDir, "write each component as a .ffc file");

    auto* serveCmd = app.add_subcommand("serve", "run the session HTTP API on loopback");
    serveCmd->add_option("--port", port)->check(CLI::Range(1, 65535));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        return error(e.what(), kUsage);
    }

    try
    {
        if (*validateCmd)
        {
            ffc::FlowCategory cat = ffc::decode(ffc::readFile(file));
            auto report = ffc::validate(cat);
            if (report.empty())
            {
                std::cout << "valid: " << cat.objects.size() << " objects\n";
                return kOk;
            }
            for (const auto& v : report)
                error(ffc::formatViolation(v));
            return kFailure;
        }
        if (*movesCmd)
        {
            for (const auto& d : ffc::list_moves(load(file)))
                std::cout << d.text() << "\n";
            return kOk;
        }
        if (*applyCmd)
        {
            ffc::FlowCategory cat = load(file);
            ffc::MoveDescriptor move = ffc::parseMove(moveText, cat);
            emit(ffc::encode(ffc::apply(cat, move)), out);
            return kOk;
        }
        if (*simplifyCmd)
        {
            auto r = ffc::simplify(load(file), maxSteps);
            if (!tracePath.empty())
                ffc::writeFile(tracePath, ffc::encodeTrace(r.trace));
            emit(ffc::encode(r.category), out);
            if (!out.empty())
                std::cout << "steps: " << r.trace.steps.size() << "\n";
            return kOk;
        }
        if (*replayCmd)
        {
            ffc::Trace t = ffc::decodeTrace(ffc::readFile(tracePath));
            emit(ffc::encode(ffc::replay(load(file), t)), out);
            return kOk;
        }
        if (*homologyCmd)
        {
            auto c = coeff == "Z2" ? ffc::Coefficients::Z2 : ffc::Coefficients::Z;
            auto groups = ffc::cohomology(ffc::to_complex(load(file)), c);
            if (groups.empty())
                std::cout << "H^* = 0\n";
            for (const auto& [deg, g] : groups)
                std::cout << "H^" << deg << " = " << ffc::formatGroup(g, c) << "\n";
            return kOk;
        }
        if (*recognizeCmd)
        {
            auto expr = ffc::recognize(load(file));
            std::cout << (suspension ? expr.suspensionText() : expr.text()) << "\n";
            for (const auto& [deg, g] : expr.residueCohomology)
                std::cout << "residue H^" << deg << " = " << ffc::formatGroup(g, ffc::Coefficients::Z)
                          << "\n";
            return kOk;
        }
        if (*splitCmd)
        {
            ffc::FlowCategory cat = load(file);
            auto parts = ffc::component_split(cat);
            for (size_t i = 0; i < parts.size(); ++i)
            {
                std::string ids;
                for (const auto& o : parts[i].objects)
                    ids += (ids.empty() ? "" : ",") + o.id;
                std::cout << "component " << i + 1 << ": " << ids << "\n";
                if (!outDir.empty())
                {
                    parts[i].name = cat.name + " / component " + std::to_string(i + 1);
                    auto path = std::filesystem::path(outDir) /
                                ("component_" + std::to_string(i + 1) + ".ffc");
                    ffc::writeFile(path.string(), ffc::encode(parts[i]));
                }
            }
            return kOk;
        }
        if (*serveCmd)
        {
            ffc::SessionService svc;
            std::cout << "listening on http://127.0.0.1:" << port << "\n" << std::flush;
            if (!svc.serve("127.0.0.1", port))
                return error("cannot listen on port " + std::to_string(port));
            return kOk;
        }
    }
    catch (const ffc::DecodeError& e)
    {
        return error(e.what());
    }
    catch (const ffc::MoveError& e)
    {
        return error(e.what());
    }
    catch (const ffc::InvalidCategory& e)
    {
        return error(e.what());
    }
    catch (const std::exception& e)
    {
        return error(e.what());
    }
    return kUsage;
}
