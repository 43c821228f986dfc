#include "omcg/system_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace omcg {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_labels(std::string_view csv) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            labels.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    current = trim(current);
    if (!current.empty()) labels.push_back(current);
    for (const std::string& l : labels) {
        if (l.empty()) throw ParseError("empty label in ground header");
    }
    return labels;
}

} // namespace

SignSystem read_system(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

SignSystem parse_system(std::string_view text) {
    GroundPtr ground;
    std::vector<std::string> lines;
    std::size_t lineno = 0;

    std::string line;
    std::istringstream in{std::string(text)};
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            constexpr std::string_view kGround = "ground:";
            std::string body = trim(t.substr(1));
            if (!saw_header && body.rfind(kGround, 0) == 0) {
                saw_header = true;
                std::string csv = trim(body.substr(kGround.size()));
                ground = csv.empty() ? GroundSet::with_labels({})
                                     : GroundSet::with_labels(split_labels(csv));
            }
            continue; // other '#' lines are comments
        }
        lines.push_back(t);
    }

    if (!ground) {
        if (lines.empty()) {
            throw ParseError("cannot determine ground set: no header and no vectors");
        }
        if (lines.front().size() > kMaxGroundSize) {
            throw ResourceError("ground-size",
                                "sign string of length " + std::to_string(lines.front().size()) +
                                    " exceeds the supported maximum of " +
                                    std::to_string(kMaxGroundSize));
        }
        ground = GroundSet::of_size(lines.front().size());
    }

    std::vector<SignVector> members;
    members.reserve(lines.size());
    for (const std::string& l : lines) {
        members.push_back(SignVector::parse(l, ground));
    }
    return SignSystem(std::move(ground), std::move(members));
}

void write_system(std::ostream& out, const SignSystem& system) {
    const GroundSet& g = *system.ground();
    if (!g.default_labels() || g.size() == 0) {
        out << "# ground:";
        for (std::size_t i = 0; i < g.size(); ++i) {
            out << (i == 0 ? " " : ",") << g.label(i);
        }
        out << '\n';
    }
    for (const SignVector& m : system.members()) {
        out << m.to_string() << '\n';
    }
}

std::string to_text(const SignSystem& system) {
    std::ostringstream out;
    write_system(out, system);
    return out.str();
}

} // namespace omcg
