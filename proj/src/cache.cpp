#include "lgf/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "lgf/errors.hpp"

namespace lgf {

namespace fs = std::filesystem;

std::string cache_to_text(const CoeffTable& t) {
    std::ostringstream os;
    os << "lgf-cache v1 " << family_name(t.spec.family) << ' ' << t.spec.dim << ' ' << t.values.size() << '\n';
    for (const auto& v : t.values) os << v.get_str() << '\n';
    return os.str();
}

CoeffTable cache_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string magic, version, family;
    int dim = 0;
    long count = -1;
    if (!(is >> magic >> version >> family >> dim >> count) || magic != "lgf-cache" || version != "v1" || count < 0)
        throw Error(ErrorKind::ParseError, "bad cache header");
    CoeffTable t{make_spec(parse_family(family), dim), {}};
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Integer v;
        if (v.set_str(line, 10) != 0) throw Error(ErrorKind::ParseError, "bad cache entry '" + line + "'");
        t.values.push_back(std::move(v));
    }
    if (static_cast<long>(t.values.size()) != count)
        throw Error(ErrorKind::ParseError, "cache header says " + std::to_string(count) + " entries, found " +
                                               std::to_string(t.values.size()));
    return t;
}

std::string cache_path(const std::string& dir, const LatticeSpec& spec) {
    return (fs::path(dir) / (std::string(family_name(spec.family)) + "-" + std::to_string(spec.dim) + ".txt"))
        .string();
}

void write_cache(const std::string& path, const CoeffTable& t) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    fs::path tmp = p;
    tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error(ErrorKind::ParseError, "cannot write " + tmp.string());
        os << cache_to_text(t);
        if (!os.flush()) throw Error(ErrorKind::ParseError, "write failed for " + tmp.string());
    }
    fs::rename(tmp, p);
}

CoeffTable read_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return cache_from_text(os.str());
}

std::optional<CoeffTable> cache_lookup(const std::string& dir, const LatticeSpec& spec, int N) {
    std::string p = cache_path(dir, spec);
    if (!fs::exists(p)) return std::nullopt;
    CoeffTable t = read_cache(p);
    if (t.spec.family != spec.family || t.spec.dim != spec.dim)
        throw Error(ErrorKind::ParseError, "cache file " + p + " holds a different lattice");
    if (static_cast<int>(t.values.size()) < N + 1) return std::nullopt;
    t.values.resize(static_cast<size_t>(N) + 1);
    return t;
}

void cache_store(const std::string& dir, const CoeffTable& t) {
    std::string p = cache_path(dir, t.spec);
    if (fs::exists(p)) {
        try {
            if (read_cache(p).values.size() >= t.values.size()) return;
        } catch (const Error&) {
            // unreadable: overwrite
        }
    }
    write_cache(p, t);
}

}  // namespace lgf
