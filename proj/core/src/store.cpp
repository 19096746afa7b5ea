#include <chiac/store.hpp>

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace chiac {

namespace {
    std::mutex warning_mutex;

    auto handler_slot() -> std::function<void(const std::string &)> &
    {
        static std::function<void(const std::string &)> handler = [](const std::string & message) {
            std::cerr << "warning: " << message << '\n';
        };
        return handler;
    }

    auto read_file(const std::filesystem::path & path) -> std::optional<std::string>
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            return std::nullopt;
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}

auto set_warning_handler(std::function<void(const std::string &)> handler) -> void
{
    std::lock_guard lock(warning_mutex);
    handler_slot() = std::move(handler);
}

auto warn(const std::string & message) -> void
{
    std::lock_guard lock(warning_mutex);
    if (handler_slot())
        handler_slot()(message);
}

auto default_store_root() -> std::filesystem::path
{
    if (const char * dir = std::getenv("CHIAC_CACHE_DIR"); dir && *dir)
        return dir;
    return ".chiac-cache";
}

auto write_atomically(const std::filesystem::path & path, const std::string & content) -> void
{
    static std::atomic<unsigned> counter{0};
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "."
        + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (! out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (! out.flush())
            throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ResultCache::ResultCache(std::filesystem::path root) :
    root_(std::move(root))
{
}

auto ResultCache::path_for(const CanonicalForm & f, const CanonicalForm & p) const -> std::filesystem::path
{
    return root_ / "cache" / f.hex() / (p.hex() + ".json");
}

auto ResultCache::load(const CanonicalForm & f, const CanonicalForm & p) const -> std::optional<CachedResult>
{
    auto path = path_for(f, p);
    auto text = read_file(path);
    if (! text)
        return std::nullopt;
    try {
        auto doc = nlohmann::json::parse(*text);
        CachedResult result;
        result.min_colours = doc.at("min_colours").get<int>();
        result.witness = doc.at("witness").get<std::vector<int>>();
        result.family_size = doc.at("family_size").get<std::size_t>();
        return result;
    }
    catch (const nlohmann::json::exception & e) {
        warn("ignoring corrupt cache entry " + path.string() + ": " + e.what());
        return std::nullopt;
    }
}

auto ResultCache::store(const CanonicalForm & f, const CanonicalForm & p, const CachedResult & result) const -> void
{
    nlohmann::json doc = {
        {"min_colours", result.min_colours},
        {"witness", result.witness},
        {"family_size", result.family_size},
    };
    write_atomically(path_for(f, p), doc.dump() + "\n");
}

CheckpointStore::CheckpointStore(std::filesystem::path root) :
    root_(std::move(root))
{
}

auto CheckpointStore::path_for(const std::string & job_id) const -> std::filesystem::path
{
    return root_ / "checkpoints" / (job_id + ".json");
}

auto CheckpointStore::load(const std::string & job_id) const -> std::optional<Checkpoint>
{
    auto path = path_for(job_id);
    auto text = read_file(path);
    if (! text)
        return std::nullopt;
    try {
        auto doc = nlohmann::json::parse(*text);
        Checkpoint c;
        c.job_id = doc.at("job_id").get<std::string>();
        for (auto & [size, fingerprint] : doc.at("last_processed").items())
            c.last_processed[std::stoi(size)] = fingerprint.get<std::string>();
        c.completed_sizes = doc.at("completed_sizes").get<std::vector<int>>();
        if (doc.contains("witness") && doc["witness"].is_string())
            c.witness = doc["witness"].get<std::string>();
        return c;
    }
    catch (const std::exception & e) {
        warn("ignoring corrupt checkpoint " + path.string() + ": " + e.what());
        return std::nullopt;
    }
}

auto CheckpointStore::save(const Checkpoint & checkpoint) const -> void
{
    nlohmann::json last = nlohmann::json::object();
    for (auto & [size, fingerprint] : checkpoint.last_processed)
        last[std::to_string(size)] = fingerprint;
    nlohmann::json doc = {
        {"job_id", checkpoint.job_id},
        {"last_processed", last},
        {"completed_sizes", checkpoint.completed_sizes},
        {"witness", checkpoint.witness ? nlohmann::json(*checkpoint.witness) : nlohmann::json(nullptr)},
    };
    write_atomically(path_for(checkpoint.job_id), doc.dump(2) + "\n");
}

} // namespace chiac
