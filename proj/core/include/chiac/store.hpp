#pragma once

#include <chiac/canonical.hpp>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chiac {

/// Receives warnings about recoverable problems such as corrupt cache
/// entries. The default handler writes to stderr.
auto set_warning_handler(std::function<void(const std::string &)> handler) -> void;
auto warn(const std::string & message) -> void;

/// $CHIAC_CACHE_DIR if set, otherwise ./.chiac-cache.
auto default_store_root() -> std::filesystem::path;

/// Writes to a sibling temporary file, then renames over path.
auto write_atomically(const std::filesystem::path & path, const std::string & content) -> void;

struct CachedResult {
    int min_colours = 0;
    std::vector<int> witness;
    std::size_t family_size = 0;
};

/// Content-addressed results: <root>/cache/<F-fingerprint>/<P-fingerprint>.json
/// holding {min_colours, witness, family_size}. Witnesses are in the
/// labelling of P's canonical representative.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path root);

    auto path_for(const CanonicalForm & f, const CanonicalForm & p) const -> std::filesystem::path;

    /// nullopt on a miss. Unreadable or malformed entries are reported
    /// through warn() and treated as misses.
    auto load(const CanonicalForm & f, const CanonicalForm & p) const -> std::optional<CachedResult>;
    auto store(const CanonicalForm & f, const CanonicalForm & p, const CachedResult & result) const -> void;

    auto root() const -> const std::filesystem::path & { return root_; }

private:
    std::filesystem::path root_;
};

/// Progress of a resumable witness search.
struct Checkpoint {
    std::string job_id;
    /// Hex fingerprint of the last catalogue member processed, per size, for
    /// sizes not yet finished.
    std::map<int, std::string> last_processed;
    std::vector<int> completed_sizes;
    std::optional<std::string> witness;
};

/// <root>/checkpoints/<job-id>.json, written atomically.
class CheckpointStore {
public:
    explicit CheckpointStore(std::filesystem::path root);

    auto load(const std::string & job_id) const -> std::optional<Checkpoint>;
    auto save(const Checkpoint & checkpoint) const -> void;
    auto path_for(const std::string & job_id) const -> std::filesystem::path;

private:
    std::filesystem::path root_;
};

} // namespace chiac
