#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exforge {

// Shortest-exact is not enough here: the file contracts pin 17 significant
// digits, which also guarantees bit-exact double round-trips.
std::string format_double17(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string sha256_hex(const std::string& bytes);

// Global seed fallback: EXFORGE_SEED when set, otherwise 0.
std::uint64_t default_seed();

// Minimal append-style JSON writer with 17-digit doubles. nlohmann handles
// all parsing; emission goes through this so files are byte-deterministic.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value_array(const std::vector<double>& v);
    JsonWriter& raw(const std::string& fragment);

    const std::string& str() const { return out_; }

private:
    void comma();
    static std::string escape(const std::string& s);

    std::string out_;
    bool need_comma_ = false;
};

}  // namespace exforge
