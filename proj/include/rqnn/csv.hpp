#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rqnn {

// Shortest round-trip decimal form of a double ('.' decimal point).
std::string fmt_double(double v);

// Local time as YYYY-MM-DDTHH:MM:SS.
std::string now_iso8601();

// One '#'-prefixed JSON-object metadata line (values pre-rendered; strings
// must arrive quoted). Ends with a newline.
std::string json_meta_line(
    const std::vector<std::pair<std::string, std::string>>& fields);

// Header row plus data rows, comma separated, newline terminated. The body
// carries no timestamps: identical inputs give identical bytes.
std::string csv_body(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

// Writes content to path; failure to open or write throws std::runtime_error.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace rqnn
