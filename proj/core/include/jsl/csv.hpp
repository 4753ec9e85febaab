// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace jsl {

/// Bit-stable float formatting for data files: '%.17g', '.' decimal point,
/// enough digits to round-trip any double.
std::string format_double(double value);

/// CSV table with a header row, '\n' line endings, floats via format_double.
/// write() is atomic: the content lands in a temp file first and is renamed
/// into place.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    void add_row_raw(const std::vector<std::string>& cells);

    std::string str() const;
    void write(const std::filesystem::path& path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
};

/// Atomic write of arbitrary text (temp file + rename).
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace jsl
