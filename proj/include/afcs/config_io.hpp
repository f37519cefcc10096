#ifndef AFCS_CONFIG_IO_HPP
#define AFCS_CONFIG_IO_HPP

#include <istream>
#include <map>
#include <string>

#include "afcs/model.hpp"

namespace afcs {

/// Parses flat `key = value` text (one pair per line, `#` comments).
/// Throws ValidationError naming the line/key on malformed input.
std::map<std::string, std::string> parse_key_values(std::istream& in);

/// Builds a SystemConfig from key-value pairs. `overrides` wins over
/// `base`. Unknown keys, unparsable values, and missing required keys
/// throw ValidationError naming the key. n_cycles may be given directly
/// or implied by f_base.
SystemConfig config_from_pairs(const std::map<std::string, std::string>& base,
                               const std::map<std::string, std::string>& overrides = {});

/// Loads a config file. Throws ValidationError on I/O or parse failure.
SystemConfig load_config(const std::string& path,
                         const std::map<std::string, std::string>& overrides = {});

/// Fixed 17-significant-digit representation used everywhere output
/// must be byte-stable.
std::string fmt17(double v);

}  // namespace afcs

#endif
