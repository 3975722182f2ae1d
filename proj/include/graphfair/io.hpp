#ifndef GRAPHFAIR_IO_HPP
#define GRAPHFAIR_IO_HPP

#include <string>

#include "graphfair/instance.hpp"

namespace graphfair {

// JSON text formats. Parsing errors throw InvalidInput.
Instance parse_instance(const std::string& text);
Allocation parse_allocation(const std::string& text);

// canonical: compact, one line, sorted keys. Otherwise indented.
std::string write_instance(const Instance& instance, bool canonical = true);
std::string write_allocation(const Allocation& alloc, bool canonical = true);

Instance read_instance_file(const std::string& path);
Allocation read_allocation_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace graphfair

#endif
