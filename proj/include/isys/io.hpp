/**
 * Text formats (JSON with rationals as "p/q" strings) for maps, index
 * systems, product pairs and word lists, plus DOT export of the homology
 * graph.
 */
#ifndef ISYS_IO_HPP
#define ISYS_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isys/cocyclic.hpp"
#include "isys/construct.hpp"
#include "isys/dynamics.hpp"
#include "isys/index_core.hpp"

namespace isys {

/// Malformed input, with a 1-based location in the source text.
class FormatError : public std::invalid_argument {
public:
    FormatError(const std::string& source, std::size_t line, std::size_t column, const std::string& what);
    std::size_t line;
    std::size_t column;
};

PLMap parse_map(const std::string& text, const std::string& source = "<map>");
IndexSystem parse_system(const std::string& text, const std::string& source = "<system>");
ProductPair parse_product_pair(const std::string& text, const std::string& source = "<product-pair>");

struct WordFile {
    std::vector<std::vector<std::string>> words;
    std::optional<std::vector<std::string>> prefix;
    std::optional<std::vector<std::string>> cycle;
};

WordFile parse_words(const std::string& text, const std::string& source = "<words>");

std::string dump_map(const PLMap& f);
std::string dump_system(const IndexSystem& s);
std::string dump_product_pair(const ProductPair& p);

/// Structured form of a verification report, with witness sets as cell lists.
std::string dump_report(const VerificationReport& r, const IndexSystem& s);

/// Vertices labelled with graded dimensions, edges with degree-1 matrices;
/// self-loops with a nilpotent product are drawn dashed red.
std::string to_dot(const HomGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace isys

#endif
