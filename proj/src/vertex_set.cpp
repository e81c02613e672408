#include "tfvs/vertex_set.hpp"

#include <ostream>

namespace tfvs {

std::string VertexSet::to_string() const {
    std::string out;
    for (int v : *this) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << '{' << s.to_string() << '}'; }

}  // namespace tfvs
