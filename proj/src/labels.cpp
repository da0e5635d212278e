#include "qsep/labels.hpp"

#include <stdexcept>

namespace qsep {

ObservableLabel::ObservableLabel(Site site_, int index_) : site(site_), index(index_) {
    if (site == Site::Alice) {
        if (index < 1 || index % 2 == 0) {
            throw std::invalid_argument("ObservableLabel: Alice indices are odd and >= 1, got " +
                                        std::to_string(index));
        }
    } else {
        if (index < 2 || index % 2 != 0) {
            throw std::invalid_argument("ObservableLabel: Bob indices are even and >= 2, got " +
                                        std::to_string(index));
        }
    }
}

ObservableLabel ObservableLabel::alice(int index) { return {Site::Alice, index}; }

ObservableLabel ObservableLabel::bob(int index) { return {Site::Bob, index}; }

std::string ObservableLabel::name() const {
    return (site == Site::Alice ? "A" : "B") + std::to_string(index);
}

} // namespace qsep
