#include "heptaca/structures.hpp"

namespace heptaca {

GadgetStamp stamp_gadget(Stamper&, GadgetKind kind, Cell, int, const std::string&) {
    throw PlacementError(std::string("layout for ") + gadget_name(kind) + " not frozen yet");
}

}  // namespace heptaca
