#include "ordcomp/pair.hpp"

#include "ordcomp/error.hpp"

namespace ordcomp {

CompactificationPair::CompactificationPair(SpaceMap e) : e_(std::move(e)) {
  if (auto w = check_injective(e_))
    throw InputError("embedding identifies " + X().carrier().format(w->x) + " and " +
                     X().carrier().format(w->y));
}

}  // namespace ordcomp
