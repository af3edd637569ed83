#pragma once

#include <jfs/instance.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jfs {

enum class Profile { Overlap, FaceTouch, VertexTouch, Nested, RandomPair, RandomFuncs };

const std::vector<Profile>& all_profiles();
std::string profile_name(Profile p);
/// Throws std::invalid_argument on an unknown name.
Profile parse_profile(const std::string& name);

/**
 * A random instance with sets C and D, functions f (on C) and g (on D), an
 * n x n matrix A and, when C and D meet, a point x in their intersection.
 * Output depends only on (seed, dim, profile). dim must lie in [1, 6].
 *
 * overlap      full-dimensional C, D sharing an interior point
 * face_touch   D is C reflected through a facet hyperplane, then cut further
 * vertex_touch same, through a hyperplane supporting C at a single vertex
 * nested       D inside C: a face, an interior slice, or a shrunken copy
 * random_pair  unrelated sets, possibly disjoint or lower-dimensional
 * random_funcs touching or overlapping sets with a rank-deficient A
 */
Instance generate_instance(std::uint64_t seed, std::size_t dim, Profile profile);

}  // namespace jfs
