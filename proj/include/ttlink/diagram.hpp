#pragma once

#include <string>
#include <vector>

#include "ttlink/roots.hpp"

namespace ttlink {

enum class FaceKind { Bigon, Triangle, Quadrilateral };

struct Face {
  int gap = 0;        // strand gap 1..r-1 holding the face
  int sides = 0;      // boundary edge count
  bool peripheral = false;
  FaceKind kind = FaceKind::Bigon;
  int opened_at = -1;  // crossing index, -1 for the top pinch vertex
  int closed_at = -1;  // crossing index, or crossing count for the bottom
};

// Planar projection of beta^s on a disk, all strands pinched to a single
// vertex at each end of the braid.
struct ProjectionComplex {
  int strands = 0;
  int power = 0;
  int crossings = 0;
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<Face> faces;

  int face_count() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const {
    return vertex_count - edge_count + face_count();
  }
};

struct FaceCensus {
  int bigons = 0;
  int triangles_peripheral = 0;
  int triangles_inner = 0;
  int quads_peripheral = 0;
  int quads_inner = 0;

  int triangles() const { return triangles_peripheral + triangles_inner; }
  int quads() const { return quads_peripheral + quads_inner; }
  int total() const { return bigons + triangles() + quads(); }

  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

ProjectionComplex build_projection(const RootSubset& root, int power);

// Counts read directly off the constructed complex.
FaceCensus face_census_bruteforce(const RootSubset& root, int power);

// Closed-form counts from the peripheral profile and the Euler identity.
FaceCensus face_census_closed(const RootSubset& root, int power);

std::string dump_faces(const ProjectionComplex& complex);

}  // namespace ttlink
