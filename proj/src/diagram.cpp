#include "ttlink/diagram.hpp"

#include <sstream>

namespace ttlink {

namespace {

FaceKind classify(int sides) {
  switch (sides) {
    case 2:
      return FaceKind::Bigon;
    case 3:
      return FaceKind::Triangle;
    case 4:
      return FaceKind::Quadrilateral;
    default:
      fail(Errc::Internal,
           "projection face with " + std::to_string(sides) + " sides");
  }
}

struct OpenFace {
  int opened_at = -1;   // -1 means the top pinch vertex
  int side_events = 0;  // crossings seen in the neighbouring gaps
};

}  // namespace

ProjectionComplex build_projection(const RootSubset& root, int power) {
  const int r = root.strands;
  if (power < 1) fail(Errc::InvalidArgument, "projection needs s >= 1");

  const BraidWord word = pow(subset_to_word(root), power);
  const int c = static_cast<int>(word.size());

  ProjectionComplex complex;
  complex.strands = r;
  complex.power = power;
  complex.crossings = c;
  complex.vertex_count = c + 2;  // crossings plus the two pinch vertices

  // Edges column by column: one segment more than the crossings meeting
  // each strand position.
  std::vector<int> column_crossings(static_cast<std::size_t>(r), 0);
  for (int letter : word.letters()) {
    ++column_crossings[static_cast<std::size_t>(letter - 1)];
    ++column_crossings[static_cast<std::size_t>(letter)];
  }
  complex.edge_count = 0;
  for (int incident : column_crossings) complex.edge_count += incident + 1;

  // Sweep the word, one open face per gap between adjacent strands.
  std::vector<OpenFace> open(static_cast<std::size_t>(r - 1));
  auto close_face = [&](int gap, int closed_at) {
    OpenFace& face = open[static_cast<std::size_t>(gap - 1)];
    Face done;
    done.gap = gap;
    done.sides = 2 + face.side_events;
    done.opened_at = face.opened_at;
    done.closed_at = closed_at;
    done.peripheral = face.opened_at < 0 || closed_at == c;
    done.kind = classify(done.sides);
    complex.faces.push_back(done);
  };

  for (int t = 0; t < c; ++t) {
    const int gap = word.letters()[static_cast<std::size_t>(t)];
    close_face(gap, t);
    open[static_cast<std::size_t>(gap - 1)] = OpenFace{t, 0};
    if (gap - 1 >= 1) ++open[static_cast<std::size_t>(gap - 2)].side_events;
    if (gap + 1 <= r - 1) ++open[static_cast<std::size_t>(gap)].side_events;
  }
  for (int gap = 1; gap <= r - 1; ++gap) close_face(gap, c);

  if (complex.euler_characteristic() != 1)
    fail(Errc::Internal, "projection disk has wrong Euler characteristic");
  return complex;
}

FaceCensus face_census_bruteforce(const RootSubset& root, int power) {
  if (root.strands < 3)
    fail(Errc::InvalidArgument, "face census needs r >= 3");
  if (power == 0) return FaceCensus{};  // no braiding, no faces
  const ProjectionComplex complex = build_projection(root, power);
  FaceCensus census;
  for (const Face& face : complex.faces) {
    switch (face.kind) {
      case FaceKind::Bigon:
        ++census.bigons;
        break;
      case FaceKind::Triangle:
        face.peripheral ? ++census.triangles_peripheral
                        : ++census.triangles_inner;
        break;
      case FaceKind::Quadrilateral:
        face.peripheral ? ++census.quads_peripheral : ++census.quads_inner;
        break;
    }
  }
  return census;
}

FaceCensus face_census_closed(const RootSubset& root, int power) {
  const int r = root.strands;
  if (r < 3) fail(Errc::InvalidArgument, "face census needs r >= 3");
  if (power == 0) return FaceCensus{};
  if (power < 0) fail(Errc::InvalidArgument, "face census needs s >= 0");

  const PeripheralProfile profile = peripheral_profile(root);
  FaceCensus census;
  census.bigons = profile.bigons_top + profile.bigons_bottom;
  census.quads_peripheral = profile.quads_top + profile.quads_bottom;
  // r-1 faces at each end of the braid.
  census.triangles_peripheral =
      2 * (r - 1) - census.bigons - census.quads_peripheral;
  census.quads_inner = (r - 3) * (power - 1);
  const int c = power * (r - 1);
  const int total_faces = c + r - 1;  // Euler identity on the disk
  census.triangles_inner = total_faces - census.bigons -
                           census.triangles_peripheral -
                           census.quads_peripheral - census.quads_inner;
  return census;
}

std::string dump_faces(const ProjectionComplex& complex) {
  std::ostringstream out;
  out << "projection r=" << complex.strands << " s=" << complex.power
      << " c=" << complex.crossings << " v=" << complex.vertex_count
      << " e=" << complex.edge_count << " f=" << complex.face_count() << "\n";
  for (const Face& face : complex.faces) {
    out << "  gap=" << face.gap << " sides=" << face.sides << " "
        << (face.peripheral ? "peripheral" : "inner") << " open=";
    if (face.opened_at < 0)
      out << "top";
    else
      out << face.opened_at;
    out << " close=";
    if (face.closed_at == complex.crossings)
      out << "bottom";
    else
      out << face.closed_at;
    out << "\n";
  }
  return out.str();
}

}  // namespace ttlink
