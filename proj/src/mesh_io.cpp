#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/mesh.hpp"

namespace speclab {

void write_off(const TriMesh& mesh, const std::string& path, const std::string& lengths_csv) {
  std::ofstream out(path);
  if (!out) throw MeshError("cannot open " + path + " for writing");
  out << std::setprecision(17);
  out << "OFF\n" << mesh.vertex_count() << ' ' << mesh.face_count() << " 0\n";
  for (const auto& v : mesh.vertices) out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  if (!mesh.has_metric() || lengths_csv.empty()) return;
  std::ofstream csv(lengths_csv);
  if (!csv) throw MeshError("cannot open " + lengths_csv + " for writing");
  csv << std::setprecision(17) << "face,v0,v1,length\n";
  for (int f = 0; f < mesh.face_count(); ++f)
    for (int k = 0; k < 3; ++k)
      csv << f << ',' << mesh.faces[f][k] << ',' << mesh.faces[f][(k + 1) % 3] << ','
          << mesh.face_lengths[f][k] << '\n';
}

namespace {

// Next non-empty, non-comment line.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TriMesh read_off(const std::string& path, const std::string& lengths_csv) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open " + path);
  std::string line;
  if (!next_line(in, line) || line.rfind("OFF", 0) != 0) throw MeshError(path + ": missing OFF header");
  std::istringstream rest(line.substr(3));
  int nv = -1, nf = -1, ne = 0;
  if (!(rest >> nv >> nf >> ne)) {
    if (!next_line(in, line)) throw MeshError(path + ": missing counts");
    std::istringstream counts(line);
    if (!(counts >> nv >> nf)) throw MeshError(path + ": bad counts");
  }
  TriMesh mesh;
  for (int i = 0; i < nv; ++i) {
    if (!next_line(in, line)) throw MeshError(path + ": truncated vertex list");
    std::istringstream s(line);
    double x, y, z;
    if (!(s >> x >> y >> z)) throw MeshError(path + ": bad vertex line " + std::to_string(i));
    mesh.vertices.emplace_back(x, y, z);
  }
  for (int i = 0; i < nf; ++i) {
    if (!next_line(in, line)) throw MeshError(path + ": truncated face list");
    std::istringstream s(line);
    int k, a, b, c;
    if (!(s >> k >> a >> b >> c) || k != 3) throw MeshError(path + ": only triangles are supported");
    mesh.faces.push_back({a, b, c});
  }
  if (!lengths_csv.empty()) {
    std::ifstream csv(lengths_csv);
    if (!csv) throw MeshError("cannot open " + lengths_csv);
    mesh.face_lengths.assign(nf, {0.0, 0.0, 0.0});
    std::getline(csv, line);
    while (std::getline(csv, line)) {
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream s(line);
      int f, v0, v1;
      double len;
      if (!(s >> f >> v0 >> v1 >> len) || f < 0 || f >= nf) throw MeshError(lengths_csv + ": bad row");
      const auto& t = mesh.faces[f];
      int k = 0;
      while (k < 3 && !(t[k] == v0 && t[(k + 1) % 3] == v1)) ++k;
      if (k == 3) throw MeshError(lengths_csv + ": edge not in face " + std::to_string(f));
      mesh.face_lengths[f][k] = len;
    }
  }
  validate(mesh);
  return mesh;
}

}  // namespace speclab
