#include "vcminor/serialize.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace vcminor {

namespace {

constexpr char kMagic[8] = {'V', 'C', 'M', 'O', 'R', 'C', 'L', '\n'};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct Writer {
  std::string buf;

  void raw(const void* p, size_t k) { buf.append(static_cast<const char*>(p), k); }
  void u8(std::uint8_t v) { raw(&v, 1); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) {
    // varint
    while (v >= 0x80) {
      u8(static_cast<std::uint8_t>(v) | 0x80);
      v >>= 7;
    }
    u8(static_cast<std::uint8_t>(v));
  }
  void i64(std::int64_t v) {  // zigzag varint
    u64((static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
  }

  template <class T>
  void int_vec(const std::vector<T>& v) {
    u64(v.size());
    for (T x : v) i64(static_cast<std::int64_t>(x));
  }
  // Sorted id lists and distance rows compress well as deltas.
  template <class T>
  void delta_vec(const std::vector<T>& v) {
    u64(v.size());
    std::int64_t prev = 0;
    for (T x : v) {
      i64(static_cast<std::int64_t>(x) - prev);
      prev = static_cast<std::int64_t>(x);
    }
  }
};

struct Reader {
  std::string buf;
  size_t at = 0;

  void need(size_t k) const {
    if (at + k > buf.size()) throw std::runtime_error("oracle file truncated");
  }
  void raw(void* p, size_t k) {
    need(k);
    std::memcpy(p, buf.data() + at, k);
    at += k;
  }
  std::uint8_t u8() {
    std::uint8_t v;
    raw(&v, 1);
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t v;
    raw(&v, 4);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
      std::uint8_t b = u8();
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) break;
      shift += 7;
      if (shift > 63) throw std::runtime_error("oracle file corrupt: varint overflow");
    }
    return v;
  }
  std::int64_t i64() {
    std::uint64_t z = u64();
    return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
  }

  template <class T>
  std::vector<T> int_vec() {
    std::vector<T> v(u64());
    for (auto& x : v) x = static_cast<T>(i64());
    return v;
  }
  template <class T>
  std::vector<T> delta_vec() {
    std::vector<T> v(u64());
    std::int64_t prev = 0;
    for (auto& x : v) {
      prev += i64();
      x = static_cast<T>(prev);
    }
    return v;
  }
};

void write_division(Writer& w, const RDivision& div) {
  w.u64(div.r);
  w.u64(div.clusters.size());
  for (const Cluster& c : div.clusters) {
    w.delta_vec(c.vertices);
    w.delta_vec(c.boundary);
  }
}

RDivision read_division(Reader& r, int n) {
  RDivision div;
  div.r = static_cast<int>(r.u64());
  div.clusters.resize(r.u64());
  div.owner.assign(n, -1);
  for (size_t c = 0; c < div.clusters.size(); ++c) {
    Cluster& cl = div.clusters[c];
    cl.id = static_cast<int>(c);
    cl.vertices = r.delta_vec<Vertex>();
    cl.boundary = r.delta_vec<Vertex>();
    cl.boundary_sequence = cl.boundary;
    for (Vertex v : cl.vertices) {
      if (v < 0 || v >= n) throw std::runtime_error("oracle file corrupt: vertex id");
      div.owner[v] = cl.id;
    }
  }
  return div;
}

void begin_file(Writer& w, std::uint8_t kind, int n, int r) {
  w.raw(kMagic, 8);
  w.u32(kOracleFormatVersion);
  w.u8(kind);
  w.u64(n);
  w.u64(r);
}

void finish_file(Writer& w, const std::string& path) {
  std::uint64_t sum = fnv1a(w.buf);
  w.raw(&sum, 8);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_oracle: cannot open " + path);
  f.write(w.buf.data(), static_cast<std::streamsize>(w.buf.size()));
  if (!f) throw std::runtime_error("save_oracle: write failed: " + path);
}

Reader open_file(const std::string& path, std::uint8_t expect_kind) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_oracle: cannot open " + path);
  Reader r;
  r.buf.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  if (r.buf.size() < 21) throw std::runtime_error("load_oracle: file too short");
  std::uint64_t stored;
  std::memcpy(&stored, r.buf.data() + r.buf.size() - 8, 8);
  std::string payload = r.buf.substr(0, r.buf.size() - 8);
  if (fnv1a(payload) != stored) throw std::runtime_error("load_oracle: checksum mismatch");
  r.buf = std::move(payload);
  char magic[8];
  r.raw(magic, 8);
  if (std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("load_oracle: bad magic");
  std::uint32_t version = r.u32();
  if (version != kOracleFormatVersion)
    throw std::runtime_error("load_oracle: format version " + std::to_string(version) +
                             ", expected " + std::to_string(kOracleFormatVersion));
  std::uint8_t kind = r.u8();
  if (kind != expect_kind)
    throw std::runtime_error(expect_kind == 0 ? "load_oracle: file holds a directed oracle"
                                              : "load_oracle: file holds an undirected oracle");
  return r;
}

}  // namespace

void save_oracle(const UndirectedOracle& o, const std::string& path) {
  Writer w;
  begin_file(w, 0, o.n_, o.r_);
  write_division(w, o.division_);
  w.delta_vec(o.boundary_vertices_);
  // Boundary rows, delta-encoded within each row.
  for (size_t b = 0; b < o.boundary_vertices_.size(); ++b) {
    std::int64_t prev = 0;
    for (int v = 0; v < o.n_; ++v) {
      Cell c = o.boundary_rows_[b * o.n_ + v];
      w.i64(static_cast<std::int64_t>(c) - prev);
      prev = c;
    }
  }
  for (const auto& cd : o.clusters_) {
    w.delta_vec(cd.sigma);
    w.u64(cd.size);
    w.u64(cd.patterns.size());
    for (const auto& p : cd.patterns) w.int_vec(p);
    w.int_vec(cd.pat_dist);
    w.int_vec(cd.intra);
  }
  w.int_vec(o.rec_pid_);
  w.int_vec(o.rec_base_);
  finish_file(w, path);
}

UndirectedOracle load_undirected_oracle(const std::string& path) {
  Reader r = open_file(path, 0);
  UndirectedOracle o;
  o.n_ = static_cast<int>(r.u64());
  o.r_ = static_cast<int>(r.u64());
  o.division_ = read_division(r, o.n_);
  o.local_index_.assign(o.n_, 0);
  for (const Cluster& c : o.division_.clusters)
    for (int i = 0; i < c.size(); ++i) o.local_index_[c.vertices[i]] = i;
  o.boundary_vertices_ = r.delta_vec<Vertex>();
  o.boundary_rows_.resize(o.boundary_vertices_.size() * static_cast<size_t>(o.n_));
  for (size_t b = 0; b < o.boundary_vertices_.size(); ++b) {
    std::int64_t prev = 0;
    for (int v = 0; v < o.n_; ++v) {
      prev += r.i64();
      o.boundary_rows_[b * o.n_ + v] = static_cast<Cell>(prev);
    }
  }
  o.clusters_.resize(o.division_.clusters.size());
  for (auto& cd : o.clusters_) {
    cd.sigma = r.delta_vec<Vertex>();
    cd.size = static_cast<int>(r.u64());
    cd.patterns.resize(r.u64());
    for (auto& p : cd.patterns) p = r.int_vec<Dist>();
    cd.pat_dist = r.int_vec<Cell>();
    cd.intra = r.int_vec<Cell>();
  }
  o.rec_pid_ = r.int_vec<std::int32_t>();
  o.rec_base_ = r.int_vec<Cell>();
  return o;
}

void save_oracle(const DirectedOracle& o, const std::string& path) {
  Writer w;
  begin_file(w, 1, o.n_, o.r_);
  write_division(w, o.division_);
  for (const auto& cd : o.clusters_) {
    w.delta_vec(cd.sigma);
    w.u64(cd.size);
    w.int_vec(cd.intra);
    w.u64(cd.restrictions.size());
    for (const Bitset& bs : cd.restrictions) w.delta_vec(bs.members());
    w.int_vec(cd.restr_dist);
    w.delta_vec(cd.l_off);
    w.int_vec(cd.l_radius);
    w.int_vec(cd.l_rid);
    w.int_vec(cd.u_to_boundary);
  }
  finish_file(w, path);
}

DirectedOracle load_directed_oracle(const std::string& path) {
  Reader r = open_file(path, 1);
  DirectedOracle o;
  o.n_ = static_cast<int>(r.u64());
  o.r_ = static_cast<int>(r.u64());
  o.division_ = read_division(r, o.n_);
  o.local_index_.assign(o.n_, 0);
  for (const Cluster& c : o.division_.clusters)
    for (int i = 0; i < c.size(); ++i) o.local_index_[c.vertices[i]] = i;
  o.clusters_.resize(o.division_.clusters.size());
  for (auto& cd : o.clusters_) {
    cd.sigma = r.delta_vec<Vertex>();
    cd.size = static_cast<int>(r.u64());
    cd.intra = r.int_vec<Cell>();
    cd.restrictions.resize(r.u64());
    for (Bitset& bs : cd.restrictions) {
      bs = Bitset(cd.size);
      for (int i : r.delta_vec<int>()) bs.set(i);
    }
    cd.restr_dist = r.int_vec<Cell>();
    cd.l_off = r.delta_vec<std::int64_t>();
    cd.l_radius = r.int_vec<Cell>();
    cd.l_rid = r.int_vec<std::int32_t>();
    cd.u_to_boundary = r.int_vec<Cell>();
  }
  return o;
}

bool oracle_file_is_directed(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("oracle_file_is_directed: cannot open " + path);
  char head[13];
  f.read(head, 13);
  if (!f || std::memcmp(head, kMagic, 8) != 0)
    throw std::runtime_error("oracle_file_is_directed: not an oracle file");
  return head[12] != 0;
}

}  // namespace vcminor
