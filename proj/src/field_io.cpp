//==============================================================================
// field_io.cpp -- CFLD1 reader/writer and the CSV inspection export.
//==============================================================================
#include "clifharm/field_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace clifharm {

namespace {

constexpr char kMagic[5] = {'C', 'F', 'L', 'D', '1'};

void put_u64_le(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

void put_f64_le(std::vector<unsigned char>& out, double d) {
  put_u64_le(out, std::bit_cast<std::uint64_t>(d));
}

struct Cursor {
  const std::vector<unsigned char>& buf;
  std::size_t pos = 0;

  void need(std::size_t count, const char* what) const {
    if (pos + count > buf.size())
      throw std::runtime_error(std::string("CFLD1: truncated file while reading ") + what);
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return buf[pos++];
  }
  std::uint64_t u64_le(const char* what) {
    need(8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[pos + i]) << (8 * i);
    pos += 8;
    return v;
  }
  double f64_le(const char* what) { return std::bit_cast<double>(u64_le(what)); }
};

}  // namespace

void write_field(const std::string& path, const GridField& f) {
  const FieldHeader& h = f.header();
  h.validate();

  std::vector<unsigned char> buf;
  buf.reserve(32 + f.data().size() * 16);
  buf.insert(buf.end(), kMagic, kMagic + 5);
  buf.push_back(static_cast<unsigned char>(h.n));
  buf.push_back(static_cast<unsigned char>(h.blade_order.size()));
  buf.insert(buf.end(), h.blade_order.begin(), h.blade_order.end());
  for (auto d : h.dims) put_u64_le(buf, static_cast<std::uint64_t>(d));
  for (double L : h.extent) put_f64_le(buf, L);
  for (const cplx& c : f.data()) {
    put_f64_le(buf, c.real());
    put_f64_le(buf, c.imag());
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("CFLD1: cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("CFLD1: write failed: " + path);
}

GridField read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("CFLD1: cannot open for reading: " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  Cursor cur{buf};

  cur.need(5, "magic");
  if (std::memcmp(buf.data(), kMagic, 5) != 0)
    throw std::runtime_error("CFLD1: bad magic in " + path);
  cur.pos = 5;

  FieldHeader h;
  h.n = cur.u8("dimension");
  const std::size_t tag_len = cur.u8("blade-order tag length");
  cur.need(tag_len, "blade-order tag");
  h.blade_order.assign(reinterpret_cast<const char*>(buf.data()) + cur.pos, tag_len);
  cur.pos += tag_len;
  if (h.blade_order != kBladeOrderTag)
    throw std::runtime_error("CFLD1: unsupported blade order '" + h.blade_order + "' in " + path);
  if (h.n < 1 || h.n > kMaxDim)
    throw std::runtime_error("CFLD1: dimension out of range in " + path);

  h.dims.resize(h.n);
  for (int k = 0; k < h.n; ++k) {
    const std::uint64_t d = cur.u64_le("sample count");
    if (d == 0 || d > (1u << 20))
      throw std::runtime_error("CFLD1: implausible sample count in " + path);
    h.dims[k] = static_cast<std::int64_t>(d);
  }
  h.extent.resize(h.n);
  for (int k = 0; k < h.n; ++k) h.extent[k] = cur.f64_le("box length");
  h.validate();

  GridField f(h);
  const std::size_t expected = f.data().size() * 16;
  if (buf.size() - cur.pos != expected)
    throw std::runtime_error("CFLD1: payload size mismatch in " + path);
  for (cplx& c : f.data()) {
    const double re = cur.f64_le("coefficient");
    const double im = cur.f64_le("coefficient");
    c = cplx(re, im);
  }
  return f;
}

void write_csv(const std::string& path, const GridField& f) {
  const FieldHeader& h = f.header();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("csv: cannot open for writing: " + path);

  char num[64];
  out << "# CFLD1 csv export (lossy; inspection only)\n";
  out << "# n=" << h.n << " dims=";
  for (int k = 0; k < h.n; ++k) out << (k ? "," : "") << h.dims[k];
  out << " extent=";
  for (int k = 0; k < h.n; ++k) {
    std::snprintf(num, sizeof num, "%.17g", h.extent[k]);
    out << (k ? "," : "") << num;
  }
  out << " blade_order=" << h.blade_order << "\n";

  for (int k = 0; k < h.n; ++k) out << "i" << (k + 1) << ",";
  for (int k = 0; k < h.n; ++k) out << "x" << (k + 1) << ",";
  const int nb = h.num_blades();
  for (int b = 0; b < nb; ++b) {
    out << "re_" << b << ",im_" << b << (b + 1 < nb ? "," : "");
  }
  out << "\n";

  const std::int64_t np = f.num_points();
  for (std::int64_t p = 0; p < np; ++p) {
    const auto idx = unflatten_index(h, p);
    const auto x = f.coords(p);
    for (int k = 0; k < h.n; ++k) out << idx[k] << ",";
    for (int k = 0; k < h.n; ++k) {
      std::snprintf(num, sizeof num, "%.17g", x[k]);
      out << num << ",";
    }
    for (int b = 0; b < nb; ++b) {
      const cplx c = f.at(p, static_cast<std::uint32_t>(b));
      std::snprintf(num, sizeof num, "%.17g", c.real());
      out << num << ",";
      std::snprintf(num, sizeof num, "%.17g", c.imag());
      out << num << (b + 1 < nb ? "," : "");
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("csv: write failed: " + path);
}

}  // namespace clifharm
